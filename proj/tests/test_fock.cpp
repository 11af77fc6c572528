#include <algorithm>
#include <random>

#include "doctest.h"
#include "qclifford/fock.hpp"
#include "qclifford/linalg.hpp"

using namespace qclifford;

namespace {

// Independent dense oracle: explicit Kronecker products of 2x2 blocks with
// sigma_z strings on the modes before i.
std::vector<long> dense_creator(int modes, int mode) {
  std::vector<long> acc{1};
  std::size_t acc_dim = 1;
  for (int m = 0; m < modes; ++m) {
    long block[4];
    if (m < mode) {
      block[0] = 1, block[1] = 0, block[2] = 0, block[3] = -1;  // Z (empty, occupied)
    } else if (m == mode) {
      block[0] = 0, block[1] = 0, block[2] = 1, block[3] = 0;  // |1><0|
    } else {
      block[0] = 1, block[1] = 0, block[2] = 0, block[3] = 1;
    }
    std::vector<long> next(acc_dim * 2 * acc_dim * 2, 0);
    for (std::size_t r = 0; r < acc_dim; ++r)
      for (std::size_t c = 0; c < acc_dim; ++c)
        for (std::size_t br = 0; br < 2; ++br)
          for (std::size_t bc = 0; bc < 2; ++bc)
            next[(r * 2 + br) * acc_dim * 2 + (c * 2 + bc)] = acc[r * acc_dim + c] * block[br * 2 + bc];
    acc = std::move(next);
    acc_dim *= 2;
  }
  return acc;
}

FockOperator random_word_operator(std::mt19937& rng, int modes, Word& word) {
  std::uniform_int_distribution<int> len(0, 5), mode(0, modes - 1), kind(0, 1);
  word.clear();
  const int l = len(rng);
  for (int k = 0; k < l; ++k) word.push_back(kind(rng) ? creator(mode(rng)) : annihilator(mode(rng)));
  return word_operator(modes, word);
}

}  // namespace

TEST_CASE("single mode") {
  const auto g = build_generators(1);
  CHECK(g[0].creator.matrix().at(1, 0).is_one());
  CHECK(g[0].creator.matrix().nonzeros() == 1);
  CHECK(g[0].annihilator * g[0].creator + g[0].creator * g[0].annihilator == FockOperator::identity(1));
}

TEST_CASE("Jordan-Wigner matrices match the Kronecker oracle") {
  for (int modes = 1; modes <= 4; ++modes) {
    const std::size_t dim = fock_dimension(modes);
    for (int i = 0; i < modes; ++i) {
      const auto expected = dense_creator(modes, i);
      const FockOperator op = creation_operator(modes, i);
      const auto& m = op.matrix();
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) CHECK(m.at(r, c) == RationalFunction(expected[r * dim + c]));
    }
  }
}

TEST_CASE("anticommutation relations hold exactly") {
  for (int modes = 1; modes <= 4; ++modes) {
    const auto g = build_generators(modes);
    std::size_t zero_components = 0;
    for (int i = 0; i < modes; ++i) {
      for (int j = 0; j < modes; ++j) {
        const auto& ci = g[static_cast<std::size_t>(i)];
        const auto& cj = g[static_cast<std::size_t>(j)];
        const FockOperator delta = i == j ? FockOperator::identity(modes) : FockOperator::zero(modes);
        zero_components += (ci.annihilator * cj.annihilator + cj.annihilator * ci.annihilator).is_zero();
        zero_components += (ci.creator * cj.creator + cj.creator * ci.creator).is_zero();
        zero_components += (ci.annihilator * cj.creator + cj.creator * ci.annihilator - delta).is_zero();
        zero_components += (ci.annihilator == star(ci.creator));
      }
    }
    CHECK(zero_components == static_cast<std::size_t>(4 * modes * modes));
  }
  const auto g = build_generators(2);
  CHECK(g[0].annihilator * g[1].annihilator == -(g[1].annihilator * g[0].annihilator));
}

TEST_CASE("generator counts are guarded") {
  CHECK_THROWS_AS(build_generators(0), std::invalid_argument);
  CHECK_THROWS_AS(build_generators(kMaxModes + 1), std::invalid_argument);
  CHECK_THROWS_AS(number_op(2, 2), std::invalid_argument);
}

TEST_CASE("number operators") {
  for (int modes = 1; modes <= 4; ++modes) {
    for (int i = 0; i < modes; ++i) {
      const FockOperator n = number_op(modes, i);
      CHECK(n * n == n);
      const auto v = n.apply(vacuum(modes));
      CHECK(std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); }));
      RationalFunction trace;
      for (std::size_t s = 0; s < n.dim(); ++s) trace += n.matrix().at(s, s);
      CHECK(trace == RationalFunction(static_cast<long>(fock_dimension(modes) / 2)));
    }
  }
}

TEST_CASE("q exponents") {
  const long zeros[] = {0, 0, 0};
  CHECK(q_exponent(zeros) == FockOperator::identity(3));

  const long w[] = {0, -1};
  const FockOperator expected =
      FockOperator::identity(2) + number_op(2, 1) * (RationalFunction::q_power(-1) - RationalFunction(1));
  CHECK(q_exponent(w) == expected);

  const long a[] = {2, -1, 3};
  const long b[] = {-2, 1, -3};
  CHECK(q_exponent(a) * q_exponent(b) == FockOperator::identity(3));
  // Product form over modes, using idempotency of n^i.
  FockOperator product = FockOperator::identity(3);
  for (int i = 0; i < 3; ++i)
    product *= FockOperator::identity(3) + number_op(3, i) * (RationalFunction::q_power(a[i]) - RationalFunction(1));
  CHECK(q_exponent(a) == product);
}

TEST_CASE("normal form: single moves") {
  const NormalPolynomial p = normal_form(1, {annihilator(0), creator(0)});
  NormalPolynomial expected(1);
  expected.add_term({}, RationalFunction(1));
  expected.add_term({creator(0), annihilator(0)}, RationalFunction(-1));
  CHECK(p == expected);
  CHECK(normal_form(1, {creator(0), creator(0)}).is_zero());
  CHECK(word_to_string({creator(0), annihilator(1)}) == "a+_1 a^2");
}

TEST_CASE("normal form agrees with matrix products") {
  const Word w{annihilator(1), creator(0), annihilator(0), creator(1)};
  const NormalPolynomial p = normal_form(2, w);
  CHECK(p.to_operator() == word_operator(2, w));
  const auto back = decompose(word_operator(2, w));
  REQUIRE(back.has_value());
  CHECK(*back == p);
}

TEST_CASE("property: normal form is faithful and idempotent on random words") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int modes = 1 + trial % 3;
    Word w;
    const FockOperator m = random_word_operator(rng, modes, w);
    const NormalPolynomial p = normal_form(modes, w);
    CHECK(p.to_operator() == m);
    for (const auto& [mono, c] : p.terms()) {
      NormalPolynomial single(modes);
      single.add_term(mono, RationalFunction(1));
      CHECK(normal_form(modes, mono) == single);
    }
  }
}

TEST_CASE("property: star is an involutive antihomomorphism") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Word wx, wy;
    const FockOperator x = random_word_operator(rng, 3, wx);
    const FockOperator y = random_word_operator(rng, 3, wy);
    CHECK(star(star(x)) == x);
    CHECK(star(x * y) == star(y) * star(x));
  }
}

TEST_CASE("ordered monomials are a basis") {
  for (int modes = 1; modes <= 3; ++modes) {
    const auto basis = ordered_monomials(modes);
    CHECK(basis.size() == fock_dimension(modes) * fock_dimension(modes));
    std::vector<linalg::SparseVector> vectors;
    for (const auto& w : basis) {
      CHECK(is_ordered_monomial(w));
      vectors.push_back(linalg::flatten(word_operator(modes, w).matrix()));
    }
    CHECK(linalg::exact_rank(vectors) == basis.size());
  }
}
