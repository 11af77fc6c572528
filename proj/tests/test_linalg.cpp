#include <random>

#include "doctest.h"
#include "qclifford/linalg.hpp"

using namespace qclifford;
using linalg::SparseVector;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }

SparseVector vec(std::initializer_list<RationalFunction> dense) {
  SparseVector v;
  std::size_t k = 0;
  for (const auto& x : dense) {
    if (!x.is_zero()) v.push_back({k, x});
    ++k;
  }
  return v;
}

}  // namespace

TEST_CASE("exact rank over the function field") {
  const RationalFunction q = RationalFunction::q();
  // Second row is q times the first: rank 1 over Q(q), rank 2 over Q.
  CHECK(linalg::exact_rank({vec({1, q}), vec({q, q * q})}) == 1);
  CHECK(linalg::exact_rank({vec({1, q}), vec({q, 1})}) == 2);
  CHECK(linalg::exact_rank({}) == 0);
  CHECK(linalg::exact_rank({vec({0, 0})}) == 0);
  CHECK(linalg::exact_rank({vec({rf("1/(q+1)"), 1, 0}), vec({1, q + 1, 0}), vec({0, 0, rf("q^-3")})}) == 2);
}

TEST_CASE("modular rank is a lower bound that is tight at generic points") {
  const RationalFunction q = RationalFunction::q();
  const std::vector<SparseVector> family{vec({1, q}), vec({q, 1})};
  CHECK(linalg::modular_rank(family, mpq_class(7, 5)) == 2u);
  // At q = 1 the two rows coincide.
  CHECK(linalg::modular_rank(family, mpq_class(1)) == 1u);
  // A denominator vanishing at the sample point is reported, not guessed.
  CHECK_FALSE(linalg::modular_rank({vec({rf("1/(q-2)")})}, mpq_class(2)).has_value());
}

TEST_CASE("inverse of a q-dependent matrix") {
  SparseMatrix m(2);
  m.set(0, 0, RationalFunction::q());
  m.set(0, 1, RationalFunction(1));
  m.set(1, 0, RationalFunction(1));
  auto inv = linalg::inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == SparseMatrix::identity(2));
  CHECK(*inv * m == SparseMatrix::identity(2));

  SparseMatrix singular(2);
  singular.set(0, 0, RationalFunction::q());
  singular.set(0, 1, RationalFunction(1));
  singular.set(1, 0, RationalFunction::q() * RationalFunction::q());
  singular.set(1, 1, RationalFunction::q());
  CHECK_FALSE(linalg::inverse(singular).has_value());
}

TEST_CASE("nullspace vectors satisfy every equation") {
  const RationalFunction q = RationalFunction::q();
  const std::vector<SparseVector> eqs{vec({1, q, 0, 1}), vec({0, 1, -q, 0})};
  const auto basis = linalg::nullspace(eqs, 4);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) {
    for (const auto& e : eqs) {
      RationalFunction dot;
      for (const auto& a : e)
        for (const auto& b : v)
          if (a.col == b.col) dot += a.value * b.value;
      CHECK(dot.is_zero());
    }
  }
}

TEST_CASE("solve_combination recovers coefficients") {
  const RationalFunction q = RationalFunction::q();
  const std::vector<SparseVector> family{vec({1, 0, q}), vec({0, 1, 1})};
  const auto c = linalg::solve_combination(family, vec({q, 2, q * q + 2}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == q);
  CHECK((*c)[1] == RationalFunction(2));
  CHECK_FALSE(linalg::solve_combination(family, vec({0, 0, 1})).has_value());
}

TEST_CASE("property: rank of random integer matrices matches their modular rank") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SparseVector> rows;
    for (int r = 0; r < 5; ++r) {
      SparseVector v;
      for (std::size_t c = 0; c < 5; ++c)
        if (long x = d(rng); x != 0) v.push_back({c, RationalFunction(x)});
      rows.push_back(v);
    }
    CHECK(linalg::exact_rank(rows) == linalg::modular_rank(rows, mpq_class(3)).value());
  }
}
