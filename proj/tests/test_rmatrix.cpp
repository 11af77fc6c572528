#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qclifford/error.hpp"
#include "qclifford/linalg.hpp"
#include "qclifford/report.hpp"
#include "qclifford/rmatrix.hpp"

using namespace qclifford;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }

RMatrix load(const char* name) {
  std::ifstream in(std::string(QC_TEST_DATA) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return rmatrix_from_json(parse_json_text(buf.str()));
}

std::size_t rank_of(const SparseMatrix& m) {
  std::vector<linalg::SparseVector> rows;
  for (std::size_t r = 0; r < m.dim(); ++r) rows.push_back(m.row(r));
  return linalg::exact_rank(rows);
}

}  // namespace

TEST_CASE("sl(2) braid matrix entries") {
  const RMatrix r = build_rhat_sl(2);
  const RationalFunction q = RationalFunction::q();
  const RationalFunction expected[4][4] = {
      {q, 0, 0, 0}, {0, q - q.inverse(), 1, 0}, {0, 1, 0, 0}, {0, 0, 0, q}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(r.matrix().at(i, j) == expected[i][j]);
  CHECK(r.at(0, 1, 0, 1) == q - q.inverse());
  CHECK(r.at(1, 0, 0, 1).is_one());
}

TEST_CASE("entries of the sl(n) braid matrix come from a fixed set") {
  const RationalFunction q = RationalFunction::q();
  for (int n = 2; n <= 4; ++n) {
    const RMatrix r = build_rhat_sl(n);
    for (std::size_t row = 0; row < r.matrix().dim(); ++row)
      for (const auto& e : r.matrix().row(row))
        CHECK((e.value.is_one() || e.value == q || e.value == q - q.inverse()));
  }
}

TEST_CASE("builders reject bad sizes") {
  CHECK_THROWS_AS(build_rhat_sl(1), std::invalid_argument);
  CHECK_THROWS_AS(build_permutation(0), std::invalid_argument);
  CHECK_THROWS_AS(RMatrix(2, SparseMatrix(3), RMatrixKind::UserSupplied), std::invalid_argument);
}

TEST_CASE("permutation matrix") {
  for (int n = 1; n <= 3; ++n) {
    const RMatrix p = build_permutation(n);
    CHECK(p.matrix() * p.matrix() == SparseMatrix::identity(p.matrix().dim()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(p.at(i, j, j, i).is_one());
  }
  const RMatrix p2 = build_permutation(2);
  CHECK(p2.matrix().at(1, 2).is_one());
  CHECK(p2.matrix().at(2, 1).is_one());
  CHECK(p2.matrix().at(0, 0).is_one());
  CHECK(p2.matrix().at(3, 3).is_one());
  for (int n = 2; n <= 4; ++n) CHECK(build_rhat_sl(n).substitute(1) == build_permutation(n));
}

TEST_CASE("Hecke and braid identities") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(check_hecke(build_rhat_sl(n)).exact_zero());
    CHECK(check_braid(build_rhat_sl(n)).exact_zero());
  }
  CHECK_FALSE(check_hecke(build_permutation(2)).exact_zero());
  CHECK(check_braid(build_permutation(3)).exact_zero());
  CHECK(check_braid({2, SparseMatrix::identity(4), RMatrixKind::UserSupplied}).exact_zero());

  std::mt19937 rng(9);
  std::uniform_int_distribution<long> d(-3, 3);
  SparseMatrix random(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) random.set(r, c, RationalFunction(d(rng)));
  CHECK_FALSE(check_braid({2, random, RMatrixKind::UserSupplied}).exact_zero());
}

TEST_CASE("sl projector") {
  for (int n = 2; n <= 3; ++n) {
    const RMatrix rhat = build_rhat_sl(n);
    const RMatrix p = projector_sl(rhat);
    CHECK(p.kind() == RMatrixKind::ProjectorSl);
    CHECK(check_idempotent(p).exact_zero());
    CHECK(check_spectral_decomposition(rhat, p).exact_zero());
    const RMatrix perm = build_permutation(n);
    const SparseMatrix half_sum =
        (SparseMatrix::identity(perm.matrix().dim()) + perm.matrix()) * RationalFunction::from_rational(mpq_class(1, 2));
    CHECK(p.substitute(1).matrix() == half_sum);
    CHECK(rank_of(p.matrix()) == static_cast<std::size_t>(n * (n + 1) / 2));
  }
  CHECK_THROWS_WITH_AS(projector_sl(build_permutation(2)), "input is not an sl-type braid matrix",
                       std::invalid_argument);
}

TEST_CASE("deformed permutator") {
  const RMatrix r = build_rhat_sl(2);
  CHECK(deformed_permutator(r).at(1, 1) == rf("1 - q^-2"));
  CHECK(deformed_permutator(r).at(0, 0).is_one());
}

TEST_CASE("sp projector on an sp(2) braid matrix") {
  const RMatrix rhat = load("sp2_rhat.json");
  CHECK(rhat.kind() == RMatrixKind::UserSupplied);
  CHECK(check_braid(rhat).exact_zero());
  // Spectrum {q, -q^-3}: (R - q)(R + q^-3) = 0.
  const SparseMatrix one = SparseMatrix::identity(4);
  const RationalFunction q = RationalFunction::q();
  CHECK(((rhat.matrix() - one * q) * (rhat.matrix() + one * q.pow(-3))).is_zero());

  const SpProjectorResult sp = projector_sp(rhat);
  CHECK(sp.projector.matrix().dim() == rhat.matrix().dim());
  CHECK(sp.projector.kind() == RMatrixKind::ProjectorSp);
  // The built-in normalization does not give an idempotent.
  CHECK_FALSE(sp.idempotency.exact_zero());
  REQUIRE(sp.implied_normalization.has_value());
  CHECK(*sp.implied_normalization == (q + q.inverse()) * (q + q.pow(-3)));

  // Rescaling the projector by the two normalizations gives a genuine idempotent of rank 3.
  const RationalFunction builtin = (q + q.inverse()) * (q - q.pow(-3));
  const RMatrix fixed(2, sp.projector.matrix() * (builtin / *sp.implied_normalization), RMatrixKind::ProjectorSp);
  CHECK(check_idempotent(fixed).exact_zero());
  CHECK(rank_of(fixed.matrix()) == 3);
}

TEST_CASE("sp projector negative control and its pole") {
  const SpProjectorResult sp = projector_sp(build_rhat_sl(2));
  CHECK_FALSE(sp.idempotency.exact_zero());
  // The denominator q - q^(-1-n) vanishes at q = 1.
  CHECK_THROWS_AS(sp.projector.substitute(1), DomainError);
}

TEST_CASE("JSON round trip") {
  for (int n = 2; n <= 3; ++n) {
    const RMatrix r = projector_sl(build_rhat_sl(n));
    const Json j = rmatrix_to_json(r);
    CHECK(j["kind"] == "projector-sl");
    CHECK(rmatrix_from_json(parse_json_text(j.dump())) == r);
  }
  CHECK_THROWS_AS(rmatrix_from_json(parse_json_text(R"({"n": 2, "entries": [[0, 9, "q"]]})")), ParseError);
  CHECK_THROWS_AS(rmatrix_from_json(parse_json_text(R"({"entries": []})")), ParseError);
  CHECK_THROWS_AS(rmatrix_from_json(parse_json_text(R"({"n": 2, "entries": [[0, 0, "q +"]]})")), ParseError);
}
