#include "qclifford/rmatrix.hpp"

#include <stdexcept>

#include "qclifford/error.hpp"

namespace qclifford {

namespace {

std::size_t pair_index(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }

SparseMatrix identity_like(const RMatrix& m) { return SparseMatrix::identity(m.matrix().dim()); }

}  // namespace

const char* kind_name(RMatrixKind kind) {
  switch (kind) {
    case RMatrixKind::BraidSl:
      return "braid-sl";
    case RMatrixKind::Permutation:
      return "permutation";
    case RMatrixKind::ProjectorSl:
      return "projector-sl";
    case RMatrixKind::ProjectorSp:
      return "projector-sp";
    case RMatrixKind::UserSupplied:
      return "user-supplied";
  }
  return "user-supplied";
}

RMatrixKind parse_kind(const std::string& name) {
  for (auto k : {RMatrixKind::BraidSl, RMatrixKind::Permutation, RMatrixKind::ProjectorSl, RMatrixKind::ProjectorSp,
                 RMatrixKind::UserSupplied}) {
    if (name == kind_name(k)) return k;
  }
  throw std::invalid_argument("unknown R-matrix kind '" + name + "'");
}

RMatrix::RMatrix(int n, SparseMatrix entries, RMatrixKind kind) : n_(n), entries_(std::move(entries)), kind_(kind) {
  if (n < 1) throw std::invalid_argument("R-matrix block dimension must be positive");
  const auto want = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (entries_.dim() != want)
    throw std::invalid_argument("R-matrix with n = " + std::to_string(n) + " needs dimension " + std::to_string(want) +
                                ", got " + std::to_string(entries_.dim()));
}

RationalFunction RMatrix::at(int i, int j, int h, int k) const {
  return entries_.at(pair_index(n_, i, j), pair_index(n_, h, k));
}

RMatrix build_rhat_sl(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) braid matrix requires n >= 2, got " + std::to_string(n));
  const RationalFunction q = RationalFunction::q();
  const RationalFunction q_minus_inv = q - RationalFunction::q_power(-1);
  SparseMatrix m(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        m.set(pair_index(n, i, i), pair_index(n, i, i), q);
        continue;
      }
      m.set(pair_index(n, i, j), pair_index(n, j, i), RationalFunction(1));
      if (i < j) m.set(pair_index(n, i, j), pair_index(n, i, j), q_minus_inv);
    }
  }
  return {n, std::move(m), RMatrixKind::BraidSl};
}

RMatrix build_permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation matrix requires n >= 1, got " + std::to_string(n));
  SparseMatrix m(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(pair_index(n, i, j), pair_index(n, j, i), RationalFunction(1));
  return {n, std::move(m), RMatrixKind::Permutation};
}

SparseMatrix deformed_permutator(const RMatrix& rhat, const RationalFunction& q) { return rhat.matrix() * q.inverse(); }

RelationReport check_hecke(const RMatrix& rhat) {
  const RationalFunction q = RationalFunction::q();
  const SparseMatrix one = identity_like(rhat);
  SparseMatrix lhs = (rhat.matrix() - one * q) * (rhat.matrix() + one * q.inverse());
  return {RelationFamily::Custom, "hecke", {rhat.n()}, std::move(lhs), SparseMatrix(one.dim())};
}

RelationReport check_braid(const RMatrix& rhat) {
  const SparseMatrix one = SparseMatrix::identity(static_cast<std::size_t>(rhat.n()));
  const SparseMatrix r12 = kron(rhat.matrix(), one);
  const SparseMatrix r23 = kron(one, rhat.matrix());
  return {RelationFamily::Custom, "braid", {rhat.n()}, r12 * r23 * r12, r23 * r12 * r23};
}

RelationReport check_idempotent(const RMatrix& projector) {
  return {RelationFamily::Custom, "idempotent", {projector.n()}, projector.matrix() * projector.matrix(),
          projector.matrix()};
}

RelationReport check_spectral_decomposition(const RMatrix& rhat, const RMatrix& projector) {
  const RationalFunction q = RationalFunction::q();
  const SparseMatrix one = identity_like(rhat);
  SparseMatrix rhs = projector.matrix() * q - (one - projector.matrix()) * q.inverse();
  return {RelationFamily::Custom, "spectral-decomposition", {rhat.n()}, rhat.matrix(), std::move(rhs)};
}

RMatrix projector_sl(const RMatrix& rhat) {
  if (!check_hecke(rhat).exact_zero()) throw std::invalid_argument("input is not an sl-type braid matrix");
  const RationalFunction q = RationalFunction::q();
  SparseMatrix p = (identity_like(rhat) + rhat.matrix() * q) * (RationalFunction(1) + q * q).inverse();
  return {rhat.n(), std::move(p), RMatrixKind::ProjectorSl};
}

SpProjectorResult projector_sp(const RMatrix& rhat) {
  const RationalFunction q = RationalFunction::q();
  const long n = rhat.n();
  const RationalFunction denominator = (q + q.inverse()) * (q - RationalFunction::q_power(-1 - n));
  if (denominator.is_zero()) throw DomainError("division by zero polynomial in the sp projector denominator");

  const SparseMatrix& r = rhat.matrix();
  const SparseMatrix numerator = r * r + r * (RationalFunction::q_power(-1 - n) + q.inverse()) +
                                 identity_like(rhat) * RationalFunction::q_power(-2 - n);
  RMatrix projector(rhat.n(), numerator * denominator.inverse(), RMatrixKind::ProjectorSp);
  RelationReport idempotency = check_idempotent(projector);

  std::optional<RationalFunction> implied;
  const SparseMatrix square = numerator * numerator;
  for (std::size_t row = 0; row < numerator.dim() && !implied; ++row) {
    if (numerator.row(row).empty()) continue;
    const auto& e = numerator.row(row).front();
    const RationalFunction lambda = square.at(row, e.col) / e.value;
    if (square == numerator * lambda) implied = lambda;
    break;
  }
  return {std::move(projector), std::move(idempotency), std::move(implied)};
}

}  // namespace qclifford
