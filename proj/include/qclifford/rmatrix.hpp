#pragma once

#include <optional>
#include <string>

#include "qclifford/relation_report.hpp"
#include "qclifford/sparse_matrix.hpp"

namespace qclifford {

enum class RMatrixKind { BraidSl, Permutation, ProjectorSl, ProjectorSp, UserSupplied };

const char* kind_name(RMatrixKind kind);
// Throws std::invalid_argument for unknown names.
RMatrixKind parse_kind(const std::string& name);

/// An n^2 x n^2 matrix acting on the tensor square of the defining
/// representation. The pair (i, j) is flattened to i*n + j (0-based), so the
/// entry M^{ij}_{hk} (upper pair = row) sits at (i*n + j, h*n + k).
class RMatrix {
 public:
  RMatrix(int n, SparseMatrix entries, RMatrixKind kind);

  int n() const { return n_; }
  RMatrixKind kind() const { return kind_; }
  const SparseMatrix& matrix() const { return entries_; }
  RationalFunction at(int i, int j, int h, int k) const;

  RMatrix substitute(const mpq_class& q0) const { return {n_, entries_.substitute(q0), kind_}; }
  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  SparseMatrix entries_;
  RMatrixKind kind_;
};

/// Braid matrix of U_q sl(n) in the defining representation:
/// q on (ii,ii), 1 on (ij,ji) for i != j, q - q^-1 on (ij,ij) for i < j.
/// Throws std::invalid_argument for n < 2.
RMatrix build_rhat_sl(int n);

/// P^{ij}_{hk} = delta^i_k delta^j_h. Throws for n < 1.
RMatrix build_permutation(int n);

/// q^-1 R: the deformed permutator entering the mixed relations.
SparseMatrix deformed_permutator(const RMatrix& rhat, const RationalFunction& q = RationalFunction::q());

/// (1 + q R) / (1 + q^2), the idempotent onto the q-eigenspace of R.
/// Validates the Hecke identity first and throws
/// std::invalid_argument("input is not an sl-type braid matrix") otherwise.
RMatrix projector_sl(const RMatrix& rhat);

struct SpProjectorResult {
  RMatrix projector;
  RelationReport idempotency;
  // When the numerator polynomial in R squares to lambda times itself,
  // lambda is the denominator that would make it idempotent.
  std::optional<RationalFunction> implied_normalization;
};

/// (R^2 + (q^(-1-n) + q^-1) R + q^(-2-n)) / ((q + q^-1)(q - q^(-1-n))) for a
/// user-supplied sp(n) braid matrix. Idempotency is checked and reported,
/// never assumed. Throws DomainError when the denominator vanishes.
SpProjectorResult projector_sp(const RMatrix& rhat);

/// (R - q)(R + q^-1) = 0.
RelationReport check_hecke(const RMatrix& rhat);
/// R12 R23 R12 = R23 R12 R23 on the triple tensor power.
RelationReport check_braid(const RMatrix& rhat);
/// P^2 = P.
RelationReport check_idempotent(const RMatrix& projector);
/// R = q P - q^-1 (1 - P).
RelationReport check_spectral_decomposition(const RMatrix& rhat, const RMatrix& projector);

}  // namespace qclifford
