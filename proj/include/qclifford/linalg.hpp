#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qclifford/sparse_matrix.hpp"

namespace qclifford::linalg {

using SparseVector = SparseMatrix::Row;

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

/// Rank over Q(q) of a family of sparse vectors. Each vector is scaled to
/// integer-polynomial entries and the family is reduced by fraction-free
/// (Bareiss) elimination with complete pivoting; every division performed
/// is exact in Z[q].
std::size_t exact_rank(const std::vector<SparseVector>& vectors);

/// Rank of the family specialized at q = q0 over GF(prime). A lower bound
/// for the generic rank. Returns nullopt when some denominator vanishes at
/// q0 modulo prime.
std::optional<std::size_t> modular_rank(const std::vector<SparseVector>& vectors, const mpq_class& q0,
                                        std::uint64_t prime = kDefaultPrime);

/// Exact inverse over Q(q); nullopt when singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

/// Basis of { x : row . x = 0 for every row } in Q(q)^unknowns.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& equations, std::size_t unknowns);

/// Coefficients c with sum_k c[k] * vectors[k] = target, when the family is
/// independent and the target lies in its span; nullopt otherwise.
std::optional<std::vector<RationalFunction>> solve_combination(const std::vector<SparseVector>& vectors,
                                                               const SparseVector& target);

// Row-major flattening of a matrix into a vector of length dim^2.
SparseVector flatten(const SparseMatrix& m);

}  // namespace qclifford::linalg
