#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qclifford/fock.hpp"
#include "qclifford/relation_report.hpp"
#include "qclifford/rmatrix.hpp"

namespace qclifford {

enum class Provenance { Undeformed, DeformingMap, InverseComposition, Conjugated, User };

const char* provenance_name(Provenance p);

/// Realization of the generators A^+_i, A^i of a (possibly deformed)
/// Clifford algebra as operators on the undeformed Fock space.
struct GeneratorSet {
  int modes = 0;
  std::vector<FockOperator> creators;      // A^+_i
  std::vector<FockOperator> annihilators;  // A^i
  Provenance provenance = Provenance::User;

  // Throws std::invalid_argument on length or dimension mismatch.
  void validate() const;
  GeneratorSet substitute(const mpq_class& q0) const;
  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
    return a.modes == b.modes && a.creators == b.creators && a.annihilators == b.annihilators;
  }
};

GeneratorSet undeformed_generators(int modes);

// Which modes dress A^+_i with q^(-n^j): the later ones (j > i) or the
// earlier ones (j < i).
enum class Orientation { Later, Earlier };

/// A^+_i = q^(-sum n^j) a^+_i, A^i = a^i q^(-sum n^j), sum over the dressed
/// modes. Not checked.
GeneratorSet deforming_candidate(int modes, Orientation orientation);

/// The checked map: the Orientation::Later candidate, verified against
/// relation_residuals with build_rhat_sl(modes). Throws VerificationError
/// carrying the first failing report. For one mode this is the identity.
GeneratorSet build_deforming_map(int modes);

/// N^2 creator-creator, N^2 annihilator-annihilator and N^2 mixed residuals
/// of the quadratic relations governed by rhat, with
///   P+ = (1 + q R) / (1 + q^2) = (q^-1 + R) / (q + q^-1),   Pq = R / q.
/// cc(i,j):  P+[(h,k),(i,j)] A+_h A+_k = 0
/// aa(i,j):  P+[(i,j),(h,k)] A^k A^h = 0
/// mix(i,j): A^i A+_j + Pq[(i,h),(j,k)] A+_h A^k = delta_ij
/// Pass rhat = permutation and q = 1 for the undeformed relations.
std::vector<RelationReport> relation_residuals(const GeneratorSet& gens, const RMatrix& rhat,
                                               const RationalFunction& q = RationalFunction::q());

/// Expresses the undeformed generators through the deformed ones:
///   a+_i = prod_{j>i} (1 + (q-1) n^j) A+_i,  a^i = A^i prod_{j>i} (1 + (q-1) n^j),
/// where n^j = prod_{k>j} (1 + (q^2-1) n^k) A+_j A^j is rebuilt from the
/// top mode down. The result must equal the undeformed generators exactly;
/// VerificationError otherwise.
GeneratorSet build_inverse_map(const GeneratorSet& deformed);

/// alpha A alpha^-1 for every generator. DomainError when alpha is singular.
GeneratorSet conjugate_realization(const GeneratorSet& gens, const FockOperator& alpha);

enum class RankMode { Exact, Modular };

struct PoincareResult {
  std::size_t rank = 0;
  std::size_t expected = 0;
  RankMode mode = RankMode::Exact;
  std::vector<mpq_class> samples;  // sample points, modular mode only
};

inline constexpr int kMaxExactRankModes = 3;
inline constexpr int kMaxModularRankModes = 6;

/// Rank of the 4^N ordered monomials in the given generators, flattened to
/// vectors. Exact mode for N <= 3; modular mode samples q at three fixed
/// rationals in (1/2, 2) and takes the largest rank (N <= 6).
/// Throws LimitError beyond those sizes.
PoincareResult poincare_rank(const GeneratorSet& gens, RankMode mode);
PoincareResult poincare_rank(const GeneratorSet& gens);

/// One report per mode: star(A^i) against A^+_i.
std::vector<RelationReport> star_compatibility(const GeneratorSet& gens);

}  // namespace qclifford
