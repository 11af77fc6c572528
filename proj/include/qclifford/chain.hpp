#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclifford/deform.hpp"
#include "qclifford/relation_report.hpp"
#include "qclifford/rmatrix.hpp"

namespace qclifford {

enum class ChainVariant { DiagonalMixed, BraidedMixed };

const char* variant_name(ChainVariant v);
ChainVariant parse_variant(const std::string& name);

inline constexpr int kMaxChainModes = 8;
inline constexpr int kMaxExperimentModes = 6;

/// M copies of an N-mode system. Generator (alpha, i) is mode alpha*N + i of
/// the underlying GeneratorSet (copy index outermost).
struct ChainSpec {
  int copies = 1;          // M
  int modes_per_copy = 2;  // N
  ChainVariant variant = ChainVariant::DiagonalMixed;
  RMatrix rhat_n;
  std::optional<RMatrix> rhat_m;  // required by BraidedMixed
  // Normalization freedom: the exchange term of every relation between
  // copies alpha <= beta is scaled by scales[beta] / scales[alpha].
  // Empty means all ones.
  std::vector<RationalFunction> scales;

  void validate() const;
};

/// The sl(n) braid matrix for n >= 2 and the 1x1 matrix [q] for n = 1.
RMatrix chain_rhat(int n);

/// For every alpha <= beta and i, j:
///   cc:  A+_{ai} A+_{bj} + q R[(h,k),(i,j)] A+_{bh} A+_{ak} = 0
///   aa:  A^{aj} A^{bi} + q R[(i,j),(h,k)] A^{bk} A^{ah} = 0
///   mixed, diagonal:  A^{ai} A+_{bj} + q^-1 R[(i,h),(j,k)] A+_{bh} A^{ak} = d_ij d_ab
///   mixed, braided:   A^{ai} A+_{bj} + RM^-1[(a,c),(b,d)] R[(i,h),(j,k)] A+_{ch} A^{dk} = d_ij d_ab
/// Index tuples are reported 1-based as (alpha, beta, i, j).
std::vector<RelationReport> chain_residuals(const ChainSpec& spec, const GeneratorSet& gens,
                                            const RationalFunction& q = RationalFunction::q());

struct FamilyVerdict {
  std::string family;
  std::size_t holding = 0;
  std::size_t total = 0;
};

struct ChainExperiment {
  int copies = 0;
  int modes_per_copy = 0;
  std::vector<RationalFunction> scales;
  std::vector<RelationReport> diagonal;  // cc, aa and diagonal mixed
  std::vector<RelationReport> braided;   // cc, aa and braided mixed
  std::vector<FamilyVerdict> verdicts;
};

/// Treats the M*N pairs (alpha, i) in lexicographic order as the modes of a
/// single deforming map and evaluates every chain family for both mixed
/// variants. The outcome is a finding; nothing is asserted.
ChainExperiment lexicographic_experiment(int copies, int modes_per_copy, std::vector<RationalFunction> scales = {});

}  // namespace qclifford
