#include "qclifford/chain.hpp"

#include <stdexcept>

#include "qclifford/error.hpp"
#include "qclifford/linalg.hpp"

namespace qclifford {

namespace {

std::size_t flat(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }

const char* mixed_label(ChainVariant v) {
  return v == ChainVariant::DiagonalMixed ? "mixed-diagonal" : "mixed-braided";
}

FamilyVerdict tally(const std::vector<RelationReport>& reports, const std::string& label) {
  FamilyVerdict v{label, 0, 0};
  for (const auto& r : reports) {
    if (r.label() != label) continue;
    ++v.total;
    if (r.exact_zero()) ++v.holding;
  }
  return v;
}

}  // namespace

const char* variant_name(ChainVariant v) {
  return v == ChainVariant::DiagonalMixed ? "diagonal-mixed" : "RM-braided-mixed";
}

ChainVariant parse_variant(const std::string& name) {
  if (name == "diagonal-mixed") return ChainVariant::DiagonalMixed;
  if (name == "RM-braided-mixed") return ChainVariant::BraidedMixed;
  throw std::invalid_argument("unknown chain variant '" + name + "' (expected diagonal-mixed or RM-braided-mixed)");
}

void ChainSpec::validate() const {
  if (copies < 1 || modes_per_copy < 1) throw std::invalid_argument("chain needs M >= 1 and N >= 1");
  if (copies * modes_per_copy > kMaxChainModes)
    throw LimitError("chain with M*N = " + std::to_string(copies * modes_per_copy) + " exceeds " +
                     std::to_string(kMaxChainModes) + " modes");
  if (rhat_n.n() != modes_per_copy) throw std::invalid_argument("R_N block dimension does not match N");
  if (variant == ChainVariant::BraidedMixed) {
    if (!rhat_m) throw std::invalid_argument("variant RM-braided-mixed requires R_M");
    if (rhat_m->n() != copies) throw std::invalid_argument("R_M block dimension does not match M");
  }
  if (!scales.empty() && scales.size() != static_cast<std::size_t>(copies))
    throw std::invalid_argument("expected " + std::to_string(copies) + " scale factors, got " +
                                std::to_string(scales.size()));
  for (const auto& s : scales)
    if (s.is_zero()) throw std::invalid_argument("scale factors must be nonzero");
}

RMatrix chain_rhat(int n) {
  if (n == 1) return {1, SparseMatrix::scalar(1, RationalFunction::q()), RMatrixKind::BraidSl};
  return build_rhat_sl(n);
}

std::vector<RelationReport> chain_residuals(const ChainSpec& spec, const GeneratorSet& gens,
                                            const RationalFunction& q) {
  spec.validate();
  gens.validate();
  const int M = spec.copies;
  const int N = spec.modes_per_copy;
  if (gens.modes != M * N)
    throw std::invalid_argument("chain needs " + std::to_string(M * N) + " modes, generator set has " +
                                std::to_string(gens.modes));
  const SparseMatrix& R = spec.rhat_n.matrix();
  std::optional<SparseMatrix> rm_inv;
  if (spec.variant == ChainVariant::BraidedMixed) {
    rm_inv = linalg::inverse(spec.rhat_m->matrix());
    if (!rm_inv) throw DomainError("R_M is singular");
  }
  auto C = [&](int a, int i) -> const FockOperator& { return gens.creators[static_cast<std::size_t>(a * N + i)]; };
  auto A = [&](int a, int i) -> const FockOperator& {
    return gens.annihilators[static_cast<std::size_t>(a * N + i)];
  };
  auto scale = [&](int a, int b) {
    return spec.scales.empty() ? RationalFunction(1)
                               : spec.scales[static_cast<std::size_t>(b)] / spec.scales[static_cast<std::size_t>(a)];
  };

  const int modes = gens.modes;
  const FockOperator zero = FockOperator::zero(modes);
  const FockOperator identity = FockOperator::identity(modes);
  const RationalFunction q_inv = q.inverse();
  std::vector<RelationReport> cc_out, aa_out, mixed_out;
  for (int a = 0; a < M; ++a) {
    for (int b = a; b < M; ++b) {
      const RationalFunction c = scale(a, b);
      for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
          FockOperator cc = C(a, i) * C(b, j);
          FockOperator aa = A(a, j) * A(b, i);
          FockOperator mix = A(a, i) * C(b, j);
          for (int h = 0; h < N; ++h) {
            for (int k = 0; k < N; ++k) {
              if (auto r = R.at(flat(N, h, k), flat(N, i, j)); !r.is_zero()) cc += C(b, h) * C(a, k) * (q * r * c);
              if (auto r = R.at(flat(N, i, j), flat(N, h, k)); !r.is_zero()) aa += A(b, k) * A(a, h) * (q * r * c);
              const RationalFunction r = R.at(flat(N, i, h), flat(N, j, k));
              if (r.is_zero()) continue;
              if (spec.variant == ChainVariant::DiagonalMixed) {
                mix += C(b, h) * A(a, k) * (q_inv * r * c);
                continue;
              }
              for (int g = 0; g < M; ++g) {
                for (int d = 0; d < M; ++d) {
                  const RationalFunction m = rm_inv->at(flat(M, a, g), flat(M, b, d));
                  if (!m.is_zero()) mix += C(g, h) * A(d, k) * (m * r * c);
                }
              }
            }
          }
          const std::vector<int> idx{a + 1, b + 1, i + 1, j + 1};
          cc_out.emplace_back(RelationFamily::CreatorCreator, "cc", idx, cc.matrix(), zero.matrix());
          aa_out.emplace_back(RelationFamily::AnnihilatorAnnihilator, "aa", idx, aa.matrix(), zero.matrix());
          mixed_out.emplace_back(RelationFamily::Mixed, mixed_label(spec.variant), idx, mix.matrix(),
                                 (a == b && i == j ? identity : zero).matrix());
        }
      }
    }
  }
  std::vector<RelationReport> out = std::move(cc_out);
  out.insert(out.end(), aa_out.begin(), aa_out.end());
  out.insert(out.end(), mixed_out.begin(), mixed_out.end());
  return out;
}

ChainExperiment lexicographic_experiment(int copies, int modes_per_copy, std::vector<RationalFunction> scales) {
  if (copies < 1 || modes_per_copy < 1) throw std::invalid_argument("chain needs M >= 1 and N >= 1");
  if (copies * modes_per_copy > kMaxExperimentModes)
    throw LimitError("lexicographic experiment supports M*N <= " + std::to_string(kMaxExperimentModes));
  const GeneratorSet gens = deforming_candidate(copies * modes_per_copy, Orientation::Later);
  ChainSpec spec{copies, modes_per_copy, ChainVariant::DiagonalMixed, chain_rhat(modes_per_copy), chain_rhat(copies),
                 std::move(scales)};

  ChainExperiment out;
  out.copies = copies;
  out.modes_per_copy = modes_per_copy;
  out.diagonal = chain_residuals(spec, gens);
  spec.variant = ChainVariant::BraidedMixed;
  out.braided = chain_residuals(spec, gens);
  out.scales = std::move(spec.scales);
  out.verdicts = {tally(out.diagonal, "cc"), tally(out.diagonal, "aa"), tally(out.diagonal, "mixed-diagonal"),
                  tally(out.braided, "mixed-braided")};
  return out;
}

}  // namespace qclifford
