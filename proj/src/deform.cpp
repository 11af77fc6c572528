#include "qclifford/deform.hpp"

#include <algorithm>
#include <stdexcept>

#include "qclifford/error.hpp"
#include "qclifford/linalg.hpp"

namespace qclifford {

namespace {

std::size_t flat(int n, int i, int j) { return static_cast<std::size_t>(i * n + j); }

FockOperator monomial_operator(const GeneratorSet& gens, const Word& word) {
  FockOperator out = FockOperator::identity(gens.modes);
  for (const auto& g : word) {
    const auto m = static_cast<std::size_t>(g.mode);
    out *= g.kind == GeneratorKind::Creator ? gens.creators[m] : gens.annihilators[m];
  }
  return out;
}

// 1 + (p - 1) x for an idempotent x equals p^x.
FockOperator dressing(const FockOperator& x, const RationalFunction& p) {
  return FockOperator::identity(x.modes()) + x * (p - RationalFunction(1));
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Undeformed:
      return "undeformed";
    case Provenance::DeformingMap:
      return "deforming-map";
    case Provenance::InverseComposition:
      return "inverse-composition";
    case Provenance::Conjugated:
      return "conjugated";
    case Provenance::User:
      return "user";
  }
  return "user";
}

void GeneratorSet::validate() const {
  const auto n = static_cast<std::size_t>(modes);
  if (creators.size() != n || annihilators.size() != n)
    throw std::invalid_argument("generator set on " + std::to_string(modes) + " modes has " +
                                std::to_string(creators.size()) + " creators and " +
                                std::to_string(annihilators.size()) + " annihilators");
  const std::size_t dim = fock_dimension(modes);
  for (std::size_t i = 0; i < n; ++i) {
    if (creators[i].dim() != dim || annihilators[i].dim() != dim)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " does not act on the " +
                                  std::to_string(dim) + "-dimensional Fock space");
  }
}

GeneratorSet GeneratorSet::substitute(const mpq_class& q0) const {
  GeneratorSet out{modes, {}, {}, provenance};
  for (const auto& c : creators) out.creators.push_back(c.substitute(q0));
  for (const auto& a : annihilators) out.annihilators.push_back(a.substitute(q0));
  return out;
}

GeneratorSet undeformed_generators(int modes) {
  GeneratorSet out{modes, {}, {}, Provenance::Undeformed};
  for (auto& g : build_generators(modes)) {
    out.creators.push_back(std::move(g.creator));
    out.annihilators.push_back(std::move(g.annihilator));
  }
  return out;
}

GeneratorSet deforming_candidate(int modes, Orientation orientation) {
  GeneratorSet out = undeformed_generators(modes);
  out.provenance = Provenance::DeformingMap;
  for (int i = 0; i < modes; ++i) {
    std::vector<long> weights(static_cast<std::size_t>(modes), 0);
    for (int j = 0; j < modes; ++j) {
      const bool dressed = orientation == Orientation::Later ? j > i : j < i;
      if (dressed) weights[static_cast<std::size_t>(j)] = -1;
    }
    const FockOperator d = q_exponent(weights);
    const auto k = static_cast<std::size_t>(i);
    out.creators[k] = d * out.creators[k];
    out.annihilators[k] = out.annihilators[k] * d;
  }
  return out;
}

GeneratorSet build_deforming_map(int modes) {
  GeneratorSet out = deforming_candidate(modes, Orientation::Later);
  if (modes < 2) return out;
  for (auto& r : relation_residuals(out, build_rhat_sl(modes)))
    if (!r.exact_zero())
      throw VerificationError("deforming map fails the " + std::string(family_name(r.family())) + " relation",
                              std::move(r));
  return out;
}

std::vector<RelationReport> relation_residuals(const GeneratorSet& gens, const RMatrix& rhat,
                                               const RationalFunction& q) {
  gens.validate();
  const int n = gens.modes;
  if (n != rhat.n())
    throw std::invalid_argument("generator set has " + std::to_string(n) + " modes but the R-matrix acts on " +
                                std::to_string(rhat.n()));
  const SparseMatrix one = SparseMatrix::identity(rhat.matrix().dim());
  const SparseMatrix p_plus = (one + rhat.matrix() * q) * (RationalFunction(1) + q * q).inverse();
  const SparseMatrix p_q = rhat.matrix() * q.inverse();

  const auto N = static_cast<std::size_t>(n);
  std::vector<FockOperator> cc_products;
  std::vector<FockOperator> aa_products;
  std::vector<FockOperator> ca_products;
  for (std::size_t h = 0; h < N; ++h) {
    for (std::size_t k = 0; k < N; ++k) {
      cc_products.push_back(gens.creators[h] * gens.creators[k]);
      aa_products.push_back(gens.annihilators[k] * gens.annihilators[h]);
      ca_products.push_back(gens.creators[h] * gens.annihilators[k]);
    }
  }

  std::vector<RelationReport> out;
  out.reserve(3 * N * N);
  const FockOperator zero = FockOperator::zero(n);
  const FockOperator identity = FockOperator::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      FockOperator cc = zero;
      FockOperator aa = zero;
      FockOperator mix = gens.annihilators[static_cast<std::size_t>(i)] * gens.creators[static_cast<std::size_t>(j)];
      for (int h = 0; h < n; ++h) {
        for (int k = 0; k < n; ++k) {
          const std::size_t hk = flat(n, h, k);
          if (auto c = p_plus.at(hk, flat(n, i, j)); !c.is_zero()) cc += cc_products[hk] * c;
          if (auto c = p_plus.at(flat(n, i, j), hk); !c.is_zero()) aa += aa_products[hk] * c;
          if (auto c = p_q.at(flat(n, i, h), flat(n, j, k)); !c.is_zero()) mix += ca_products[hk] * c;
        }
      }
      const std::vector<int> idx{i + 1, j + 1};
      out.emplace_back(RelationFamily::CreatorCreator, "cc", idx, cc.matrix(), zero.matrix());
      out.emplace_back(RelationFamily::AnnihilatorAnnihilator, "aa", idx, aa.matrix(), zero.matrix());
      out.emplace_back(RelationFamily::Mixed, "mixed", idx, mix.matrix(),
                       (i == j ? identity : zero).matrix());
    }
  }
  // Family-major order: all cc, then aa, then mixed.
  std::stable_sort(out.begin(), out.end(), [](const RelationReport& a, const RelationReport& b) {
    return static_cast<int>(a.family()) < static_cast<int>(b.family());
  });
  return out;
}

GeneratorSet build_inverse_map(const GeneratorSet& deformed) {
  deformed.validate();
  const int n = deformed.modes;
  const auto N = static_cast<std::size_t>(n);
  const RationalFunction q = RationalFunction::q();
  const RationalFunction q2 = q * q;

  // Undeformed number operators, rebuilt from the deformed generators only.
  std::vector<FockOperator> number(N, FockOperator::zero(n));
  for (int j = n - 1; j >= 0; --j) {
    const auto J = static_cast<std::size_t>(j);
    FockOperator nj = deformed.creators[J] * deformed.annihilators[J];
    for (std::size_t k = J + 1; k < N; ++k) nj = dressing(number[k], q2) * nj;
    number[J] = std::move(nj);
  }

  GeneratorSet out{n, {}, {}, Provenance::InverseComposition};
  for (std::size_t i = 0; i < N; ++i) {
    FockOperator d = FockOperator::identity(n);
    for (std::size_t j = i + 1; j < N; ++j) d = d * dressing(number[j], q);
    out.creators.push_back(d * deformed.creators[i]);
    out.annihilators.push_back(deformed.annihilators[i] * d);
  }

  const GeneratorSet plain = undeformed_generators(n);
  for (std::size_t i = 0; i < N; ++i) {
    const std::vector<int> idx{static_cast<int>(i) + 1};
    RelationReport c(RelationFamily::Custom, "inverse:creator", idx, out.creators[i].matrix(),
                     plain.creators[i].matrix());
    if (!c.exact_zero()) throw VerificationError("inverse map does not recover a+_" + std::to_string(i + 1), c);
    RelationReport a(RelationFamily::Custom, "inverse:annihilator", idx, out.annihilators[i].matrix(),
                     plain.annihilators[i].matrix());
    if (!a.exact_zero()) throw VerificationError("inverse map does not recover a^" + std::to_string(i + 1), a);
  }
  return out;
}

GeneratorSet conjugate_realization(const GeneratorSet& gens, const FockOperator& alpha) {
  gens.validate();
  if (alpha.modes() != gens.modes) throw std::invalid_argument("conjugating operator acts on the wrong mode count");
  auto inv = linalg::inverse(alpha.matrix());
  if (!inv) throw DomainError("conjugating operator is singular");
  const FockOperator alpha_inv(gens.modes, std::move(*inv));
  GeneratorSet out{gens.modes, {}, {}, Provenance::Conjugated};
  for (const auto& c : gens.creators) out.creators.push_back(alpha * c * alpha_inv);
  for (const auto& a : gens.annihilators) out.annihilators.push_back(alpha * a * alpha_inv);
  return out;
}

PoincareResult poincare_rank(const GeneratorSet& gens, RankMode mode) {
  gens.validate();
  const int limit = mode == RankMode::Exact ? kMaxExactRankModes : kMaxModularRankModes;
  if (gens.modes > limit)
    throw LimitError(std::string(mode == RankMode::Exact ? "exact" : "modular") + " rank supports at most " +
                     std::to_string(limit) + " modes, got " + std::to_string(gens.modes));

  std::vector<linalg::SparseVector> vectors;
  for (const auto& w : ordered_monomials(gens.modes)) vectors.push_back(linalg::flatten(monomial_operator(gens, w).matrix()));

  PoincareResult out;
  out.expected = vectors.size();
  out.mode = mode;
  if (mode == RankMode::Exact) {
    out.rank = linalg::exact_rank(vectors);
    return out;
  }
  // Fixed sample points keep reports reproducible.
  out.samples = {mpq_class(7, 5), mpq_class(5, 7), mpq_class(13, 11)};
  for (const auto& s : out.samples)
    if (auto r = linalg::modular_rank(vectors, s)) out.rank = std::max(out.rank, *r);
  return out;
}

PoincareResult poincare_rank(const GeneratorSet& gens) {
  return poincare_rank(gens, gens.modes <= kMaxExactRankModes ? RankMode::Exact : RankMode::Modular);
}

std::vector<RelationReport> star_compatibility(const GeneratorSet& gens) {
  gens.validate();
  std::vector<RelationReport> out;
  for (std::size_t i = 0; i < gens.creators.size(); ++i)
    out.emplace_back(RelationFamily::Custom, "star", std::vector<int>{static_cast<int>(i) + 1},
                     star(gens.annihilators[i]).matrix(), gens.creators[i].matrix());
  return out;
}

}  // namespace qclifford
