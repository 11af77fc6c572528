#include "doctest.h"
#include "qclifford/chain.hpp"
#include "qclifford/error.hpp"

using namespace qclifford;

namespace {

ChainSpec spec_for(int copies, int modes_per_copy, ChainVariant v = ChainVariant::DiagonalMixed) {
  return {copies, modes_per_copy, v, chain_rhat(modes_per_copy), chain_rhat(copies), {}};
}

}  // namespace

TEST_CASE("chain_rhat") {
  const RMatrix one = chain_rhat(1);
  CHECK(one.n() == 1);
  CHECK(one.matrix().at(0, 0) == RationalFunction::q());
  CHECK(chain_rhat(3) == build_rhat_sl(3));
}

TEST_CASE("a single copy reproduces the quadratic relations") {
  const RationalFunction scale = RationalFunction(1) + RationalFunction::q_power(2);
  for (int n = 2; n <= 3; ++n) {
    for (const GeneratorSet& g : {build_deforming_map(n), undeformed_generators(n)}) {
      const auto chain = chain_residuals(spec_for(1, n), g);
      const auto single = relation_residuals(g, build_rhat_sl(n));
      REQUIRE(chain.size() == single.size());
      for (std::size_t k = 0; k < chain.size(); ++k) {
        CHECK(chain[k].family() == single[k].family());
        // cc and aa use 1 + qR against the normalized projector (1 + qR)/(1 + q^2).
        const RationalFunction f = single[k].family() == RelationFamily::Mixed ? RationalFunction(1) : scale;
        CHECK(chain[k].residual() == single[k].residual() * f);
      }
    }
  }
}

TEST_CASE("indices, labels and ordering") {
  const auto r = chain_residuals(spec_for(2, 2), deforming_candidate(4, Orientation::Later));
  CHECK(r.size() == 36);
  CHECK(r[0].label() == "cc");
  CHECK(r[0].indices() == std::vector<int>{1, 1, 1, 1});
  CHECK(r[11].indices() == std::vector<int>{2, 2, 2, 2});
  CHECK(r[12].label() == "aa");
  CHECK(r[24].label() == "mixed-diagonal");
  CHECK(r[28].indices() == std::vector<int>{1, 2, 1, 1});
}

TEST_CASE("q = 1 degeneration") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      ChainSpec s{m, n, ChainVariant::DiagonalMixed, build_permutation(n), build_permutation(m), {}};
      const GeneratorSet g = undeformed_generators(m * n);
      const auto diagonal = chain_residuals(s, g, RationalFunction(1));
      CHECK(all_exact_zero(diagonal));
      s.variant = ChainVariant::BraidedMixed;
      const auto braided = chain_residuals(s, g, RationalFunction(1));
      CHECK(all_exact_zero(braided));
      // With a permutation R_M the braided mixed relation is the diagonal one.
      REQUIRE(braided.size() == diagonal.size());
      for (std::size_t k = 0; k < braided.size(); ++k) CHECK(braided[k].lhs() == diagonal[k].lhs());
    }
  }
}

TEST_CASE("scale factors") {
  const GeneratorSet g = deforming_candidate(4, Orientation::Later);
  ChainSpec plain = spec_for(2, 2);
  ChainSpec uniform = plain;
  uniform.scales = {RationalFunction::q(), RationalFunction::q()};
  const auto a = chain_residuals(plain, g);
  const auto b = chain_residuals(uniform, g);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].residual() == b[k].residual());

  ChainSpec skewed = plain;
  skewed.scales = {RationalFunction(1), RationalFunction::q()};
  const auto c = chain_residuals(skewed, g);
  // Same-copy relations do not see the scales.
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].indices()[0] == a[k].indices()[1]) CHECK(a[k].residual() == c[k].residual());
}

TEST_CASE("spec validation") {
  const GeneratorSet g = undeformed_generators(4);
  ChainSpec s = spec_for(2, 2, ChainVariant::BraidedMixed);
  s.rhat_m.reset();
  CHECK_THROWS_WITH_AS(chain_residuals(s, g), "variant RM-braided-mixed requires R_M", std::invalid_argument);
  ChainSpec wrong_n = spec_for(2, 2);
  wrong_n.rhat_n = build_rhat_sl(3);
  CHECK_THROWS_AS(wrong_n.validate(), std::invalid_argument);
  ChainSpec bad_scales = spec_for(2, 2);
  bad_scales.scales = {RationalFunction(1)};
  CHECK_THROWS_AS(bad_scales.validate(), std::invalid_argument);
  bad_scales.scales = {RationalFunction(1), RationalFunction(0)};
  CHECK_THROWS_AS(bad_scales.validate(), std::invalid_argument);
  CHECK_THROWS_AS(spec_for(3, 3).validate(), LimitError);
  CHECK_THROWS_AS(chain_residuals(spec_for(2, 2), undeformed_generators(3)), std::invalid_argument);
  CHECK(parse_variant("RM-braided-mixed") == ChainVariant::BraidedMixed);
  CHECK_THROWS_AS(parse_variant("braided"), std::invalid_argument);
}

TEST_CASE("lexicographic experiment") {
  const ChainExperiment e = lexicographic_experiment(2, 2);
  REQUIRE(e.verdicts.size() == 4);
  const std::size_t holding[] = {8, 9, 8, 2};
  const char* names[] = {"cc", "aa", "mixed-diagonal", "mixed-braided"};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(e.verdicts[k].family == names[k]);
    CHECK(e.verdicts[k].total == 12);
    CHECK(e.verdicts[k].holding == holding[k]);
  }
  // One copy is just the deforming map.
  for (const auto& v : lexicographic_experiment(1, 2).verdicts) CHECK(v.holding == v.total);

  const ChainExperiment scaled = lexicographic_experiment(2, 2, {RationalFunction(1), RationalFunction::q()});
  CHECK(scaled.scales.size() == 2);
  CHECK(scaled.verdicts[0].total == 12);
  CHECK_THROWS_AS(lexicographic_experiment(3, 3), LimitError);
}
