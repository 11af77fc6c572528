#include <algorithm>

#include "doctest.h"
#include "qclifford/hopf.hpp"

using namespace qclifford;

namespace {

std::size_t failures(const std::vector<RelationReport>& reports) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const RelationReport& r) { return !r.exact_zero(); }));
}

HopfWord word(const HopfAlgebraData& h, std::initializer_list<const char*> names) {
  HopfWord w;
  for (const char* n : names) w.push_back(h.index(n));
  return w;
}

}  // namespace

TEST_CASE("generator tables") {
  const HopfAlgebraData c = classical_js();
  CHECK(c.primary().size() == 3);
  CHECK(all_exact_zero(check_sl2_relations(c)));

  const HopfAlgebraData d = deformed_js();
  CHECK(d.convention == CoproductConvention::Mirrored);
  CHECK(d.primary().size() == 3);
  CHECK_FALSE(d.generators[static_cast<std::size_t>(d.index("K^-1"))].primary);
  CHECK(all_exact_zero(check_uq_relations(d)));
  CHECK_THROWS_AS(d.index("X"), std::invalid_argument);
}

TEST_CASE("Jordan-Schwinger images by hand") {
  const HopfAlgebraData d = deformed_js();
  const auto g = build_generators(2);
  CHECK(d.image(word(d, {"E"})) == g[0].creator * g[1].annihilator);
  CHECK(d.image(word(d, {"F"})) == g[1].creator * g[0].annihilator);
  // K = q^(n1 - n2): diagonal (1, 1/q, q, 1) on |00>, |01>, |10>, |11>.
  const std::vector<RationalFunction> diag{1, RationalFunction::q_power(-1), RationalFunction::q(), 1};
  CHECK(d.image(word(d, {"K"})).matrix() == SparseMatrix::diagonal(diag));
}

TEST_CASE("Hopf structure maps") {
  const HopfAlgebraData d = deformed_js();
  const RationalFunction q = RationalFunction::q();
  CHECK(d.counit(word(d, {"K"})).is_one());
  CHECK(d.counit(word(d, {"E"})).is_zero());
  CHECK(d.counit(word(d, {"K", "K^-1"})).is_one());
  const HopfTerm s = d.antipode(word(d, {"E"}));
  CHECK(s.coefficient == RationalFunction(-1));
  CHECK(s.word == word(d, {"K^-1", "E"}));
  const HopfTerm sf = d.antipode(word(d, {"F"}));
  CHECK(sf.word == word(d, {"F", "K"}));
  CHECK(d.coproduct(word(d, {"E"})).size() == 2);
  CHECK(d.coproduct(word(d, {"E", "F"})).size() == 4);
  CHECK(d.representation(word(d, {"K", "E"})) == SparseMatrix::unit(2, 0, 1) * q);
}

TEST_CASE("action on the identity is the counit") {
  for (const HopfAlgebraData& h : {classical_js(), deformed_js(), deformed_js(CoproductConvention::Candidate)}) {
    const int modes = 2;
    for (int x : h.primary()) {
      const FockOperator got = act(h, {x}, FockOperator::identity(modes));
      CHECK(got == FockOperator::scalar(modes, h.generators[static_cast<std::size_t>(x)].counit));
    }
  }
}

TEST_CASE("K scales the deformed generators") {
  const HopfAlgebraData d = deformed_js();
  const GeneratorSet g = build_deforming_map(2);
  const RationalFunction q = RationalFunction::q();
  CHECK(act(d, word(d, {"K"}), g.creators[0]) == g.creators[0] * q);
  CHECK(act(d, word(d, {"K"}), g.creators[1]) == g.creators[1] * q.inverse());
  CHECK(act(d, word(d, {"K"}), g.annihilators[0]) == g.annihilators[0] * q.inverse());
  CHECK(act(d, word(d, {"E"}), g.creators[1]) == g.creators[0]);
  CHECK(act(d, word(d, {"E"}), g.creators[0]).is_zero());
}

TEST_CASE("covariance of the deformed generators depends on the coproduct convention") {
  const GeneratorSet g = build_deforming_map(2);
  CHECK(all_exact_zero(check_covariance(g, deformed_js(CoproductConvention::Mirrored))));
  CHECK(failures(check_covariance(g, deformed_js(CoproductConvention::Candidate))) == 4);
  // Negative control: the undeformed generators are not covariant.
  CHECK(failures(check_covariance(undeformed_generators(2), deformed_js())) == 4);
  CHECK(all_exact_zero(check_covariance(undeformed_generators(2), classical_js())));
}

TEST_CASE("module-algebra axioms") {
  const GeneratorSet g = build_deforming_map(2);
  for (auto c : {CoproductConvention::Mirrored, CoproductConvention::Candidate}) {
    const auto reports = check_module_algebra(deformed_js(c), g);
    CHECK(reports.size() > 100);
    CHECK(all_exact_zero(reports));
  }
  CHECK(all_exact_zero(check_module_algebra(classical_js(), undeformed_generators(2))));
}

TEST_CASE("quadratic invariants") {
  const HopfAlgebraData c = classical_js();
  const HopfAlgebraData d = deformed_js();
  const GeneratorSet g = build_deforming_map(2);
  const InvariantElement i1 = invariant_I1(2);
  const InvariantElement i1q = invariant_I1q(g);
  CHECK(i1.degree == 2);
  for (const auto& h : {c, d}) {
    CHECK(all_exact_zero(invariance_check(i1, h)));
    CHECK(all_exact_zero(invariance_check(i1q, h)));
  }
  // Non-invariant control.
  const InvariantElement lone = invariant_from_terms(g, {{{creator(0), annihilator(0)}, RationalFunction(1)}}, "n1");
  CHECK_FALSE(all_exact_zero(invariance_check(lone, d)));
  // Written in a non-normal order, the same element.
  const InvariantElement swapped =
      invariant_from_terms(g,
                           {{{creator(0), annihilator(0)}, RationalFunction(1)},
                            {{annihilator(1), creator(1)}, RationalFunction(-1)},
                            {{}, RationalFunction(1)}},
                           "swapped");
  const auto swapped_minus_i1q = swapped.expression - i1q.expression;
  // A^2 A+_2 = 1 - A+_2 A^2 on two modes (the last mode is undressed).
  CHECK(swapped_minus_i1q.is_zero());
}

TEST_CASE("I1q eigenvalues and the closed form") {
  const GeneratorSet g = build_deforming_map(2);
  const InvariantElement i1q = invariant_I1q(g);
  CHECK(i1q.expression.matrix().at(3, 3) == RationalFunction::parse("1 + q^-2"));
  CHECK(i1q.expression.matrix().at(1, 1).is_one());
  CHECK(i1q.expression.matrix().at(0, 0).is_zero());
  for (int modes = 1; modes <= 4; ++modes) CHECK(verify_I1_identity(build_deforming_map(modes)).exact_zero());
  CHECK_FALSE(verify_I1_identity(undeformed_generators(2)).exact_zero());
}

TEST_CASE("invariant subspaces") {
  const auto classical = invariant_subspace(classical_js());
  const auto deformed = invariant_subspace(deformed_js());
  CHECK(classical.size() == 5);
  CHECK(deformed.size() == 5);
  const HopfAlgebraData d = deformed_js();
  for (const auto& v : deformed) CHECK(all_exact_zero(invariance_check({v, 0, "basis"}, d)));
}

TEST_CASE("classical limits") {
  const HopfAlgebraData d = deformed_js();
  const HopfAlgebraData c = classical_js();
  // K -> 1 and E, F -> J+, J- at q = 1.
  CHECK(d.image(word(d, {"K"})).substitute(1) == FockOperator::identity(2));
  CHECK(d.image(word(d, {"E"})).substitute(1) == c.image(word(c, {"J+"})));
  CHECK(d.image(word(d, {"F"})).substitute(1) == c.image(word(c, {"J-"})));
  CHECK(invariant_I1q(build_deforming_map(2)).expression.substitute(1) == invariant_I1(2).expression);
}
