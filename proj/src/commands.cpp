#include "qclifford/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qclifford/chain.hpp"
#include "qclifford/error.hpp"
#include "qclifford/hopf.hpp"
#include "qclifford/linalg.hpp"

namespace qclifford {

namespace {

constexpr std::size_t kDefaultMaxDim = 256;
constexpr std::size_t kHExpansionOrder = 4;

Json echo(const CommandOptions& o) {
  Json j;
  j["n"] = o.n;
  if (o.command == "chain-experiment") {
    j["m"] = o.m;
    j["variant"] = o.variant;
    j["scales"] = o.scales;
  }
  if (o.command == "rmatrix") j["algebra"] = o.algebra;
  if (o.q_numeric) j["q_numeric"] = *o.q_numeric;
  if (o.input) j["input"] = *o.input;
  if (o.expr) j["expr"] = *o.expr;
  return j;
}

Json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void guard_modes(int modes) {
  if (modes < 1 || modes > kMaxModes)
    throw std::invalid_argument("mode count must be in [1, " + std::to_string(kMaxModes) + "], got " +
                                std::to_string(modes));
  const std::size_t dim = fock_dimension(modes);
  if (dim > max_fock_dimension())
    throw LimitError("Fock dimension " + std::to_string(dim) + " exceeds the limit " +
                     std::to_string(max_fock_dimension()) + " (set QCLIFFORD_MAX_DIM to raise it)");
}

std::optional<mpq_class> numeric_point(const CommandOptions& o) {
  if (!o.q_numeric) return std::nullopt;
  return parse_decimal(*o.q_numeric);
}

void finish_numeric(ReportDocument& doc, const CommandOptions& o) {
  if (auto q0 = numeric_point(o)) doc.probe_numeric(q0->get_d(), *o.q_numeric);
}

RMatrix rhat_for(int n) { return n == 1 ? chain_rhat(1) : build_rhat_sl(n); }

Json poincare_json(const PoincareResult& r) {
  Json j;
  j["rank"] = r.rank;
  j["expected"] = r.expected;
  j["mode"] = r.mode == RankMode::Exact ? "exact" : "modular";
  if (!r.samples.empty()) {
    j["samples"] = Json::array();
    for (const auto& s : r.samples) j["samples"].push_back(s.get_str());
  }
  return j;
}

std::size_t matrix_rank(const SparseMatrix& m) {
  std::vector<linalg::SparseVector> rows;
  for (std::size_t r = 0; r < m.dim(); ++r) rows.push_back(m.row(r));
  return linalg::exact_rank(rows);
}

// --- rmatrix ---------------------------------------------------------------

ReportDocument cmd_rmatrix(const CommandOptions& o) {
  const auto q0 = numeric_point(o);
  auto shown = [&](const RMatrix& r) { return rmatrix_to_json(q0 ? r.substitute(*q0) : r); };

  if (o.algebra == "sp") {
    if (!o.input) throw std::invalid_argument("--algebra sp needs a braid matrix via --input");
    const RMatrix rhat = rmatrix_from_json(read_input(*o.input));
    ReportDocument doc("rmatrix", echo(o), true);
    SpProjectorResult sp = projector_sp(rhat);
    doc.add_relation(sp.idempotency, Expectation::Finding, "sp-projector");
    doc.add_relation(check_braid(rhat), Expectation::Finding, "input");
    doc.set_section("rmatrix", shown(rhat));
    doc.set_section("projector", shown(sp.projector));
    doc.set_section("implied_normalization",
                    sp.implied_normalization ? Json(sp.implied_normalization->to_string()) : Json(nullptr));
    finish_numeric(doc, o);
    return doc;
  }
  if (o.algebra != "sl") throw std::invalid_argument("--algebra must be sl or sp, got '" + o.algebra + "'");

  const RMatrix rhat = o.input ? rmatrix_from_json(read_input(*o.input)) : build_rhat_sl(o.n);
  const RMatrix projector = projector_sl(rhat);
  const int n = rhat.n();
  ReportDocument doc("rmatrix", echo(o));
  doc.add_relation(check_hecke(rhat), Expectation::Zero, "rmatrix");
  doc.add_relation(check_braid(rhat), Expectation::Zero, "rmatrix");
  doc.add_relation(check_idempotent(projector), Expectation::Zero, "projector");
  doc.add_relation(check_spectral_decomposition(rhat, projector), Expectation::Zero, "projector");

  const RMatrix perm = build_permutation(n);
  const SparseMatrix one = SparseMatrix::identity(perm.matrix().dim());
  const RationalFunction half = RationalFunction::from_rational(mpq_class(1, 2));
  doc.add_relation({RelationFamily::Custom, "R at q = 1 is the permutation", {n}, rhat.substitute(1).matrix(),
                    perm.matrix()},
                   Expectation::Zero, "classical-limit");
  doc.add_relation({RelationFamily::Custom, "P+ at q = 1 is (1 + P)/2", {n}, projector.substitute(1).matrix(),
                    (one + perm.matrix()) * half},
                   Expectation::Zero, "classical-limit");

  const std::size_t rank = matrix_rank(projector.matrix());
  const auto expected = static_cast<std::size_t>(n * (n + 1) / 2);
  doc.add_check("projector rank is n(n+1)/2", rank == expected, {{"rank", rank}, {"expected", expected}});
  doc.set_section("rmatrix", shown(rhat));
  doc.set_section("projector", shown(projector));
  finish_numeric(doc, o);
  return doc;
}

// --- verify-map --------------------------------------------------------------

ReportDocument cmd_verify_map(const CommandOptions& o) {
  GeneratorSet gens;
  if (o.input) {
    gens = generators_from_json(read_input(*o.input));
    guard_modes(gens.modes);
  } else {
    guard_modes(o.n);
    gens = deforming_candidate(o.n, Orientation::Later);
  }
  const int n = gens.modes;
  ReportDocument doc("verify-map", echo(o));
  doc.add_relations(relation_residuals(gens, rhat_for(n)), Expectation::Zero, "relations");

  const GeneratorSet plain = undeformed_generators(n);
  if (n >= 2) {
    const auto control = relation_residuals(plain, rhat_for(n));
    doc.add_relations(control, Expectation::Finding, "negative-control");
    doc.add_check("undeformed generators violate the deformed relations", !all_exact_zero(control));
  }
  doc.add_relations(star_compatibility(gens), Expectation::Zero, "star");

  const auto vacuum_state = vacuum(n);
  bool annihilates = true;
  bool creates_plainly = true;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const auto v = gens.annihilators[k].apply(vacuum_state);
    annihilates = annihilates && std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
    creates_plainly = creates_plainly && gens.creators[k].apply(vacuum_state) == plain.creators[k].apply(vacuum_state);
  }
  doc.add_check("A^i annihilates the vacuum", annihilates);
  doc.add_check("A+_i acts on the vacuum like a+_i", creates_plainly);

  const GeneratorSet limit = gens.substitute(1);
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    doc.add_relation({RelationFamily::Custom, "A+ at q = 1", {i + 1}, limit.creators[k].matrix(),
                      plain.creators[k].matrix()},
                     Expectation::Zero, "classical-limit");
    doc.add_relation({RelationFamily::Custom, "A at q = 1", {i + 1}, limit.annihilators[k].matrix(),
                      plain.annihilators[k].matrix()},
                     Expectation::Zero, "classical-limit");
  }

  if (!o.input) {
    try {
      build_inverse_map(gens);
      doc.add_check("inverse map recovers the undeformed generators", true);
    } catch (const VerificationError& e) {
      doc.add_relation(e.report(), Expectation::Zero, "inverse");
    }
  }

  if (n <= kMaxModularRankModes) {
    const PoincareResult p = poincare_rank(gens);
    doc.set_section("poincare", poincare_json(p));
    doc.add_check("ordered monomials are independent", p.rank == p.expected,
                  {{"rank", p.rank}, {"expected", p.expected}});
  }

  if (n == 2 && !o.input) {
    // Expand A^1 A+_1 + A+_1 A^1 in the undeformed ordered basis.
    const auto expansion = decompose(gens.annihilators[0] * gens.creators[0] + gens.creators[0] * gens.annihilators[0]);
    if (expansion) {
      const RationalFunction c = expansion->coefficient({creator(1), annihilator(1)});
      const RationalFunction expected = RationalFunction::q_power(-2) - RationalFunction(1);
      doc.set_section("mixed_11_expansion", expansion->to_string());
      doc.add_check("mixed (1,1) coefficient of a+_2 a^2 is q^-2 - 1", c == expected, {{"coefficient", c.to_string()}});
    }
  }
  finish_numeric(doc, o);
  return doc;
}

// --- poincare ------------------------------------------------------------------

ReportDocument cmd_poincare(const CommandOptions& o) {
  std::vector<std::pair<std::string, GeneratorSet>> sets;
  if (o.input) {
    sets.emplace_back("input", generators_from_json(read_input(*o.input)));
    guard_modes(sets.back().second.modes);
  } else {
    guard_modes(o.n);
    sets.emplace_back("undeformed", undeformed_generators(o.n));
    sets.emplace_back("deformed", build_deforming_map(o.n));
  }
  ReportDocument doc("poincare", echo(o));
  Json section;
  for (const auto& [name, gens] : sets) {
    const PoincareResult p = poincare_rank(gens);
    section[name] = poincare_json(p);
    doc.add_check(name + " ordered monomials are independent", p.rank == p.expected,
                  {{"rank", p.rank}, {"expected", p.expected}});
  }
  doc.set_section("poincare", section);
  return doc;
}

// --- covariance ----------------------------------------------------------------

ReportDocument cmd_covariance(const CommandOptions& o) {
  if (o.n != 2 && !o.input) throw std::invalid_argument("covariance is defined for --n 2 only");
  const GeneratorSet gens = o.input ? generators_from_json(read_input(*o.input)) : build_deforming_map(2);
  if (gens.modes != 2) throw std::invalid_argument("covariance needs a 2-mode generator set");
  const HopfAlgebraData hopf = deformed_js();
  const HopfAlgebraData classical = classical_js();
  const GeneratorSet plain = undeformed_generators(2);

  ReportDocument doc("covariance", echo(o));
  doc.add_relations(check_uq_relations(hopf), Expectation::Zero, "uq-relations");
  doc.add_relations(check_covariance(gens, hopf), Expectation::Zero, "covariance");
  doc.add_relations(check_module_algebra(hopf, gens), Expectation::Zero, "module-algebra");

  const auto control = check_covariance(plain, hopf);
  doc.add_relations(control, Expectation::Finding, "negative-control");
  doc.add_check("undeformed generators are not covariant", !all_exact_zero(control));

  Json selection = Json::object();
  for (auto c : {CoproductConvention::Candidate, CoproductConvention::Mirrored}) {
    const auto reports = check_covariance(gens, deformed_js(c));
    const auto failing = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.exact_zero(); });
    selection[c == CoproductConvention::Candidate ? "candidate" : "mirrored"] = {
        {"coproduct", convention_name(c)}, {"covariance_failures", failing}};
  }
  selection["frozen"] = "mirrored";
  doc.set_section("convention_selection", selection);

  doc.add_relations(check_sl2_relations(classical), Expectation::Zero, "classical");
  doc.add_relations(check_covariance(plain, classical), Expectation::Zero, "classical");
  for (const auto& [deformed, undeformed] : {std::pair{"E", "J+"}, std::pair{"F", "J-"}}) {
    doc.add_relation({RelationFamily::Custom, std::string("sigma_q(") + deformed + ") at q = 1", {},
                      hopf.generators[static_cast<std::size_t>(hopf.index(deformed))].image.substitute(1).matrix(),
                      classical.generators[static_cast<std::size_t>(classical.index(undeformed))].image.matrix()},
                     Expectation::Zero, "classical-limit");
  }
  doc.add_relation({RelationFamily::Custom, "sigma_q(K) at q = 1", {},
                    hopf.generators[static_cast<std::size_t>(hopf.index("K"))].image.substitute(1).matrix(),
                    FockOperator::identity(2).matrix()},
                   Expectation::Zero, "classical-limit");
  finish_numeric(doc, o);
  return doc;
}

// --- invariants ----------------------------------------------------------------

std::vector<std::pair<Word, RationalFunction>> invariant_terms(const Json& j) {
  const auto it = j.find("terms");
  if (!j.is_object() || it == j.end() || !it->is_array())
    throw ParseError("invariant: expected {\"terms\": [{\"word\": ..., \"coefficient\": ...}]}", 0);
  std::vector<std::pair<Word, RationalFunction>> out;
  for (const auto& t : *it) {
    if (!t.is_object() || !t.contains("word") || !t["word"].is_array())
      throw ParseError("invariant term: expected a \"word\" array", 0);
    Word w;
    for (const auto& g : t["word"]) {
      if (!g.is_string()) throw ParseError("invariant word: expected strings like \"a+1\" or \"a2\"", 0);
      const std::string s = g.get<std::string>();
      const bool is_creator = s.rfind("a+", 0) == 0;
      const std::string digits = s.substr(is_creator ? 2 : 1);
      if (s.empty() || s[0] != 'a' || digits.empty() ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("invariant word: bad generator '" + s + "'", 0);
      const int mode = std::stoi(digits) - 1;
      w.push_back(is_creator ? creator(mode) : annihilator(mode));
    }
    RationalFunction c(1);
    if (t.contains("coefficient")) {
      if (!t["coefficient"].is_string()) throw ParseError("invariant coefficient must be a string", 0);
      c = RationalFunction::parse(t["coefficient"].get<std::string>());
    }
    out.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

ReportDocument cmd_invariants(const CommandOptions& o) {
  if (o.n < 1 || o.n > kMaxExactRankModes) throw std::invalid_argument("invariants supports --n 1..3");
  const GeneratorSet gens = build_deforming_map(o.n);
  ReportDocument doc("invariants", echo(o));
  doc.add_relation(verify_I1_identity(gens), Expectation::Zero, "I1-identity");
  if (o.n == 2) {
    const RationalFunction top = invariant_I1q(gens).expression.matrix().at(3, 3);
    const RationalFunction expected = RationalFunction(1) + RationalFunction::q_power(-2);
    doc.add_check("doubly occupied eigenvalue of I1q is 1 + q^-2", top == expected, {{"eigenvalue", top.to_string()}});

    const HopfAlgebraData deformed = deformed_js();
    const HopfAlgebraData classical = classical_js();
    const InvariantElement i1 = invariant_I1(2);
    const InvariantElement i1q = invariant_I1q(gens);
    doc.add_relations(invariance_check(i1, classical), Expectation::Zero, "classical-action");
    doc.add_relations(invariance_check(i1q, deformed), Expectation::Zero, "deformed-action");
    doc.add_relations(invariance_check(i1, deformed), Expectation::Zero, "deformed-action");
    doc.add_relations(invariance_check(i1q, classical), Expectation::Zero, "classical-action");

    const auto classical_space = invariant_subspace(classical);
    const auto deformed_space = invariant_subspace(deformed);
    for (std::size_t k = 0; k < classical_space.size(); ++k)
      doc.add_relations(invariance_check({classical_space[k], 0, "classical basis " + std::to_string(k + 1)}, deformed),
                        Expectation::Zero, "invariant-equality");
    for (std::size_t k = 0; k < deformed_space.size(); ++k)
      doc.add_relations(invariance_check({deformed_space[k], 0, "deformed basis " + std::to_string(k + 1)}, classical),
                        Expectation::Zero, "invariant-equality");
    doc.set_section("invariant_subspace", {{"classical_dimension", classical_space.size()},
                                           {"deformed_dimension", deformed_space.size()}});
    doc.add_check("invariant subspaces have equal dimension", classical_space.size() == deformed_space.size());

    if (o.input) {
      const InvariantElement user = invariant_from_terms(gens, invariant_terms(read_input(*o.input)), "user");
      doc.add_relations(invariance_check(user, deformed), Expectation::Zero, "user-invariant");
    }
  } else if (o.input) {
    throw std::invalid_argument("user invariants need --n 2");
  }
  finish_numeric(doc, o);
  return doc;
}

// --- chain-experiment ----------------------------------------------------------

ReportDocument cmd_chain(const CommandOptions& o) {
  if (o.variant != "both") parse_variant(o.variant);
  std::vector<RationalFunction> scales;
  for (const auto& s : o.scales) scales.push_back(RationalFunction::parse(s));
  if (o.m < 1 || o.n < 1) throw std::invalid_argument("chain-experiment needs --m >= 1 and --n >= 1");
  if (o.m * o.n > kMaxExperimentModes)
    throw LimitError("chain-experiment supports M*N <= " + std::to_string(kMaxExperimentModes));
  guard_modes(o.m * o.n);
  if (!scales.empty() && scales.size() != static_cast<std::size_t>(o.m))
    throw std::invalid_argument("expected " + std::to_string(o.m) + " scale factors, got " +
                                std::to_string(scales.size()));

  const ChainExperiment exp = lexicographic_experiment(o.m, o.n, scales);
  ReportDocument doc("chain-experiment", echo(o), true);
  const bool diagonal = o.variant != "RM-braided-mixed";
  const bool braided = o.variant != "diagonal-mixed";
  for (const auto& r : exp.diagonal)
    if (r.label() != "mixed-diagonal" || diagonal) doc.add_relation(r, Expectation::Finding, "chain");
  if (braided)
    for (const auto& r : exp.braided)
      if (r.label() == "mixed-braided") doc.add_relation(r, Expectation::Finding, "chain");

  Json verdicts = Json::array();
  for (const auto& v : exp.verdicts)
    verdicts.push_back({{"family", v.family},
                        {"holding", v.holding},
                        {"total", v.total},
                        {"verdict", v.holding == v.total ? "holds" : "fails"}});
  doc.set_section("verdicts", verdicts);
  doc.set_section("construction", "lexicographic deforming map on M*N modes, copy index outermost");

  // Classical degeneration: undeformed generators, permutation matrices, q = 1.
  const GeneratorSet plain = undeformed_generators(o.m * o.n);
  bool classical_ok = true;
  for (auto v : {ChainVariant::DiagonalMixed, ChainVariant::BraidedMixed}) {
    ChainSpec spec{o.m, o.n, v, build_permutation(o.n), build_permutation(o.m), {}};
    classical_ok = classical_ok && all_exact_zero(chain_residuals(spec, plain, RationalFunction(1)));
  }
  doc.add_check("q = 1 chain relations reduce to the anticommutation relations", classical_ok);
  finish_numeric(doc, o);
  return doc;
}

// --- eval ----------------------------------------------------------------------

ReportDocument cmd_eval(const CommandOptions& o) {
  if (!o.expr) throw std::invalid_argument("eval needs --expr");
  const RationalFunction f = RationalFunction::parse(*o.expr);
  ReportDocument doc("eval", echo(o));
  doc.set_section("value", f.to_string());
  doc.set_section("numerator", f.numerator().to_string());
  doc.set_section("denominator", f.denominator().to_string());
  if (f.denominator().evaluate(mpq_class(1)) != 0) {
    Json h = Json::array();
    for (const auto& c : f.expand_in_h(kHExpansionOrder)) h.push_back(c.get_str());
    doc.set_section("h_expansion", h);
  }
  if (auto q0 = numeric_point(o)) {
    const mpq_class exact = f.evaluate(*q0);
    doc.set_section("at", {{"q0", *o.q_numeric}, {"exact", exact.get_str()}, {"float", exact.get_d()}});
  }
  return doc;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"rmatrix",    "verify-map",       "poincare", "covariance",
                                              "invariants", "chain-experiment", "eval"};
  return names;
}

std::size_t max_fock_dimension() {
  if (const char* env = std::getenv("QCLIFFORD_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxDim;
}

ReportDocument run_command(const CommandOptions& o) {
  try {
    if (o.command == "rmatrix") return cmd_rmatrix(o);
    if (o.command == "verify-map") return cmd_verify_map(o);
    if (o.command == "poincare") return cmd_poincare(o);
    if (o.command == "covariance") return cmd_covariance(o);
    if (o.command == "invariants") return cmd_invariants(o);
    if (o.command == "chain-experiment") return cmd_chain(o);
    if (o.command == "eval") return cmd_eval(o);
  } catch (const VerificationError& e) {
    ReportDocument doc(o.command, echo(o));
    doc.add_relation(e.report(), Expectation::Zero, "self-check");
    doc.add_check(e.what(), false);
    return doc;
  }
  throw std::invalid_argument("unknown command '" + o.command + "'");
}

}  // namespace qclifford
