#include "qclifford/hopf.hpp"

#include <map>
#include <stdexcept>

#include "qclifford/linalg.hpp"

namespace qclifford {

namespace {

constexpr int kJsModes = 2;

struct NamedOperator {
  std::string name;
  FockOperator op;
};

std::vector<NamedOperator> named_generators(const GeneratorSet& gens) {
  std::vector<NamedOperator> out;
  for (int i = 0; i < gens.modes; ++i) {
    out.push_back({"A+_" + std::to_string(i + 1), gens.creators[static_cast<std::size_t>(i)]});
    out.push_back({"A^" + std::to_string(i + 1), gens.annihilators[static_cast<std::size_t>(i)]});
  }
  return out;
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) { return a * b - b * a; }

SparseMatrix rep_unit(std::size_t r, std::size_t c) { return SparseMatrix::unit(2, r, c); }

void require_two_modes(const GeneratorSet& gens) {
  gens.validate();
  if (gens.modes != kJsModes)
    throw std::invalid_argument("the sl(2) action is defined on 2 modes, got " + std::to_string(gens.modes));
}

}  // namespace

const char* convention_name(CoproductConvention c) {
  switch (c) {
    case CoproductConvention::Primitive:
      return "primitive: D(x) = x(x)1 + 1(x)x, S(x) = -x";
    case CoproductConvention::Candidate:
      return "D(E) = E(x)K + 1(x)E, D(F) = F(x)1 + K^-1(x)F, D(K) = K(x)K, S(E) = -EK^-1, S(F) = -KF";
    case CoproductConvention::Mirrored:
      return "D(E) = E(x)1 + K(x)E, D(F) = F(x)K^-1 + 1(x)F, D(K) = K(x)K, S(E) = -K^-1E, S(F) = -FK";
  }
  return "";
}

int HopfAlgebraData::index(const std::string& name) const {
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].name == name) return static_cast<int>(k);
  throw std::invalid_argument("unknown Hopf generator '" + name + "'");
}

std::vector<int> HopfAlgebraData::primary() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (generators[k].primary) out.push_back(static_cast<int>(k));
  return out;
}

FockOperator HopfAlgebraData::image(const HopfWord& w) const {
  FockOperator out = FockOperator::identity(kJsModes);
  for (int g : w) out *= generators.at(static_cast<std::size_t>(g)).image;
  return out;
}

SparseMatrix HopfAlgebraData::representation(const HopfWord& w) const {
  SparseMatrix out = SparseMatrix::identity(2);
  for (int g : w) out = out * generators.at(static_cast<std::size_t>(g)).rep;
  return out;
}

RationalFunction HopfAlgebraData::counit(const HopfWord& w) const {
  RationalFunction out(1);
  for (int g : w) out *= generators.at(static_cast<std::size_t>(g)).counit;
  return out;
}

std::vector<CoproductTerm> HopfAlgebraData::coproduct(const HopfWord& w) const {
  std::vector<CoproductTerm> out{{RationalFunction(1), {}, {}}};
  for (int g : w) {
    std::vector<CoproductTerm> next;
    for (const auto& t : out) {
      for (const auto& s : generators.at(static_cast<std::size_t>(g)).coproduct) {
        CoproductTerm n{t.coefficient * s.coefficient, t.left, t.right};
        n.left.insert(n.left.end(), s.left.begin(), s.left.end());
        n.right.insert(n.right.end(), s.right.begin(), s.right.end());
        next.push_back(std::move(n));
      }
    }
    out = std::move(next);
  }
  return out;
}

HopfTerm HopfAlgebraData::antipode(const HopfWord& w) const {
  HopfTerm out{RationalFunction(1), {}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const auto& s = generators.at(static_cast<std::size_t>(*it)).antipode;
    out.coefficient *= s.coefficient;
    out.word.insert(out.word.end(), s.word.begin(), s.word.end());
  }
  return out;
}

HopfAlgebraData classical_js() {
  const auto gens = build_generators(kJsModes);
  const FockOperator jp = gens[0].creator * gens[1].annihilator;
  const FockOperator jm = gens[1].creator * gens[0].annihilator;
  const RationalFunction half = RationalFunction::from_rational(mpq_class(1, 2));
  const FockOperator j0 = (number_op(kJsModes, 0) - number_op(kJsModes, 1)) * half;

  HopfAlgebraData h{"U sl(2)", CoproductConvention::Primitive, {}};
  auto add = [&](const std::string& name, FockOperator image, SparseMatrix rep) {
    const int k = static_cast<int>(h.generators.size());
    h.generators.push_back({name, true, std::move(image), std::move(rep),
                            {{RationalFunction(1), {k}, {}}, {RationalFunction(1), {}, {k}}},
                            RationalFunction(0),
                            {RationalFunction(-1), {k}}});
  };
  add("J+", jp, rep_unit(0, 1));
  add("J-", jm, rep_unit(1, 0));
  add("J0", j0, SparseMatrix::diagonal({half, -half}));

  for (auto& r : check_sl2_relations(h))
    if (!r.exact_zero()) throw VerificationError("Jordan-Schwinger images violate sl(2)", std::move(r));
  return h;
}

HopfAlgebraData deformed_js(CoproductConvention convention) {
  if (convention == CoproductConvention::Primitive)
    throw std::invalid_argument("U_q sl(2) needs a deformed coproduct convention");
  const auto gens = build_generators(kJsModes);
  const RationalFunction q = RationalFunction::q();
  const RationalFunction one(1);
  const long up_down[] = {1, -1};
  const long down_up[] = {-1, 1};

  constexpr int E = 0, F = 1, K = 2, Ki = 3;
  HopfAlgebraData h{"U_q sl(2)", convention, {}};
  h.generators.push_back({"E", true, gens[0].creator * gens[1].annihilator, rep_unit(0, 1), {}, RationalFunction(0), {}});
  h.generators.push_back({"F", true, gens[1].creator * gens[0].annihilator, rep_unit(1, 0), {}, RationalFunction(0), {}});
  h.generators.push_back({"K", true, q_exponent(up_down), SparseMatrix::diagonal({q, q.inverse()}),
                          {{one, {K}, {K}}}, one, {one, {Ki}}});
  h.generators.push_back({"K^-1", false, q_exponent(down_up), SparseMatrix::diagonal({q.inverse(), q}),
                          {{one, {Ki}, {Ki}}}, one, {one, {K}}});
  auto& e = h.generators[E];
  auto& f = h.generators[F];
  if (convention == CoproductConvention::Candidate) {
    e.coproduct = {{one, {E}, {K}}, {one, {}, {E}}};
    f.coproduct = {{one, {F}, {}}, {one, {Ki}, {F}}};
    e.antipode = {RationalFunction(-1), {E, Ki}};
    f.antipode = {RationalFunction(-1), {K, F}};
  } else {
    e.coproduct = {{one, {E}, {}}, {one, {K}, {E}}};
    f.coproduct = {{one, {F}, {Ki}}, {one, {}, {F}}};
    e.antipode = {RationalFunction(-1), {Ki, E}};
    f.antipode = {RationalFunction(-1), {F, K}};
  }

  for (auto& r : check_uq_relations(h))
    if (!r.exact_zero()) throw VerificationError("Jordan-Schwinger images violate U_q sl(2)", std::move(r));
  return h;
}

std::vector<RelationReport> check_uq_relations(const HopfAlgebraData& hopf) {
  const FockOperator& e = hopf.generators.at(static_cast<std::size_t>(hopf.index("E"))).image;
  const FockOperator& f = hopf.generators.at(static_cast<std::size_t>(hopf.index("F"))).image;
  const FockOperator& k = hopf.generators.at(static_cast<std::size_t>(hopf.index("K"))).image;
  const FockOperator& ki = hopf.generators.at(static_cast<std::size_t>(hopf.index("K^-1"))).image;
  const RationalFunction q = RationalFunction::q();
  std::vector<RelationReport> out;
  out.emplace_back(RelationFamily::Custom, "KEK^-1 = q^2 E", std::vector<int>{}, (k * e * ki).matrix(),
                   (e * (q * q)).matrix());
  out.emplace_back(RelationFamily::Custom, "KFK^-1 = q^-2 F", std::vector<int>{}, (k * f * ki).matrix(),
                   (f * (q * q).inverse()).matrix());
  out.emplace_back(RelationFamily::Custom, "[E,F] = (K - K^-1)/(q - q^-1)", std::vector<int>{},
                   commutator(e, f).matrix(), ((k - ki) * (q - q.inverse()).inverse()).matrix());
  out.emplace_back(RelationFamily::Custom, "KK^-1 = 1", std::vector<int>{}, (k * ki).matrix(),
                   FockOperator::identity(kJsModes).matrix());
  return out;
}

std::vector<RelationReport> check_sl2_relations(const HopfAlgebraData& hopf) {
  const FockOperator& jp = hopf.generators.at(static_cast<std::size_t>(hopf.index("J+"))).image;
  const FockOperator& jm = hopf.generators.at(static_cast<std::size_t>(hopf.index("J-"))).image;
  const FockOperator& j0 = hopf.generators.at(static_cast<std::size_t>(hopf.index("J0"))).image;
  std::vector<RelationReport> out;
  out.emplace_back(RelationFamily::Custom, "[J+,J-] = 2J0", std::vector<int>{}, commutator(jp, jm).matrix(),
                   (j0 * RationalFunction(2)).matrix());
  out.emplace_back(RelationFamily::Custom, "[J0,J+] = J+", std::vector<int>{}, commutator(j0, jp).matrix(),
                   jp.matrix());
  out.emplace_back(RelationFamily::Custom, "[J0,J-] = -J-", std::vector<int>{}, commutator(j0, jm).matrix(),
                   (-jm).matrix());
  return out;
}

FockOperator act(const HopfAlgebraData& hopf, const HopfWord& x, const FockOperator& a) {
  if (a.modes() != kJsModes)
    throw std::invalid_argument("the sl(2) action is defined on 2 modes, got " + std::to_string(a.modes()));
  FockOperator out = FockOperator::zero(kJsModes);
  for (const auto& t : hopf.coproduct(x)) {
    const HopfTerm s = hopf.antipode(t.right);
    out += hopf.image(t.left) * a * hopf.image(s.word) * (t.coefficient * s.coefficient);
  }
  return out;
}

std::vector<RelationReport> check_module_algebra(const HopfAlgebraData& hopf, const GeneratorSet& gens) {
  require_two_modes(gens);
  const auto singles = named_generators(gens);
  std::vector<NamedOperator> samples = singles;
  for (const auto& a : singles)
    for (const auto& b : singles) samples.push_back({a.name + " " + b.name, a.op * b.op});

  std::vector<RelationReport> out;
  const auto primary = hopf.primary();
  for (int x : primary) {
    for (int y : primary) {
      const std::string xy = hopf.generators[static_cast<std::size_t>(x)].name + "." +
                             hopf.generators[static_cast<std::size_t>(y)].name;
      for (const auto& s : samples)
        out.emplace_back(RelationFamily::Custom, "associativity " + xy + " on " + s.name, std::vector<int>{},
                         act(hopf, {x, y}, s.op).matrix(), act(hopf, {x}, act(hopf, {y}, s.op)).matrix());
    }
  }
  for (int x : primary) {
    const auto delta = hopf.coproduct({x});
    for (const auto& a : singles) {
      for (const auto& b : singles) {
        FockOperator rhs = FockOperator::zero(kJsModes);
        for (const auto& t : delta) rhs += act(hopf, t.left, a.op) * act(hopf, t.right, b.op) * t.coefficient;
        out.emplace_back(RelationFamily::Custom,
                         "leibniz " + hopf.generators[static_cast<std::size_t>(x)].name + " on " + a.name + " " + b.name,
                         std::vector<int>{}, act(hopf, {x}, a.op * b.op).matrix(), rhs.matrix());
      }
    }
  }
  return out;
}

std::vector<RelationReport> check_covariance(const GeneratorSet& gens, const HopfAlgebraData& hopf) {
  require_two_modes(gens);
  std::vector<RelationReport> out;
  for (int x : hopf.primary()) {
    const std::string name = hopf.generators[static_cast<std::size_t>(x)].name;
    const SparseMatrix rho = hopf.representation({x});
    const HopfTerm s = hopf.antipode({x});
    const SparseMatrix rho_s = hopf.representation(s.word) * s.coefficient;
    for (int i = 0; i < kJsModes; ++i) {
      const auto I = static_cast<std::size_t>(i);
      FockOperator c_rhs = FockOperator::zero(kJsModes);
      FockOperator a_rhs = FockOperator::zero(kJsModes);
      for (std::size_t j = 0; j < static_cast<std::size_t>(kJsModes); ++j) {
        c_rhs += gens.creators[j] * rho.at(j, I);
        a_rhs += gens.annihilators[j] * rho_s.at(I, j);
      }
      out.emplace_back(RelationFamily::Custom, "covariance " + name + " on A+", std::vector<int>{i + 1},
                       act(hopf, {x}, gens.creators[I]).matrix(), c_rhs.matrix());
      out.emplace_back(RelationFamily::Custom, "covariance " + name + " on A", std::vector<int>{i + 1},
                       act(hopf, {x}, gens.annihilators[I]).matrix(), a_rhs.matrix());
    }
  }
  return out;
}

InvariantElement invariant_I1(int modes) {
  FockOperator sum = FockOperator::zero(modes);
  for (int i = 0; i < modes; ++i) sum += number_op(modes, i);
  return {std::move(sum), 2, "I1"};
}

InvariantElement invariant_I1q(const GeneratorSet& gens) {
  gens.validate();
  FockOperator sum = FockOperator::zero(gens.modes);
  for (std::size_t i = 0; i < gens.creators.size(); ++i) sum += gens.creators[i] * gens.annihilators[i];
  return {std::move(sum), 2, "I1q"};
}

InvariantElement invariant_from_terms(const GeneratorSet& gens,
                                      const std::vector<std::pair<Word, RationalFunction>>& terms,
                                      std::string label) {
  gens.validate();
  FockOperator sum = FockOperator::zero(gens.modes);
  int degree = 0;
  for (const auto& [word, c] : terms) {
    FockOperator m = FockOperator::identity(gens.modes);
    for (const auto& g : word) {
      if (g.mode < 0 || g.mode >= gens.modes) throw std::invalid_argument("invariant term names a missing mode");
      const auto k = static_cast<std::size_t>(g.mode);
      m *= g.kind == GeneratorKind::Creator ? gens.creators[k] : gens.annihilators[k];
    }
    sum += m * c;
    degree = std::max(degree, static_cast<int>(word.size()));
  }
  return {std::move(sum), degree, std::move(label)};
}

std::vector<RelationReport> invariance_check(const InvariantElement& inv, const HopfAlgebraData& hopf) {
  std::vector<RelationReport> out;
  for (int x : hopf.primary()) {
    const auto& g = hopf.generators[static_cast<std::size_t>(x)];
    out.emplace_back(RelationFamily::Custom, "invariance " + g.name + " on " + inv.label, std::vector<int>{},
                     act(hopf, {x}, inv.expression).matrix(), (inv.expression * g.counit).matrix());
  }
  return out;
}

std::vector<FockOperator> invariant_subspace(const HopfAlgebraData& hopf) {
  const std::size_t dim = fock_dimension(kJsModes);
  const std::size_t unknowns = dim * dim;
  // Row o of the stacked maps I -> x |> I - eps(x) I, one block per generator.
  std::map<std::size_t, linalg::SparseVector> rows;
  std::size_t block = 0;
  for (int x : hopf.primary()) {
    const RationalFunction eps = hopf.generators[static_cast<std::size_t>(x)].counit;
    for (std::size_t u = 0; u < unknowns; ++u) {
      const FockOperator basis(kJsModes, SparseMatrix::unit(dim, u / dim, u % dim));
      const FockOperator image = act(hopf, {x}, basis) - basis * eps;
      for (const auto& e : linalg::flatten(image.matrix())) rows[block + e.col].push_back({u, e.value});
    }
    block += unknowns;
  }
  std::vector<linalg::SparseVector> equations;
  for (auto& [o, row] : rows) equations.push_back(std::move(row));
  std::vector<FockOperator> out;
  for (const auto& v : linalg::nullspace(equations, unknowns)) {
    SparseMatrix m(dim);
    for (const auto& e : v) m.set(e.col / dim, e.col % dim, e.value);
    out.emplace_back(kJsModes, std::move(m));
  }
  return out;
}

RelationReport verify_I1_identity(const GeneratorSet& gens) {
  const InvariantElement i1q = invariant_I1q(gens);
  const RationalFunction base = RationalFunction::q_power(-2);
  std::vector<RationalFunction> diag(fock_dimension(gens.modes));
  for (std::size_t s = 0; s < diag.size(); ++s) diag[s] = q_number(static_cast<long>(occupation_count(s)), base);
  return {RelationFamily::Custom, "I1q = (q^(-2 I1) - 1)/(q^-2 - 1)", {}, i1q.expression.matrix(),
          SparseMatrix::diagonal(diag)};
}

}  // namespace qclifford
