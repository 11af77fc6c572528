#include "qclifford/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qclifford/error.hpp"
#include "qclifford/hopf.hpp"

namespace qclifford {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_member(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_integer()) schema_error(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::string indices_text(const std::vector<int>& idx) {
  if (idx.empty()) return "";
  std::string out = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "," : "") + std::to_string(idx[k]);
  return out + ")";
}

}  // namespace

const char* expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Zero:
      return "zero";
    case Expectation::Nonzero:
      return "nonzero";
    case Expectation::Finding:
      return "finding";
  }
  return "finding";
}

Json entries_to_json(const SparseMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& e : m.row(r)) out.push_back(Json::array({r, e.col, e.value.to_string()}));
  return out;
}

SparseMatrix entries_from_json(const Json& entries, std::size_t dim, const std::string& where) {
  if (!entries.is_array()) schema_error(where, "expected an array of [row, col, value]");
  SparseMatrix m(dim);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Json& e = entries[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      schema_error(at, "expected [row, col, value]");
    const long r = e[0].get<long>();
    const long c = e[1].get<long>();
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= dim || static_cast<std::size_t>(c) >= dim)
      schema_error(at, "index outside a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    RationalFunction v;
    if (e[2].is_string()) {
      try {
        v = RationalFunction::parse(e[2].get<std::string>());
      } catch (const ParseError& p) {
        schema_error(at, p.what());
      }
    } else if (e[2].is_number_integer()) {
      v = RationalFunction(e[2].get<long>());
    } else {
      schema_error(at, "value must be a string or an integer");
    }
    m.add_to(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
  }
  return m;
}

Json rmatrix_to_json(const RMatrix& r) {
  Json out;
  out["n"] = r.n();
  out["kind"] = kind_name(r.kind());
  out["entries"] = entries_to_json(r.matrix());
  return out;
}

RMatrix rmatrix_from_json(const Json& j) {
  const int n = int_member(j, "n", "rmatrix");
  if (n < 1 || n > 16) schema_error("rmatrix.n", "must be in [1, 16]");
  RMatrixKind kind = RMatrixKind::UserSupplied;
  if (auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) schema_error("rmatrix.kind", "expected a string");
    try {
      kind = parse_kind(it->get<std::string>());
    } catch (const std::invalid_argument& e) {
      schema_error("rmatrix.kind", e.what());
    }
  }
  const auto dim = static_cast<std::size_t>(n * n);
  return {n, entries_from_json(member(j, "entries", "rmatrix"), dim, "rmatrix.entries"), kind};
}

Json fock_to_json(const FockOperator& op) {
  Json out;
  out["n_modes"] = op.modes();
  out["dim"] = op.dim();
  out["entries"] = entries_to_json(op.matrix());
  return out;
}

FockOperator fock_from_json(const Json& j, const std::string& where) {
  const int modes = int_member(j, "n_modes", where);
  if (modes < 1 || modes > kMaxModes) schema_error(where + ".n_modes", "out of range");
  const std::size_t dim = fock_dimension(modes);
  if (auto it = j.find("dim"); it != j.end() && (!it->is_number_integer() || it->get<std::size_t>() != dim))
    schema_error(where + ".dim", "must equal 2^n_modes");
  return {modes, entries_from_json(member(j, "entries", where), dim, where + ".entries")};
}

Json generators_to_json(const GeneratorSet& gens) {
  Json out;
  out["modes"] = gens.modes;
  out["provenance"] = provenance_name(gens.provenance);
  out["creators"] = Json::array();
  out["annihilators"] = Json::array();
  for (const auto& c : gens.creators) out["creators"].push_back(fock_to_json(c));
  for (const auto& a : gens.annihilators) out["annihilators"].push_back(fock_to_json(a));
  return out;
}

GeneratorSet generators_from_json(const Json& j) {
  GeneratorSet gens;
  gens.modes = int_member(j, "modes", "generators");
  if (gens.modes < 1 || gens.modes > kMaxModes) schema_error("generators.modes", "out of range");
  gens.provenance = Provenance::User;
  for (const char* key : {"creators", "annihilators"}) {
    const Json& list = member(j, key, "generators");
    if (!list.is_array()) schema_error(std::string("generators.") + key, "expected an array");
    auto& target = std::string(key) == "creators" ? gens.creators : gens.annihilators;
    for (std::size_t k = 0; k < list.size(); ++k)
      target.push_back(fock_from_json(list[k], std::string("generators.") + key + "[" + std::to_string(k) + "]"));
  }
  try {
    gens.validate();
  } catch (const std::invalid_argument& e) {
    schema_error("generators", e.what());
  }
  return gens;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON: " + std::string(e.what()), e.byte);
  }
}

Json default_conventions() {
  Json c;
  c["mode_ordering"] = "mode 1 = up, mode 2 = down; mode 1 is the most significant Fock basis bit";
  c["number_operator"] = "n^i = a+_i a^i";
  c["deforming_map"] = "A+_i = q^(-sum_{j>i} n^j) a+_i, A^i = a^i q^(-sum_{j>i} n^j)";
  c["relations"] = "P+ = (1 + q R)/(1 + q^2), Pq = q^-1 R; pair (i,j) flattened to (i-1) N + j";
  c["coproduct"] = convention_name(CoproductConvention::Mirrored);
  c["coefficient_corrections"] = Json::array({"N=2 mixed (1,1) relation carries q^-2 - 1"});
  c["q_number"] = "(m)_p = 1 + p + ... + p^(m-1)";
  return c;
}

ReportDocument::ReportDocument(std::string command, Json echo, bool experiment)
    : command_(std::move(command)), echo_(std::move(echo)), experiment_(experiment), conventions_(default_conventions()) {}

void ReportDocument::add_relation(const RelationReport& r, Expectation e, const std::string& group) {
  records_.push_back({r, e, group});
}

void ReportDocument::add_relations(const std::vector<RelationReport>& rs, Expectation e, const std::string& group) {
  for (const auto& r : rs) add_relation(r, e, group);
}

void ReportDocument::add_check(const std::string& name, bool passed, Json detail, Expectation e) {
  checks_.push_back({name, passed, std::move(detail), e});
}

void ReportDocument::set_section(const std::string& key, Json value) { sections_[key] = std::move(value); }

void ReportDocument::add_convention(const std::string& key, const std::string& value) { conventions_[key] = value; }

void ReportDocument::probe_numeric(double q0, const std::string& text) {
  numeric_q_ = std::make_pair(q0, text);
  for (auto& r : records_) r.report.probe_numeric(q0);
}

bool ReportDocument::meets(const Record& r) {
  switch (r.expectation) {
    case Expectation::Zero:
      return r.report.exact_zero();
    case Expectation::Nonzero:
      return !r.report.exact_zero();
    case Expectation::Finding:
      return true;
  }
  return true;
}

std::size_t ReportDocument::failed() const {
  std::size_t n = 0;
  for (const auto& r : records_)
    if (!meets(r)) ++n;
  for (const auto& c : checks_)
    if (c.expectation != Expectation::Finding && !c.passed) ++n;
  return n;
}

int ReportDocument::exit_code() const { return experiment_ || failed() == 0 ? 0 : 1; }

Json ReportDocument::to_json() const {
  Json out;
  out["tool"] = "qclifford";
  out["version"] = kToolVersion;
  out["command"] = command_;
  out["arguments"] = echo_;
  out["conventions"] = conventions_;
  out["relations"] = Json::array();
  std::size_t exact = 0;
  std::size_t record_failures = 0;
  double max_abs = 0.0;
  for (const auto& r : records_) {
    Json j;
    j["group"] = r.group;
    j["family"] = family_name(r.report.family());
    j["label"] = r.report.label();
    j["indices"] = r.report.indices();
    j["expectation"] = expectation_name(r.expectation);
    j["exact_zero"] = r.report.exact_zero();
    j["nonzero_entries"] = r.report.nonzero_entries();
    j["worst_entry"] = r.report.worst_entry();
    j["passed"] = meets(r);
    if (auto v = r.report.numeric_max_abs()) {
      j["numeric_max_abs"] = *v;
      if (r.expectation == Expectation::Zero) max_abs = std::max(max_abs, *v);
    }
    out["relations"].push_back(std::move(j));
    if (r.report.exact_zero()) ++exact;
    if (!meets(r)) ++record_failures;
  }
  out["checks"] = Json::array();
  std::size_t check_failures = 0;
  for (const auto& c : checks_) {
    Json j;
    j["name"] = c.name;
    j["expectation"] = expectation_name(c.expectation);
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    out["checks"].push_back(std::move(j));
    if (c.expectation != Expectation::Finding && !c.passed) ++check_failures;
  }
  for (const auto& [k, v] : sections_.items()) out[k] = v;
  out["summary"] = {{"total", records_.size()},
                    {"exact_zero", exact},
                    {"failed", record_failures},
                    {"checks", checks_.size()},
                    {"checks_failed", check_failures},
                    {"experiment", experiment_}};
  if (numeric_q_) out["numeric"] = {{"q0", numeric_q_->second}, {"max_abs_residual", max_abs}};
  out["exit_code"] = exit_code();
  return out;
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "qclifford " << kToolVersion << ": " << command_ << '\n';
  for (const auto& r : records_) {
    out << (meets(r) ? "  ok    " : "  FAIL  ") << r.group << ' ' << r.report.label() << indices_text(r.report.indices())
        << ": " << (r.report.exact_zero() ? "exact zero" : "nonzero, worst " + r.report.worst_entry());
    if (r.expectation != Expectation::Zero) out << " [expect " << expectation_name(r.expectation) << ']';
    if (auto v = r.report.numeric_max_abs()) out << ", |residual| " << *v;
    out << '\n';
  }
  for (const auto& c : checks_) {
    const bool ok = c.passed || c.expectation == Expectation::Finding;
    out << (ok ? "  ok    " : "  FAIL  ") << c.name;
    if (c.expectation == Expectation::Finding) out << (c.passed ? " [holds]" : " [does not hold]");
    if (!c.detail.empty()) out << ' ' << c.detail.dump();
    out << '\n';
  }
  for (const auto& [k, v] : sections_.items()) out << "  " << k << ": " << v.dump() << '\n';
  out << "summary: " << records_.size() << " relations, " << failed() << " failed";
  if (numeric_q_) {
    double max_abs = 0.0;
    for (const auto& r : records_)
      if (auto v = r.report.numeric_max_abs(); v && r.expectation == Expectation::Zero) max_abs = std::max(max_abs, *v);
    out << ", max |residual| " << max_abs << " at q = " << numeric_q_->second;
  }
  out << '\n';
  return out.str();
}

}  // namespace qclifford
