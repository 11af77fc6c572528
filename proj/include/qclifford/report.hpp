#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qclifford/deform.hpp"
#include "qclifford/relation_report.hpp"
#include "qclifford/rmatrix.hpp"

namespace qclifford {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

// What a record is expected to show. Findings never fail.
enum class Expectation { Zero, Nonzero, Finding };

const char* expectation_name(Expectation e);

// --- matrix serialization -------------------------------------------------

// [[row, col, "rational function"], ...] in row-major order.
Json entries_to_json(const SparseMatrix& m);
// Throws ParseError with a JSON path on malformed input.
SparseMatrix entries_from_json(const Json& entries, std::size_t dim, const std::string& where);

Json rmatrix_to_json(const RMatrix& r);
RMatrix rmatrix_from_json(const Json& j);

Json fock_to_json(const FockOperator& op);
FockOperator fock_from_json(const Json& j, const std::string& where);

Json generators_to_json(const GeneratorSet& gens);
GeneratorSet generators_from_json(const Json& j);

// Parses text, reporting the byte offset of the first error as a ParseError.
Json parse_json_text(const std::string& text);

// --- report document ----------------------------------------------------

/// Machine-readable outcome of one CLI command: convention ledger, command
/// echo, relation records and scalar checks, with a summary derived from them.
class ReportDocument {
 public:
  ReportDocument(std::string command, Json echo, bool experiment = false);

  const std::string& command() const { return command_; }
  bool experiment() const { return experiment_; }

  void add_relation(const RelationReport& r, Expectation e, const std::string& group);
  void add_relations(const std::vector<RelationReport>& rs, Expectation e, const std::string& group);
  // A scalar check; a Finding never fails.
  void add_check(const std::string& name, bool passed, Json detail = Json::object(),
                 Expectation e = Expectation::Zero);
  // Free-form section (matrices, ranks, verdict tables).
  void set_section(const std::string& key, Json value);
  void add_convention(const std::string& key, const std::string& value);

  // Evaluates both sides of every record at q0.
  void probe_numeric(double q0, const std::string& text);

  std::size_t failed() const;
  // 0 when every assertion holds (always for experiments), 1 otherwise.
  int exit_code() const;

  Json to_json() const;
  std::string to_text() const;

 private:
  struct Record {
    RelationReport report;
    Expectation expectation;
    std::string group;
  };
  struct Check {
    std::string name;
    bool passed;
    Json detail;
    Expectation expectation;
  };
  static bool meets(const Record& r);

  std::string command_;
  Json echo_;
  bool experiment_;
  Json conventions_;
  std::vector<Record> records_;
  std::vector<Check> checks_;
  Json sections_ = Json::object();
  std::optional<std::pair<double, std::string>> numeric_q_;
};

// The fixed convention ledger embedded in every report.
Json default_conventions();

}  // namespace qclifford
