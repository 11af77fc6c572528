#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclifford/sparse_matrix.hpp"

namespace qclifford {

enum class RelationFamily { CreatorCreator, AnnihilatorAnnihilator, Mixed, Custom };

const char* family_name(RelationFamily family);

/// Outcome of checking one relation lhs = rhs as an exact matrix identity.
///
/// Both sides are retained so a numeric probe can evaluate them
/// independently at a sample q.
class RelationReport {
 public:
  RelationReport(RelationFamily family, std::string label, std::vector<int> indices, SparseMatrix lhs,
                 SparseMatrix rhs);

  RelationFamily family() const { return family_; }
  // Finer name inside the family, e.g. "hecke", "covariance:E".
  const std::string& label() const { return label_; }
  // 1-based index tuple.
  const std::vector<int>& indices() const { return indices_; }
  const SparseMatrix& lhs() const { return lhs_; }
  const SparseMatrix& rhs() const { return rhs_; }
  const SparseMatrix& residual() const { return residual_; }

  // Every residual entry is the canonical zero.
  bool exact_zero() const { return residual_.is_zero(); }
  std::size_t nonzero_entries() const { return residual_.nonzeros(); }
  // Residual entry of largest total degree, as text; "0" when exact zero.
  std::string worst_entry() const;

  // Evaluates both sides at q0 and records max |lhs - rhs|.
  double probe_numeric(double q0);
  std::optional<double> numeric_max_abs() const { return numeric_max_abs_; }
  std::optional<double> numeric_q() const { return numeric_q_; }

 private:
  RelationFamily family_;
  std::string label_;
  std::vector<int> indices_;
  SparseMatrix lhs_;
  SparseMatrix rhs_;
  SparseMatrix residual_;
  std::optional<double> numeric_max_abs_;
  std::optional<double> numeric_q_;
};

bool all_exact_zero(const std::vector<RelationReport>& reports);

// A construction whose built-in self-check did not come out exact.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, RelationReport failing)
      : std::runtime_error(what), failing_(std::move(failing)) {}
  const RelationReport& report() const { return failing_; }

 private:
  RelationReport failing_;
};

}  // namespace qclifford
