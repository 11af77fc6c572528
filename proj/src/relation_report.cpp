#include "qclifford/relation_report.hpp"

#include <algorithm>

namespace qclifford {

const char* family_name(RelationFamily family) {
  switch (family) {
    case RelationFamily::CreatorCreator:
      return "creator-creator";
    case RelationFamily::AnnihilatorAnnihilator:
      return "annihilator-annihilator";
    case RelationFamily::Mixed:
      return "mixed";
    case RelationFamily::Custom:
      return "custom";
  }
  return "custom";
}

RelationReport::RelationReport(RelationFamily family, std::string label, std::vector<int> indices, SparseMatrix lhs,
                               SparseMatrix rhs)
    : family_(family),
      label_(std::move(label)),
      indices_(std::move(indices)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      residual_(lhs_ - rhs_) {}

std::string RelationReport::worst_entry() const {
  const RationalFunction* worst = nullptr;
  for (std::size_t r = 0; r < residual_.dim(); ++r)
    for (const auto& e : residual_.row(r))
      if (worst == nullptr || e.value.weight() > worst->weight()) worst = &e.value;
  return worst == nullptr ? "0" : worst->to_string();
}

double RelationReport::probe_numeric(double q0) {
  numeric_q_ = q0;
  numeric_max_abs_ = max_abs_deviation(lhs_, rhs_, {q0, 0.0});
  return *numeric_max_abs_;
}

bool all_exact_zero(const std::vector<RelationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const RelationReport& r) { return r.exact_zero(); });
}

}  // namespace qclifford
