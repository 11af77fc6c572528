#include "qclifford/qclifford.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "qclifford/commands.hpp"
#include "qclifford/deform.hpp"
#include "qclifford/error.hpp"
#include "qclifford/rmatrix.hpp"

struct qc_rational {
  qclifford::RationalFunction value;
};
struct qc_rmatrix {
  qclifford::RMatrix value;
};
struct qc_generators {
  qclifford::GeneratorSet value;
};
struct qc_report {
  qclifford::ReportDocument value;
};

namespace {

thread_local std::string last_error;

qc_status fail(qc_status s, const char* what) {
  last_error = what;
  return s;
}

template <typename F>
qc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return QC_OK;
  } catch (const qclifford::ParseError& e) {
    return fail(QC_ERR_PARSE, e.what());
  } catch (const qclifford::DomainError& e) {
    return fail(QC_ERR_DOMAIN, e.what());
  } catch (const qclifford::LimitError& e) {
    return fail(QC_ERR_LIMIT, e.what());
  } catch (const qclifford::VerificationError& e) {
    return fail(QC_ERR_VERIFICATION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QC_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw std::invalid_argument(std::string(name) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* qc_version(void) { return qclifford::kToolVersion; }

const char* qc_last_error(void) { return last_error.c_str(); }

void qc_free_string(char* s) { delete[] s; }

qc_status qc_rational_parse(const char* text, qc_rational** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qc_rational{qclifford::RationalFunction::parse(text)};
  });
}

qc_status qc_rational_q_number(long m, const qc_rational* base, qc_rational** out) {
  return guarded([&] {
    require(base, "base");
    require(out, "out");
    *out = new qc_rational{qclifford::q_number(m, base->value)};
  });
}

qc_status qc_rational_gamma_ratio(long m, qc_rational** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qc_rational{qclifford::gamma_ratio(m)};
  });
}

qc_status qc_rational_mul(const qc_rational* a, const qc_rational* b, qc_rational** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new qc_rational{a->value * b->value};
  });
}

qc_status qc_rational_add(const qc_rational* a, const qc_rational* b, qc_rational** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new qc_rational{a->value + b->value};
  });
}

qc_status qc_rational_div(const qc_rational* a, const qc_rational* b, qc_rational** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new qc_rational{a->value / b->value};
  });
}

int qc_rational_equal(const qc_rational* a, const qc_rational* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

qc_status qc_rational_to_string(const qc_rational* r, char** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    *out = copy_string(r->value.to_string());
  });
}

qc_status qc_rational_eval(const qc_rational* r, double re, double im, double* out_re, double* out_im) {
  return guarded([&] {
    require(r, "r");
    require(out_re, "out_re");
    const auto v = r->value.evaluate(std::complex<double>(re, im));
    *out_re = v.real();
    if (out_im != nullptr) *out_im = v.imag();
  });
}

void qc_rational_free(qc_rational* r) { delete r; }

qc_status qc_rmatrix_build(const char* kind, int n, qc_rmatrix** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const std::string k(kind);
    if (k == "sl") {
      *out = new qc_rmatrix{qclifford::build_rhat_sl(n)};
    } else if (k == "permutation") {
      *out = new qc_rmatrix{qclifford::build_permutation(n)};
    } else {
      throw std::invalid_argument("unknown R-matrix kind '" + k + "'");
    }
  });
}

qc_status qc_rmatrix_from_json(const char* json, qc_rmatrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new qc_rmatrix{qclifford::rmatrix_from_json(qclifford::parse_json_text(json))};
  });
}

qc_status qc_rmatrix_to_json(const qc_rmatrix* r, char** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    *out = copy_string(qclifford::rmatrix_to_json(r->value).dump());
  });
}

qc_status qc_rmatrix_projector_sl(const qc_rmatrix* r, qc_rmatrix** out) {
  return guarded([&] {
    require(r, "r");
    require(out, "out");
    *out = new qc_rmatrix{qclifford::projector_sl(r->value)};
  });
}

qc_status qc_rmatrix_check_hecke(const qc_rmatrix* r, int* exact_zero) {
  return guarded([&] {
    require(r, "r");
    require(exact_zero, "exact_zero");
    *exact_zero = qclifford::check_hecke(r->value).exact_zero() ? 1 : 0;
  });
}

qc_status qc_rmatrix_check_braid(const qc_rmatrix* r, int* exact_zero) {
  return guarded([&] {
    require(r, "r");
    require(exact_zero, "exact_zero");
    *exact_zero = qclifford::check_braid(r->value).exact_zero() ? 1 : 0;
  });
}

qc_status qc_rmatrix_check_idempotent(const qc_rmatrix* r, int* exact_zero) {
  return guarded([&] {
    require(r, "r");
    require(exact_zero, "exact_zero");
    *exact_zero = qclifford::check_idempotent(r->value).exact_zero() ? 1 : 0;
  });
}

void qc_rmatrix_free(qc_rmatrix* r) { delete r; }

qc_status qc_generators_undeformed(int modes, qc_generators** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qc_generators{qclifford::undeformed_generators(modes)};
  });
}

qc_status qc_generators_deforming_map(int modes, qc_generators** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qc_generators{qclifford::build_deforming_map(modes)};
  });
}

qc_status qc_generators_inverse_map(const qc_generators* deformed, qc_generators** out) {
  return guarded([&] {
    require(deformed, "deformed");
    require(out, "out");
    *out = new qc_generators{qclifford::build_inverse_map(deformed->value)};
  });
}

qc_status qc_generators_from_json(const char* json, qc_generators** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new qc_generators{qclifford::generators_from_json(qclifford::parse_json_text(json))};
  });
}

qc_status qc_generators_to_json(const qc_generators* g, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = copy_string(qclifford::generators_to_json(g->value).dump());
  });
}

int qc_generators_modes(const qc_generators* g) { return g == nullptr ? 0 : g->value.modes; }

qc_status qc_generators_check_relations(const qc_generators* g, const qc_rmatrix* r, size_t* total, size_t* nonzero) {
  return guarded([&] {
    require(g, "g");
    require(r, "r");
    const auto reports = qclifford::relation_residuals(g->value, r->value);
    std::size_t bad = 0;
    for (const auto& rep : reports)
      if (!rep.exact_zero()) ++bad;
    if (total != nullptr) *total = reports.size();
    if (nonzero != nullptr) *nonzero = bad;
  });
}

qc_status qc_generators_poincare_rank(const qc_generators* g, size_t* rank, size_t* expected) {
  return guarded([&] {
    require(g, "g");
    const auto p = qclifford::poincare_rank(g->value);
    if (rank != nullptr) *rank = p.rank;
    if (expected != nullptr) *expected = p.expected;
  });
}

void qc_generators_free(qc_generators* g) { delete g; }

void qc_command_options_init(qc_command_options* o) {
  if (o == nullptr) return;
  *o = qc_command_options{};
  o->n = 2;
  o->m = 2;
}

qc_status qc_run_command(const qc_command_options* o, qc_report** out) {
  return guarded([&] {
    require(o, "options");
    require(o->command, "options.command");
    require(out, "out");
    qclifford::CommandOptions opts;
    opts.command = o->command;
    opts.n = o->n;
    opts.m = o->m;
    if (o->algebra != nullptr) opts.algebra = o->algebra;
    if (o->variant != nullptr) opts.variant = o->variant;
    if (o->q_numeric != nullptr) opts.q_numeric = o->q_numeric;
    if (o->input != nullptr) opts.input = o->input;
    if (o->expr != nullptr) opts.expr = o->expr;
    if (o->scales != nullptr) {
      std::stringstream ss(o->scales);
      for (std::string item; std::getline(ss, item, ',');) opts.scales.push_back(item);
    }
    *out = new qc_report{qclifford::run_command(opts)};
  });
}

qc_status qc_report_render(const qc_report* r, int text, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(text != 0 ? r->value.to_text() : r->value.to_json().dump(2) + "\n");
  });
}

int qc_report_exit_code(const qc_report* r) { return r == nullptr ? 2 : r->value.exit_code(); }

qc_status qc_report_summary(const qc_report* r, size_t* total, size_t* exact_zero, size_t* failed) {
  return guarded([&] {
    require(r, "report");
    const auto j = r->value.to_json();
    if (total != nullptr) *total = j["summary"]["total"].get<std::size_t>();
    if (exact_zero != nullptr) *exact_zero = j["summary"]["exact_zero"].get<std::size_t>();
    if (failed != nullptr) *failed = r->value.failed();
  });
}

void qc_report_free(qc_report* r) { delete r; }

}  // extern "C"
