/* C interface to the qclifford library. */
#ifndef QCLIFFORD_H
#define QCLIFFORD_H

#include <stddef.h>

#if defined(QC_BUILDING_LIBRARY)
#define QC_API __attribute__((visibility("default")))
#else
#define QC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qc_status {
  QC_OK = 0,
  QC_ERR_INVALID_ARGUMENT = 1,
  QC_ERR_PARSE = 2,
  QC_ERR_DOMAIN = 3,
  QC_ERR_LIMIT = 4,
  QC_ERR_VERIFICATION = 5,
  QC_ERR_INTERNAL = 6
} qc_status;

typedef struct qc_rational qc_rational;
typedef struct qc_rmatrix qc_rmatrix;
typedef struct qc_generators qc_generators;
typedef struct qc_report qc_report;

QC_API const char* qc_version(void);
/* Message of the last failing call on this thread; "" when none. */
QC_API const char* qc_last_error(void);
/* Releases strings returned through char** out-parameters. */
QC_API void qc_free_string(char* s);

/* Rational functions in q. */
QC_API qc_status qc_rational_parse(const char* text, qc_rational** out);
QC_API qc_status qc_rational_q_number(long m, const qc_rational* base, qc_rational** out);
QC_API qc_status qc_rational_gamma_ratio(long m, qc_rational** out);
QC_API qc_status qc_rational_mul(const qc_rational* a, const qc_rational* b, qc_rational** out);
QC_API qc_status qc_rational_add(const qc_rational* a, const qc_rational* b, qc_rational** out);
QC_API qc_status qc_rational_div(const qc_rational* a, const qc_rational* b, qc_rational** out);
QC_API int qc_rational_equal(const qc_rational* a, const qc_rational* b);
QC_API qc_status qc_rational_to_string(const qc_rational* r, char** out);
QC_API qc_status qc_rational_eval(const qc_rational* r, double re, double im, double* out_re, double* out_im);
QC_API void qc_rational_free(qc_rational* r);

/* R-matrices. kind: "sl" (braid matrix) or "permutation". */
QC_API qc_status qc_rmatrix_build(const char* kind, int n, qc_rmatrix** out);
QC_API qc_status qc_rmatrix_from_json(const char* json, qc_rmatrix** out);
QC_API qc_status qc_rmatrix_to_json(const qc_rmatrix* r, char** out);
QC_API qc_status qc_rmatrix_projector_sl(const qc_rmatrix* r, qc_rmatrix** out);
/* *exact_zero receives 1 when the identity holds exactly. */
QC_API qc_status qc_rmatrix_check_hecke(const qc_rmatrix* r, int* exact_zero);
QC_API qc_status qc_rmatrix_check_braid(const qc_rmatrix* r, int* exact_zero);
QC_API qc_status qc_rmatrix_check_idempotent(const qc_rmatrix* r, int* exact_zero);
QC_API void qc_rmatrix_free(qc_rmatrix* r);

/* Generator sets on the Fock space. */
QC_API qc_status qc_generators_undeformed(int modes, qc_generators** out);
QC_API qc_status qc_generators_deforming_map(int modes, qc_generators** out);
QC_API qc_status qc_generators_inverse_map(const qc_generators* deformed, qc_generators** out);
QC_API qc_status qc_generators_from_json(const char* json, qc_generators** out);
QC_API qc_status qc_generators_to_json(const qc_generators* g, char** out);
QC_API int qc_generators_modes(const qc_generators* g);
/* Counts relation residuals against r (with P+ and Pq built at generic q). */
QC_API qc_status qc_generators_check_relations(const qc_generators* g, const qc_rmatrix* r, size_t* total,
                                               size_t* nonzero);
QC_API qc_status qc_generators_poincare_rank(const qc_generators* g, size_t* rank, size_t* expected);
QC_API void qc_generators_free(qc_generators* g);

/* CLI commands. Unset string fields are NULL. */
typedef struct qc_command_options {
  const char* command;
  int n;
  int m;
  const char* algebra;
  const char* variant;
  const char* q_numeric;
  const char* input;
  const char* scales; /* comma separated, one per copy */
  const char* expr;
} qc_command_options;

QC_API void qc_command_options_init(qc_command_options* o);
QC_API qc_status qc_run_command(const qc_command_options* o, qc_report** out);
/* text != 0 renders the human-readable form, otherwise JSON. */
QC_API qc_status qc_report_render(const qc_report* r, int text, char** out);
QC_API int qc_report_exit_code(const qc_report* r);
QC_API qc_status qc_report_summary(const qc_report* r, size_t* total, size_t* exact_zero, size_t* failed);
QC_API void qc_report_free(qc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* QCLIFFORD_H */
