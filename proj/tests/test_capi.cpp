#include <cstring>
#include <string>
#include <thread>

#include "doctest.h"
#include "qclifford/qclifford.h"

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  qc_free_string(s);
  return out;
}

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(qc_version()) == "1.0.0");
  qc_rational* r = nullptr;
  CHECK(qc_rational_parse("q + * 2", &r) == QC_ERR_PARSE);
  CHECK(r == nullptr);
  CHECK(std::string(qc_last_error()).find("position 4") != std::string::npos);
  CHECK(qc_rational_parse(nullptr, &r) == QC_ERR_INVALID_ARGUMENT);
  CHECK(qc_rational_parse("q", nullptr) == QC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rational functions") {
  qc_rational *a = nullptr, *b = nullptr, *sum = nullptr, *prod = nullptr, *quot = nullptr;
  REQUIRE(qc_rational_parse("q", &a) == QC_OK);
  REQUIRE(qc_rational_parse("q^-1", &b) == QC_OK);
  REQUIRE(qc_rational_add(a, b, &sum) == QC_OK);
  CHECK(take([&] { char* s = nullptr; qc_rational_to_string(sum, &s); return s; }()) == "(q^2 + 1)/q");
  REQUIRE(qc_rational_mul(a, b, &prod) == QC_OK);
  char* s = nullptr;
  REQUIRE(qc_rational_to_string(prod, &s) == QC_OK);
  CHECK(take(s) == "1");

  double re = 0, im = 0;
  REQUIRE(qc_rational_eval(sum, 2.0, 0.0, &re, &im) == QC_OK);
  CHECK(re == doctest::Approx(2.5));
  CHECK(qc_rational_eval(sum, 0.0, 0.0, &re, &im) == QC_ERR_DOMAIN);

  qc_rational* zero = nullptr;
  REQUIRE(qc_rational_parse("0", &zero) == QC_OK);
  CHECK(qc_rational_div(a, zero, &quot) == QC_ERR_DOMAIN);
  CHECK(quot == nullptr);

  qc_rational *qn = nullptr, *q2 = nullptr, *expected = nullptr, *g = nullptr;
  REQUIRE(qc_rational_parse("q^2", &q2) == QC_OK);
  REQUIRE(qc_rational_q_number(3, q2, &qn) == QC_OK);
  REQUIRE(qc_rational_parse("1 + q^2 + q^4", &expected) == QC_OK);
  CHECK(qc_rational_equal(qn, expected) == 1);
  CHECK(qc_rational_equal(qn, a) == 0);
  REQUIRE(qc_rational_gamma_ratio(2, &g) == QC_OK);
  REQUIRE(qc_rational_to_string(g, &s) == QC_OK);
  CHECK(take(s) == "2/(q^2 + 1)");
  CHECK(qc_rational_gamma_ratio(-1, &g) == QC_ERR_INVALID_ARGUMENT);

  for (qc_rational* x : {a, b, sum, prod, zero, qn, q2, expected, g}) qc_rational_free(x);
  qc_rational_free(nullptr);
}

TEST_CASE("R-matrices") {
  qc_rmatrix *r = nullptr, *p = nullptr, *perm = nullptr, *back = nullptr;
  REQUIRE(qc_rmatrix_build("sl", 3, &r) == QC_OK);
  int ok = 0;
  REQUIRE(qc_rmatrix_check_hecke(r, &ok) == QC_OK);
  CHECK(ok == 1);
  REQUIRE(qc_rmatrix_check_braid(r, &ok) == QC_OK);
  CHECK(ok == 1);
  REQUIRE(qc_rmatrix_projector_sl(r, &p) == QC_OK);
  REQUIRE(qc_rmatrix_check_idempotent(p, &ok) == QC_OK);
  CHECK(ok == 1);

  REQUIRE(qc_rmatrix_build("permutation", 2, &perm) == QC_OK);
  REQUIRE(qc_rmatrix_check_hecke(perm, &ok) == QC_OK);
  CHECK(ok == 0);
  CHECK(qc_rmatrix_projector_sl(perm, &back) == QC_ERR_INVALID_ARGUMENT);
  CHECK(std::string(qc_last_error()) == "input is not an sl-type braid matrix");

  char* json = nullptr;
  REQUIRE(qc_rmatrix_to_json(r, &json) == QC_OK);
  REQUIRE(qc_rmatrix_from_json(json, &back) == QC_OK);
  qc_free_string(json);
  REQUIRE(qc_rmatrix_check_braid(back, &ok) == QC_OK);
  CHECK(ok == 1);

  qc_rmatrix* bad = nullptr;
  CHECK(qc_rmatrix_build("so", 2, &bad) == QC_ERR_INVALID_ARGUMENT);
  CHECK(qc_rmatrix_build("sl", 1, &bad) == QC_ERR_INVALID_ARGUMENT);
  CHECK(qc_rmatrix_from_json("{\"n\": 2,", &bad) == QC_ERR_PARSE);
  for (qc_rmatrix* x : {r, p, perm, back}) qc_rmatrix_free(x);
}

TEST_CASE("generators") {
  qc_generators *g = nullptr, *u = nullptr, *inv = nullptr;
  qc_rmatrix* r = nullptr;
  REQUIRE(qc_generators_deforming_map(2, &g) == QC_OK);
  REQUIRE(qc_generators_undeformed(2, &u) == QC_OK);
  REQUIRE(qc_rmatrix_build("sl", 2, &r) == QC_OK);
  CHECK(qc_generators_modes(g) == 2);

  size_t total = 0, nonzero = 0;
  REQUIRE(qc_generators_check_relations(g, r, &total, &nonzero) == QC_OK);
  CHECK(total == 12);
  CHECK(nonzero == 0);
  REQUIRE(qc_generators_check_relations(u, r, &total, &nonzero) == QC_OK);
  CHECK(nonzero == 7);

  size_t rank = 0, expected = 0;
  REQUIRE(qc_generators_poincare_rank(g, &rank, &expected) == QC_OK);
  CHECK(rank == 16);
  CHECK(expected == 16);

  REQUIRE(qc_generators_inverse_map(g, &inv) == QC_OK);
  char *a = nullptr, *b = nullptr;
  REQUIRE(qc_generators_to_json(inv, &a) == QC_OK);
  REQUIRE(qc_generators_to_json(u, &b) == QC_OK);
  // Provenance differs; the matrices agree.
  const std::string sa = take(a), sb = take(b);
  CHECK(sa.substr(sa.find("\"creators\"")) == sb.substr(sb.find("\"creators\"")));

  qc_generators* round = nullptr;
  REQUIRE(qc_generators_from_json(sa.c_str(), &round) == QC_OK);
  CHECK(qc_generators_modes(round) == 2);

  qc_generators* big = nullptr;
  CHECK(qc_generators_deforming_map(0, &big) == QC_ERR_INVALID_ARGUMENT);
  qc_rmatrix* r3 = nullptr;
  REQUIRE(qc_rmatrix_build("sl", 3, &r3) == QC_OK);
  CHECK(qc_generators_check_relations(g, r3, &total, &nonzero) == QC_ERR_INVALID_ARGUMENT);

  for (qc_generators* x : {g, u, inv, round}) qc_generators_free(x);
  qc_rmatrix_free(r);
  qc_rmatrix_free(r3);
}

TEST_CASE("commands") {
  qc_command_options o;
  qc_command_options_init(&o);
  CHECK(o.n == 2);
  o.command = "verify-map";
  qc_report* rep = nullptr;
  REQUIRE(qc_run_command(&o, &rep) == QC_OK);
  CHECK(qc_report_exit_code(rep) == 0);
  size_t total = 0, zero = 0, failed = 0;
  REQUIRE(qc_report_summary(rep, &total, &zero, &failed) == QC_OK);
  CHECK(zero >= 12);
  CHECK(failed == 0);
  char* text = nullptr;
  REQUIRE(qc_report_render(rep, 1, &text) == QC_OK);
  CHECK(take(text).find("summary:") != std::string::npos);
  char* json = nullptr;
  REQUIRE(qc_report_render(rep, 0, &json) == QC_OK);
  CHECK(take(json).find("\"tool\": \"qclifford\"") != std::string::npos);
  qc_report_free(rep);

  o.command = "chain-experiment";
  o.scales = "1, q";
  REQUIRE(qc_run_command(&o, &rep) == QC_OK);
  CHECK(qc_report_exit_code(rep) == 0);
  qc_report_free(rep);

  qc_command_options_init(&o);
  o.command = "eval";
  o.expr = "1/(q-2)";
  o.q_numeric = "2";
  CHECK(qc_run_command(&o, &rep) == QC_ERR_DOMAIN);
  o.command = "verify-map";
  o.n = 9;
  CHECK(qc_run_command(&o, &rep) == QC_ERR_LIMIT);
  o.command = nullptr;
  CHECK(qc_run_command(&o, &rep) == QC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  qc_rational* r = nullptr;
  CHECK(qc_rational_parse("(", &r) == QC_ERR_PARSE);
  std::string other;
  std::thread t([&] {
    qc_rational* x = nullptr;
    qc_rational_parse("q", &x);
    other = qc_last_error();
    qc_rational_free(x);
  });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(qc_last_error()).empty());
}
