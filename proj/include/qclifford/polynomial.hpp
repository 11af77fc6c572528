#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qclifford {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored in ascending order and always trimmed (no zero
/// leading coefficient; the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const mpz_class& constant);
  explicit Polynomial(std::vector<mpz_class> ascending);

  static Polynomial monomial(const mpz_class& coefficient, std::size_t degree);
  static Polynomial variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // Exactly one nonzero coefficient.
  bool is_monomial() const;

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Exponent of the lowest nonzero term (0 for the zero polynomial).
  std::size_t order() const;
  std::size_t term_count() const;

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& coefficient(std::size_t k) const;
  const mpz_class& leading() const;

  mpz_class content() const;
  Polynomial primitive_part() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const mpz_class& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const mpz_class& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Multiplies by q^k.
  Polynomial shifted(std::size_t k) const;
  // Divides by q^k; the low k coefficients must vanish.
  Polynomial unshifted(std::size_t k) const;

  // p(q + 1), used for expansions in h = q - 1.
  Polynomial taylor_shift() const;

  mpq_class evaluate(const mpq_class& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  // Value modulo a word-sized prime, x given as a residue.
  std::uint64_t evaluate_mod(std::uint64_t x, std::uint64_t prime) const;

  // Descending-degree text such as "q^2 - 2*q + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

// Exact quotient a / b in Z[q]; throws std::logic_error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
Polynomial exact_divide(const Polynomial& a, const mpz_class& b);

// Greatest common divisor in Z[q], normalized to a positive leading coefficient.
// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace qclifford
