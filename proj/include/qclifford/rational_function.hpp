#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qclifford/polynomial.hpp"

namespace qclifford {

/// Element of Q(q), the field of rational functions in the deformation
/// parameter.
///
/// Values are kept in canonical form: numerator and denominator are coprime
/// in Z[q] (no common polynomial factor and no common integer content) and
/// the denominator has a positive leading coefficient. Two values are equal
/// iff their representations are identical, so every "exact zero" check in
/// the library is a structural comparison.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(1) {}
  // Throws DomainError("division by zero polynomial") when denominator is 0.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction from_rational(const mpq_class& value);
  // The indeterminate q.
  static RationalFunction q() { return RationalFunction(Polynomial::variable()); }
  // q^k for any integer k.
  static RationalFunction q_power(long k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Laurent monomial c*q^k.
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
  // Constant value; only meaningful when is_constant().
  mpq_class constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(long exponent) const;

  // Exact value at a rational point; throws DomainError on a pole.
  mpq_class evaluate(const mpq_class& q0) const;
  // Floating value; throws DomainError naming the denominator when it
  // vanishes at q0 (to within rounding).
  std::complex<double> evaluate(std::complex<double> q0) const;
  // Substitution q -> q0 as a constant rational function.
  RationalFunction substitute(const mpq_class& q0) const { return from_rational(evaluate(q0)); }

  // Coefficients c_0..c_order of the expansion in h = q - 1. Requires the
  // function to be regular at q = 1.
  std::vector<mpq_class> expand_in_h(std::size_t order) const;

  // Text form, e.g. "(q^2 - 1)/(q + 1)" style; accepted back by parse().
  std::string to_string() const;
  // Parses + - * / ^ with integer exponents (possibly negative), parentheses,
  // integer literals and the symbol q. Throws ParseError with a position.
  static RationalFunction parse(std::string_view text);

  // Total degree used to rank residual entries.
  int weight() const { return num_.degree() + den_.degree(); }

 private:
  struct Canonical {};
  RationalFunction(Polynomial numerator, Polynomial denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// (m)_base = 1 + base + ... + base^(m-1); (0)_base = 0. Throws
/// std::invalid_argument for negative m.
RationalFunction q_number(long m, const RationalFunction& base);

/// m! / prod_{k=1..m} (k)_{q^2}: the spectrum of the scalar u v^-1 on the
/// eigenspace where the total number operator equals m. Equals 1 at q = 1.
RationalFunction gamma_ratio(long m);

// Exact rational parsed from a decimal literal such as "1.3", "-2", "1e-3"
// or a fraction "13/10". Throws ParseError.
mpq_class parse_decimal(std::string_view text);

}  // namespace qclifford
