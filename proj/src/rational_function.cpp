#include "qclifford/rational_function.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "qclifford/error.hpp"

namespace qclifford {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("division by zero polynomial");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_one()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::from_rational(const mpq_class& value) {
  return RationalFunction(Polynomial(value.get_num()), Polynomial(value.get_den()), Canonical{});
}

RationalFunction RationalFunction::q_power(long k) {
  if (k >= 0) return RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(k)));
  return RationalFunction(Polynomial(1), Polynomial::monomial(1, static_cast<std::size_t>(-k)),
                          Canonical{});
}

mpq_class RationalFunction::constant_value() const {
  mpq_class v(num_.coefficient(0), den_.coefficient(0));
  v.canonicalize();
  return v;
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RationalFunction();
  // Cross-cancel so the product is already reduced.
  const Polynomial g1 = gcd(num_, rhs.den_);
  const Polynomial g2 = gcd(rhs.num_, den_);
  num_ = exact_divide(num_, g1) * exact_divide(rhs.num_, g2);
  den_ = exact_divide(den_, g2) * exact_divide(rhs.den_, g1);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by zero polynomial");
  RationalFunction r(den_, num_, Canonical{});
  if (r.den_.leading() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

RationalFunction RationalFunction::pow(long exponent) const {
  RationalFunction base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  RationalFunction result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

mpq_class RationalFunction::evaluate(const mpq_class& q0) const {
  const mpq_class d = den_.evaluate(q0);
  if (d == 0)
    throw DomainError("pole at q = " + q0.get_str() + ": denominator " + den_.to_string() + " vanishes");
  mpq_class v = num_.evaluate(q0) / d;
  v.canonicalize();
  return v;
}

std::complex<double> RationalFunction::evaluate(std::complex<double> q0) const {
  const std::complex<double> d = den_.evaluate(q0);
  double scale = 0.0;
  for (const auto& c : den_.coefficients()) scale = std::max(scale, std::abs(c.get_d()));
  scale *= std::pow(std::max(1.0, std::abs(q0)), std::max(0, den_.degree()));
  if (std::abs(d) <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    std::ostringstream msg;
    msg << "pole at q = " << q0.real();
    if (q0.imag() != 0.0) msg << (q0.imag() < 0 ? " - " : " + ") << std::abs(q0.imag()) << "i";
    msg << ": denominator " << den_.to_string() << " vanishes";
    throw DomainError(msg.str());
  }
  return num_.evaluate(q0) / d;
}

std::vector<mpq_class> RationalFunction::expand_in_h(std::size_t order) const {
  const Polynomial n = num_.taylor_shift();
  const Polynomial d = den_.taylor_shift();
  if (d.coefficient(0) == 0) throw DomainError("pole at q = 1: denominator " + den_.to_string() + " vanishes");
  // Power-series division n / d in Q[[h]].
  std::vector<mpq_class> out(order + 1, mpq_class(0));
  const mpq_class d0(d.coefficient(0));
  for (std::size_t k = 0; k <= order; ++k) {
    mpq_class acc(n.coefficient(k));
    for (std::size_t j = 1; j <= k; ++j) acc -= mpq_class(d.coefficient(j)) * out[k - j];
    out[k] = acc / d0;
    out[k].canonicalize();
  }
  return out;
}

namespace {

bool is_atom(const Polynomial& p) {
  // A bare integer or a bare power of q: safe without parentheses after '/'.
  if (p.is_constant()) return p.leading() > 0;
  return p.is_monomial() && p.leading() == 1;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string out;
  if (num_.term_count() > 1) {
    out = "(" + num_.to_string() + ")";
  } else {
    out = num_.to_string();
  }
  out += "/";
  if (is_atom(den_)) {
    out += den_.to_string();
  } else {
    out += "(" + den_.to_string() + ")";
  }
  return out;
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := ('-'|'+') unary | power
// power  := atom ('^' exponent)?
// atom   := integer | 'q' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero polynomial", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    const long e = exponent();
    if (e < 0 && base.is_zero()) fail("negative power of zero");
    return base.pow(e);
  }

  long exponent() {
    if (accept('(')) {
      const long e = signed_integer();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    return signed_integer();
  }

  long signed_integer() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip();
    const mpz_class v = integer();
    if (!v.fits_slong_p() || abs(v) > 100000) fail("exponent out of range");
    return negative ? -v.get_si() : v.get_si();
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return RationalFunction::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Polynomial(integer()));
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) { return Parser(text).parse(); }

RationalFunction q_number(long m, const RationalFunction& base) {
  if (m < 0) throw std::invalid_argument("q_number requires m >= 0, got " + std::to_string(m));
  RationalFunction sum;
  RationalFunction term(1);
  for (long k = 0; k < m; ++k) {
    sum += term;
    term *= base;
  }
  return sum;
}

RationalFunction gamma_ratio(long m) {
  if (m < 0) throw std::invalid_argument("gamma_ratio requires m >= 0, got " + std::to_string(m));
  const RationalFunction q2 = RationalFunction::q_power(2);
  RationalFunction r(1);
  for (long k = 1; k <= m; ++k) r *= RationalFunction(k) / q_number(k, q2);
  return r;
}

mpq_class parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, pos); };
  std::string s(text);
  if (s.empty()) fail("empty number");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class num = parse_decimal(s.substr(0, slash));
    mpq_class den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw ParseError("division by zero", slash + 1);
    mpq_class r = num / den;
    r.canonicalize();
    return r;
  }
  bool negative = false;
  if (s[pos] == '-' || s[pos] == '+') {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) fail("expected digits");
  long exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1]))) fail("malformed exponent");
    exp10 = std::stol(s.substr(start, pos - start));
    if (std::labs(exp10) > 1000) fail("exponent out of range");
  }
  if (pos != s.size()) fail("unexpected character '" + std::string(1, s[pos]) + "'");
  mpz_class num(digits, 10);
  mpz_class ten_pow;
  const long net = exp10 - scale;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  mpq_class r = net >= 0 ? mpq_class(num * ten_pow) : mpq_class(num, ten_pow);
  r.canonicalize();
  return negative ? mpq_class(-r) : r;
}

}  // namespace qclifford
