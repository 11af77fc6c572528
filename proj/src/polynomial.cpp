#include "qclifford/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qclifford {

namespace {

const mpz_class& zero_coefficient() {
  static const mpz_class zero = 0;
  return zero;
}

// Remainder of a modulo b, with a scaled so the division stays in Z[q].
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const mpz_class la = a.leading();
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    a *= lb;
    a -= Polynomial::monomial(la, shift) * b;
  }
  return a;
}

}  // namespace

Polynomial::Polynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(const mpz_class& coefficient, std::size_t degree) {
  Polynomial p;
  if (coefficient == 0) return p;
  p.coeffs_.assign(degree + 1, mpz_class(0));
  p.coeffs_[degree] = coefficient;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::is_monomial() const { return !is_zero() && term_count() == 1; }

std::size_t Polynomial::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return k;
  return 0;
}

std::size_t Polynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

const mpz_class& Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_coefficient();
}

const mpz_class& Polynomial::leading() const {
  return coeffs_.empty() ? zero_coefficient() : coeffs_.back();
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return exact_divide(*this, c);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpz_class(0));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const mpz_class& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial r;
  r.coeffs_.assign(k, mpz_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Polynomial Polynomial::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (order() < k) throw std::logic_error("unshift past the lowest term");
  Polynomial r;
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

Polynomial Polynomial::taylor_shift() const {
  // Horner in (q + 1).
  Polynomial result;
  const Polynomial step(std::vector<mpz_class>{1, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * step + Polynomial(*it);
  }
  return result;
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::uint64_t Polynomial::evaluate_mod(std::uint64_t x, std::uint64_t prime) const {
  mpz_class residue;
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    mpz_fdiv_r_ui(residue.get_mpz_t(), it->get_mpz_t(), prime);
    const auto c = static_cast<std::uint64_t>(residue.get_ui());
    acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * x + c) % prime);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

Polynomial exact_divide(const Polynomial& a, const mpz_class& b) {
  if (b == 0) throw std::domain_error("division by zero polynomial");
  std::vector<mpz_class> out(a.coefficients());
  for (auto& c : out) {
    if (!mpz_divisible_p(c.get_mpz_t(), b.get_mpz_t()))
      throw std::logic_error("inexact integer division of polynomial");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
  }
  return Polynomial(std::move(out));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_constant()) return exact_divide(a, b.leading());
  if (b.is_monomial()) {
    const std::size_t k = b.order();
    return exact_divide(a.unshifted(k), b.coefficient(k));
  }
  if (a.degree() < b.degree()) throw std::logic_error("inexact polynomial division");
  std::vector<mpz_class> rem(a.coefficients());
  const auto db = static_cast<std::size_t>(b.degree());
  const auto& bc = b.coefficients();
  std::vector<mpz_class> quot(rem.size() - db, mpz_class(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    quot[k] = std::move(t);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("inexact polynomial division");
  return Polynomial(std::move(quot));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;

  mpz_class content_gcd;
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_gcd(content_gcd.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  // Powers of q are split off first; most operands in this library are
  // Laurent monomials, for which this is the whole answer.
  const std::size_t q_power = std::min(a.order(), b.order());
  if (a.is_monomial() || b.is_monomial() || a.is_constant() || b.is_constant())
    return Polynomial::monomial(content_gcd, q_power);

  Polynomial x = exact_divide(a.unshifted(a.order()), ca);
  Polynomial y = exact_divide(b.unshifted(b.order()), cb);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) {
      x = Polynomial(1);
      break;
    }
    Polynomial r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
  }
  x = x.primitive_part();
  return (x * content_gcd).shifted(q_power);
}

}  // namespace qclifford
