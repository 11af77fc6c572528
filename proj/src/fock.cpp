#include "qclifford/fock.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qclifford/linalg.hpp"

namespace qclifford {

namespace {

void check_modes(int modes) {
  if (modes < 1 || modes > kMaxModes)
    throw std::invalid_argument("mode count must be in [1, " + std::to_string(kMaxModes) + "], got " +
                                std::to_string(modes));
}

void check_mode(int modes, int mode) {
  if (mode < 0 || mode >= modes)
    throw std::invalid_argument("mode index " + std::to_string(mode + 1) + " out of range 1.." +
                                std::to_string(modes));
}

void check_same_modes(const FockOperator& a, const FockOperator& b) {
  if (a.modes() != b.modes())
    throw std::invalid_argument("operators act on different mode counts: " + std::to_string(a.modes()) + " vs " +
                                std::to_string(b.modes()));
}

std::size_t mode_bit(int mode, int modes) { return std::size_t{1} << static_cast<unsigned>(modes - 1 - mode); }

}  // namespace

std::size_t fock_dimension(int modes) {
  check_modes(modes);
  return std::size_t{1} << static_cast<unsigned>(modes);
}

FockOperator::FockOperator(int modes, SparseMatrix matrix) : modes_(modes), matrix_(std::move(matrix)) {
  if (matrix_.dim() != fock_dimension(modes))
    throw std::invalid_argument("Fock operator on " + std::to_string(modes) + " modes needs dimension " +
                                std::to_string(fock_dimension(modes)) + ", got " + std::to_string(matrix_.dim()));
}

FockOperator FockOperator::identity(int modes) { return {modes, SparseMatrix::identity(fock_dimension(modes))}; }
FockOperator FockOperator::zero(int modes) { return {modes, SparseMatrix(fock_dimension(modes))}; }
FockOperator FockOperator::scalar(int modes, const RationalFunction& value) {
  return {modes, SparseMatrix::scalar(fock_dimension(modes), value)};
}

FockOperator& FockOperator::operator+=(const FockOperator& rhs) {
  check_same_modes(*this, rhs);
  matrix_ += rhs.matrix_;
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& rhs) {
  check_same_modes(*this, rhs);
  matrix_ -= rhs.matrix_;
  return *this;
}

FockOperator& FockOperator::operator*=(const FockOperator& rhs) {
  check_same_modes(*this, rhs);
  matrix_ = matrix_ * rhs.matrix_;
  return *this;
}

FockOperator& FockOperator::operator*=(const RationalFunction& s) {
  matrix_ *= s;
  return *this;
}

bool occupied(std::size_t state, int mode, int modes) { return (state & mode_bit(mode, modes)) != 0; }

std::size_t occupation_count(std::size_t state) { return static_cast<std::size_t>(std::popcount(state)); }

std::vector<RationalFunction> basis_vector(int modes, std::size_t state) {
  std::vector<RationalFunction> v(fock_dimension(modes));
  v.at(state) = RationalFunction(1);
  return v;
}

FockOperator creation_operator(int modes, int mode) {
  const std::size_t dim = fock_dimension(modes);
  check_mode(modes, mode);
  const std::size_t bit = mode_bit(mode, modes);
  SparseMatrix m(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    if ((s & bit) != 0) continue;
    // Modes before `mode` sit in the more significant bits.
    const std::size_t before = s >> static_cast<unsigned>(modes - mode);
    const long sign = (occupation_count(before) % 2 == 0) ? 1 : -1;
    m.set(s | bit, s, RationalFunction(sign));
  }
  return {modes, std::move(m)};
}

FockOperator annihilation_operator(int modes, int mode) {
  return {modes, creation_operator(modes, mode).matrix().transpose()};
}

std::vector<ModeGenerators> build_generators(int modes) {
  check_modes(modes);
  std::vector<ModeGenerators> out;
  out.reserve(static_cast<std::size_t>(modes));
  for (int i = 0; i < modes; ++i) out.push_back({creation_operator(modes, i), annihilation_operator(modes, i)});
  return out;
}

FockOperator number_op(int modes, int mode) {
  return creation_operator(modes, mode) * annihilation_operator(modes, mode);
}

FockOperator q_exponent(std::span<const long> weights) {
  const int modes = static_cast<int>(weights.size());
  const std::size_t dim = fock_dimension(modes);
  std::vector<RationalFunction> diag(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    long exponent = 0;
    for (int i = 0; i < modes; ++i)
      if (occupied(s, i, modes)) exponent += weights[static_cast<std::size_t>(i)];
    diag[s] = RationalFunction::q_power(exponent);
  }
  return {modes, SparseMatrix::diagonal(diag)};
}

FockOperator star(const FockOperator& op) { return {op.modes(), op.matrix().transpose()}; }

// --- ordered monomials ------------------------------------------------------

bool is_ordered_monomial(const Word& word) {
  return std::adjacent_find(word.begin(), word.end(), [](const auto& a, const auto& b) { return !(a < b); }) ==
         word.end();
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k != 0) out << ' ';
    out << (word[k].kind == GeneratorKind::Creator ? "a+_" : "a^") << (word[k].mode + 1);
  }
  return out.str();
}

RationalFunction NormalPolynomial::coefficient(const Word& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void NormalPolynomial::add_term(const Word& monomial, const RationalFunction& coefficient) {
  if (!is_ordered_monomial(monomial)) throw std::invalid_argument("not an ordered monomial: " + word_to_string(monomial));
  for (const auto& g : monomial) check_mode(modes_, g.mode);
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator*=(const RationalFunction& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NormalPolynomial operator*(const NormalPolynomial& a, const NormalPolynomial& b) {
  NormalPolynomial out(a.modes_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      NormalPolynomial part = normal_form(a.modes_, w);
      part *= ca * cb;
      out += part;
    }
  }
  return out;
}

FockOperator NormalPolynomial::to_operator() const {
  FockOperator out = FockOperator::zero(modes_);
  for (const auto& [w, c] : terms_) out += word_operator(modes_, w) * c;
  return out;
}

std::string NormalPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ')';
    if (!w.empty()) out << ' ' << word_to_string(w);
  }
  return out.str();
}

NormalPolynomial normal_form(int modes, const Word& word) {
  check_modes(modes);
  for (const auto& g : word) check_mode(modes, g.mode);
  NormalPolynomial result(modes);
  std::vector<std::pair<RationalFunction, Word>> pending;
  pending.emplace_back(RationalFunction(1), word);
  while (!pending.empty()) {
    auto [coeff, w] = std::move(pending.back());
    pending.pop_back();
    auto it = std::adjacent_find(w.begin(), w.end(), [](const auto& x, const auto& y) { return !(x < y); });
    if (it == w.end()) {
      result.add_term(w, coeff);
      continue;
    }
    if (*it == *(it + 1)) continue;  // nilpotent
    const auto k = static_cast<std::size_t>(it - w.begin());
    // x y = -y x + {x, y}; the anticommutator is 1 only for a^i a^+_i.
    if (w[k].kind == GeneratorKind::Annihilator && w[k + 1].kind == GeneratorKind::Creator &&
        w[k].mode == w[k + 1].mode) {
      Word contracted;
      contracted.reserve(w.size() - 2);
      contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(k + 2), w.end());
      pending.emplace_back(coeff, std::move(contracted));
    }
    std::swap(w[k], w[k + 1]);
    pending.emplace_back(-coeff, std::move(w));
  }
  return result;
}

std::vector<Word> ordered_monomials(int modes) {
  check_modes(modes);
  std::vector<Word> out;
  const std::size_t subsets = std::size_t{1} << static_cast<unsigned>(modes);
  out.reserve(subsets * subsets);
  for (std::size_t cs = 0; cs < subsets; ++cs) {
    for (std::size_t as = 0; as < subsets; ++as) {
      Word w;
      for (int i = 0; i < modes; ++i)
        if ((cs >> static_cast<unsigned>(i)) & 1U) w.push_back(creator(i));
      for (int i = 0; i < modes; ++i)
        if ((as >> static_cast<unsigned>(i)) & 1U) w.push_back(annihilator(i));
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FockOperator word_operator(int modes, const Word& word) {
  FockOperator out = FockOperator::identity(modes);
  for (const auto& g : word) {
    out *= g.kind == GeneratorKind::Creator ? creation_operator(modes, g.mode) : annihilation_operator(modes, g.mode);
  }
  return out;
}

std::optional<NormalPolynomial> decompose(const FockOperator& op) {
  if (op.modes() > 3) throw std::invalid_argument("decompose supports at most 3 modes");
  const auto basis = ordered_monomials(op.modes());
  std::vector<linalg::SparseVector> vectors;
  vectors.reserve(basis.size());
  for (const auto& w : basis) vectors.push_back(linalg::flatten(word_operator(op.modes(), w).matrix()));
  auto coeffs = linalg::solve_combination(vectors, linalg::flatten(op.matrix()));
  if (!coeffs) return std::nullopt;
  NormalPolynomial out(op.modes());
  for (std::size_t k = 0; k < basis.size(); ++k) out.add_term(basis[k], (*coeffs)[k]);
  return out;
}

}  // namespace qclifford
