#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qclifford/sparse_matrix.hpp"

namespace qclifford {

inline constexpr int kMaxModes = 12;

// 2^modes.
std::size_t fock_dimension(int modes);

/// An element of the Clifford algebra on `modes` fermionic modes, in its
/// faithful Fock-space representation.
///
/// Basis states are bitstrings with mode 0 as the most significant bit, so
/// state s has mode i occupied iff bit (modes - 1 - i) of s is set. Mode
/// indices are 0-based in code; reports print them 1-based.
class FockOperator {
 public:
  // Throws std::invalid_argument when matrix.dim() != 2^modes.
  FockOperator(int modes, SparseMatrix matrix);

  static FockOperator identity(int modes);
  static FockOperator zero(int modes);
  static FockOperator scalar(int modes, const RationalFunction& value);

  int modes() const { return modes_; }
  std::size_t dim() const { return matrix_.dim(); }
  const SparseMatrix& matrix() const { return matrix_; }
  bool is_zero() const { return matrix_.is_zero(); }

  FockOperator operator-() const { return {modes_, -matrix_}; }
  FockOperator& operator+=(const FockOperator& rhs);
  FockOperator& operator-=(const FockOperator& rhs);
  FockOperator& operator*=(const FockOperator& rhs);
  FockOperator& operator*=(const RationalFunction& s);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  friend FockOperator operator*(FockOperator a, const FockOperator& b) { return a *= b; }
  friend FockOperator operator*(FockOperator a, const RationalFunction& s) { return a *= s; }
  friend FockOperator operator*(const RationalFunction& s, FockOperator a) { return a *= s; }
  friend bool operator==(const FockOperator& a, const FockOperator& b) {
    return a.modes_ == b.modes_ && a.matrix_ == b.matrix_;
  }

  FockOperator substitute(const mpq_class& q0) const { return {modes_, matrix_.substitute(q0)}; }
  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& state) const {
    return matrix_.apply(state);
  }

 private:
  int modes_;
  SparseMatrix matrix_;
};

bool occupied(std::size_t state, int mode, int modes);
std::size_t occupation_count(std::size_t state);

// Basis vector of the given state; vacuum(modes) is state 0.
std::vector<RationalFunction> basis_vector(int modes, std::size_t state);
inline std::vector<RationalFunction> vacuum(int modes) { return basis_vector(modes, 0); }

struct ModeGenerators {
  FockOperator creator;      // a^+_i
  FockOperator annihilator;  // a^i
};

/// Jordan-Wigner creation and annihilation operators; a^+_i carries the
/// parity sign of the modes before i. Throws std::invalid_argument for
/// modes outside [1, kMaxModes].
std::vector<ModeGenerators> build_generators(int modes);
FockOperator creation_operator(int modes, int mode);
FockOperator annihilation_operator(int modes, int mode);

/// n^i = a^+_i a^i.
FockOperator number_op(int modes, int mode);

/// Diagonal q^(sum_i weights[i] n^i).
FockOperator q_exponent(std::span<const long> weights);

/// Matrix transpose with coefficients untouched; realizes the star
/// involution (a^i)* = a^+_i for real q.
FockOperator star(const FockOperator& op);

// --- ordered-monomial calculus --------------------------------------------

enum class GeneratorKind { Creator = 0, Annihilator = 1 };

struct GeneratorSymbol {
  GeneratorKind kind;
  int mode;
  // Normal order: all creators before annihilators, ascending mode.
  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

using Word = std::vector<GeneratorSymbol>;

inline GeneratorSymbol creator(int mode) { return {GeneratorKind::Creator, mode}; }
inline GeneratorSymbol annihilator(int mode) { return {GeneratorKind::Annihilator, mode}; }

// Strictly increasing in normal order (no repeated generator).
bool is_ordered_monomial(const Word& word);
std::string word_to_string(const Word& word);

/// Linear combination of ordered monomials.
class NormalPolynomial {
 public:
  explicit NormalPolynomial(int modes) : modes_(modes) {}

  int modes() const { return modes_; }
  const std::map<Word, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const Word& monomial) const;

  // Requires an ordered monomial.
  void add_term(const Word& monomial, const RationalFunction& coefficient);

  NormalPolynomial& operator+=(const NormalPolynomial& rhs);
  NormalPolynomial& operator*=(const RationalFunction& s);
  friend NormalPolynomial operator+(NormalPolynomial a, const NormalPolynomial& b) { return a += b; }
  friend NormalPolynomial operator*(const NormalPolynomial& a, const NormalPolynomial& b);
  friend bool operator==(const NormalPolynomial& a, const NormalPolynomial& b) {
    return a.modes_ == b.modes_ && a.terms_ == b.terms_;
  }

  FockOperator to_operator() const;
  std::string to_string() const;

 private:
  int modes_;
  std::map<Word, RationalFunction> terms_;
};

/// Rewrites a word of generators to the ordered basis using the
/// anticommutation relations.
NormalPolynomial normal_form(int modes, const Word& word);

/// All 4^modes ordered monomials, in lexicographic normal order.
std::vector<Word> ordered_monomials(int modes);

/// Product of generator matrices for a word (identity for the empty word).
FockOperator word_operator(int modes, const Word& word);

/// Coordinates of an operator in the ordered-monomial basis, obtained by
/// exact linear solve against the basis matrices. Modes <= 3.
std::optional<NormalPolynomial> decompose(const FockOperator& op);

}  // namespace qclifford
