#pragma once

#include <string>
#include <vector>

#include "qclifford/deform.hpp"
#include "qclifford/fock.hpp"
#include "qclifford/relation_report.hpp"

namespace qclifford {

// A word in the Hopf generators, by index into HopfAlgebraData::generators.
using HopfWord = std::vector<int>;

struct HopfTerm {
  RationalFunction coefficient;
  HopfWord word;
};

struct CoproductTerm {
  RationalFunction coefficient;
  HopfWord left;
  HopfWord right;
};

struct HopfGenerator {
  std::string name;
  bool primary = true;  // acts in the checks; K^-1 is auxiliary
  FockOperator image;   // sigma(x) on the two-mode Fock space
  SparseMatrix rep;     // rho(x), 2x2
  std::vector<CoproductTerm> coproduct;
  RationalFunction counit;
  HopfTerm antipode;
};

enum class CoproductConvention {
  Primitive,  // x(x)1 + 1(x)x, classical U sl(2)
  Candidate,  // E(x)K + 1(x)E, F(x)1 + K^-1(x)F
  Mirrored,   // E(x)1 + K(x)E, F(x)K^-1 + 1(x)F
};

const char* convention_name(CoproductConvention c);

/// Generator table of U sl(2) or U_q sl(2) together with its Jordan-Schwinger
/// image on two fermionic modes (mode 1 = up, mode 2 = down).
struct HopfAlgebraData {
  std::string algebra;
  CoproductConvention convention = CoproductConvention::Primitive;
  std::vector<HopfGenerator> generators;

  int index(const std::string& name) const;
  std::vector<int> primary() const;

  FockOperator image(const HopfWord& w) const;
  SparseMatrix representation(const HopfWord& w) const;
  RationalFunction counit(const HopfWord& w) const;
  // Extended multiplicatively; the antipode reverses the word.
  std::vector<CoproductTerm> coproduct(const HopfWord& w) const;
  HopfTerm antipode(const HopfWord& w) const;
};

/// sigma(J+) = a+_1 a^2, sigma(J-) = a+_2 a^1, sigma(J0) = (n^1 - n^2)/2 with
/// the primitive coproduct. Self-checked against the sl(2) brackets.
HopfAlgebraData classical_js();

/// sigma_q(E) = a+_1 a^2, sigma_q(F) = a+_2 a^1, sigma_q(K) = q^(n^1 - n^2),
/// rho_q(K) = diag(q, 1/q). The default convention is the one under which
/// the deforming-map generators are covariant. Throws VerificationError when
/// the U_q sl(2) relations fail.
HopfAlgebraData deformed_js(CoproductConvention convention = CoproductConvention::Mirrored);

// K E K^-1 = q^2 E, K F K^-1 = q^-2 F, [E, F] = (K - K^-1)/(q - q^-1), K K^-1 = 1.
std::vector<RelationReport> check_uq_relations(const HopfAlgebraData& hopf);
// [J+, J-] = 2 J0, [J0, J+-] = +-J+-.
std::vector<RelationReport> check_sl2_relations(const HopfAlgebraData& hopf);

/// x |> a = sum sigma(x_(1)) a sigma(S x_(2)).
FockOperator act(const HopfAlgebraData& hopf, const HopfWord& x, const FockOperator& a);

/// (xy) |> a = x |> (y |> a) for primary pairs x, y and every a among the
/// generators and their pairwise products; x |> (ab) = (x_(1) |> a)(x_(2) |> b)
/// for primary x and generator pairs a, b.
std::vector<RelationReport> check_module_algebra(const HopfAlgebraData& hopf, const GeneratorSet& gens);

/// x |> A+_i = rho(x)_{ji} A+_j and x |> A^i = rho(S x)_{ij} A^j for primary x.
std::vector<RelationReport> check_covariance(const GeneratorSet& gens, const HopfAlgebraData& hopf);

struct InvariantElement {
  FockOperator expression;
  int degree = 0;
  std::string label;
};

// sum_i a+_i a^i.
InvariantElement invariant_I1(int modes);
// sum_i A+_i A^i.
InvariantElement invariant_I1q(const GeneratorSet& gens);
/// sum of coefficient * (product of generators in the word); the words need
/// not be ordered.
InvariantElement invariant_from_terms(const GeneratorSet& gens,
                                      const std::vector<std::pair<Word, RationalFunction>>& terms,
                                      std::string label);

/// x |> I = eps(x) I for every primary generator.
std::vector<RelationReport> invariance_check(const InvariantElement& inv, const HopfAlgebraData& hopf);

/// Basis of all operators I on the Fock space with x |> I = eps(x) I.
std::vector<FockOperator> invariant_subspace(const HopfAlgebraData& hopf);

/// Sum_i A+_i A^i against the diagonal operator with entry
/// (q^(-2m) - 1)/(q^(-2) - 1) on states with m occupied modes.
RelationReport verify_I1_identity(const GeneratorSet& gens);

}  // namespace qclifford
