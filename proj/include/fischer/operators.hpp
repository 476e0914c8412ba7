#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fischer/poly.hpp"

namespace fischer {

// Generators acting on ClPoly:
//   Dirac j   : sum_i e_i d/dx_{ij}        (lowers total degree by 1)
//   VecMul j  : left multiplication by ux_j (raises by 1)
//   RSq i j   : multiplication by r^2_{ij} = sum_l x_{li} x_{lj}  (raises by 2)
//   Lapl i j  : sum_l d/dx_{li} d/dx_{lj}   (lowers by 2)
//   Euler i j : sum_l x_{li} d/dx_{lj}      (preserves degree)
//   H i j     : Euler i j + (m/2) delta_ij
// RSq and Lapl are symmetric in (i,j) and normalized to i <= j.
struct GeneratorTag {
  enum class Kind { Dirac, VecMul, RSq, Lapl, Euler, H };
  Kind kind;
  int i = 0;  // unused for Dirac/VecMul
  int j = 0;

  static GeneratorTag dirac(int j) { return {Kind::Dirac, 0, j}; }
  static GeneratorTag vecmul(int j) { return {Kind::VecMul, 0, j}; }
  static GeneratorTag rsq(int i, int j);
  static GeneratorTag lapl(int i, int j);
  static GeneratorTag euler(int i, int j) { return {Kind::Euler, i, j}; }
  static GeneratorTag h(int i, int j) { return {Kind::H, i, j}; }

  std::string str() const;
};

ClPoly apply(const GeneratorTag& g, const ClPoly& P);

// Formal sum of scaled words of generators. A word [g1, g2, ...] acts as the
// composition g1 ∘ g2 ∘ ... (rightmost generator applied first); the empty
// word is the identity.
class OperatorExpr {
 public:
  struct Term {
    ExactScalar coeff;
    std::vector<GeneratorTag> word;
  };

  OperatorExpr() = default;
  static OperatorExpr zero() { return OperatorExpr(); }
  static OperatorExpr identity(ExactScalar c = ExactScalar(1));
  static OperatorExpr generator(GeneratorTag g, ExactScalar c = ExactScalar(1));

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero_expr() const { return terms_.empty(); }

  OperatorExpr& operator+=(const OperatorExpr& o);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  OperatorExpr scaled(const ExactScalar& c) const;
  // Formal composition (concatenation of words, product of prefactors).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

ClPoly apply(const OperatorExpr& op, const ClPoly& P);

enum class Bracket { Commutator, Anticommutator };

// bracket(a,b) as a formal expression: ab -+ ba.
OperatorExpr bracket_expr(const OperatorExpr& a, const OperatorExpr& b, Bracket br);

// Checks bracket(a, b) = c * expected on every monomial-blade basis element
// of total degree <= max_degree, with the constant c determined by the
// engine from the first basis element where `expected` acts nonzero (or
// validated against expect_constant when supplied by an enclosing family
// check). When `expected` is the zero expression the bracket must vanish.
struct RelationReport {
  std::string relation;
  std::optional<ExactScalar> constant_found;
  int max_degree = 0;
  bool pass = false;
  std::optional<std::string> counterexample;
};

RelationReport check_relation(const OperatorExpr& a, const OperatorExpr& b, Bracket br,
                              const OperatorExpr& expected, int m, int k, int max_degree,
                              const SpinorFrame& frame, const std::string& label,
                              const std::optional<ExactScalar>& expect_constant = std::nullopt);

// The triangular decomposition of the operator families acting on k vector
// variables: p_+ = {r^2_ij, i<=j}, p_- = {Lapl_ij, i<=j}, t_0 = {h_ii},
// t_+ = {h_ji, i<j}, t_- = {h_ij, i<j}, f_+ = {ux_j}, f_- = {Dirac_j}.
struct TriangularSplit {
  std::vector<GeneratorTag> p_plus, p_minus, t_zero, t_plus, t_minus, f_plus, f_minus;
};
TriangularSplit triangular_split(int k);

// Full relation suite: the sp(2k) brackets among {r^2, Lapl, h} and the odd
// osp(1|2k) brackets involving {ux_j, Dirac_j}, with structure constants
// determined per family and required to be consistent across instances.
std::vector<RelationReport> relation_suite(int m, int k, int max_degree, const SpinorFrame& frame);

}  // namespace fischer
