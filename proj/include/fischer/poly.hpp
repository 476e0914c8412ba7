#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fischer/clifford.hpp"

namespace fischer {

// Exponent matrix alpha in N_0^{m x k}, stored flat in column-major order
// (all exponents of variable column 1, then column 2, ...). Total degree is
// the sum of all entries; the multidegree is the vector of column sums.
class MultiExponent {
 public:
  MultiExponent(int m, int k) : m_(m), k_(k), e_(static_cast<std::size_t>(m) * k, 0) {}

  int m() const { return m_; }
  int k() const { return k_; }
  // 1-based indices: row i (coordinate in R^m), column j (vector variable).
  int at(int i, int j) const { return e_[flat(i, j)]; }
  void set(int i, int j, int v) { e_[flat(i, j)] = v; }
  void bump(int i, int j, int dv) { e_[flat(i, j)] += dv; }

  int total_degree() const;
  std::vector<int> multidegree() const;  // length k
  const std::vector<int>& flat_entries() const { return e_; }

  friend bool operator==(const MultiExponent& a, const MultiExponent& b) { return a.e_ == b.e_; }
  friend bool operator<(const MultiExponent& a, const MultiExponent& b) { return a.e_ < b.e_; }

  std::string str() const;  // "x11^2*x32", "1" for the empty exponent

 private:
  std::size_t flat(int i, int j) const { return static_cast<std::size_t>(j - 1) * m_ + (i - 1); }
  int m_, k_;
  std::vector<int> e_;
};

// Slice selector: either a total degree or a multidegree a in N_0^k.
struct GradedSlice {
  static GradedSlice total(int degree) { return {true, degree, {}}; }
  static GradedSlice multi(std::vector<int> a) {
    int d = 0;
    for (int x : a) d += x;
    return {false, d, std::move(a)};
  }
  bool is_total;
  int degree;            // total degree (for multi slices: the sum of a)
  std::vector<int> a;    // multidegree, empty for total slices
  bool matches(const MultiExponent& e) const;
  friend bool operator==(const GradedSlice& x, const GradedSlice& y) {
    return x.is_total == y.is_total && x.degree == y.degree && x.a == y.a;
  }
};

// Sparse polynomial in the m x k scalar variables x_{ij} with coefficients
// in C_m. Spinor-valued when all coefficients lie in a fixed spinor ideal.
class ClPoly {
 public:
  ClPoly(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiExponent, CliffordElement>& terms() const { return terms_; }

  static ClPoly monomial(int m, int k, const MultiExponent& e, const CliffordElement& c);
  // The scalar variable x_{ij} with coefficient 1.
  static ClPoly variable(int m, int k, int i, int j);
  static ClPoly constant(int m, int k, const CliffordElement& c);
  // The vector variable ux_j = sum_i e_i x_{ij}.
  static ClPoly vector_variable(int m, int k, int j);

  CliffordElement coefficient(const MultiExponent& e) const;
  void add_term(const MultiExponent& e, const CliffordElement& c);

  ClPoly& operator+=(const ClPoly& o);
  ClPoly& operator-=(const ClPoly& o);
  friend ClPoly operator+(ClPoly a, const ClPoly& b) { return a += b; }
  friend ClPoly operator-(ClPoly a, const ClPoly& b) { return a -= b; }
  ClPoly operator-() const;
  ClPoly scaled(const ExactScalar& c) const;
  // Left multiplication by a Clifford element, acting coefficient-wise.
  ClPoly clifford_left_mul(const CliffordElement& a) const;

  // Multiplications the decomposition needs: by x_{ij}, by ux_j, by r^2_{ij}.
  ClPoly mul_by_variable(int i, int j) const;
  ClPoly mul_by_ux(int j) const;
  ClPoly mul_by_rsq(int i, int j) const;

  // d/dx_{ij}.
  ClPoly derivative(int i, int j) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // Multidegree if every term shares one, otherwise nullopt.
  std::optional<std::vector<int>> multidegree() const;

  ClPoly graded_component(const GradedSlice& s) const;

  bool is_spinor_valued(const SpinorFrame& frame) const;
  // True when every coefficient is a scalar blade.
  bool is_scalar_valued() const;

  friend bool operator==(const ClPoly& a, const ClPoly& b) {
    return a.m_ == b.m_ && a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ClPoly& a, const ClPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_compatible(const ClPoly& o) const;
  int m_, k_;
  std::map<MultiExponent, CliffordElement> terms_;
};

// Fischer inner product <f,g> = sum_alpha alpha! [bar(c_alpha) d_alpha]_0.
// Hermitian and sesquilinear (conjugation through the antiinvolution on the
// first argument); positive definite on spinor-valued polynomials.
ExactScalar fischer_inner(const ClPoly& f, const ClPoly& g);

// Enumeration helpers shared by the coordinate charts. Orders are
// deterministic: exponents of a fixed multidegree are listed in
// lexicographic order of the flat column-major entries; total-degree slices
// list multidegrees lexicographically and concatenate their blocks.
std::vector<std::vector<int>> compositions(int total, int parts);  // lex order
std::vector<MultiExponent> exponents_of_multidegree(int m, int k, const std::vector<int>& a);
std::vector<MultiExponent> exponents_of_total_degree(int m, int k, int degree);

}  // namespace fischer
