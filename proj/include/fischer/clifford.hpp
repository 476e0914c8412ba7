#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fischer/rational.hpp"

namespace fischer {

// A basis blade e_{i_1}...e_{i_r} with i_1 < ... < i_r, encoded as a bitmask:
// bit (i-1) set means the generator e_i is present. The empty set is the
// scalar blade 1.
class BladeIndex {
 public:
  BladeIndex() : bits_(0) {}
  explicit BladeIndex(std::uint32_t bits) : bits_(bits) {}
  static BladeIndex scalar() { return BladeIndex(0); }
  static BladeIndex generator(int i) { return BladeIndex(1u << (i - 1)); }
  static BladeIndex from_indices(const std::vector<int>& idx);

  std::uint32_t bits() const { return bits_; }
  int grade() const { return __builtin_popcount(bits_); }
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  // Generator indices in increasing order (1-based).
  std::vector<int> indices() const;
  std::string str() const;  // "1", "e1", "e1e3", ...

  friend bool operator==(BladeIndex a, BladeIndex b) { return a.bits_ == b.bits_; }
  friend bool operator!=(BladeIndex a, BladeIndex b) { return a.bits_ != b.bits_; }
  friend bool operator<(BladeIndex a, BladeIndex b) { return a.bits_ < b.bits_; }

 private:
  std::uint32_t bits_;
};

// Normal-ordered product of two blades under e_i e_j + e_j e_i = -2 delta_ij
// with e_i^2 = -1. The sign accounts for the transpositions that sort the
// concatenated generator word plus one factor -1 per contracted pair.
// Returns {sign, blade} with sign in {+1,-1}.
struct BladeProduct {
  int sign;
  BladeIndex blade;
};
BladeProduct blade_mul(BladeIndex a, BladeIndex b, int m);

// Element of the complexified Clifford algebra C_m: a finite sum of basis
// blades with ExactScalar coefficients. Zero coefficients are never stored.
class CliffordElement {
 public:
  explicit CliffordElement(int m);
  static CliffordElement scalar(int m, ExactScalar c);
  static CliffordElement basis_vector(int m, int i);  // e_i
  static CliffordElement blade(int m, BladeIndex b, ExactScalar c);

  int dimension() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BladeIndex, ExactScalar>& terms() const { return terms_; }
  ExactScalar coefficient(BladeIndex b) const;

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  CliffordElement operator-() const;
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  CliffordElement scaled(const ExactScalar& c) const;

  // Main antiinvolution: bar(e_i) = -e_i, bar(ab) = bar(b)bar(a), complex
  // conjugation on coefficients. On a blade of grade r this is the sign
  // (-1)^(r(r+1)/2).
  CliffordElement bar() const;

  // Coefficient of the scalar blade.
  ExactScalar scalar_part() const;

  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordElement& a, const CliffordElement& b) { return !(a == b); }

  std::string str() const;

 private:
  void add_term(BladeIndex b, const ExactScalar& c);

  int m_;
  std::map<BladeIndex, ExactScalar> terms_;
};

// Spinor space realized as the minimal left ideal C_m * I for a primitive
// idempotent I built from the commuting factors (1 + i e_{2j-1} e_{2j})/2
// and, in odd dimension, a central projector from the pseudoscalar. The
// basis is the reduced-echelon form of the ideal over blade coordinates,
// so coordinates of an ideal element can be read off at the pivot blades.
class SpinorFrame {
 public:
  // Requires m > 2. Verifies I*I = I and closure of the ideal under left
  // multiplication by every e_i before returning.
  static SpinorFrame build(int m);

  int m() const { return m_; }
  int n() const { return n_; }  // floor(m/2)
  int dim() const { return static_cast<int>(basis_.size()); }  // 2^n
  const CliffordElement& idempotent() const { return idempotent_; }
  const std::vector<CliffordElement>& basis() const { return basis_; }

  // Membership in the left ideal: x belongs to C_m * I iff x * I = x.
  bool contains(const CliffordElement& x) const;

  // Exact coordinates of an ideal element in the frame basis. Throws
  // std::invalid_argument if x is not in the ideal.
  std::vector<ExactScalar> coordinates(const CliffordElement& x) const;
  CliffordElement from_coordinates(const std::vector<ExactScalar>& c) const;

 private:
  SpinorFrame(int m, CliffordElement idem, std::vector<CliffordElement> basis,
              std::vector<BladeIndex> pivots);

  int m_, n_;
  CliffordElement idempotent_;
  std::vector<CliffordElement> basis_;
  std::vector<BladeIndex> pivot_blades_;
};

}  // namespace fischer
