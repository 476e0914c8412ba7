#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fischer {

// Exact rational number, arbitrary precision. GMP keeps values canonical
// (coprime numerator/denominator, positive denominator) through arithmetic.
using Rational = mpq_class;

// Canonical fraction n/d. mpq_class's two-argument constructor does not
// canonicalize on its own, and GMP comparisons require canonical form.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational rational_from_string(const std::string& s);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

// Complex number with exact rational real and imaginary parts. All
// arithmetic is exact; equality is exact.
class ExactScalar {
 public:
  ExactScalar() : re_(0), im_(0) {}
  ExactScalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return ExactScalar(re_, -im_); }

  // |z|^2 = re^2 + im^2, a nonnegative rational.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  ExactScalar operator-() const { return ExactScalar(-re_, -im_); }

  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  ExactScalar& operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::invalid_argument("ExactScalar: division by zero");
    Rational n = o.norm_sq();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  ExactScalar inverse() const {
    ExactScalar one(1);
    return one /= *this;
  }

  // Human-readable form, e.g. "1/2", "-3i", "1/2+3/4i", "0".
  std::string str() const;

 private:
  Rational re_, im_;
};

// (p+q)! / ... helpers used across the dimension formulas.
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace fischer
