#include "fischer/rational.hpp"

#include <cctype>

namespace fischer {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  // Validate shape before handing to GMP: optional sign, digits, optional /digits.
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t p = start;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return p;
  };
  if (s[pos] == '+' || s[pos] == '-') ++pos;
  std::size_t num_end = digits(pos);
  if (num_end == pos) throw std::invalid_argument("rational: malformed '" + s + "'");
  if (num_end == s.size()) {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  }
  if (s[num_end] != '/') throw std::invalid_argument("rational: malformed '" + s + "'");
  std::size_t den_end = digits(num_end + 1);
  if (den_end != s.size() || den_end == num_end + 1)
    throw std::invalid_argument("rational: malformed '" + s + "'");
  Rational q(s, 10);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = rational_to_string(re_);
  if (sgn(im_) != 0) {
    std::string i = rational_to_string(im_);
    if (i == "1")
      i = "i";
    else if (i == "-1")
      i = "-i";
    else
      i += "i";
    if (!out.empty() && i[0] != '-') out += "+";
    out += i;
  }
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace fischer
