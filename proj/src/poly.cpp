#include "fischer/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fischer {

int MultiExponent::total_degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

std::vector<int> MultiExponent::multidegree() const {
  std::vector<int> a(k_, 0);
  for (int j = 1; j <= k_; ++j)
    for (int i = 1; i <= m_; ++i) a[j - 1] += at(i, j);
  return a;
}

std::string MultiExponent::str() const {
  std::string out;
  for (int j = 1; j <= k_; ++j) {
    for (int i = 1; i <= m_; ++i) {
      int v = at(i, j);
      if (v == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i) + std::to_string(j);
      if (v > 1) out += "^" + std::to_string(v);
    }
  }
  return out.empty() ? "1" : out;
}

bool GradedSlice::matches(const MultiExponent& e) const {
  if (is_total) return e.total_degree() == degree;
  return e.multidegree() == a;
}

ClPoly::ClPoly(int m, int k) : m_(m), k_(k) {
  if (m < 1 || k < 1) throw std::invalid_argument("ClPoly: dimensions must be positive");
}

ClPoly ClPoly::monomial(int m, int k, const MultiExponent& e, const CliffordElement& c) {
  ClPoly p(m, k);
  if (e.m() != m || e.k() != k) throw std::invalid_argument("ClPoly: exponent shape mismatch");
  p.add_term(e, c);
  return p;
}

ClPoly ClPoly::variable(int m, int k, int i, int j) {
  MultiExponent e(m, k);
  if (i < 1 || i > m || j < 1 || j > k) throw std::invalid_argument("ClPoly: variable index out of range");
  e.set(i, j, 1);
  return monomial(m, k, e, CliffordElement::scalar(m, ExactScalar(1)));
}

ClPoly ClPoly::constant(int m, int k, const CliffordElement& c) {
  return monomial(m, k, MultiExponent(m, k), c);
}

ClPoly ClPoly::vector_variable(int m, int k, int j) {
  ClPoly p(m, k);
  for (int i = 1; i <= m; ++i) {
    MultiExponent e(m, k);
    e.set(i, j, 1);
    p.add_term(e, CliffordElement::basis_vector(m, i));
  }
  return p;
}

CliffordElement ClPoly::coefficient(const MultiExponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CliffordElement(m_) : it->second;
}

void ClPoly::add_term(const MultiExponent& e, const CliffordElement& c) {
  if (c.is_zero()) return;
  if (c.dimension() != m_) throw std::invalid_argument("ClPoly: coefficient dimension mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ClPoly::check_compatible(const ClPoly& o) const {
  if (m_ != o.m_ || k_ != o.k_) throw std::invalid_argument("ClPoly: (m,k) mismatch");
}

ClPoly& ClPoly::operator+=(const ClPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ClPoly& ClPoly::operator-=(const ClPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ClPoly ClPoly::operator-() const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

ClPoly ClPoly::scaled(const ExactScalar& c) const {
  ClPoly out(m_, k_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v.scaled(c));
  return out;
}

ClPoly ClPoly::clifford_left_mul(const CliffordElement& a) const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_) out.add_term(e, a * c);
  return out;
}

ClPoly ClPoly::mul_by_variable(int i, int j) const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_) {
    MultiExponent f = e;
    f.bump(i, j, 1);
    out.terms_.emplace(f, c);
  }
  return out;
}

ClPoly ClPoly::mul_by_ux(int j) const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_) {
    for (int i = 1; i <= m_; ++i) {
      MultiExponent f = e;
      f.bump(i, j, 1);
      out.add_term(f, CliffordElement::basis_vector(m_, i) * c);
    }
  }
  return out;
}

ClPoly ClPoly::mul_by_rsq(int i, int j) const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_) {
    for (int l = 1; l <= m_; ++l) {
      MultiExponent f = e;
      f.bump(l, i, 1);
      f.bump(l, j, 1);
      out.add_term(f, c);
    }
  }
  return out;
}

ClPoly ClPoly::derivative(int i, int j) const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_) {
    int v = e.at(i, j);
    if (v == 0) continue;
    MultiExponent f = e;
    f.bump(i, j, -1);
    out.add_term(f, c.scaled(ExactScalar(v)));
  }
  return out;
}

int ClPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

bool ClPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = e.total_degree();
    if (d == -1)
      d = t;
    else if (d != t)
      return false;
  }
  return true;
}

std::optional<std::vector<int>> ClPoly::multidegree() const {
  std::optional<std::vector<int>> a;
  for (const auto& [e, c] : terms_) {
    std::vector<int> b = e.multidegree();
    if (!a)
      a = std::move(b);
    else if (*a != b)
      return std::nullopt;
  }
  return a;
}

ClPoly ClPoly::graded_component(const GradedSlice& s) const {
  ClPoly out(m_, k_);
  for (const auto& [e, c] : terms_)
    if (s.matches(e)) out.terms_.emplace(e, c);
  return out;
}

bool ClPoly::is_spinor_valued(const SpinorFrame& frame) const {
  for (const auto& [e, c] : terms_)
    if (!frame.contains(c)) return false;
  return true;
}

bool ClPoly::is_scalar_valued() const {
  for (const auto& [e, c] : terms_)
    for (const auto& [b, v] : c.terms())
      if (b.grade() != 0) return false;
  return true;
}

std::string ClPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (e.total_degree() > 0) out += "*" + e.str();
  }
  return out;
}

ExactScalar fischer_inner(const ClPoly& f, const ClPoly& g) {
  if (f.m() != g.m() || f.k() != g.k()) throw std::invalid_argument("fischer_inner: (m,k) mismatch");
  ExactScalar acc;
  for (const auto& [e, c] : f.terms()) {
    auto it = g.terms().find(e);
    if (it == g.terms().end()) continue;
    // alpha! as an exact integer.
    mpz_class fac(1);
    for (int v : e.flat_entries())
      if (v > 1) fac *= factorial(static_cast<unsigned long>(v));
    acc += (c.bar() * it->second).scalar_part() * ExactScalar(Rational(fac));
  }
  return acc;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(parts, 0);
  // Lexicographic enumeration of all nonnegative integer vectors summing to
  // `total`.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<MultiExponent> exponents_of_multidegree(int m, int k, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != k) throw std::invalid_argument("multidegree size must be k");
  // Per-column compositions combined left-to-right give flat lexicographic
  // order on the column-major encoding.
  std::vector<std::vector<std::vector<int>>> cols;
  cols.reserve(k);
  for (int j = 0; j < k; ++j) cols.push_back(compositions(a[j], m));
  std::vector<MultiExponent> out;
  MultiExponent cur(m, k);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == k) {
      out.push_back(cur);
      return;
    }
    for (const auto& col : cols[j]) {
      for (int i = 1; i <= m; ++i) cur.set(i, j + 1, col[i - 1]);
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<MultiExponent> exponents_of_total_degree(int m, int k, int degree) {
  std::vector<MultiExponent> out;
  for (const auto& a : compositions(degree, k)) {
    auto block = exponents_of_multidegree(m, k, a);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace fischer
