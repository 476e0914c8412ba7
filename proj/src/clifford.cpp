#include "fischer/clifford.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fischer {

BladeIndex BladeIndex::from_indices(const std::vector<int>& idx) {
  std::uint32_t bits = 0;
  for (int i : idx) {
    if (i < 1 || i > 31) throw std::invalid_argument("blade: generator index out of range");
    std::uint32_t bit = 1u << (i - 1);
    if (bits & bit) throw std::invalid_argument("blade: repeated generator index");
    bits |= bit;
  }
  return BladeIndex(bits);
}

std::vector<int> BladeIndex::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string BladeIndex::str() const {
  if (bits_ == 0) return "1";
  std::string s;
  for (int i : indices()) s += "e" + std::to_string(i);
  return s;
}

BladeProduct blade_mul(BladeIndex a, BladeIndex b, int m) {
  std::uint32_t limit = (m >= 32) ? ~0u : ((1u << m) - 1u);
  if ((a.bits() & ~limit) || (b.bits() & ~limit))
    throw std::invalid_argument("blade_mul: generator index exceeds dimension");
  // Transpositions that sort the concatenated word: for each generator of a,
  // count the generators of b strictly below it.
  std::uint32_t x = a.bits() >> 1;
  int swaps = 0;
  while (x) {
    swaps += std::popcount(x & b.bits());
    x >>= 1;
  }
  // Each common generator contracts with e_i^2 = -1.
  int contractions = std::popcount(a.bits() & b.bits());
  int sign = ((swaps + contractions) % 2 == 0) ? 1 : -1;
  return {sign, BladeIndex(a.bits() ^ b.bits())};
}

CliffordElement::CliffordElement(int m) : m_(m) {
  if (m < 1 || m > 31) throw std::invalid_argument("CliffordElement: dimension out of range");
}

CliffordElement CliffordElement::scalar(int m, ExactScalar c) {
  CliffordElement x(m);
  x.add_term(BladeIndex::scalar(), c);
  return x;
}

CliffordElement CliffordElement::basis_vector(int m, int i) {
  if (i < 1 || i > m) throw std::invalid_argument("basis_vector: index out of range");
  CliffordElement x(m);
  x.add_term(BladeIndex::generator(i), ExactScalar(1));
  return x;
}

CliffordElement CliffordElement::blade(int m, BladeIndex b, ExactScalar c) {
  std::uint32_t limit = (1u << m) - 1u;
  if (b.bits() & ~limit) throw std::invalid_argument("blade: index exceeds dimension");
  CliffordElement x(m);
  x.add_term(b, c);
  return x;
}

ExactScalar CliffordElement::coefficient(BladeIndex b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? ExactScalar() : it->second;
}

void CliffordElement::add_term(BladeIndex b, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("CliffordElement: dimension mismatch");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  if (m_ != o.m_) throw std::invalid_argument("CliffordElement: dimension mismatch");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement out(m_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("CliffordElement: dimension mismatch");
  CliffordElement out(a.m_);
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      BladeProduct p = blade_mul(ba, bb, a.m_);
      ExactScalar c = ca * cb;
      if (p.sign < 0) c = -c;
      out.add_term(p.blade, c);
    }
  }
  return out;
}

CliffordElement CliffordElement::scaled(const ExactScalar& c) const {
  CliffordElement out(m_);
  if (c.is_zero()) return out;
  for (const auto& [b, v] : terms_) out.terms_.emplace(b, v * c);
  return out;
}

CliffordElement CliffordElement::bar() const {
  CliffordElement out(m_);
  for (const auto& [b, c] : terms_) {
    int r = b.grade();
    ExactScalar v = c.conj();
    if ((r * (r + 1) / 2) % 2 != 0) v = -v;
    out.terms_.emplace(b, v);
  }
  return out;
}

ExactScalar CliffordElement::scalar_part() const { return coefficient(BladeIndex::scalar()); }

std::string CliffordElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (b.grade() > 0) out += "*" + b.str();
  }
  return out;
}

namespace {

// Reduced row echelon form over ExactScalar, first-nonzero-row pivoting.
// Returns pivot column indices. Local helper for the frame construction;
// the general-purpose elimination lives in exactla.
std::vector<int> rref_inplace(std::vector<std::vector<ExactScalar>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    ExactScalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      ExactScalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(pivots.size(), std::vector<ExactScalar>(cols));
  return pivots;
}

std::vector<ExactScalar> blade_coords(const CliffordElement& x) {
  std::vector<ExactScalar> v(std::size_t{1} << x.dimension());
  for (const auto& [b, c] : x.terms()) v[b.bits()] = c;
  return v;
}

CliffordElement from_blade_coords(int m, const std::vector<ExactScalar>& v) {
  CliffordElement out(m);
  for (std::size_t b = 0; b < v.size(); ++b)
    if (!v[b].is_zero()) out += CliffordElement::blade(m, BladeIndex(static_cast<std::uint32_t>(b)), v[b]);
  return out;
}

}  // namespace

SpinorFrame::SpinorFrame(int m, CliffordElement idem, std::vector<CliffordElement> basis,
                         std::vector<BladeIndex> pivots)
    : m_(m), n_(m / 2), idempotent_(std::move(idem)), basis_(std::move(basis)),
      pivot_blades_(std::move(pivots)) {}

SpinorFrame SpinorFrame::build(int m) {
  if (m <= 2) throw std::invalid_argument("SpinorFrame: dimension must exceed 2");
  if (m > 12) throw std::invalid_argument("SpinorFrame: dimension too large for dense ideal");
  int n = m / 2;
  CliffordElement idem = CliffordElement::scalar(m, ExactScalar(1));
  Rational half = make_rational(1, 2);
  for (int j = 1; j <= n; ++j) {
    // (1 + i e_{2j-1} e_{2j}) / 2
    CliffordElement f = CliffordElement::scalar(m, ExactScalar(half));
    BladeIndex b = BladeIndex::from_indices({2 * j - 1, 2 * j});
    f += CliffordElement::blade(m, b, ExactScalar(Rational(0), half));
    idem = idem * f;
  }
  if (m % 2 == 1) {
    // Central projector (1 +- c w)/2 with w the pseudoscalar and c chosen so
    // that (c w)^2 = 1; the sign is picked to keep the product nonzero.
    std::uint32_t all = (1u << m) - 1u;
    CliffordElement w = CliffordElement::blade(m, BladeIndex(all), ExactScalar(1));
    CliffordElement w2 = w * w;
    ExactScalar c(1);
    if (w2.scalar_part() == ExactScalar(-1)) c = ExactScalar::i();
    CliffordElement plus = CliffordElement::scalar(m, ExactScalar(half)) + (w.scaled(c)).scaled(ExactScalar(half));
    CliffordElement cand = idem * plus;
    if (cand.is_zero()) {
      CliffordElement minus =
          CliffordElement::scalar(m, ExactScalar(half)) - (w.scaled(c)).scaled(ExactScalar(half));
      cand = idem * minus;
    }
    idem = cand;
  }
  if (idem.is_zero() || !((idem * idem) == idem))
    throw std::runtime_error("SpinorFrame: idempotent construction failed");

  // Span of {b * I : b blade} in blade coordinates, reduced to echelon form.
  std::vector<std::vector<ExactScalar>> rows;
  rows.reserve(std::size_t{1} << m);
  for (std::uint32_t b = 0; b < (1u << m); ++b) {
    CliffordElement x = CliffordElement::blade(m, BladeIndex(b), ExactScalar(1)) * idem;
    rows.push_back(blade_coords(x));
  }
  std::vector<int> pivots = rref_inplace(rows);
  if (static_cast<int>(pivots.size()) != (1 << n))
    throw std::runtime_error("SpinorFrame: ideal dimension is not 2^n");

  std::vector<CliffordElement> basis;
  std::vector<BladeIndex> pivot_blades;
  basis.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    basis.push_back(from_blade_coords(m, rows[i]));
    pivot_blades.push_back(BladeIndex(static_cast<std::uint32_t>(pivots[i])));
  }

  SpinorFrame frame(m, idem, std::move(basis), std::move(pivot_blades));
  for (int i = 1; i <= m; ++i) {
    CliffordElement e = CliffordElement::basis_vector(m, i);
    for (const auto& s : frame.basis_)
      if (!frame.contains(e * s)) throw std::runtime_error("SpinorFrame: ideal not closed under e_i");
  }
  return frame;
}

bool SpinorFrame::contains(const CliffordElement& x) const {
  if (x.dimension() != m_) return false;
  return (x * idempotent_) == x;
}

std::vector<ExactScalar> SpinorFrame::coordinates(const CliffordElement& x) const {
  if (x.dimension() != m_) throw std::invalid_argument("SpinorFrame: dimension mismatch");
  // Reduced-echelon basis: the coordinate along basis_[i] is the coefficient
  // of the i-th pivot blade. Validate by reassembly.
  std::vector<ExactScalar> c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = x.coefficient(pivot_blades_[i]);
  CliffordElement check(m_);
  for (std::size_t i = 0; i < basis_.size(); ++i) check += basis_[i].scaled(c[i]);
  if (!(check == x)) throw std::invalid_argument("SpinorFrame: element not in the spinor ideal");
  return c;
}

CliffordElement SpinorFrame::from_coordinates(const std::vector<ExactScalar>& c) const {
  if (c.size() != basis_.size()) throw std::invalid_argument("SpinorFrame: coordinate size mismatch");
  CliffordElement out(m_);
  for (std::size_t i = 0; i < basis_.size(); ++i) out += basis_[i].scaled(c[i]);
  return out;
}

}  // namespace fischer
