#include "fischer/clifford.hpp"

#include <utility>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace fischer;
using fischer::test::Rng;

namespace {

// Independent sign oracle: multiply generator words by inserting the right
// word's generators one at a time into a sorted word, counting transpositions
// and applying e_g e_g = -1 on contact.
std::pair<int, std::vector<int>> word_mul(std::vector<int> a, const std::vector<int>& b) {
  int sign = 1;
  for (int g : b) {
    std::size_t pos = a.size();
    while (pos > 0 && a[pos - 1] > g) --pos;
    if ((a.size() - pos) % 2 != 0) sign = -sign;
    if (pos > 0 && a[pos - 1] == g) {
      sign = -sign;
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(pos) - 1);
    } else {
      a.insert(a.begin() + static_cast<std::ptrdiff_t>(pos), g);
    }
  }
  return {sign, a};
}

}  // namespace

TEST_CASE("blade product: pinned examples") {
  auto e1 = BladeIndex::generator(1);
  auto e2 = BladeIndex::generator(2);
  auto e12 = BladeIndex::from_indices({1, 2});

  auto r = blade_mul(e1, e1, 4);
  CHECK(r.sign == -1);
  CHECK(r.blade == BladeIndex::scalar());

  r = blade_mul(e1, e2, 4);
  CHECK(r.sign == 1);
  CHECK(r.blade == e12);

  r = blade_mul(e12, e2, 4);
  CHECK(r.sign == -1);
  CHECK(r.blade == e1);
}

TEST_CASE("blade product agrees with the word oracle, exhaustively for m <= 6") {
  for (int m = 1; m <= 6; ++m) {
    for (std::uint32_t a = 0; a < (1u << m); ++a) {
      for (std::uint32_t b = 0; b < (1u << m); ++b) {
        auto fast = blade_mul(BladeIndex(a), BladeIndex(b), m);
        auto [sign, word] = word_mul(BladeIndex(a).indices(), BladeIndex(b).indices());
        CHECK(fast.sign == sign);
        CHECK(fast.blade == BladeIndex::from_indices(word));
      }
    }
  }
}

TEST_CASE("blade product rejects out-of-range generators") {
  CHECK_THROWS_AS(blade_mul(BladeIndex::generator(5), BladeIndex::generator(1), 4),
                  std::invalid_argument);
}

TEST_CASE("defining relations e_i e_j + e_j e_i = -2 delta_ij, m <= 6") {
  for (int m = 3; m <= 6; ++m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        auto ei = CliffordElement::basis_vector(m, i);
        auto ej = CliffordElement::basis_vector(m, j);
        CliffordElement anti = ei * ej + ej * ei;
        CliffordElement expected =
            CliffordElement::scalar(m, ExactScalar(i == j ? -2 : 0));
        CHECK(anti == expected);
      }
    }
  }
}

TEST_CASE("multiplication: pinned examples") {
  const int m = 4;
  auto e1 = CliffordElement::basis_vector(m, 1);
  auto e2 = CliffordElement::basis_vector(m, 2);

  CHECK((e1 + e2) * (e1 + e2) == CliffordElement::scalar(m, ExactScalar(-2)));

  Rng rng(7);
  CliffordElement x = fischer::test::random_clifford(m, rng);
  CHECK(CliffordElement::scalar(m, ExactScalar(1)) * x == x);

  // ((1 + i e_1 e_2)/2)^2 = (1 + i e_1 e_2)/2, by direct expansion of
  // (1 + 2 i e12 + i^2 (e12)^2)/4 with (e12)^2 = -1.
  Rational half = make_rational(1, 2);
  CliffordElement idem = CliffordElement::scalar(m, ExactScalar(half)) +
                         CliffordElement::blade(m, BladeIndex::from_indices({1, 2}),
                                                ExactScalar(Rational(0), half));
  CHECK(idem * idem == idem);
}

TEST_CASE("multiplication rejects mixed dimensions") {
  auto a = CliffordElement::basis_vector(3, 1);
  auto b = CliffordElement::basis_vector(4, 1);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("antiinvolution: pinned examples") {
  const int m = 4;
  auto e1 = CliffordElement::basis_vector(m, 1);
  CHECK(e1.bar() == -e1);

  auto e12 = CliffordElement::blade(m, BladeIndex::from_indices({1, 2}), ExactScalar(1));
  CHECK(e12.bar() == -e12);

  auto i1 = CliffordElement::scalar(m, ExactScalar::i());
  CHECK(i1.bar() == -i1);
}

TEST_CASE("antiinvolution is an involutive antihomomorphism") {
  Rng rng(11);
  for (int m = 3; m <= 6; ++m) {
    for (int t = 0; t < 20; ++t) {
      CliffordElement x = fischer::test::random_clifford(m, rng);
      CliffordElement y = fischer::test::random_clifford(m, rng);
      CHECK(x.bar().bar() == x);
      CHECK((x * y).bar() == y.bar() * x.bar());
    }
  }
}

TEST_CASE("scalar part: pinned examples") {
  const int m = 4;
  auto e1 = CliffordElement::basis_vector(m, 1);
  CHECK(e1.scalar_part() == ExactScalar(0));

  auto x = CliffordElement::scalar(m, ExactScalar(3)) +
           CliffordElement::blade(m, BladeIndex::from_indices({1, 2}), ExactScalar(1));
  CHECK(x.scalar_part() == ExactScalar(3));

  CHECK((e1.bar() * e1).scalar_part() == ExactScalar(1));
}

TEST_CASE("spinor frame: dimension 2^n and idempotency") {
  CHECK(SpinorFrame::build(4).dim() == 4);
  CHECK(SpinorFrame::build(3).dim() == 2);
  CHECK(SpinorFrame::build(5).dim() == 4);
  CHECK(SpinorFrame::build(6).dim() == 8);
  CHECK(SpinorFrame::build(7).dim() == 8);
  for (int m = 3; m <= 7; ++m) {
    SpinorFrame f = SpinorFrame::build(m);
    const CliffordElement& I = f.idempotent();
    CHECK(I * I == I);
    CHECK_FALSE(I.is_zero());
  }
}

TEST_CASE("spinor frame rejects m <= 2") {
  CHECK_THROWS_AS(SpinorFrame::build(2), std::invalid_argument);
  CHECK_THROWS_AS(SpinorFrame::build(1), std::invalid_argument);
}

TEST_CASE("ideal closed under left multiplication by every e_i, coordinates exact") {
  Rng rng(23);
  for (int m = 3; m <= 6; ++m) {
    SpinorFrame f = SpinorFrame::build(m);
    for (int i = 1; i <= m; ++i) {
      auto ei = CliffordElement::basis_vector(m, i);
      for (const auto& s : f.basis()) {
        CliffordElement es = ei * s;
        CHECK(f.contains(es));
        auto c = f.coordinates(es);
        CHECK(f.from_coordinates(c) == es);
      }
    }
    // Random ideal elements round-trip through coordinates.
    for (int t = 0; t < 10; ++t) {
      CliffordElement s = fischer::test::random_spinor(f, rng);
      CHECK(f.from_coordinates(f.coordinates(s)) == s);
    }
  }
}

TEST_CASE("coordinates reject elements outside the ideal") {
  SpinorFrame f = SpinorFrame::build(4);
  auto e1 = CliffordElement::basis_vector(4, 1);
  CHECK_FALSE(f.contains(e1));
  CHECK_THROWS_AS(f.coordinates(e1), std::invalid_argument);
}

TEST_CASE("positivity seed: [bar(s) s]_0 > 0 for nonzero ideal elements, m <= 6") {
  Rng rng(37);
  for (int m = 3; m <= 6; ++m) {
    SpinorFrame f = SpinorFrame::build(m);
    for (int t = 0; t < 25; ++t) {
      CliffordElement s = fischer::test::random_spinor(f, rng);
      ExactScalar q = (s.bar() * s).scalar_part();
      CHECK(q.is_real());
      CHECK(sgn(q.re()) >= 0);
      if (!s.is_zero()) CHECK(sgn(q.re()) > 0);
      if (s.is_zero()) CHECK(q.is_zero());
    }
    CHECK((CliffordElement(m).bar() * CliffordElement(m)).scalar_part().is_zero());
  }
}
