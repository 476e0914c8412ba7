#include "fischer/spaces.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace fischer;
using fischer::test::Rng;

namespace {

bool annihilated_by(const ClPoly& p, const std::vector<GeneratorTag>& ops) {
  for (const auto& g : ops)
    if (!apply(g, p).is_zero()) return false;
  return true;
}

std::vector<GeneratorTag> diracs(int k) {
  std::vector<GeneratorTag> v;
  for (int j = 1; j <= k; ++j) v.push_back(GeneratorTag::dirac(j));
  return v;
}

std::vector<GeneratorTag> laplacians(int k) {
  std::vector<GeneratorTag> v;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) v.push_back(GeneratorTag::lapl(i, j));
  return v;
}

}  // namespace

TEST_CASE("coordinate chart round trip") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  CoordinateChart chart(m, k, GradedSlice::total(2), &frame);
  CHECK(chart.dim() == 36 * 4);
  Rng rng(71);
  for (int t = 0; t < 10; ++t) {
    ClPoly p = fischer::test::random_spinor_poly(m, k, 2, frame, rng);
    CHECK(chart.polynomial(chart.coordinates(p)) == p);
  }
  // Basis elements map to unit coordinate vectors.
  ExactVector c = chart.coordinates(chart.basis_element(17));
  for (long i = 0; i < chart.dim(); ++i)
    CHECK(c[static_cast<std::size_t>(i)] == ExactScalar(i == 17 ? 1 : 0));

  CHECK_THROWS_AS(chart.coordinates(ClPoly::variable(m, k, 1, 1)), std::invalid_argument);

  CoordinateChart scalar_chart(m, k, GradedSlice::multi({1, 0}), nullptr);
  CHECK(scalar_chart.dim() == 4);
  CHECK_THROWS_AS(scalar_chart.coordinates(ClPoly::variable(m, k, 1, 1).clifford_left_mul(
                      CliffordElement::basis_vector(m, 1))),
                  std::invalid_argument);
}

TEST_CASE("monomial basis dimensions") {
  CHECK(monomial_basis(3, 1, GradedSlice::total(2), nullptr).dim() == 6);
  SpinorFrame f4 = SpinorFrame::build(4);
  CHECK(monomial_basis(4, 2, GradedSlice::total(1), &f4).dim() == 32);
  CHECK(monomial_basis(4, 2, GradedSlice::total(0), &f4).dim() == 4);  // 2^n
}

TEST_CASE("harmonic spaces: pinned dimensions") {
  // m = 3, k = 1, degree 2, scalar: the classical 2l+1 spherical harmonics.
  SubspaceBasis h = harmonic_space(3, 1, GradedSlice::total(2), nullptr);
  CHECK(h.dim() == 5);
  CHECK(h.verify_independent());
  for (const auto& p : h.elements) CHECK(annihilated_by(p, laplacians(1)));

  // Degree 0: the full slice.
  CHECK(harmonic_space(4, 1, GradedSlice::total(0), nullptr).dim() == 1);

  // m = 4, k = 2, degree 2, scalar: cross-checked against the module
  // dimension sum 9*3 + 6*1 = 33.
  SubspaceBasis h42 = harmonic_space(4, 2, GradedSlice::total(2), nullptr);
  CHECK(h42.dim() == 33);
  mpz_class formula = 0;
  for (const auto& a : partitions_of(2, 2)) formula += harmonic_module_dim(4, a) * gl_dim(2, a);
  CHECK(mpz_class(h42.dim()) == formula);
}

TEST_CASE("monogenic spaces: pinned dimensions") {
  SpinorFrame f3 = SpinorFrame::build(3);
  // k = 1: classical count 2^n * C(l+m-2, m-2) = 2 * 3.
  CHECK(monogenic_space(3, 1, GradedSlice::total(2), f3).dim() == 6);
  CHECK(monogenic_dim(3, 1, 2, f3) == 6);

  SpinorFrame f4 = SpinorFrame::build(4);
  SubspaceBasis m1 = monogenic_space(4, 2, GradedSlice::total(1), f4);
  CHECK(m1.dim() == 24);  // 32 minus the rank 8 of the stacked Dirac pair
  for (const auto& p : m1.elements) {
    CHECK(annihilated_by(p, diracs(2)));
    CHECK(p.is_spinor_valued(f4));
  }

  // Degree 0: all of the spinor space.
  CHECK(monogenic_space(4, 2, GradedSlice::total(0), f4).dim() == 4);

  // Multidegree slice selector.
  CHECK(monogenic_space(4, 2, GradedSlice::multi({1, 0}), f4).dim() == 12);
}

TEST_CASE("monogenic dimensions match the module dimension formula") {
  for (auto [m, k, lmax] : std::vector<std::tuple<int, int, int>>{{3, 1, 4}, {4, 2, 3}, {5, 2, 2}}) {
    SpinorFrame frame = SpinorFrame::build(m);
    for (int l = 0; l <= lmax; ++l) {
      mpz_class formula = 0;
      for (const auto& a : partitions_of(l, k)) formula += spinor_module_dim(m, a) * gl_dim(k, a);
      CHECK(monogenic_dim(m, k, l, frame) == formula);
    }
  }
}

TEST_CASE("simplicial monogenics: dimensions equal the Weyl-formula values") {
  SpinorFrame f5 = SpinorFrame::build(5);
  // a = 0: the constants.
  CHECK(simplicial_monogenics(5, 2, {0, 0}, f5).dim() == 4);
  // m = 5, a = (1,0): dim 16.
  SubspaceBasis ms = simplicial_monogenics(5, 2, {1, 0}, f5);
  CHECK(ms.dim() == 16);
  CHECK(mpz_class(ms.dim()) == spinor_module_dim(5, {1, 0}));
  // The elements are monogenic and killed by t_-.
  for (const auto& p : ms.elements) {
    CHECK(annihilated_by(p, diracs(2)));
    CHECK(apply(GeneratorTag::h(1, 2), p).is_zero());
  }

  // m = 4 (even): both half-spinor components counted.
  SpinorFrame f4 = SpinorFrame::build(4);
  CHECK(mpz_class(simplicial_monogenics(4, 2, {1, 1}, f4).dim()) == spinor_module_dim(4, {1, 1}));
  CHECK(mpz_class(simplicial_monogenics(4, 2, {1, 0}, f4).dim()) == spinor_module_dim(4, {1, 0}));

  CHECK_THROWS_AS(simplicial_monogenics(5, 2, {0, 1}, f5), std::invalid_argument);
}

TEST_CASE("simplicial harmonics: dimensions equal the Weyl-formula values") {
  CHECK(simplicial_harmonics(4, 1, {0}).dim() == 1);
  CHECK(simplicial_harmonics(4, 1, {2}).dim() == 9);
  CHECK(simplicial_harmonics(5, 2, {1, 1}).dim() == 10);
  // Mirror pair in even dimension with full-rank multidegree.
  CHECK(mpz_class(simplicial_harmonics(4, 2, {1, 1}).dim()) == harmonic_module_dim(4, {1, 1}));
  CHECK(simplicial_harmonics(4, 2, {1, 1}).dim() == 6);
}

TEST_CASE("harmonic projection: fixed points, annihilation, orthogonality") {
  const int m = 3, k = 1;
  SpinorFrame frame = SpinorFrame::build(m);
  Rng rng(83);

  // Harmonic inputs are fixed.
  SubspaceBasis h2 = harmonic_space(m, k, GradedSlice::total(2), &frame);
  for (const auto& p : h2.elements) CHECK(harmonic_projection(p, &frame) == p);

  // P = r^2 s projects to zero, and P is recovered entirely from the
  // complement.
  ClPoly rs = ClPoly::constant(m, k, frame.basis()[0]).mul_by_rsq(1, 1);
  CHECK(harmonic_projection(rs, &frame).is_zero());

  // pi(ux M) is a nonzero harmonic orthogonal to r^2 P_0.
  SubspaceBasis m1 = monogenic_space(m, k, GradedSlice::total(1), frame);
  for (const auto& v : m1.elements) {
    ClPoly p = v.mul_by_ux(1);
    ClPoly pi = harmonic_projection(p, &frame);
    CHECK_FALSE(pi.is_zero());
    CHECK(annihilated_by(pi, laplacians(k)));
    for (const auto& s : frame.basis())
      CHECK(fischer_inner(pi, ClPoly::constant(m, k, s).mul_by_rsq(1, 1)).is_zero());
  }

  // Idempotence and exact orthogonality to the complement on random input.
  GradedProjector proj(GradedProjector::Mode::Harmonic, 4, 2, 2, nullptr);
  for (int t = 0; t < 5; ++t) {
    ClPoly p = fischer::test::random_scalar_poly(4, 2, 2, rng);
    ClPoly pi = proj.project(p);
    CHECK(proj.project(pi) == pi);
    for (int i = 1; i <= 2; ++i)
      for (int j = i; j <= 2; ++j)
        for (int t2 = 0; t2 < 3; ++t2) {
          ClPoly q = fischer::test::random_scalar_poly(4, 2, 0, rng);
          CHECK(fischer_inner(pi, q.mul_by_rsq(i, j)).is_zero());
        }
  }

  CHECK_THROWS_AS(harmonic_projection(ClPoly::constant(3, 1, frame.basis()[0]) +
                                          ClPoly::variable(3, 1, 1, 1),
                                      &frame),
                  std::invalid_argument);
}

TEST_CASE("monogenic projection: fixed points, annihilation, orthogonality") {
  const int m = 3, k = 1;
  SpinorFrame frame = SpinorFrame::build(m);
  Rng rng(89);

  SubspaceBasis m2 = monogenic_space(m, k, GradedSlice::total(2), frame);
  for (const auto& p : m2.elements) CHECK(monogenic_projection(p, frame) == p);

  // ux * s lies entirely in the complement.
  ClPoly uxs = ClPoly::constant(m, k, frame.basis()[1]).mul_by_ux(1);
  CHECK(monogenic_projection(uxs, frame).is_zero());

  // Random P splits exactly; verify idempotence, annihilation, and
  // orthogonality of the monogenic part to the complement.
  GradedProjector proj(GradedProjector::Mode::Monogenic, m, k, 2, &frame);
  for (int t = 0; t < 8; ++t) {
    ClPoly p = fischer::test::random_spinor_poly(m, k, 2, frame, rng);
    ClPoly mp = proj.project(p);
    CHECK(proj.project(mp) == mp);
    CHECK(annihilated_by(mp, diracs(k)));
    for (int t2 = 0; t2 < 4; ++t2) {
      ClPoly q = fischer::test::random_spinor_poly(m, k, 1, frame, rng);
      CHECK(fischer_inner(mp, q.mul_by_ux(1)).is_zero());
    }
  }
}

TEST_CASE("generate_M_component: k = 1 reduces to the simplicial seed") {
  SpinorFrame f3 = SpinorFrame::build(3);
  SubspaceBasis comp = generate_M_component(3, 1, {2}, f3);
  CHECK(comp.dim() == simplicial_monogenics(3, 1, {2}, f3).dim());
}

TEST_CASE("generate_M_component: dimension matches sdim * gl_dim and fills M_l") {
  SpinorFrame f5 = SpinorFrame::build(5);
  SubspaceBasis comp = generate_M_component(5, 2, {1, 0}, f5);
  CHECK(mpz_class(comp.dim()) == spinor_module_dim(5, {1, 0}) * gl_dim(2, Partition{1, 0}));
  CHECK(comp.dim() == 32);
  CHECK(mpz_class(comp.dim()) == monogenic_dim(5, 2, 1, f5));
  for (const auto& p : comp.elements) CHECK(annihilated_by(p, diracs(2)));

  // Degree-l check: the components over all partitions of l fill M_l with
  // no overlap.
  SpinorFrame f4 = SpinorFrame::build(4);
  std::vector<SubspaceBasis> parts;
  for (const auto& a : partitions_of(2, 2)) parts.push_back(generate_M_component(4, 2, a, f4));
  long total = 0;
  for (const auto& p : parts) total += p.dim();
  mpz_class dimM = monogenic_dim(4, 2, 2, f4);
  CHECK(mpz_class(total) == dimM);
  DirectSumReport rep =
      is_direct_sum(parts, monomial_basis(4, 2, GradedSlice::total(2), &f4).dim());
  CHECK(rep.direct);
  CHECK(mpz_class(rep.rank) == dimM);
}

TEST_CASE("span identity: M_l = M^S_l + sum h_ji M_l") {
  const int m = 4, k = 2, l = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  SubspaceBasis Ml = monogenic_space(m, k, GradedSlice::total(l), frame);

  std::vector<ClPoly> span_vs;
  for (const auto& a : partitions_of(l, k)) {
    SubspaceBasis ms = simplicial_monogenics(m, k, a, frame);
    for (auto& v : ms.elements) span_vs.push_back(v);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (const auto& v : Ml.elements) {
        ClPoly w = apply(GeneratorTag::h(j, i), v);
        if (!w.is_zero()) span_vs.push_back(w);
      }
  SubspaceBasis span_basis = make_subspace(Ml.chart, std::move(span_vs));
  CHECK(rank(span_basis.coords) == Ml.dim());
}

TEST_CASE("orthogonal complements: pinned examples") {
  SubspaceBasis ambient = monomial_basis(2, 1, GradedSlice::total(2), nullptr);

  // sub = ambient: zero complement.
  CHECK(orthogonal_complement(ambient, ambient).dim() == 0);

  // sub = 0: the whole space.
  SubspaceBasis zero{ambient.chart, {}, ExactMatrix(0, ambient.chart.dim())};
  CHECK(orthogonal_complement(ambient, zero).dim() == 3);

  // sub = span{r^2}: complement of dimension dim P_2 - 1 = 2.
  ClPoly r2 = ClPoly::constant(2, 1, CliffordElement::scalar(2, ExactScalar(1))).mul_by_rsq(1, 1);
  SubspaceBasis sub = make_subspace(ambient.chart, {r2});
  SubspaceBasis comp = orthogonal_complement(ambient, sub);
  CHECK(comp.dim() == 2);
  for (const auto& v : comp.elements) CHECK(fischer_inner(v, r2).is_zero());

  // Dimensions add up.
  CHECK(sub.dim() + comp.dim() == ambient.dim());

  // Membership failure.
  SubspaceBasis small = make_subspace(ambient.chart, {ambient.elements[0]});
  SubspaceBasis not_inside = make_subspace(small.chart, {ambient.elements[1]});
  CHECK_THROWS_AS(orthogonal_complement(small, not_inside), std::invalid_argument);
}

TEST_CASE("is_direct_sum on subspace bases: pinned example (3,1,2)") {
  const int m = 3, k = 1;
  SpinorFrame frame = SpinorFrame::build(m);
  // The three summands of degree 2: M_2, ux M_1, r^2 M_0, dims 6 + 4 + 2.
  SubspaceBasis M2 = monogenic_space(m, k, GradedSlice::total(2), frame);
  CoordinateChart chart = M2.chart;

  std::vector<ClPoly> ux_m1, r2_m0;
  for (const auto& v : monogenic_space(m, k, GradedSlice::total(1), frame).elements)
    ux_m1.push_back(v.mul_by_ux(1));
  for (const auto& v : monogenic_space(m, k, GradedSlice::total(0), frame).elements)
    r2_m0.push_back(v.mul_by_rsq(1, 1));

  std::vector<SubspaceBasis> parts;
  parts.push_back(M2);
  parts.push_back(make_subspace(chart, ux_m1));
  parts.push_back(make_subspace(chart, r2_m0));
  CHECK(parts[0].dim() == 6);
  CHECK(parts[1].dim() == 4);
  CHECK(parts[2].dim() == 2);

  DirectSumReport rep = is_direct_sum(parts, chart.dim());
  CHECK(rep.pass);
  CHECK(rep.rank == 12);
}
