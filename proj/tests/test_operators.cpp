#include "fischer/operators.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace fischer;
using fischer::test::Rng;

TEST_CASE("apply: pinned examples") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);

  // D_1 x_{11} = e_1
  ClPoly x11 = ClPoly::variable(m, k, 1, 1);
  CHECK(apply(GeneratorTag::dirac(1), x11) ==
        ClPoly::constant(m, k, CliffordElement::basis_vector(m, 1)));

  // D_1 (ux_1 s) = -m s for a constant spinor s
  const CliffordElement& s = frame.basis()[1];
  ClPoly uxs = ClPoly::constant(m, k, s).mul_by_ux(1);
  CHECK(apply(GeneratorTag::dirac(1), uxs) == ClPoly::constant(m, k, s.scaled(ExactScalar(-m))));

  // E_{11} x_{11}^2 = 2 x_{11}^2
  ClPoly x11sq = x11.mul_by_variable(1, 1);
  CHECK(apply(GeneratorTag::euler(1, 1), x11sq) == x11sq.scaled(ExactScalar(2)));
}

TEST_CASE("apply rejects bad indices") {
  ClPoly p(3, 2);
  CHECK_THROWS_AS(apply(GeneratorTag::dirac(3), p), std::invalid_argument);
  CHECK_THROWS_AS(apply(GeneratorTag::euler(1, 5), p), std::invalid_argument);
}

TEST_CASE("degree shifts of the generator families") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  Rng rng(5);
  ClPoly p = fischer::test::random_spinor_poly(m, k, 2, frame, rng);
  CHECK(apply(GeneratorTag::dirac(1), p).total_degree() == 1);
  CHECK(apply(GeneratorTag::vecmul(1), p).total_degree() == 3);
  CHECK(apply(GeneratorTag::rsq(1, 2), p).total_degree() == 4);
  CHECK(apply(GeneratorTag::lapl(1, 1), p).total_degree() <= 0);
  CHECK(apply(GeneratorTag::euler(1, 2), p).graded_component(GradedSlice::total(2)) ==
        apply(GeneratorTag::euler(1, 2), p));
}

TEST_CASE("generators move multidegree slices as expected, exhaustively on monomials") {
  const int m = 3, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  for (const auto& a : compositions(2, k)) {
    for (const auto& e : exponents_of_multidegree(m, k, a)) {
      ClPoly P = ClPoly::monomial(m, k, e, frame.basis()[0]);
      for (int j = 1; j <= k; ++j) {
        ClPoly dP = apply(GeneratorTag::dirac(j), P);
        if (!dP.is_zero()) {
          std::vector<int> b = a;
          b[j - 1] -= 1;
          CHECK(dP.multidegree() == b);
        }
      }
      for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
          ClPoly eP = apply(GeneratorTag::euler(i, j), P);
          if (!eP.is_zero()) {
            std::vector<int> b = a;
            b[j - 1] -= 1;
            b[i - 1] += 1;
            CHECK(eP.multidegree() == b);
          }
        }
      }
    }
  }
}

TEST_CASE("generators preserve spinor-valued polynomials") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  Rng rng(9);
  ClPoly p = fischer::test::random_spinor_poly(m, k, 2, frame, rng);
  for (GeneratorTag g : {GeneratorTag::dirac(1), GeneratorTag::vecmul(2), GeneratorTag::rsq(1, 2),
                         GeneratorTag::lapl(1, 1), GeneratorTag::euler(2, 1), GeneratorTag::h(1, 1)}) {
    CHECK(apply(g, p).is_spinor_valued(frame));
  }
}

TEST_CASE("operator expressions compose linearly") {
  const int m = 3, k = 1;
  SpinorFrame frame = SpinorFrame::build(m);
  Rng rng(13);
  ClPoly p = fischer::test::random_spinor_poly(m, k, 2, frame, rng);

  OperatorExpr D = OperatorExpr::generator(GeneratorTag::dirac(1));
  OperatorExpr U = OperatorExpr::generator(GeneratorTag::vecmul(1));
  CHECK(apply(D * U, p) == apply(GeneratorTag::dirac(1), apply(GeneratorTag::vecmul(1), p)));
  CHECK(apply(D + U, p) == apply(GeneratorTag::dirac(1), p) + apply(GeneratorTag::vecmul(1), p));
  CHECK(apply(OperatorExpr::identity(), p) == p);
  CHECK(apply(OperatorExpr::zero(), p).is_zero());
}

TEST_CASE("check_relation determines the vector anticommutator constant") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  auto U1 = OperatorExpr::generator(GeneratorTag::vecmul(1));
  auto U2 = OperatorExpr::generator(GeneratorTag::vecmul(2));
  auto R12 = OperatorExpr::generator(GeneratorTag::rsq(1, 2));

  RelationReport r = check_relation(U1, U2, Bracket::Anticommutator, R12, m, k, 3, frame,
                                    "{u_1, u_2} = c*r2_12");
  CHECK(r.pass);
  REQUIRE(r.constant_found.has_value());
  // The engine, not the text, fixes the sign: with e_i^2 = -1 the
  // anticommutator is -2 r^2_{12}.
  CHECK(*r.constant_found == ExactScalar(-2));
}

TEST_CASE("check_relation determines the Dirac anticommutator constant") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  auto D1 = OperatorExpr::generator(GeneratorTag::dirac(1));
  auto D2 = OperatorExpr::generator(GeneratorTag::dirac(2));
  auto L12 = OperatorExpr::generator(GeneratorTag::lapl(1, 2));

  RelationReport r = check_relation(D1, D2, Bracket::Anticommutator, L12, m, k, 3, frame,
                                    "{D_1, D_2} = c*Lapl_12");
  CHECK(r.pass);
  REQUIRE(r.constant_found.has_value());
  CHECK(*r.constant_found == ExactScalar(-2));
}

TEST_CASE("check_relation catches a wrong relation with a counterexample") {
  const int m = 3, k = 1;
  SpinorFrame frame = SpinorFrame::build(m);
  auto U = OperatorExpr::generator(GeneratorTag::vecmul(1));
  auto D = OperatorExpr::generator(GeneratorTag::dirac(1));
  // [u_1, D_1] is not a multiple of the identity (the anticommutator is).
  RelationReport r = check_relation(U, D, Bracket::Commutator, OperatorExpr::identity(), m, k, 3,
                                    frame, "[u_1, D_1] = c*id");
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.has_value());
}

TEST_CASE("gl(k) commutators pass for k <= 3") {
  const int m = 4;
  SpinorFrame frame = SpinorFrame::build(m);
  for (int k = 1; k <= 3; ++k) {
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int p = 1; p <= k; ++p)
          for (int q = 1; q <= k; ++q) {
            OperatorExpr expected;
            if (j == p) expected += OperatorExpr::generator(GeneratorTag::euler(i, q));
            if (q == i) expected += OperatorExpr::generator(GeneratorTag::euler(p, j), ExactScalar(-1));
            RelationReport r = check_relation(
                OperatorExpr::generator(GeneratorTag::euler(i, j)),
                OperatorExpr::generator(GeneratorTag::euler(p, q)), Bracket::Commutator, expected,
                m, k, 2, frame, "gl(k)");
            CHECK(r.pass);
            if (r.constant_found) CHECK(*r.constant_found == ExactScalar(1));
          }
  }
}

TEST_CASE("Leibniz consistency: [Lapl_ij, r2_pq] acts as a degree-preserving operator") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  auto L11 = OperatorExpr::generator(GeneratorTag::lapl(1, 1));
  auto R12 = OperatorExpr::generator(GeneratorTag::rsq(1, 2));
  OperatorExpr expected = OperatorExpr::generator(GeneratorTag::h(2, 1), ExactScalar(2));
  RelationReport r = check_relation(L11, R12, Bracket::Commutator, expected, m, k, 3, frame,
                                    "[Lapl_11, r2_12] = c*2h_21");
  CHECK(r.pass);
  REQUIRE(r.constant_found.has_value());
  CHECK(*r.constant_found == ExactScalar(1));
}

TEST_CASE("triangular split: family sizes") {
  TriangularSplit t1 = triangular_split(1);
  CHECK(t1.p_plus.size() == 1);
  CHECK(t1.p_minus.size() == 1);
  CHECK(t1.t_plus.empty());
  CHECK(t1.t_minus.empty());
  CHECK(t1.t_zero.size() == 1);
  CHECK(t1.f_plus.size() == 1);

  TriangularSplit t2 = triangular_split(2);
  CHECK(t2.p_plus.size() == 3);
  CHECK(t2.t_plus.size() == 1);
  CHECK(t2.f_plus.size() == 2);

  TriangularSplit t3 = triangular_split(3);
  CHECK(t3.p_plus.size() == 6);
  CHECK(t3.f_minus.size() == 3);
}

TEST_CASE("relation suite passes on a small configuration") {
  const int m = 4, k = 2;
  SpinorFrame frame = SpinorFrame::build(m);
  auto reports = relation_suite(m, k, 2, frame);
  CHECK(reports.size() == 14);
  for (const auto& r : reports) {
    INFO(r.relation);
    CHECK(r.pass);
  }
  // Discovered structure constants of the odd brackets.
  for (const auto& r : reports) {
    if (r.relation == "{u_i, u_j} = c*r2_ij" || r.relation == "{D_i, D_j} = c*Lapl_ij" ||
        r.relation == "{u_i, D_j} = c*h_ij") {
      REQUIRE(r.constant_found.has_value());
      CHECK(*r.constant_found == ExactScalar(-2));
    }
  }
}
