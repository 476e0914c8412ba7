#include "fischer/operators.hpp"

#include <stdexcept>
#include <utility>

namespace fischer {

GeneratorTag GeneratorTag::rsq(int i, int j) {
  if (i > j) std::swap(i, j);
  return {Kind::RSq, i, j};
}

GeneratorTag GeneratorTag::lapl(int i, int j) {
  if (i > j) std::swap(i, j);
  return {Kind::Lapl, i, j};
}

std::string GeneratorTag::str() const {
  switch (kind) {
    case Kind::Dirac: return "D_" + std::to_string(j);
    case Kind::VecMul: return "u_" + std::to_string(j);
    case Kind::RSq: return "r2_" + std::to_string(i) + std::to_string(j);
    case Kind::Lapl: return "L_" + std::to_string(i) + std::to_string(j);
    case Kind::Euler: return "E_" + std::to_string(i) + std::to_string(j);
    case Kind::H: return "h_" + std::to_string(i) + std::to_string(j);
  }
  return "?";
}

namespace {

void check_indices(const GeneratorTag& g, int k) {
  if (g.j < 1 || g.j > k || (g.i != 0 && (g.i < 1 || g.i > k)))
    throw std::invalid_argument("operator index out of range");
}

}  // namespace

ClPoly apply(const GeneratorTag& g, const ClPoly& P) {
  check_indices(g, P.k());
  const int m = P.m();
  ClPoly acc(P.m(), P.k());
  switch (g.kind) {
    case GeneratorTag::Kind::Dirac:
      for (int i = 1; i <= m; ++i)
        acc += P.derivative(i, g.j).clifford_left_mul(CliffordElement::basis_vector(m, i));
      return acc;
    case GeneratorTag::Kind::VecMul:
      return P.mul_by_ux(g.j);
    case GeneratorTag::Kind::RSq:
      return P.mul_by_rsq(g.i, g.j);
    case GeneratorTag::Kind::Lapl:
      for (int l = 1; l <= m; ++l) acc += P.derivative(l, g.i).derivative(l, g.j);
      return acc;
    case GeneratorTag::Kind::Euler:
      for (int l = 1; l <= m; ++l) acc += P.derivative(l, g.j).mul_by_variable(l, g.i);
      return acc;
    case GeneratorTag::Kind::H:
      for (int l = 1; l <= m; ++l) acc += P.derivative(l, g.j).mul_by_variable(l, g.i);
      if (g.i == g.j) acc += P.scaled(ExactScalar(make_rational(m, 2)));
      return acc;
  }
  return acc;
}

OperatorExpr OperatorExpr::identity(ExactScalar c) {
  OperatorExpr e;
  if (!c.is_zero()) e.terms_.push_back({std::move(c), {}});
  return e;
}

OperatorExpr OperatorExpr::generator(GeneratorTag g, ExactScalar c) {
  OperatorExpr e;
  if (!c.is_zero()) e.terms_.push_back({std::move(c), {g}});
  return e;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

OperatorExpr OperatorExpr::scaled(const ExactScalar& c) const {
  OperatorExpr e;
  if (c.is_zero()) return e;
  e.terms_ = terms_;
  for (auto& t : e.terms_) t.coeff *= c;
  return e;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr e;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      OperatorExpr::Term t;
      t.coeff = ta.coeff * tb.coeff;
      t.word = ta.word;
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.str() + ")";
    for (const auto& g : t.word) out += "*" + g.str();
  }
  return out;
}

ClPoly apply(const OperatorExpr& op, const ClPoly& P) {
  ClPoly acc(P.m(), P.k());
  for (const auto& t : op.terms()) {
    ClPoly cur = P;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) cur = apply(*it, cur);
    acc += cur.scaled(t.coeff);
  }
  return acc;
}

OperatorExpr bracket_expr(const OperatorExpr& a, const OperatorExpr& b, Bracket br) {
  OperatorExpr e = a * b;
  ExactScalar s = (br == Bracket::Commutator) ? ExactScalar(-1) : ExactScalar(1);
  e += (b * a).scaled(s);
  return e;
}

RelationReport check_relation(const OperatorExpr& a, const OperatorExpr& b, Bracket br,
                              const OperatorExpr& expected, int m, int k, int max_degree,
                              const SpinorFrame& frame, const std::string& label,
                              const std::optional<ExactScalar>& expect_constant) {
  if (max_degree < 2) throw std::invalid_argument("check_relation: max_degree must be >= 2");
  RelationReport rep;
  rep.relation = label;
  rep.max_degree = max_degree;
  rep.constant_found = expect_constant;
  OperatorExpr lhs = bracket_expr(a, b, br);

  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& e : exponents_of_total_degree(m, k, d)) {
      for (const auto& s : frame.basis()) {
        ClPoly P = ClPoly::monomial(m, k, e, s);
        ClPoly L = apply(lhs, P);
        if (expected.is_zero_expr()) {
          if (!L.is_zero()) {
            rep.pass = false;
            rep.counterexample = e.str() + " (x) " + s.str();
            return rep;
          }
          continue;
        }
        ClPoly E = apply(expected, P);
        if (E.is_zero()) {
          if (!L.is_zero()) {
            rep.pass = false;
            rep.counterexample = e.str() + " (x) " + s.str();
            return rep;
          }
          continue;
        }
        if (!rep.constant_found) {
          // Ratio of the first nonzero coefficient pair determines c.
          const auto& [exp0, coeff0] = *E.terms().begin();
          const auto& [blade0, v0] = *coeff0.terms().begin();
          rep.constant_found = L.coefficient(exp0).coefficient(blade0) / v0;
        }
        if (!(L == E.scaled(*rep.constant_found))) {
          rep.pass = false;
          rep.counterexample = e.str() + " (x) " + s.str();
          return rep;
        }
      }
    }
  }
  rep.pass = true;
  return rep;
}

TriangularSplit triangular_split(int k) {
  if (k < 1) throw std::invalid_argument("triangular_split: k must be positive");
  TriangularSplit t;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      t.p_plus.push_back(GeneratorTag::rsq(i, j));
      t.p_minus.push_back(GeneratorTag::lapl(i, j));
    }
  for (int i = 1; i <= k; ++i) t.t_zero.push_back(GeneratorTag::h(i, i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      t.t_plus.push_back(GeneratorTag::h(j, i));
      t.t_minus.push_back(GeneratorTag::h(i, j));
    }
  for (int j = 1; j <= k; ++j) {
    t.f_plus.push_back(GeneratorTag::vecmul(j));
    t.f_minus.push_back(GeneratorTag::dirac(j));
  }
  return t;
}

namespace {

OperatorExpr gen(GeneratorTag g) { return OperatorExpr::generator(g); }

OperatorExpr delta_term(bool active, GeneratorTag g, long sign = 1) {
  if (!active) return OperatorExpr::zero();
  return OperatorExpr::generator(g, ExactScalar(sign));
}

// Runs one family of index instances under a shared structure constant and
// merges them into a single report.
struct FamilyChecker {
  int m, k, max_degree;
  const SpinorFrame& frame;
  std::vector<RelationReport>& out;

  void run(const std::string& label,
           const std::vector<std::tuple<OperatorExpr, OperatorExpr, OperatorExpr>>& instances,
           Bracket br) {
    RelationReport family;
    family.relation = label;
    family.max_degree = max_degree;
    std::optional<ExactScalar> c;
    for (const auto& [a, b, expected] : instances) {
      RelationReport r = check_relation(a, b, br, expected, m, k, max_degree, frame, label, c);
      if (!r.pass) {
        family.pass = false;
        family.constant_found = r.constant_found;
        family.counterexample = r.counterexample;
        out.push_back(family);
        return;
      }
      if (!c && r.constant_found) c = r.constant_found;
    }
    family.pass = true;
    family.constant_found = c;
    out.push_back(family);
  }
};

}  // namespace

std::vector<RelationReport> relation_suite(int m, int k, int max_degree, const SpinorFrame& frame) {
  using Inst = std::tuple<OperatorExpr, OperatorExpr, OperatorExpr>;
  std::vector<RelationReport> reports;
  FamilyChecker fam{m, k, max_degree, frame, reports};

  auto E = [](int i, int j) { return gen(GeneratorTag::euler(i, j)); };
  auto H = [](int i, int j) { return gen(GeneratorTag::h(i, j)); };
  auto R = [](int i, int j) { return gen(GeneratorTag::rsq(i, j)); };
  auto L = [](int i, int j) { return gen(GeneratorTag::lapl(i, j)); };
  auto U = [](int j) { return gen(GeneratorTag::vecmul(j)); };
  auto D = [](int j) { return gen(GeneratorTag::dirac(j)); };

  {  // gl(k): [E_ij, E_pq] = d_jp E_iq - d_qi E_pj
    std::vector<Inst> v;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int p = 1; p <= k; ++p)
          for (int q = 1; q <= k; ++q) {
            OperatorExpr exp = delta_term(j == p, GeneratorTag::euler(i, q));
            exp += delta_term(q == i, GeneratorTag::euler(p, j), -1);
            v.emplace_back(E(i, j), E(p, q), exp);
          }
    fam.run("[E_ij, E_pq] = c*(d_jp E_iq - d_qi E_pj)", v, Bracket::Commutator);
  }
  {  // [h_ij, r2_pq] = d_jp r2_iq + d_jq r2_ip
    std::vector<Inst> v;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int p = 1; p <= k; ++p)
          for (int q = p; q <= k; ++q) {
            OperatorExpr exp = delta_term(j == p, GeneratorTag::rsq(i, q));
            exp += delta_term(j == q, GeneratorTag::rsq(i, p));
            v.emplace_back(H(i, j), R(p, q), exp);
          }
    fam.run("[h_ij, r2_pq] = c*(d_jp r2_iq + d_jq r2_ip)", v, Bracket::Commutator);
  }
  {  // [h_ij, Lapl_pq] = -(d_ip Lapl_jq + d_iq Lapl_pj)
    std::vector<Inst> v;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int p = 1; p <= k; ++p)
          for (int q = p; q <= k; ++q) {
            OperatorExpr exp = delta_term(i == p, GeneratorTag::lapl(j, q));
            exp += delta_term(i == q, GeneratorTag::lapl(p, j));
            v.emplace_back(H(i, j), L(p, q), exp);
          }
    fam.run("[h_ij, Lapl_pq] = c*(d_ip Lapl_jq + d_iq Lapl_pj)", v, Bracket::Commutator);
  }
  {  // [Lapl_ij, r2_pq] = d_jp h_qi + d_jq h_pi + d_ip h_qj + d_iq h_pj
    std::vector<Inst> v;
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (int p = 1; p <= k; ++p)
          for (int q = p; q <= k; ++q) {
            OperatorExpr exp = delta_term(j == p, GeneratorTag::h(q, i));
            exp += delta_term(j == q, GeneratorTag::h(p, i));
            exp += delta_term(i == p, GeneratorTag::h(q, j));
            exp += delta_term(i == q, GeneratorTag::h(p, j));
            v.emplace_back(L(i, j), R(p, q), exp);
          }
    fam.run("[Lapl_ij, r2_pq] = c*(d_jp h_qi + d_jq h_pi + d_ip h_qj + d_iq h_pj)", v,
            Bracket::Commutator);
  }
  {  // abelian families
    std::vector<Inst> v1, v2;
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (int p = 1; p <= k; ++p)
          for (int q = p; q <= k; ++q) {
            v1.emplace_back(R(i, j), R(p, q), OperatorExpr::zero());
            v2.emplace_back(L(i, j), L(p, q), OperatorExpr::zero());
          }
    fam.run("[r2_ij, r2_pq] = 0", v1, Bracket::Commutator);
    fam.run("[Lapl_ij, Lapl_pq] = 0", v2, Bracket::Commutator);
  }
  {  // odd-odd anticommutators
    std::vector<Inst> v1, v2;
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j) {
        v1.emplace_back(U(i), U(j), R(i, j));
        v2.emplace_back(D(i), D(j), L(i, j));
      }
    fam.run("{u_i, u_j} = c*r2_ij", v1, Bracket::Anticommutator);
    fam.run("{D_i, D_j} = c*Lapl_ij", v2, Bracket::Anticommutator);
  }
  {  // {u_i, D_j} = c*h_ij  (the engine fixes both the constant and the
     //  index order of the Euler part)
    std::vector<Inst> v;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) v.emplace_back(U(i), D(j), H(i, j));
    fam.run("{u_i, D_j} = c*h_ij", v, Bracket::Anticommutator);
  }
  {  // even-odd commutators
    std::vector<Inst> v1, v2, v3, v4, v5;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int p = 1; p <= k; ++p) {
          v1.emplace_back(H(i, j), U(p), delta_term(j == p, GeneratorTag::vecmul(i)));
          v2.emplace_back(H(i, j), D(p), delta_term(i == p, GeneratorTag::dirac(j)));
        }
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j)
        for (int p = 1; p <= k; ++p) {
          OperatorExpr exp_l = delta_term(j == p, GeneratorTag::dirac(i));
          exp_l += delta_term(i == p, GeneratorTag::dirac(j));
          v3.emplace_back(L(i, j), U(p), exp_l);
          OperatorExpr exp_r = delta_term(i == p, GeneratorTag::vecmul(j));
          exp_r += delta_term(j == p, GeneratorTag::vecmul(i));
          v4.emplace_back(R(i, j), D(p), exp_r);
          v5.emplace_back(R(i, j), U(p), OperatorExpr::zero());
        }
    fam.run("[h_ij, u_p] = c*d_jp u_i", v1, Bracket::Commutator);
    fam.run("[h_ij, D_p] = c*d_ip D_j", v2, Bracket::Commutator);
    fam.run("[Lapl_ij, u_p] = c*(d_jp D_i + d_ip D_j)", v3, Bracket::Commutator);
    fam.run("[r2_ij, D_p] = c*(d_ip u_j + d_jp u_i)", v4, Bracket::Commutator);
    fam.run("[r2_ij, u_p] = 0", v5, Bracket::Commutator);
  }
  return reports;
}

}  // namespace fischer
