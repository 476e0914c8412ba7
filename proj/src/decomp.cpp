#include "fischer/decomp.hpp"

#include <chrono>
#include <stdexcept>

namespace fischer {

namespace {

int pair_count(int k) { return k * (k + 1) / 2; }

// Flattened (i,j) pairs, i <= j, in lexicographic order.
std::vector<std::pair<int, int>> index_pairs(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// All subsets of {1..k} as increasing lists, in lexicographic order of the
// lists themselves ({} < {1} < {1,2} < ... < {2} < ...).
std::vector<std::vector<int>> subsets_lex(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    for (int e = next; e <= k; ++e) {
      cur.push_back(e);
      self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

void check_stable(int m, int k, bool allow_unstable) {
  if (m < 2 * k && !allow_unstable)
    throw std::domain_error("decomposition: outside the stable range m >= 2k");
}

}  // namespace

int SummandIndex::degree() const {
  int d = t + static_cast<int>(J.size());
  for (int v : n) d += 2 * v;
  return d;
}

std::vector<int> SummandIndex::multidegree_shift(int k) const {
  std::vector<int> shift(k, 0);
  for (int j : J) shift[j - 1] += 1;
  auto pairs = index_pairs(k);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    shift[pairs[p].first - 1] += n[p];
    shift[pairs[p].second - 1] += n[p];
  }
  return shift;
}

std::string SummandIndex::str() const {
  std::string s = "t=" + std::to_string(t) + " J={";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
  s += "} n=(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

std::vector<SummandIndex> enumerate_summands(int k, int degree) {
  if (degree < 0) throw std::invalid_argument("enumerate_summands: negative degree");
  std::vector<SummandIndex> out;
  auto subsets = subsets_lex(k);
  for (int t = degree; t >= 0; --t) {
    int s = degree - t;
    for (const auto& J : subsets) {
      int rest = s - static_cast<int>(J.size());
      if (rest < 0 || rest % 2 != 0) continue;
      for (const auto& n : compositions(rest / 2, pair_count(k))) {
        SummandIndex idx;
        idx.J = J;
        idx.n = n;
        idx.t = t;
        out.push_back(std::move(idx));
      }
    }
  }
  return out;
}

ClPoly apply_summand(const SummandIndex& s, const ClPoly& v) {
  ClPoly w = v;
  auto pairs = index_pairs(v.k());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (int rep = 0; rep < s.n[p]; ++rep) w = w.mul_by_rsq(pairs[p].first, pairs[p].second);
  // ux_J = ux_{j_1} ... ux_{j_r} acts by left multiplication, rightmost
  // factor first.
  for (auto it = s.J.rbegin(); it != s.J.rend(); ++it) w = w.mul_by_ux(*it);
  return w;
}

SubspaceBasis build_summand_basis(const SummandIndex& s, int m, int k, const SpinorFrame& frame,
                                  bool allow_unstable) {
  check_stable(m, k, allow_unstable);
  if (static_cast<int>(s.n.size()) != pair_count(k))
    throw std::invalid_argument("build_summand_basis: summand shape does not match k");
  MonogenicCache cache(m, k, frame);
  std::vector<ClPoly> elements;
  for (const auto& a : compositions(s.t, k))
    for (const auto& v : cache.block(a)) elements.push_back(apply_summand(s, v));
  SubspaceBasis basis =
      make_subspace(CoordinateChart(m, k, GradedSlice::total(s.degree()), &frame), std::move(elements));
  long rk = rank(basis.coords);
  if (rk != basis.dim()) {
    if (!allow_unstable)
      throw std::runtime_error("build_summand_basis: rank deficit " + std::to_string(basis.dim() - rk) +
                               " in summand " + s.str());
  }
  return basis;
}

FischerDecomposer::FischerDecomposer(int m, int k, int degree, const SpinorFrame& frame,
                                     bool allow_unstable)
    : m_(m), k_(k), degree_(degree), frame_(&frame), cache_(m, k, frame) {
  check_stable(m, k, allow_unstable);
  auto start = std::chrono::steady_clock::now();
  summands_ = enumerate_summands(k, degree);

  report_.m = m;
  report_.k = k;
  report_.degree = degree;
  report_.stable = m >= 2 * k;

  // Columns of each multidegree block, in summand enumeration order.
  std::map<std::vector<int>, std::vector<ColumnMeta>> meta;
  std::map<std::vector<int>, std::vector<ExactVector>> cols;
  std::map<std::vector<int>, CoordinateChart> charts;
  for (const auto& b : compositions(degree, k))
    charts.emplace(b, CoordinateChart(m, k, GradedSlice::multi(b), &frame));

  for (std::size_t si = 0; si < summands_.size(); ++si) {
    const SummandIndex& s = summands_[si];
    SummandReport sr;
    sr.index = s;
    std::vector<int> shift = s.multidegree_shift(k);
    for (const auto& a : compositions(s.t, k)) {
      const auto& block = cache_.block(a);
      std::vector<int> b(k);
      for (int i = 0; i < k; ++i) b[i] = a[i] + shift[i];
      auto chart_it = charts.find(b);
      for (std::size_t vi = 0; vi < block.size(); ++vi) {
        sr.dim += 1;
        cols[b].push_back(chart_it->second.coordinates(apply_summand(s, block[vi])));
        meta[b].push_back(ColumnMeta{si, a, vi});
      }
    }
    report_.summands.push_back(std::move(sr));
  }

  report_.total_dim = 0;
  for (const auto& sr : report_.summands) report_.total_dim += sr.dim;

  bool all_square_invertible = true;
  report_.rank = 0;
  report_.ambient_dim = 0;
  for (auto& [b, chart] : charts) {
    report_.ambient_dim += chart.dim();
    auto& columns = cols[b];
    ExactMatrix A(chart.dim(), static_cast<long>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (long r = 0; r < chart.dim(); ++r)
        A.at(r, static_cast<long>(c)) = columns[c][static_cast<std::size_t>(r)];
    columns.clear();
    RrefSolver solver(A);
    report_.rank += solver.rank();
    if (solver.rank() != chart.dim() || A.cols() != chart.dim()) all_square_invertible = false;
    blocks_.emplace(b, Block{chart, std::move(meta[b]), std::move(solver)});
  }
  report_.pass = all_square_invertible && report_.total_dim == report_.ambient_dim;

  if (report_.pass) {
    // The concatenation has full rank, so every summand image is injective.
    for (auto& sr : report_.summands) sr.rank = sr.dim;
  } else {
    // Rank per summand, block by block.
    for (std::size_t si = 0; si < summands_.size(); ++si) {
      long rk = 0;
      for (const auto& [b, block] : blocks_) {
        std::vector<long> picked;
        for (std::size_t c = 0; c < block.meta.size(); ++c)
          if (block.meta[c].summand == si) picked.push_back(static_cast<long>(c));
        if (picked.empty()) continue;
        ExactMatrix S(static_cast<long>(picked.size()), block.chart.dim());
        for (std::size_t r = 0; r < picked.size(); ++r) {
          const ColumnMeta& cm = block.meta[static_cast<std::size_t>(picked[r])];
          S.set_row(static_cast<long>(r),
                    block.chart.coordinates(apply_summand(summands_[si], cache_.block(cm.source)[cm.vector_index])));
        }
        rk += rank(std::move(S));
      }
      report_.summands[si].rank = rk;
    }
  }

  report_.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

DecompositionResult FischerDecomposer::decompose(const ClPoly& P) const {
  if (P.m() != m_ || P.k() != k_) throw std::invalid_argument("decompose: (m,k) mismatch");
  if (!P.is_homogeneous() || (!P.is_zero() && P.total_degree() != degree_))
    throw std::invalid_argument("decompose: polynomial not homogeneous of the slice degree");
  if (!P.is_spinor_valued(*frame_))
    throw std::invalid_argument("decompose: polynomial is not spinor-valued");

  std::vector<ClPoly> parts(summands_.size(), ClPoly(m_, k_));
  for (const auto& [b, block] : blocks_) {
    ClPoly comp = P.graded_component(GradedSlice::multi(b));
    if (comp.is_zero()) continue;
    auto x = block.solver.solve(block.chart.coordinates(comp));
    if (!x) {
      if (report_.pass) throw std::logic_error("decompose: verified slice failed to solve");
      throw std::runtime_error("decompose: inconsistent system outside the stable range");
    }
    for (std::size_t c = 0; c < block.meta.size(); ++c) {
      if ((*x)[c].is_zero()) continue;
      const ColumnMeta& cm = block.meta[c];
      parts[cm.summand] += cache_.block(cm.source)[cm.vector_index].scaled((*x)[c]);
    }
  }

  DecompositionResult result(m_, k_);
  result.unique = report_.pass && report_.stable;
  for (std::size_t si = 0; si < summands_.size(); ++si) {
    if (parts[si].is_zero()) continue;
    ClPoly term = apply_summand(summands_[si], parts[si]);
    result.reassembled += term;
    result.components.emplace_back(summands_[si], std::move(parts[si]), std::move(term));
  }
  result.residual = P - result.reassembled;
  return result;
}

VerifyReport verify_monogenic_decomposition(int m, int k, int degree, const SpinorFrame& frame,
                                            bool allow_unstable) {
  check_stable(m, k, allow_unstable);
  auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.m = m;
  rep.k = k;
  rep.degree = degree;
  rep.stable = m >= 2 * k;

  MonogenicCache cache(m, k, frame);
  auto summands = enumerate_summands(k, degree);
  std::map<std::vector<int>, std::vector<ExactVector>> cols;
  std::map<std::vector<int>, CoordinateChart> charts;
  for (const auto& b : compositions(degree, k))
    charts.emplace(b, CoordinateChart(m, k, GradedSlice::multi(b), &frame));

  std::map<std::vector<int>, std::map<std::size_t, std::vector<std::size_t>>> by_summand;
  for (std::size_t si = 0; si < summands.size(); ++si) {
    const SummandIndex& s = summands[si];
    SummandReport sr;
    sr.index = s;
    std::vector<int> shift = s.multidegree_shift(k);
    for (const auto& a : compositions(s.t, k)) {
      const auto& block = cache.block(a);
      std::vector<int> b(k);
      for (int i = 0; i < k; ++i) b[i] = a[i] + shift[i];
      auto chart_it = charts.find(b);
      for (const auto& v : block) {
        by_summand[b][si].push_back(cols[b].size());
        cols[b].push_back(chart_it->second.coordinates(apply_summand(s, v)));
        sr.dim += 1;
      }
    }
    rep.summands.push_back(std::move(sr));
  }
  for (const auto& sr : rep.summands) rep.total_dim += sr.dim;

  rep.rank = 0;
  rep.ambient_dim = 0;
  for (const auto& [b, chart] : charts) {
    rep.ambient_dim += chart.dim();
    const auto& columns = cols[b];
    ExactMatrix A(static_cast<long>(columns.size()), chart.dim());
    for (std::size_t r = 0; r < columns.size(); ++r) A.set_row(static_cast<long>(r), columns[r]);
    rep.rank += rank(std::move(A));
  }
  rep.pass = rep.rank == rep.total_dim && rep.rank == rep.ambient_dim;

  if (rep.pass) {
    for (auto& sr : rep.summands) sr.rank = sr.dim;
  } else {
    for (std::size_t si = 0; si < summands.size(); ++si) {
      long rk = 0;
      for (const auto& [b, picked_map] : by_summand) {
        auto it = picked_map.find(si);
        if (it == picked_map.end()) continue;
        const auto& chart = charts.at(b);
        ExactMatrix S(static_cast<long>(it->second.size()), chart.dim());
        for (std::size_t r = 0; r < it->second.size(); ++r)
          S.set_row(static_cast<long>(r), cols[b][it->second[r]]);
        rk += rank(std::move(S));
      }
      rep.summands[si].rank = rk;
    }
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

DecompositionResult fischer_decompose(const ClPoly& P, const SpinorFrame& frame,
                                      bool allow_unstable) {
  check_stable(P.m(), P.k(), allow_unstable);
  if (!P.is_spinor_valued(frame))
    throw std::invalid_argument("fischer_decompose: polynomial is not spinor-valued");
  DecompositionResult result(P.m(), P.k());
  if (P.is_zero()) return result;
  for (int d = 0; d <= P.total_degree(); ++d) {
    ClPoly comp = P.graded_component(GradedSlice::total(d));
    if (comp.is_zero()) continue;
    FischerDecomposer dec(P.m(), P.k(), d, frame, allow_unstable);
    DecompositionResult part = dec.decompose(comp);
    result.unique = result.unique && part.unique;
    for (auto& c : part.components) result.components.push_back(std::move(c));
    result.reassembled += part.reassembled;
    result.residual += part.residual;
  }
  return result;
}

RefinementReport harmonic_refinement(int m, int k, int degree, const SpinorFrame& frame) {
  RefinementReport rep;
  rep.m = m;
  rep.k = k;
  rep.degree = degree;

  GradedProjector projector(GradedProjector::Mode::Harmonic, m, k, degree, &frame);
  rep.harmonic_dim = projector.kernel_dim();

  MonogenicCache cache(m, k, frame);
  std::map<std::vector<int>, CoordinateChart> charts;
  for (const auto& b : compositions(degree, k))
    charts.emplace(b, CoordinateChart(m, k, GradedSlice::multi(b), &frame));

  struct PerBlock {
    std::vector<ExactVector> projected;
  };
  std::map<std::vector<int>, PerBlock> blocks;

  auto subsets = subsets_lex(k);
  for (const auto& J : subsets) {
    int t = degree - static_cast<int>(J.size());
    if (t < 0) continue;
    RefinementPart part;
    part.J = J;
    SummandIndex s;
    s.J = J;
    s.n.assign(static_cast<std::size_t>(pair_count(k)), 0);
    s.t = t;
    std::vector<int> shift = s.multidegree_shift(k);

    std::map<std::vector<int>, std::vector<ExactVector>> product_cols, projected_cols;
    for (const auto& a : compositions(t, k)) {
      std::vector<int> b(k);
      for (int i = 0; i < k; ++i) b[i] = a[i] + shift[i];
      const auto& chart = charts.at(b);
      for (const auto& v : cache.block(a)) {
        part.dim += 1;
        ClPoly w = apply_summand(s, v);
        product_cols[b].push_back(chart.coordinates(w));
        ExactVector pc = chart.coordinates(projector.project(w));
        projected_cols[b].push_back(pc);
        blocks[b].projected.push_back(std::move(pc));
      }
    }
    auto rank_of = [&](const std::map<std::vector<int>, std::vector<ExactVector>>& groups) {
      long rk = 0;
      for (const auto& [b, rows] : groups) {
        ExactMatrix A(static_cast<long>(rows.size()), charts.at(b).dim());
        for (std::size_t r = 0; r < rows.size(); ++r) A.set_row(static_cast<long>(r), rows[r]);
        rk += rank(std::move(A));
      }
      return rk;
    };
    part.rank_product = rank_of(product_cols);
    part.rank_projected = rank_of(projected_cols);
    rep.total_dim += part.dim;
    rep.parts.push_back(std::move(part));
  }

  rep.rank = 0;
  for (const auto& [b, pb] : blocks) {
    ExactMatrix A(static_cast<long>(pb.projected.size()), charts.at(b).dim());
    for (std::size_t r = 0; r < pb.projected.size(); ++r) A.set_row(static_cast<long>(r), pb.projected[r]);
    rep.rank += rank(std::move(A));
  }

  bool parts_ok = true;
  for (const auto& p : rep.parts)
    parts_ok = parts_ok && p.rank_product == p.dim && p.rank_projected == p.dim;
  rep.pass = parts_ok && rep.rank == rep.total_dim && rep.total_dim == rep.harmonic_dim;
  return rep;
}

VerifyReport verify_scalar_decomposition(int m, int k, int degree, bool allow_unstable) {
  check_stable(m, k, allow_unstable);
  auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.m = m;
  rep.k = k;
  rep.degree = degree;
  rep.stable = m >= 2 * k;

  std::vector<GeneratorTag> lapl;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) lapl.push_back(GeneratorTag::lapl(i, j));

  std::map<std::vector<int>, std::vector<ClPoly>> harmonic_blocks;
  auto hblock = [&](const std::vector<int>& a) -> const std::vector<ClPoly>& {
    auto it = harmonic_blocks.find(a);
    if (it == harmonic_blocks.end())
      it = harmonic_blocks.emplace(a, joint_kernel_block(m, k, a, false, nullptr, lapl)).first;
    return it->second;
  };

  std::map<std::vector<int>, CoordinateChart> charts;
  for (const auto& b : compositions(degree, k))
    charts.emplace(b, CoordinateChart(m, k, GradedSlice::multi(b), nullptr));

  std::map<std::vector<int>, std::vector<ExactVector>> cols;
  for (const auto& s : enumerate_summands(k, degree)) {
    if (!s.J.empty()) continue;  // scalar separation of variables has no odd factors
    SummandReport sr;
    sr.index = s;
    std::vector<int> shift = s.multidegree_shift(k);
    for (const auto& a : compositions(s.t, k)) {
      std::vector<int> b(k);
      for (int i = 0; i < k; ++i) b[i] = a[i] + shift[i];
      const auto& chart = charts.at(b);
      for (const auto& h : hblock(a)) {
        cols[b].push_back(chart.coordinates(apply_summand(s, h)));
        sr.dim += 1;
      }
    }
    rep.summands.push_back(std::move(sr));
  }
  for (const auto& sr : rep.summands) rep.total_dim += sr.dim;

  for (const auto& [b, chart] : charts) {
    rep.ambient_dim += chart.dim();
    const auto& columns = cols[b];
    ExactMatrix A(static_cast<long>(columns.size()), chart.dim());
    for (std::size_t r = 0; r < columns.size(); ++r) A.set_row(static_cast<long>(r), columns[r]);
    rep.rank += rank(std::move(A));
  }
  rep.pass = rep.rank == rep.total_dim && rep.rank == rep.ambient_dim;
  for (auto& sr : rep.summands) sr.rank = rep.pass ? sr.dim : -1;

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace fischer
