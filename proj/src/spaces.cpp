#include "fischer/spaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace fischer {

CoordinateChart::CoordinateChart(int m, int k, GradedSlice slice, const SpinorFrame* frame)
    : m_(m), k_(k), slice_(std::move(slice)), frame_(frame) {
  if (frame_ && frame_->m() != m) throw std::invalid_argument("chart: frame dimension mismatch");
  width_ = frame_ ? frame_->dim() : 1;
  monomials_ = slice_.is_total ? exponents_of_total_degree(m, k, slice_.degree)
                               : exponents_of_multidegree(m, k, slice_.a);
  long idx = 0;
  for (const auto& e : monomials_) index_.emplace(e, idx++);
}

ClPoly CoordinateChart::basis_element(long index) const {
  if (index < 0 || index >= dim()) throw std::invalid_argument("chart: index out of range");
  const MultiExponent& e = monomials_[static_cast<std::size_t>(index / width_)];
  CliffordElement c = frame_ ? frame_->basis()[static_cast<std::size_t>(index % width_)]
                             : CliffordElement::scalar(m_, ExactScalar(1));
  return ClPoly::monomial(m_, k_, e, c);
}

ExactVector CoordinateChart::coordinates(const ClPoly& P) const {
  if (P.m() != m_ || P.k() != k_) throw std::invalid_argument("chart: (m,k) mismatch");
  ExactVector out(static_cast<std::size_t>(dim()));
  for (const auto& [e, c] : P.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("chart: polynomial outside the slice");
    long base = it->second * width_;
    if (frame_) {
      std::vector<ExactScalar> cc = frame_->coordinates(c);
      for (int p = 0; p < width_; ++p) out[static_cast<std::size_t>(base + p)] = cc[p];
    } else {
      if (c.terms().size() != 1 || !(c.terms().begin()->first == BladeIndex::scalar()))
        throw std::invalid_argument("chart: non-scalar coefficient on a scalar chart");
      out[static_cast<std::size_t>(base)] = c.scalar_part();
    }
  }
  return out;
}

ClPoly CoordinateChart::polynomial(const ExactVector& v) const {
  if (static_cast<long>(v.size()) != dim())
    throw std::invalid_argument("chart: coordinate size mismatch");
  ClPoly out(m_, k_);
  for (std::size_t mi = 0; mi < monomials_.size(); ++mi) {
    if (frame_) {
      std::vector<ExactScalar> cc(v.begin() + static_cast<long>(mi) * width_,
                                  v.begin() + static_cast<long>(mi + 1) * width_);
      bool nonzero = false;
      for (const auto& x : cc) nonzero = nonzero || !x.is_zero();
      if (nonzero) out.add_term(monomials_[mi], frame_->from_coordinates(cc));
    } else {
      const ExactScalar& x = v[mi];
      if (!x.is_zero()) out.add_term(monomials_[mi], CliffordElement::scalar(m_, x));
    }
  }
  return out;
}

bool SubspaceBasis::verify_independent() const {
  return rank(coords) == static_cast<long>(elements.size());
}

SubspaceBasis make_subspace(CoordinateChart chart, std::vector<ClPoly> elements) {
  ExactMatrix coords(static_cast<long>(elements.size()), chart.dim());
  for (std::size_t i = 0; i < elements.size(); ++i)
    coords.set_row(static_cast<long>(i), chart.coordinates(elements[i]));
  return SubspaceBasis{std::move(chart), std::move(elements), std::move(coords)};
}

std::optional<std::vector<int>> multidegree_shift(const GeneratorTag& g, const std::vector<int>& a) {
  std::vector<int> b = a;
  auto down = [&](int col) { return --b[col - 1] >= 0; };
  switch (g.kind) {
    case GeneratorTag::Kind::Dirac:
      if (!down(g.j)) return std::nullopt;
      break;
    case GeneratorTag::Kind::VecMul:
      ++b[g.j - 1];
      break;
    case GeneratorTag::Kind::RSq:
      ++b[g.i - 1];
      ++b[g.j - 1];
      break;
    case GeneratorTag::Kind::Lapl:
      if (!down(g.i) || !down(g.j)) return std::nullopt;
      break;
    case GeneratorTag::Kind::Euler:
    case GeneratorTag::Kind::H:
      // a + e_i - e_j; for i = j the block maps to itself (and h_ii keeps
      // its m/2 part even on columns of degree zero).
      ++b[g.i - 1];
      if (!down(g.j)) return std::nullopt;
      break;
  }
  return b;
}

namespace {

// Stacked coordinate matrix of the generators on the block: rows run over
// the target charts, columns over the source chart.
ExactMatrix block_operator_matrix(const CoordinateChart& source,
                                  const std::vector<GeneratorTag>& ops) {
  const int m = source.m(), k = source.k();
  const std::vector<int>& a = source.slice().a;
  std::vector<std::pair<GeneratorTag, CoordinateChart>> targets;
  long rows = 0;
  for (const auto& g : ops) {
    auto b = multidegree_shift(g, a);
    if (!b) continue;  // the generator annihilates the whole block
    CoordinateChart target(m, k, GradedSlice::multi(*b), source.frame());
    rows += target.dim();
    targets.emplace_back(g, std::move(target));
  }
  ExactMatrix M(rows, source.dim());
  for (long c = 0; c < source.dim(); ++c) {
    ClPoly basis = source.basis_element(c);
    long off = 0;
    for (const auto& [g, target] : targets) {
      ExactVector col = target.coordinates(apply(g, basis));
      for (long r = 0; r < target.dim(); ++r) M.at(off + r, c) = col[static_cast<std::size_t>(r)];
      off += target.dim();
    }
  }
  return M;
}

std::vector<GeneratorTag> laplacian_family(int k) {
  std::vector<GeneratorTag> ops;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) ops.push_back(GeneratorTag::lapl(i, j));
  return ops;
}

std::vector<GeneratorTag> dirac_family(int k) {
  std::vector<GeneratorTag> ops;
  for (int j = 1; j <= k; ++j) ops.push_back(GeneratorTag::dirac(j));
  return ops;
}

std::vector<GeneratorTag> t_minus_family(int k) {
  std::vector<GeneratorTag> ops;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) ops.push_back(GeneratorTag::h(i, j));
  return ops;
}

// Kernel of the ops on a whole slice, block by multidegree.
SubspaceBasis kernel_space(int m, int k, const GradedSlice& slice, const SpinorFrame* frame,
                           const std::vector<GeneratorTag>& ops) {
  std::vector<ClPoly> elements;
  if (slice.is_total) {
    for (const auto& a : compositions(slice.degree, k)) {
      auto block = joint_kernel_block(m, k, a, frame != nullptr, frame, ops);
      elements.insert(elements.end(), block.begin(), block.end());
    }
  } else {
    elements = joint_kernel_block(m, k, slice.a, frame != nullptr, frame, ops);
  }
  return make_subspace(CoordinateChart(m, k, slice, frame), std::move(elements));
}

}  // namespace

std::vector<ClPoly> joint_kernel_block(int m, int k, const std::vector<int>& a, bool spinor,
                                       const SpinorFrame* frame,
                                       const std::vector<GeneratorTag>& ops) {
  CoordinateChart chart(m, k, GradedSlice::multi(a), spinor ? frame : nullptr);
  ExactMatrix M = block_operator_matrix(chart, ops);
  std::vector<ClPoly> out;
  for (const auto& v : kernel_basis(M)) out.push_back(chart.polynomial(v));
  return out;
}

long joint_kernel_dim_block(int m, int k, const std::vector<int>& a, bool spinor,
                            const SpinorFrame* frame, const std::vector<GeneratorTag>& ops) {
  CoordinateChart chart(m, k, GradedSlice::multi(a), spinor ? frame : nullptr);
  ExactMatrix M = block_operator_matrix(chart, ops);
  return chart.dim() - rank(std::move(M));
}

SubspaceBasis monomial_basis(int m, int k, const GradedSlice& slice, const SpinorFrame* frame) {
  CoordinateChart chart(m, k, slice, frame);
  std::vector<ClPoly> elements;
  elements.reserve(static_cast<std::size_t>(chart.dim()));
  for (long i = 0; i < chart.dim(); ++i) elements.push_back(chart.basis_element(i));
  ExactMatrix coords = ExactMatrix::identity(chart.dim());
  return SubspaceBasis{std::move(chart), std::move(elements), std::move(coords)};
}

SubspaceBasis harmonic_space(int m, int k, const GradedSlice& slice, const SpinorFrame* frame) {
  return kernel_space(m, k, slice, frame, laplacian_family(k));
}

SubspaceBasis monogenic_space(int m, int k, const GradedSlice& slice, const SpinorFrame& frame) {
  return kernel_space(m, k, slice, &frame, dirac_family(k));
}

SubspaceBasis simplicial_monogenics(int m, int k, const Partition& a, const SpinorFrame& frame) {
  if (!is_partition(a) || static_cast<int>(a.size()) != k)
    throw std::invalid_argument("simplicial_monogenics: need a partition of length k");
  std::vector<GeneratorTag> ops = dirac_family(k);
  for (const auto& g : t_minus_family(k)) ops.push_back(g);
  return kernel_space(m, k, GradedSlice::multi(a), &frame, ops);
}

SubspaceBasis simplicial_harmonics(int m, int k, const Partition& a) {
  if (!is_partition(a) || static_cast<int>(a.size()) != k)
    throw std::invalid_argument("simplicial_harmonics: need a partition of length k");
  std::vector<GeneratorTag> ops = laplacian_family(k);
  for (const auto& g : t_minus_family(k)) ops.push_back(g);
  return kernel_space(m, k, GradedSlice::multi(a), nullptr, ops);
}

SubspaceBasis generate_M_component(int m, int k, const Partition& a, const SpinorFrame& frame) {
  SubspaceBasis seed = simplicial_monogenics(m, k, a, frame);
  CoordinateChart chart(m, k, GradedSlice::total(seed.chart.slice().degree), &frame);

  // Row space kept in reduced echelon form; the raising operators h_ji are
  // applied to every current row until the rank stops growing. They preserve
  // total degree, so the closure stays inside one finite slice.
  ExactMatrix span(0, chart.dim());
  auto absorb = [&](const std::vector<ExactVector>& rows) {
    ExactMatrix next(span.rows() + static_cast<long>(rows.size()), chart.dim());
    for (long r = 0; r < span.rows(); ++r)
      for (long c = 0; c < chart.dim(); ++c) next.at(r, c) = span.at(r, c);
    for (std::size_t i = 0; i < rows.size(); ++i)
      next.set_row(span.rows() + static_cast<long>(i), rows[i]);
    rref_in_place(next);
    span = std::move(next);
  };

  std::vector<ExactVector> seed_rows;
  for (const auto& v : seed.elements) seed_rows.push_back(chart.coordinates(v));
  absorb(seed_rows);

  std::vector<GeneratorTag> raising;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) raising.push_back(GeneratorTag::h(j, i));

  while (!raising.empty()) {
    long before = span.rows();
    std::vector<ExactVector> fresh;
    for (long r = 0; r < before; ++r) {
      ClPoly p = chart.polynomial(span.row(r));
      for (const auto& g : raising) {
        ClPoly q = apply(g, p);
        if (!q.is_zero()) fresh.push_back(chart.coordinates(q));
      }
    }
    absorb(fresh);
    if (span.rows() == before) break;
  }

  std::vector<ClPoly> elements;
  for (long r = 0; r < span.rows(); ++r) elements.push_back(chart.polynomial(span.row(r)));
  return SubspaceBasis{std::move(chart), std::move(elements), std::move(span)};
}

mpz_class monogenic_dim(int m, int k, int degree, const SpinorFrame& frame) {
  mpz_class total = 0;
  for (const auto& a : compositions(degree, k))
    total += joint_kernel_dim_block(m, k, a, true, &frame, dirac_family(k));
  return total;
}

mpz_class harmonic_dim_scalar(int m, int k, int degree) {
  mpz_class total = 0;
  for (const auto& a : compositions(degree, k))
    total += joint_kernel_dim_block(m, k, a, false, nullptr, laplacian_family(k));
  return total;
}

GradedProjector::GradedProjector(Mode mode, int m, int k, int degree, const SpinorFrame* frame)
    : mode_(mode), m_(m), k_(k), degree_(degree), frame_(frame) {
  if (degree < 0) throw std::invalid_argument("projector: negative degree");
  std::vector<GeneratorTag> kernel_ops =
      (mode == Mode::Harmonic) ? laplacian_family(k) : dirac_family(k);
  for (const auto& a : compositions(degree, k)) {
    CoordinateChart chart(m, k, GradedSlice::multi(a), frame);
    std::vector<ClPoly> kernel = joint_kernel_block(m, k, a, frame != nullptr, frame, kernel_ops);

    // Columns: the kernel basis, then the images of the lower slices under
    // the complement multiplications (r^2_ij or ux_j). The kernel part of a
    // solution is unique even though the image columns are redundant.
    std::vector<ExactVector> columns;
    for (const auto& v : kernel) columns.push_back(chart.coordinates(v));
    auto add_images = [&](const std::vector<int>& lower, auto&& multiply) {
      CoordinateChart low(m_, k_, GradedSlice::multi(lower), frame_);
      for (long i = 0; i < low.dim(); ++i)
        columns.push_back(chart.coordinates(multiply(low.basis_element(i))));
    };
    if (mode == Mode::Harmonic) {
      for (int i = 1; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
          std::vector<int> lower = a;
          if (--lower[i - 1] < 0) continue;
          if (--lower[j - 1] < 0) continue;
          add_images(lower, [&](const ClPoly& p) { return p.mul_by_rsq(i, j); });
        }
    } else {
      for (int j = 1; j <= k; ++j) {
        std::vector<int> lower = a;
        if (--lower[j - 1] < 0) continue;
        add_images(lower, [&](const ClPoly& p) { return p.mul_by_ux(j); });
      }
    }

    ExactMatrix A(chart.dim(), static_cast<long>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (long r = 0; r < chart.dim(); ++r)
        A.at(r, static_cast<long>(c)) = columns[c][static_cast<std::size_t>(r)];
    blocks_.emplace(a, Block{std::move(chart), std::move(kernel), RrefSolver(A)});
  }
}

long GradedProjector::kernel_dim() const {
  long total = 0;
  for (const auto& [a, b] : blocks_) total += static_cast<long>(b.kernel.size());
  return total;
}

ClPoly GradedProjector::project(const ClPoly& P) const {
  if (P.m() != m_ || P.k() != k_) throw std::invalid_argument("projector: (m,k) mismatch");
  if (!P.is_homogeneous() || (!P.is_zero() && P.total_degree() != degree_))
    throw std::invalid_argument("projector: polynomial not homogeneous of the chart degree");
  ClPoly out(m_, k_);
  for (const auto& [a, block] : blocks_) {
    ClPoly comp = P.graded_component(GradedSlice::multi(a));
    if (comp.is_zero()) continue;
    auto x = block.solver.solve(block.chart.coordinates(comp));
    if (!x) throw std::logic_error("projector: slice decomposition failed to span");
    for (std::size_t i = 0; i < block.kernel.size(); ++i)
      if (!(*x)[i].is_zero()) out += block.kernel[i].scaled((*x)[i]);
  }
  return out;
}

ClPoly harmonic_projection(const ClPoly& P, const SpinorFrame* frame) {
  if (P.is_zero()) return P;
  if (!P.is_homogeneous()) throw std::invalid_argument("harmonic_projection: inhomogeneous input");
  GradedProjector proj(GradedProjector::Mode::Harmonic, P.m(), P.k(), P.total_degree(), frame);
  return proj.project(P);
}

ClPoly monogenic_projection(const ClPoly& P, const SpinorFrame& frame) {
  if (P.is_zero()) return P;
  if (!P.is_homogeneous()) throw std::invalid_argument("monogenic_projection: inhomogeneous input");
  GradedProjector proj(GradedProjector::Mode::Monogenic, P.m(), P.k(), P.total_degree(), &frame);
  return proj.project(P);
}

const std::vector<ClPoly>& MonogenicCache::block(const std::vector<int>& a) {
  auto it = blocks_.find(a);
  if (it == blocks_.end()) {
    std::vector<GeneratorTag> ops;
    for (int j = 1; j <= k_; ++j) ops.push_back(GeneratorTag::dirac(j));
    it = blocks_.emplace(a, joint_kernel_block(m_, k_, a, true, frame_, ops)).first;
  }
  return it->second;
}

mpz_class MonogenicCache::total_dim(int degree) {
  mpz_class total = 0;
  for (const auto& a : compositions(degree, k_)) total += static_cast<long>(block(a).size());
  return total;
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& ambient, const SubspaceBasis& sub) {
  if (!ambient.chart.same_slice(sub.chart))
    throw std::invalid_argument("orthogonal_complement: mixed slices");
  // Membership: adjoining sub must not grow the span of ambient.
  long ambient_rank = rank(ambient.coords);
  DirectSumReport grow = direct_sum_check({ambient.coords, sub.coords}, ambient.chart.dim());
  if (grow.rank != ambient_rank)
    throw std::invalid_argument("orthogonal_complement: sub is not contained in ambient");

  // v = sum_i c_i a_i satisfies <v, s_j> = 0 for all j iff
  // sum_i c_i <s_j, a_i> = 0 (Hermitian form, conjugation absorbed).
  ExactMatrix M(sub.dim(), ambient.dim());
  for (long j = 0; j < sub.dim(); ++j)
    for (long i = 0; i < ambient.dim(); ++i)
      M.at(j, i) = fischer_inner(sub.elements[static_cast<std::size_t>(j)],
                                 ambient.elements[static_cast<std::size_t>(i)]);
  std::vector<ClPoly> elements;
  for (const auto& c : kernel_basis(M)) {
    ClPoly v(ambient.chart.m(), ambient.chart.k());
    for (long i = 0; i < ambient.dim(); ++i)
      if (!c[static_cast<std::size_t>(i)].is_zero())
        v += ambient.elements[static_cast<std::size_t>(i)].scaled(c[static_cast<std::size_t>(i)]);
    elements.push_back(std::move(v));
  }
  return make_subspace(ambient.chart, std::move(elements));
}

DirectSumReport is_direct_sum(const std::vector<SubspaceBasis>& parts, long ambient_dim) {
  std::vector<ExactMatrix> coords;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && !parts[i].chart.same_slice(parts[0].chart))
      throw std::invalid_argument("is_direct_sum: mixed slices");
    coords.push_back(parts[i].coords);
  }
  return direct_sum_check(coords, ambient_dim);
}

}  // namespace fischer
