#include "fischer/exactla.hpp"

#include <stdexcept>

namespace fischer {

ExactMatrix ExactMatrix::identity(long n) {
  ExactMatrix I(n, n);
  for (long i = 0; i < n; ++i) I.at(i, i) = ExactScalar(1);
  return I;
}

void ExactMatrix::set_row(long r, const ExactVector& v) {
  if (static_cast<long>(v.size()) != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (long c = 0; c < cols_; ++c) at(r, c) = v[c];
}

ExactVector ExactMatrix::row(long r) const {
  ExactVector v(cols_);
  for (long c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose_conjugate() const {
  ExactMatrix T(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) T.at(c, r) = at(r, c).conj();
  return T;
}

long rank(ExactMatrix M) {
  long r = 0;
  for (long c = 0; c < M.cols() && r < M.rows(); ++c) {
    long sel = -1;
    for (long i = r; i < M.rows(); ++i)
      if (!M.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (long j = c; j < M.cols(); ++j) std::swap(M.at(r, j), M.at(sel, j));
    ExactScalar inv = M.at(r, c).inverse();
    for (long j = c; j < M.cols(); ++j) M.at(r, j) *= inv;
    for (long i = r + 1; i < M.rows(); ++i) {
      if (M.at(i, c).is_zero()) continue;
      ExactScalar f = M.at(i, c);
      for (long j = c; j < M.cols(); ++j) M.at(i, j) -= f * M.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<long> rref_in_place(ExactMatrix& M) {
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < M.cols() && r < M.rows(); ++c) {
    long sel = -1;
    for (long i = r; i < M.rows(); ++i)
      if (!M.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (long j = 0; j < M.cols(); ++j) std::swap(M.at(r, j), M.at(sel, j));
    ExactScalar inv = M.at(r, c).inverse();
    for (long j = c; j < M.cols(); ++j) M.at(r, j) *= inv;
    for (long i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      ExactScalar f = M.at(i, c);
      for (long j = c; j < M.cols(); ++j) M.at(i, j) -= f * M.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  ExactMatrix trimmed(static_cast<long>(pivots.size()), M.cols());
  for (long i = 0; i < trimmed.rows(); ++i)
    for (long j = 0; j < M.cols(); ++j) trimmed.at(i, j) = M.at(i, j);
  M = std::move(trimmed);
  return pivots;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& M) {
  ExactMatrix R = M;
  std::vector<long> pivots = rref_in_place(R);
  std::vector<bool> is_pivot(M.cols(), false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (long c = 0; c < M.cols(); ++c) {
    if (is_pivot[c]) continue;
    ExactVector v(M.cols());
    v[c] = ExactScalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(static_cast<long>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> solve(const ExactMatrix& M, const ExactVector& b) {
  if (static_cast<long>(b.size()) != M.rows()) throw std::invalid_argument("solve: shape mismatch");
  return RrefSolver(M).solve(b);
}

RrefSolver::RrefSolver(const ExactMatrix& A) : rows_(A.rows()), cols_(A.cols()) {
  // Eliminate [A | I]; the right block becomes the row transform.
  ExactMatrix aug(rows_, cols_ + rows_);
  for (long r = 0; r < rows_; ++r) {
    for (long c = 0; c < cols_; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, cols_ + r) = ExactScalar(1);
  }
  long r = 0;
  for (long c = 0; c < cols_ && r < rows_; ++c) {
    long sel = -1;
    for (long i = r; i < rows_; ++i)
      if (!aug.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (long j = 0; j < aug.cols(); ++j) std::swap(aug.at(r, j), aug.at(sel, j));
    ExactScalar inv = aug.at(r, c).inverse();
    for (long j = c; j < aug.cols(); ++j) aug.at(r, j) *= inv;
    for (long i = 0; i < rows_; ++i) {
      if (i == r || aug.at(i, c).is_zero()) continue;
      ExactScalar f = aug.at(i, c);
      for (long j = c; j < aug.cols(); ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    pivots_.push_back(c);
    ++r;
  }
  reduced_ = ExactMatrix(static_cast<long>(pivots_.size()), cols_);
  transform_ = ExactMatrix(rows_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < rows_; ++j) transform_.at(i, j) = aug.at(i, cols_ + j);
  for (long i = 0; i < reduced_.rows(); ++i)
    for (long j = 0; j < cols_; ++j) reduced_.at(i, j) = aug.at(i, j);
}

std::optional<ExactVector> RrefSolver::solve(const ExactVector& b) const {
  if (static_cast<long>(b.size()) != rows_) throw std::invalid_argument("solve: shape mismatch");
  // T*A = R, so A x = b iff R x = T b, with consistency requiring the
  // entries of T b beyond the rank to vanish.
  ExactVector tb(rows_);
  for (long i = 0; i < rows_; ++i) {
    ExactScalar acc;
    for (long j = 0; j < rows_; ++j) {
      if (transform_.at(i, j).is_zero() || b[j].is_zero()) continue;
      acc += transform_.at(i, j) * b[j];
    }
    tb[i] = std::move(acc);
  }
  long rk = rank();
  for (long i = rk; i < rows_; ++i)
    if (!tb[i].is_zero()) return std::nullopt;
  ExactVector x(cols_);
  for (long i = 0; i < rk; ++i) x[pivots_[i]] = tb[i];
  return x;
}

ExactMatrix gram(const std::vector<ClPoly>& vectors) {
  int deg = -2;
  for (const auto& v : vectors) {
    if (!v.is_homogeneous()) throw std::invalid_argument("gram: vectors must be homogeneous");
    int d = v.total_degree();
    if (deg == -2)
      deg = d;
    else if (d >= 0 && deg >= 0 && d != deg)
      throw std::invalid_argument("gram: vectors from mixed graded slices");
  }
  long n = static_cast<long>(vectors.size());
  ExactMatrix G(n, n);
  for (long p = 0; p < n; ++p)
    for (long q = 0; q < n; ++q) G.at(p, q) = fischer_inner(vectors[p], vectors[q]);
  return G;
}

bool hermitian_positive_definite(const ExactMatrix& G) {
  if (G.rows() != G.cols()) return false;
  long n = G.rows();
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c)
      if (G.at(r, c) != G.at(c, r).conj()) return false;
  // Symmetric elimination without pivoting; every pivot must be a positive
  // rational or some leading principal minor fails to be positive.
  ExactMatrix A = G;
  for (long s = 0; s < n; ++s) {
    const ExactScalar& piv = A.at(s, s);
    if (!piv.is_real() || sgn(piv.re()) <= 0) return false;
    for (long i = s + 1; i < n; ++i) {
      if (A.at(i, s).is_zero()) continue;
      ExactScalar f = A.at(i, s) / piv;
      for (long j = s; j < n; ++j) A.at(i, j) -= f * A.at(s, j);
    }
  }
  return true;
}

DirectSumReport direct_sum_check(const std::vector<ExactMatrix>& parts, long ambient_dim) {
  DirectSumReport rep;
  rep.ambient_dim = ambient_dim;
  long rows = 0;
  for (const auto& p : parts) {
    rep.total_dim += p.rows();
    rows += p.rows();
    if (!parts.empty() && p.cols() != parts.front().cols())
      throw std::invalid_argument("direct_sum_check: mixed coordinate charts");
  }
  if (parts.empty()) {
    rep.rank = 0;
  } else {
    ExactMatrix M(rows, parts.front().cols());
    long r = 0;
    for (const auto& p : parts)
      for (long i = 0; i < p.rows(); ++i, ++r)
        for (long c = 0; c < p.cols(); ++c) M.at(r, c) = p.at(i, c);
    rep.rank = rank(std::move(M));
  }
  rep.direct = rep.rank == rep.total_dim;
  rep.spans = rep.rank == ambient_dim;
  rep.pass = rep.direct && rep.spans;
  return rep;
}

}  // namespace fischer
