#pragma once

#include <optional>
#include <vector>

#include "fischer/poly.hpp"

namespace fischer {

using ExactVector = std::vector<ExactScalar>;

// Dense matrix over ExactScalar. Elimination is exact with a deterministic
// pivot rule: first row with a nonzero entry in the current column, columns
// scanned left to right.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static ExactMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  ExactScalar& at(long r, long c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const ExactScalar& at(long r, long c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  void set_row(long r, const ExactVector& v);
  ExactVector row(long r) const;
  ExactMatrix transpose_conjugate() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  long rows_, cols_;
  std::vector<ExactScalar> data_;
};

long rank(ExactMatrix M);  // forward elimination only

// Reduced row echelon form. Returns pivot column indices; on return M holds
// its RREF with zero rows trimmed.
std::vector<long> rref_in_place(ExactMatrix& M);

// Canonical kernel basis from the RREF: one vector per free column, with a 1
// in the free position and the negated reduced column above the pivots.
std::vector<ExactVector> kernel_basis(const ExactMatrix& M);

// One exact solution of M x = b with free variables set to zero, or nullopt
// when inconsistent.
std::optional<ExactVector> solve(const ExactMatrix& M, const ExactVector& b);

// Factored elimination for solving many right-hand sides against one matrix:
// stores the RREF R of A together with the row transform T with T*A = R.
class RrefSolver {
 public:
  explicit RrefSolver(const ExactMatrix& A);
  long rank() const { return static_cast<long>(pivots_.size()); }
  long cols() const { return cols_; }
  const std::vector<long>& pivots() const { return pivots_; }
  // Solve A x = b (free variables zero); nullopt when inconsistent.
  std::optional<ExactVector> solve(const ExactVector& b) const;

 private:
  long rows_, cols_;
  ExactMatrix reduced_;     // RREF of A, zero rows trimmed
  ExactMatrix transform_;   // T with T*A = reduced (rows beyond rank map into 0)
  std::vector<long> pivots_;
};

// Gram matrix of the Fischer inner product: G[p][q] = <v_p, v_q>. All
// vectors must live in one graded slice (equal total degree).
ExactMatrix gram(const std::vector<ClPoly>& vectors);

// Hermitian positive-definiteness certificate: the pivots of the symmetric
// elimination are the ratios of consecutive leading principal minors, so the
// matrix is positive definite iff every pivot is a positive rational.
bool hermitian_positive_definite(const ExactMatrix& G);

// Rank-based directness test on coordinate matrices (rows = basis vectors).
struct DirectSumReport {
  long total_dim = 0;       // sum of part dimensions
  long rank = 0;            // rank of the concatenation
  long ambient_dim = 0;
  bool direct = false;      // rank == total_dim
  bool spans = false;       // rank == ambient_dim
  bool pass = false;        // direct && spans
};
DirectSumReport direct_sum_check(const std::vector<ExactMatrix>& parts, long ambient_dim);

}  // namespace fischer
