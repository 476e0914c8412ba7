#pragma once

#include <map>
#include <memory>
#include <optional>

#include "fischer/exactla.hpp"
#include "fischer/operators.hpp"
#include "fischer/repdim.hpp"

namespace fischer {

// Ordered monomial-blade basis of one graded slice (P_l or P_a, scalar or
// tensored with the spinor frame). Monomials of a multidegree block are
// listed in lexicographic order of the flat exponents; total-degree slices
// concatenate multidegree blocks in lexicographic multidegree order. Within
// a monomial, spinor frame elements keep their frame order.
class CoordinateChart {
 public:
  CoordinateChart(int m, int k, GradedSlice slice, const SpinorFrame* frame);

  int m() const { return m_; }
  int k() const { return k_; }
  const GradedSlice& slice() const { return slice_; }
  bool spinor() const { return frame_ != nullptr; }
  const SpinorFrame* frame() const { return frame_; }

  long dim() const { return static_cast<long>(monomials_.size()) * width_; }
  int coeff_width() const { return width_; }
  const std::vector<MultiExponent>& monomials() const { return monomials_; }

  // Monomial-blade basis element by chart index.
  ClPoly basis_element(long index) const;
  // Exact coordinates; throws std::invalid_argument when P lies outside the
  // slice (wrong grading, non-spinor coefficient on a spinor chart, ...).
  ExactVector coordinates(const ClPoly& P) const;
  ClPoly polynomial(const ExactVector& v) const;

  bool same_slice(const CoordinateChart& o) const {
    return m_ == o.m_ && k_ == o.k_ && slice_ == o.slice_ && spinor() == o.spinor();
  }

 private:
  int m_, k_;
  GradedSlice slice_;
  const SpinorFrame* frame_;
  int width_;
  std::vector<MultiExponent> monomials_;
  std::map<MultiExponent, long> index_;
};

// Ordered list of polynomials spanning a subspace of one graded slice,
// together with their coordinate matrix (one row per element).
struct SubspaceBasis {
  CoordinateChart chart;
  std::vector<ClPoly> elements;
  ExactMatrix coords;

  long dim() const { return static_cast<long>(elements.size()); }
  // Exact linear-independence certificate (rank of coords equals count).
  bool verify_independent() const;
};

SubspaceBasis make_subspace(CoordinateChart chart, std::vector<ClPoly> elements);

// Which multidegree block a generator maps P_a into; nullopt when the block
// is annihilated outright (an exponent would go negative).
std::optional<std::vector<int>> multidegree_shift(const GeneratorTag& g, const std::vector<int>& a);

// Joint kernel of the listed generators on one multidegree block.
std::vector<ClPoly> joint_kernel_block(int m, int k, const std::vector<int>& a, bool spinor,
                                       const SpinorFrame* frame,
                                       const std::vector<GeneratorTag>& ops);
// Its dimension, via one rank computation.
long joint_kernel_dim_block(int m, int k, const std::vector<int>& a, bool spinor,
                            const SpinorFrame* frame, const std::vector<GeneratorTag>& ops);

// Full monomial-blade basis of a slice.
SubspaceBasis monomial_basis(int m, int k, const GradedSlice& slice, const SpinorFrame* frame);

// Kernel of every Lapl_ij on the slice (scalar when frame is null).
SubspaceBasis harmonic_space(int m, int k, const GradedSlice& slice, const SpinorFrame* frame);

// Joint kernel of the k Dirac operators on the spinor slice.
SubspaceBasis monogenic_space(int m, int k, const GradedSlice& slice, const SpinorFrame& frame);

// Monogenic polynomials of multidegree a killed by the lowering part t_-.
SubspaceBasis simplicial_monogenics(int m, int k, const Partition& a, const SpinorFrame& frame);

// Scalar harmonics of multidegree a killed by t_-.
SubspaceBasis simplicial_harmonics(int m, int k, const Partition& a);

// Closure of the simplicial monogenics of multidegree a under the raising
// operators h_ji (i < j): the isotypic component M_(a) inside degree |a|.
SubspaceBasis generate_M_component(int m, int k, const Partition& a, const SpinorFrame& frame);

// Dimensions via rank computations only.
mpz_class monogenic_dim(int m, int k, int degree, const SpinorFrame& frame);
mpz_class harmonic_dim_scalar(int m, int k, int degree);

// Fischer-orthogonal projections of a homogeneous polynomial onto the
// harmonic part (along sum r^2_ij P_{l-2}) or the monogenic part (along
// sum ux_j P_{l-1}). Block solvers are cached per degree, so reuse one
// projector when projecting many polynomials of the same slice.
class GradedProjector {
 public:
  enum class Mode { Harmonic, Monogenic };
  GradedProjector(Mode mode, int m, int k, int degree, const SpinorFrame* frame);
  ClPoly project(const ClPoly& P) const;
  long kernel_dim() const;  // dimension of the projection target in the slice

 private:
  struct Block {
    CoordinateChart chart;
    std::vector<ClPoly> kernel;
    RrefSolver solver;
  };
  Mode mode_;
  int m_, k_, degree_;
  const SpinorFrame* frame_;
  std::map<std::vector<int>, Block> blocks_;
};

ClPoly harmonic_projection(const ClPoly& P, const SpinorFrame* frame);
ClPoly monogenic_projection(const ClPoly& P, const SpinorFrame& frame);

// Kernel blocks of the monogenic system, memoized by multidegree.
class MonogenicCache {
 public:
  MonogenicCache(int m, int k, const SpinorFrame& frame) : m_(m), k_(k), frame_(&frame) {}
  const std::vector<ClPoly>& block(const std::vector<int>& a);
  mpz_class total_dim(int degree);

 private:
  int m_, k_;
  const SpinorFrame* frame_;
  std::map<std::vector<int>, std::vector<ClPoly>> blocks_;
};

// Exact basis of {v in ambient : <v, s> = 0 for all s in sub}; requires
// sub to be contained in the span of ambient.
SubspaceBasis orthogonal_complement(const SubspaceBasis& ambient, const SubspaceBasis& sub);

// Rank-based directness/spanning test for subspaces of one slice.
DirectSumReport is_direct_sum(const std::vector<SubspaceBasis>& parts, long ambient_dim);

}  // namespace fischer
