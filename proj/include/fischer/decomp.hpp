#pragma once

#include <map>
#include <string>
#include <vector>

#include "fischer/spaces.hpp"

namespace fischer {

// One summand of the degree-l decomposition: the image of the monogenic
// space of degree t under multiplication by prod_{i<=j} r^2_ij^{n_ij} and
// by ux_J (factors in increasing index order). The flattened n is indexed
// by (i,j), i <= j, in lexicographic order.
struct SummandIndex {
  std::vector<int> J;   // strictly increasing subset of {1..k}
  std::vector<int> n;   // length k(k+1)/2
  int t = 0;

  int degree() const;   // t + |J| + 2 sum n
  std::vector<int> multidegree_shift(int k) const;  // eps(J) + sum n_ij (e_i + e_j)
  std::string str() const;

  friend bool operator==(const SummandIndex& a, const SummandIndex& b) {
    return a.J == b.J && a.n == b.n && a.t == b.t;
  }
};

// Complete duplicate-free enumeration of the summands of total degree l:
// t descending, then J lexicographic (as increasing index lists), then n
// lexicographic.
std::vector<SummandIndex> enumerate_summands(int k, int degree);

// (prod r^2_ij^{n_ij}) ux_J v.
ClPoly apply_summand(const SummandIndex& s, const ClPoly& v);

struct SummandReport {
  SummandIndex index;
  long dim = 0;   // number of basis vectors carried over from M_t
  long rank = 0;  // verified rank of the image
};

struct VerifyReport {
  int m = 0, k = 0, degree = 0;
  bool stable = true;
  std::vector<SummandReport> summands;
  long total_dim = 0;
  long ambient_dim = 0;
  long rank = 0;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

// Builds one summand basis from the monogenic space of degree t; the rank
// of the image is computed, not assumed, and a rank deficit throws unless
// the unstable override is set (the report then carries the deficit).
SubspaceBasis build_summand_basis(const SummandIndex& s, int m, int k, const SpinorFrame& frame,
                                  bool allow_unstable = false);

struct Component {
  SummandIndex index;
  ClPoly monogenic;  // element of M_t
  ClPoly term;       // (prod r^2^n) ux_J monogenic
  Component(SummandIndex idx, ClPoly mono, ClPoly trm)
      : index(std::move(idx)), monogenic(std::move(mono)), term(std::move(trm)) {}
};

struct DecompositionResult {
  std::vector<Component> components;  // enumeration order, nonzero parts only
  ClPoly reassembled;
  ClPoly residual;  // input minus reassembled; zero on success
  bool unique = true;  // false when produced under the unstable override
  DecompositionResult(int m, int k) : reassembled(m, k), residual(m, k) {}
};

// Verified decomposition engine for one slice: builds every summand basis,
// checks directness and spanning blockwise by multidegree, and factors the
// block systems once so that many polynomials can be decomposed against the
// same slice.
class FischerDecomposer {
 public:
  // Throws std::domain_error outside the stable range m >= 2k unless
  // allow_unstable is set.
  FischerDecomposer(int m, int k, int degree, const SpinorFrame& frame,
                    bool allow_unstable = false);

  const VerifyReport& report() const { return report_; }

  // Exact coordinates of a homogeneous spinor-valued polynomial of the
  // slice degree in the concatenated summand basis. Reassembly is checked
  // bit-exactly; the residual of a successful decomposition is zero.
  DecompositionResult decompose(const ClPoly& P) const;

 private:
  struct ColumnMeta {
    std::size_t summand;        // index into summands_
    std::vector<int> source;    // multidegree of the monogenic block
    std::size_t vector_index;   // basis vector within that block
  };
  struct Block {
    CoordinateChart chart;
    std::vector<ColumnMeta> meta;
    RrefSolver solver;
  };

  int m_, k_, degree_;
  const SpinorFrame* frame_;
  std::vector<SummandIndex> summands_;
  mutable MonogenicCache cache_;
  std::map<std::vector<int>, Block> blocks_;
  VerifyReport report_;
};

// Rank-only verification of the degree-l decomposition (directness, total
// dimension, spanning), blockwise by multidegree.
VerifyReport verify_monogenic_decomposition(int m, int k, int degree, const SpinorFrame& frame,
                                            bool allow_unstable = false);

// One-shot decomposition; inhomogeneous input is decomposed degree by
// degree and merged.
DecompositionResult fischer_decompose(const ClPoly& P, const SpinorFrame& frame,
                                      bool allow_unstable = false);

// The harmonic refinement of degree l: the projections pi(ux_J M_{l-|J|})
// over all subsets J are direct and fill the harmonic subspace exactly;
// each image keeps the dimension of M_{l-|J|} both before and after
// projection.
struct RefinementPart {
  std::vector<int> J;
  long dim = 0;            // dim M_{l-|J|}
  long rank_product = 0;   // rank of ux_J M
  long rank_projected = 0; // rank of pi(ux_J M)
};

struct RefinementReport {
  int m = 0, k = 0, degree = 0;
  std::vector<RefinementPart> parts;
  long total_dim = 0;
  long harmonic_dim = 0;
  long rank = 0;
  bool pass = false;
};

RefinementReport harmonic_refinement(int m, int k, int degree, const SpinorFrame& frame);

// Scalar regression: the classical separation of variables at degree l,
// P_l = sum (prod r^2_ij^{n_ij}) H_t over 2 sum n = l - t, checked for
// directness and spanning with the same blockwise machinery.
VerifyReport verify_scalar_decomposition(int m, int k, int degree, bool allow_unstable = false);

}  // namespace fischer
