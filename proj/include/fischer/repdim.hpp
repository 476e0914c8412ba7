#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fischer/rational.hpp"

namespace fischer {

// Weakly decreasing vector of nonnegative integers.
using Partition = std::vector<int>;
bool is_partition(const Partition& a);
// All partitions of `total` into at most `parts` parts (padded with zeros),
// in a fixed deterministic order.
std::vector<Partition> partitions_of(int total, int parts);

// Dominant highest weight for so(m) (length floor(m/2), all entries in Z or
// all in Z + 1/2) or gl(k) (length k, weakly decreasing with integer steps).
struct HighestWeight {
  std::vector<Rational> entries;
  static HighestWeight from_partition(const Partition& a, int length);
};

bool so_dominant(int m, const std::vector<Rational>& lambda);

// Weyl dimension formula for so(m), exact. Throws on non-dominant weights.
mpz_class weyl_dim_so(int m, const std::vector<Rational>& lambda);

// Dimension of the gl(k) irreducible with highest weight lambda. A uniform
// rational shift of all entries does not change the value; consecutive
// differences must be nonnegative integers.
mpz_class gl_dim(int k, const std::vector<Rational>& lambda);
mpz_class gl_dim(int k, const Partition& a);

// Decomposition of E_lambda (x) S into irreducibles: all dominant nu of the
// form lambda + alpha with alpha running over the 2^n spinor weights
// (+-1/2, ..., +-1/2), each with multiplicity one. lambda is a partition
// padded with zeros to length n.
std::vector<std::vector<Rational>> klimyk_spinor_tensor(int m, const Partition& lambda);

// Summand count with a mirror pair (nu and nu with the last entry negated,
// even m only) counted once. The 2^k bound on the decomposition of
// E_lambda (x) S for lambda with k nonzero parts holds at this granularity;
// the raw count reaches 2^(k+1) in even dimension when the weight has a
// zero tail, one summand per half-spinor component.
std::size_t klimyk_orbit_count(int m, const std::vector<std::vector<Rational>>& decomp);

// Wedge-power Pieri rule: the dominant a + eps(J) over all j-element subsets
// J of {1..k}, where eps(J) is the indicator vector of J.
std::vector<Partition> pieri_wedge(int k, int j, const Partition& a);

// Dimension of the simplicial monogenic module of multidegree a: the Weyl
// dimension of a' = (a_1+1/2, ..., a_k+1/2, 1/2, ..., 1/2) for odd m, and
// the sum over the two half-spinor weights a'_{+-} for even m.
mpz_class spinor_module_dim(int m, const Partition& a);

// Dimension of the space of simplicial harmonics of multidegree a: the Weyl
// dimension of the integral weight a, doubled in even dimension m when the
// padded weight has a nonzero final entry (both mirror components occur).
mpz_class harmonic_module_dim(int m, const Partition& a);

// Number of pairs (J, {n_ij}) with |J| + 2*sum n_ij = s for J a subset of
// {1..k} and n a family indexed by 1 <= i <= j <= k.
mpz_class invariant_words(int k, int s);

// The graded dimension identities at total degree l:
//   (a) dim M_l           = sum_{|a|=l} spinor_module_dim(a) * gl_dim(a)
//   (b) dim H_l * 2^n     = sum_{J subset of {1..k}} dim M_{l-|J|}
//   (c) C(l+mk-1,mk-1)*2^n = sum_t dim M_t * invariant_words(k, l-t)
//   (d) dim H_l           = sum_{|a|=l} harmonic_module_dim(a) * gl_dim(a)
// dim M_t and dim H_t come from the caller (exact kernel computations).
struct GradedDimReport {
  int m = 0, k = 0, degree = 0;
  bool stable = true;
  mpz_class dim_slice;      // C(l+mk-1, mk-1) * 2^n
  mpz_class dim_M;          // provided
  mpz_class dim_M_formula;  // identity (a) right-hand side
  mpz_class dim_HS;         // dim H_l * 2^n
  mpz_class sum_M_subsets;  // identity (b) right-hand side
  mpz_class sum_counting;   // identity (c) right-hand side
  mpz_class dim_H;          // provided
  mpz_class dim_H_formula;  // identity (d) right-hand side
  bool identity_a = false, identity_b = false, identity_c = false, identity_d = false;
  bool pass = false;
};

// Throws std::domain_error outside the stable range m >= 2k unless
// allow_unstable is set.
GradedDimReport graded_dim_identities(int m, int k, int degree,
                                      const std::function<mpz_class(int)>& dim_M,
                                      const std::function<mpz_class(int)>& dim_H,
                                      bool allow_unstable = false);

}  // namespace fischer
