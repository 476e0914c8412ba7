#include "fischer/repdim.hpp"

#include <stdexcept>

namespace fischer {

bool is_partition(const Partition& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return false;
    if (i + 1 < a.size() && a[i] < a[i + 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int total, int parts) {
  std::vector<Partition> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  Partition cur(parts, 0);
  auto rec = [&](auto&& self, int pos, int remaining, int cap) -> void {
    if (pos == parts) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total, total);
  return out;
}

HighestWeight HighestWeight::from_partition(const Partition& a, int length) {
  Partition t = a;
  while (!t.empty() && t.back() == 0) t.pop_back();
  if (static_cast<int>(t.size()) > length)
    throw std::invalid_argument("HighestWeight: partition longer than rank");
  HighestWeight w;
  w.entries.assign(length, Rational(0));
  for (std::size_t i = 0; i < t.size(); ++i) w.entries[i] = Rational(t[i]);
  return w;
}

namespace {

int so_rank(int m) {
  if (m < 3) throw std::invalid_argument("so(m): m must exceed 2");
  return m / 2;
}

Partition strip_trailing_zeros(Partition a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// All entries integers, or all half-odd-integers.
bool uniform_integrality(const std::vector<Rational>& lambda) {
  bool any_half = false, any_int = false;
  for (const auto& x : lambda) {
    if (x.get_den() == 1)
      any_int = true;
    else if (x.get_den() == 2)
      any_half = true;
    else
      return false;
  }
  return !(any_half && any_int);
}

std::vector<Rational> so_rho(int m) {
  int n = so_rank(m);
  std::vector<Rational> rho(n);
  for (int i = 0; i < n; ++i)
    rho[i] = (m % 2 == 1) ? make_rational(2 * (n - i) - 1, 2) : Rational(n - 1 - i);
  return rho;
}

}  // namespace

bool so_dominant(int m, const std::vector<Rational>& lambda) {
  int n = so_rank(m);
  if (static_cast<int>(lambda.size()) != n) return false;
  if (!uniform_integrality(lambda)) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  if (m % 2 == 1) return sgn(lambda[n - 1]) >= 0;
  if (n >= 2) return lambda[n - 2] >= abs(lambda[n - 1]);
  return true;
}

mpz_class weyl_dim_so(int m, const std::vector<Rational>& lambda) {
  if (!so_dominant(m, lambda)) throw std::invalid_argument("weyl_dim_so: weight not dominant");
  int n = so_rank(m);
  std::vector<Rational> rho = so_rho(m);
  std::vector<Rational> l(n);
  for (int i = 0; i < n; ++i) l[i] = lambda[i] + rho[i];
  Rational num(1), den(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= l[i] * l[i] - l[j] * l[j];
      den *= rho[i] * rho[i] - rho[j] * rho[j];
    }
  if (m % 2 == 1)
    for (int i = 0; i < n; ++i) {
      num *= l[i];
      den *= rho[i];
    }
  Rational dim = num / den;
  if (dim.get_den() != 1 || sgn(dim) <= 0)
    throw std::logic_error("weyl_dim_so: non-integral dimension");
  return dim.get_num();
}

mpz_class gl_dim(int k, const std::vector<Rational>& lambda) {
  if (static_cast<int>(lambda.size()) != k) throw std::invalid_argument("gl_dim: weight length != k");
  for (int i = 0; i + 1 < k; ++i) {
    Rational d = lambda[i] - lambda[i + 1];
    if (sgn(d) < 0 || d.get_den() != 1)
      throw std::invalid_argument("gl_dim: weight not dominant with integer steps");
  }
  Rational num(1), den(1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= lambda[i] - lambda[j] + (j - i);
      den *= j - i;
    }
  Rational dim = num / den;
  if (dim.get_den() != 1 || sgn(dim) <= 0) throw std::logic_error("gl_dim: non-integral dimension");
  return dim.get_num();
}

mpz_class gl_dim(int k, const Partition& a) {
  if (!is_partition(a)) throw std::invalid_argument("gl_dim: not a partition");
  if (static_cast<int>(a.size()) > k) throw std::invalid_argument("gl_dim: partition longer than k");
  std::vector<Rational> lambda(k, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) lambda[i] = Rational(a[i]);
  return gl_dim(k, lambda);
}

std::vector<std::vector<Rational>> klimyk_spinor_tensor(int m, const Partition& lambda) {
  if (!is_partition(lambda)) throw std::invalid_argument("klimyk: lambda must be a partition");
  int n = so_rank(m);
  HighestWeight base = HighestWeight::from_partition(lambda, n);
  if (!so_dominant(m, base.entries)) throw std::invalid_argument("klimyk: lambda not dominant");
  Rational half = make_rational(1, 2);
  std::vector<std::vector<Rational>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Rational> nu = base.entries;
    for (int i = 0; i < n; ++i) nu[i] += ((mask >> i) & 1u) ? -half : half;
    if (so_dominant(m, nu)) out.push_back(std::move(nu));
  }
  return out;
}

std::size_t klimyk_orbit_count(int m, const std::vector<std::vector<Rational>>& decomp) {
  if (m % 2 == 1) return decomp.size();
  std::vector<std::vector<Rational>> reps;
  for (const auto& nu : decomp) {
    std::vector<Rational> mirror = nu;
    if (!mirror.empty()) mirror.back() = -mirror.back();
    bool seen = false;
    for (const auto& r : reps)
      if (r == nu || r == mirror) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(nu);
  }
  return reps.size();
}

std::vector<Partition> pieri_wedge(int k, int j, const Partition& a) {
  if (!is_partition(a)) throw std::invalid_argument("pieri: not a partition");
  if (j < 0 || j > k) throw std::invalid_argument("pieri: j out of range");
  if (static_cast<int>(a.size()) > k) throw std::invalid_argument("pieri: partition longer than k");
  Partition base(k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) base[i] = a[i];
  std::vector<Partition> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (__builtin_popcount(mask) != j) continue;
    Partition b = base;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) b[i] += 1;
    if (is_partition(b)) out.push_back(std::move(b));
  }
  return out;
}

mpz_class spinor_module_dim(int m, const Partition& a) {
  if (!is_partition(a)) throw std::invalid_argument("spinor_module_dim: not a partition");
  int n = so_rank(m);
  Partition t = strip_trailing_zeros(a);
  if (static_cast<int>(t.size()) > n)
    throw std::invalid_argument("spinor_module_dim: partition longer than rank");
  Rational half = make_rational(1, 2);
  std::vector<Rational> w(n, half);
  for (std::size_t i = 0; i < t.size(); ++i) w[i] += Rational(t[i]);
  if (m % 2 == 1) return weyl_dim_so(m, w);
  std::vector<Rational> wm = w;
  wm[n - 1] = -wm[n - 1];
  return weyl_dim_so(m, w) + weyl_dim_so(m, wm);
}

mpz_class harmonic_module_dim(int m, const Partition& a) {
  if (!is_partition(a)) throw std::invalid_argument("harmonic_module_dim: not a partition");
  int n = so_rank(m);
  Partition t = strip_trailing_zeros(a);
  if (static_cast<int>(t.size()) > n)
    throw std::invalid_argument("harmonic_module_dim: partition longer than rank");
  std::vector<Rational> w(n, Rational(0));
  for (std::size_t i = 0; i < t.size(); ++i) w[i] = Rational(t[i]);
  mpz_class d = weyl_dim_so(m, w);
  // In even dimension a weight with nonzero last entry labels a mirror pair.
  if (m % 2 == 0 && sgn(w[n - 1]) != 0) d *= 2;
  return d;
}

mpz_class invariant_words(int k, int s) {
  if (s < 0) return 0;
  mpz_class total = 0;
  int K = k * (k + 1) / 2;
  for (int j = 0; j <= k && j <= s; ++j) {
    int rest = s - j;
    if (rest % 2 != 0) continue;
    total += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) *
             binomial(static_cast<unsigned long>(rest / 2 + K - 1),
                      static_cast<unsigned long>(K - 1));
  }
  return total;
}

GradedDimReport graded_dim_identities(int m, int k, int degree,
                                      const std::function<mpz_class(int)>& dim_M,
                                      const std::function<mpz_class(int)>& dim_H,
                                      bool allow_unstable) {
  if (m < 2 * k && !allow_unstable)
    throw std::domain_error("graded_dim_identities: outside the stable range m >= 2k");
  GradedDimReport rep;
  rep.m = m;
  rep.k = k;
  rep.degree = degree;
  rep.stable = m >= 2 * k;
  int n = m / 2;
  mpz_class spin_dim = mpz_class(1) << n;

  rep.dim_slice = binomial(static_cast<unsigned long>(degree + m * k - 1),
                           static_cast<unsigned long>(m * k - 1)) *
                  spin_dim;

  rep.dim_M = dim_M(degree);
  rep.dim_M_formula = 0;
  bool formula_a_ok = true;
  for (const auto& a : partitions_of(degree, k)) {
    try {
      rep.dim_M_formula += spinor_module_dim(m, a) * gl_dim(k, a);
    } catch (const std::invalid_argument&) {
      formula_a_ok = false;  // partitions beyond the rank, unstable range only
    }
  }
  rep.identity_a = formula_a_ok && rep.dim_M == rep.dim_M_formula;

  rep.dim_H = dim_H(degree);
  rep.dim_HS = rep.dim_H * spin_dim;
  rep.sum_M_subsets = 0;
  for (int j = 0; j <= k && j <= degree; ++j)
    rep.sum_M_subsets +=
        binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)) * dim_M(degree - j);
  rep.identity_b = rep.dim_HS == rep.sum_M_subsets;

  rep.sum_counting = 0;
  for (int t = 0; t <= degree; ++t) rep.sum_counting += dim_M(t) * invariant_words(k, degree - t);
  rep.identity_c = rep.dim_slice == rep.sum_counting;

  rep.dim_H_formula = 0;
  bool formula_d_ok = true;
  for (const auto& a : partitions_of(degree, k)) {
    try {
      rep.dim_H_formula += harmonic_module_dim(m, a) * gl_dim(k, a);
    } catch (const std::invalid_argument&) {
      formula_d_ok = false;
    }
  }
  rep.identity_d = formula_d_ok && rep.dim_H == rep.dim_H_formula;

  rep.pass = rep.identity_a && rep.identity_b && rep.identity_c && rep.identity_d;
  return rep;
}

}  // namespace fischer
