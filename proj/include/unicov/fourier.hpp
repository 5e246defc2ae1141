#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/numeric.hpp"

namespace unicov {

/// A function G -> C indexed by element rank.  Functions born from
/// indicators carry an exact integer layer (values[i] == nums[i]/den) that
/// survives convolution/correlation as long as the numerators fit in 64
/// bits; every exact quantity downstream is read off that layer.
struct DensityFunction {
  Group group;
  std::vector<std::complex<double>> values;
  bool exact = false;
  std::vector<std::int64_t> nums;
  std::int64_t den = 1;

  std::uint64_t order() const { return group.order; }
};

inline DensityFunction indicator(const GroupSet& a) {
  DensityFunction f;
  f.group = a.group();
  f.values.assign(a.order(), {0.0, 0.0});
  f.exact = true;
  f.nums.assign(a.order(), 0);
  f.den = 1;
  a.for_each([&](Elem x) {
    f.values[x] = {1.0, 0.0};
    f.nums[x] = 1;
  });
  return f;
}

/// f_A = 1_A - |A|/N, the mean-zero part of the indicator.
inline DensityFunction balanced_function(const GroupSet& a) {
  DensityFunction f;
  f.group = a.group();
  const std::uint64_t n = a.order();
  const auto size = static_cast<std::int64_t>(a.size());
  f.exact = true;
  f.den = static_cast<std::int64_t>(n);
  f.nums.assign(n, -size);
  a.for_each([&](Elem x) { f.nums[x] += f.den; });
  f.values.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    f.values[i] = {static_cast<double>(f.nums[i]) / static_cast<double>(f.den),
                   0.0};
  }
  return f;
}

namespace detail {

inline void require_same_group(const DensityFunction& f,
                               const DensityFunction& g) {
  if (!(f.group == g.group)) {
    throw std::invalid_argument("density functions live on different groups");
  }
}

/// Transform along one coordinate axis; `sign` -1 for the forward transform,
/// +1 for the inverse (which also divides by the factor size).
inline void axis_transform(std::vector<std::complex<double>>& v,
                           const Group& g, std::size_t axis, int sign) {
  const std::uint64_t n = g.factors[axis];
  const std::uint64_t stride = g.place[axis];
  const std::uint64_t block = stride * n;
  std::vector<std::complex<double>> root(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    const double ang = sign * kTau * static_cast<double>(t) /
                       static_cast<double>(n);
    root[t] = {std::cos(ang), std::sin(ang)};
  }
  std::vector<std::complex<double>> line(n), out(n);
  for (std::uint64_t base = 0; base < v.size(); base += block) {
    for (std::uint64_t off = 0; off < stride; ++off) {
      for (std::uint64_t t = 0; t < n; ++t) line[t] = v[base + off + t * stride];
      for (std::uint64_t c = 0; c < n; ++c) {
        std::complex<double> acc{0.0, 0.0};
        for (std::uint64_t t = 0; t < n; ++t) acc += line[t] * root[(c * t) % n];
        out[c] = sign > 0 ? acc / static_cast<double>(n) : acc;
      }
      for (std::uint64_t c = 0; c < n; ++c) v[base + off + c * stride] = out[c];
    }
  }
}

}  // namespace detail

/// hat f(chi_c) = sum_g f(g) conj(chi_c(g)), indexed by character rank c.
/// Direct per-factor evaluation, O(N * sum n_i); exact enough at desk scale.
inline DensityFunction dft(const DensityFunction& f) {
  DensityFunction out;
  out.group = f.group;
  out.values = f.values;
  for (std::size_t axis = 0; axis < f.group.factors.size(); ++axis) {
    detail::axis_transform(out.values, f.group, axis, -1);
  }
  return out;
}

/// Inverse of dft: f(g) = (1/N) sum_c hat f(c) chi_c(g).
inline DensityFunction idft(const DensityFunction& f) {
  DensityFunction out;
  out.group = f.group;
  out.values = f.values;
  for (std::size_t axis = 0; axis < f.group.factors.size(); ++axis) {
    detail::axis_transform(out.values, f.group, axis, +1);
  }
  return out;
}

namespace detail {

inline bool mul_overflows(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return false;
  const __int128 p = static_cast<__int128>(a) * b;
  return p > std::numeric_limits<std::int64_t>::max() ||
         p < std::numeric_limits<std::int64_t>::min();
}

template <typename IndexOp>
DensityFunction combine(const DensityFunction& f, const DensityFunction& g,
                        IndexOp&& index) {
  require_same_group(f, g);
  const Group& gr = f.group;
  const std::uint64_t n = gr.order;
  DensityFunction out;
  out.group = gr;
  out.values.assign(n, {0.0, 0.0});
  const bool try_exact = f.exact && g.exact && !mul_overflows(f.den, g.den);
  bool exact = try_exact;
  std::vector<__int128> acc;
  if (try_exact) acc.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (f.values[x] == std::complex<double>{0.0, 0.0} &&
        (!f.exact || f.nums[x] == 0)) {
      continue;
    }
    for (Elem y = 0; y < n; ++y) {
      const Elem z = index(gr, x, y);
      out.values[z] += f.values[x] * g.values[y];
      if (exact) acc[z] += static_cast<__int128>(f.nums[x]) * g.nums[y];
    }
  }
  if (exact) {
    for (std::uint64_t i = 0; i < n && exact; ++i) {
      if (acc[i] > std::numeric_limits<std::int64_t>::max() ||
          acc[i] < std::numeric_limits<std::int64_t>::min()) {
        exact = false;
      }
    }
  }
  if (exact) {
    out.exact = true;
    out.den = f.den * g.den;
    out.nums.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      out.nums[i] = static_cast<std::int64_t>(acc[i]);
      out.values[i] = {static_cast<double>(out.nums[i]) /
                           static_cast<double>(out.den),
                       0.0};
    }
  }
  return out;
}

}  // namespace detail

/// (f*g)(z) = sum_{x+y=z} f(x) g(y).  Quadratic; desk scale only.
inline DensityFunction convolve(const DensityFunction& f,
                                const DensityFunction& g) {
  return detail::combine(
      f, g, [](const Group& gr, Elem x, Elem y) { return add(gr, x, y); });
}

/// (f o g)(z) = sum_y f(y) g(y+z); for indicators, (A o A)(z) counts
/// representations z = a' - a.
inline DensityFunction correlate(const DensityFunction& f,
                                 const DensityFunction& g) {
  return detail::combine(
      f, g, [](const Group& gr, Elem x, Elem y) { return sub(gr, y, x); });
}

inline bool is_real(const DensityFunction& f, double tol = 1e-9) {
  for (const auto& v : f.values) {
    if (std::fabs(v.imag()) > tol) return false;
  }
  return true;
}

/// sum_x (f o f)(x)^k for real f.  Floating; use the integer routes below
/// whenever the result feeds an asserted comparison.
inline double ek_norm(const DensityFunction& f, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("ek_norm: k must be positive");
  if (!is_real(f)) throw std::invalid_argument("ek_norm: complex input");
  const DensityFunction c = correlate(f, f);
  double total = 0.0;
  for (const auto& v : c.values) total += std::pow(v.real(), k);
  return total;
}

/// (A o A) as exact counts: cnt[z] = #{(a,a') in A^2 : a' - a = z}.
inline std::vector<std::uint64_t> correlation_counts(const GroupSet& a) {
  std::vector<std::uint64_t> cnt(a.order(), 0);
  const auto ranks = a.ranks();
  for (Elem x : ranks) {
    for (Elem y : ranks) ++cnt[sub(a.group(), y, x)];
  }
  return cnt;
}

/// E_k(A) = sum_x (A o A)(x)^k, the number of 2k-tuples with a common
/// difference pattern; exact.
inline BigInt higher_energy(const GroupSet& a, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("higher_energy: k must be positive");
  const auto cnt = correlation_counts(a);
  BigInt total = 0;
  for (const std::uint64_t c : cnt) total += bi_pow(BigInt(c), k);
  return total;
}

/// sum_x (F o F)(x)^l for F = N*1_A - |A| (so F = N*f_A pointwise).  Exact:
/// equals N^{2l} * sum_x (f_A o f_A)(x)^l.  (F o F)(x) = N^2 (A o A)(x) -
/// N |A|^2, which fits in int64 for N <= 2^20.
inline BigInt balanced_correlation_power_sum(const GroupSet& a,
                                             std::uint64_t l) {
  if (l == 0) {
    throw std::invalid_argument("balanced_correlation_power_sum: l positive");
  }
  const auto cnt = correlation_counts(a);
  const auto n = static_cast<std::int64_t>(a.order());
  const auto size = static_cast<std::int64_t>(a.size());
  BigInt total = 0;
  for (const std::uint64_t c : cnt) {
    const std::int64_t ff = n * n * static_cast<std::int64_t>(c) -
                            n * size * size;
    total += bi_pow(BigInt(ff), l);
  }
  return total;
}

/// Characters whose indicator coefficient is large: chars holds every c with
/// |hat 1_A(chi_c)| >= eps*|A|, up to a 1e-9 guard band that keeps exact
/// boundary ties (subgroup annihilators and the like) inside.
struct SpectrumSet {
  Group group;
  double eps = 0.0;
  std::vector<Elem> chars;

  /// The spectrum without the principal character.
  std::vector<Elem> prime() const {
    std::vector<Elem> out;
    for (Elem c : chars) {
      if (c != 0) out.push_back(c);
    }
    return out;
  }
};

inline SpectrumSet spectrum(const GroupSet& a, double eps) {
  if (a.is_empty()) throw std::invalid_argument("spectrum: empty set");
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("spectrum: eps must lie in (0,1]");
  }
  const DensityFunction coeffs = dft(indicator(a));
  const double threshold = eps * static_cast<double>(a.size());
  SpectrumSet s;
  s.group = a.group();
  s.eps = eps;
  for (Elem c = 0; c < a.order(); ++c) {
    if (ge_guarded(std::abs(coeffs.values[c]), threshold)) s.chars.push_back(c);
  }
  return s;
}

/// (1/N) sum_chi |hat f(chi)|.
inline double wiener_norm(const DensityFunction& f) {
  const DensityFunction coeffs = dft(f);
  double total = 0.0;
  for (const auto& v : coeffs.values) total += std::abs(v);
  return total / static_cast<double>(f.order());
}

/// Bohr(Gamma, eps) = {x : |chi(x) - 1| <= eps for all chi in Gamma}.
/// |chi(x) - 1| = 2|sin(pi t / L)| with chi(x) = e(t/L), evaluated in long
/// double from the exact root of unity; the guard band admits exact
/// boundary radii.
inline GroupSet bohr_set(const Group& g, const std::vector<Elem>& gamma,
                         double eps) {
  if (eps < 0.0) throw std::invalid_argument("bohr_set: negative radius");
  for (Elem c : gamma) check_elem(g, c);
  GroupSet b(g);
  for (Elem x = 0; x < g.order; ++x) {
    bool inside = true;
    for (Elem c : gamma) {
      const RootOfUnity r = character_value(g, c, x);
      const long double t = static_cast<long double>(r.num) /
                            static_cast<long double>(r.den);
      const long double dist =
          2.0L * std::fabs(std::sin(static_cast<long double>(kTau) / 2.0L * t));
      if (!(static_cast<double>(dist) <= eps + kFloatGuard)) {
        inside = false;
        break;
      }
    }
    if (inside) b.insert(x);
  }
  return b;
}

}  // namespace unicov
