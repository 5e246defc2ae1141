#pragma once
/// Brute-force reference implementations for the test suite.  Everything in
/// this file favors the most literal possible reading of a definition over
/// speed, and shares no algorithmic machinery with the library code it
/// checks: counting is by direct tuple enumeration, minima by exhaustive
/// subset search, transforms by explicit character sums.

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "unicov/fourier.hpp"
#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/setops.hpp"

namespace oracles {

using unicov::DensityFunction;
using unicov::Elem;
using unicov::Group;
using unicov::GroupSet;
using unicov::Tuple;

/// Walk all tuples in G^n via a plain counter.
inline bool next_tuple(const Group& g, std::vector<Elem>& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < g.order) return true;
    t[i] = 0;
  }
  return false;
}

/// |W_1 x ... x W_n - Delta_n(S)|: tuples (x_1,...,x_n) such that some
/// y in S has y + x_i in W_i for every i.
inline std::uint64_t prod_diff_size(const std::vector<GroupSet>& factors,
                                    const GroupSet& s) {
  if (factors.empty()) throw std::invalid_argument("oracle: no factors");
  const Group& g = factors.front().group();
  const std::vector<Elem> ys = s.ranks();
  std::vector<Elem> x(factors.size(), 0);
  std::uint64_t count = 0;
  do {
    bool hit = false;
    for (const Elem y : ys) {
      bool all = true;
      for (std::size_t i = 0; i < factors.size() && all; ++i) {
        all = factors[i].test(unicov::add(g, y, x[i]));
      }
      if (all) {
        hit = true;
        break;
      }
    }
    if (hit) ++count;
  } while (next_tuple(g, x));
  return count;
}

inline std::uint64_t higher_diff_size(const GroupSet& a, std::uint64_t n,
                                      const GroupSet& s) {
  return oracles::prod_diff_size(std::vector<GroupSet>(n, a), s);
}

/// |A^m - Delta_{m_1..m_n;n}(B)|: x in G^m such that some b in B has
/// b_i + x_{i,j} in A for every block i and every j inside it.
inline std::uint64_t gen_diff_size(const GroupSet& a,
                                   const unicov::TupleSpec& spec,
                                   const std::vector<Tuple>& b_tuples) {
  const Group& g = a.group();
  const std::vector<Tuple> bs =
      unicov::normalize_tuples(g, b_tuples, spec.parts());
  if (bs.empty()) return 0;
  std::vector<Elem> x(spec.arity(), 0);
  std::uint64_t count = 0;
  do {
    bool hit = false;
    for (const Tuple& b : bs) {
      bool all = true;
      std::size_t coord = 0;
      for (std::size_t i = 0; i < spec.parts() && all; ++i) {
        for (std::uint32_t j = 0; j < spec.blocks[i] && all; ++j) {
          all = a.test(unicov::add(g, b[i], x[coord++]));
        }
      }
      if (all) {
        hit = true;
        break;
      }
    }
    if (hit) ++count;
  } while (next_tuple(g, x));
  return count;
}

struct UnValue {
  bool infinite = false;
  std::uint64_t value = 0;
};

/// Largest k such that every k-tuple of translates of A intersects, by
/// checking literal tuples level by level.  Failing tuples are invariant
/// under the diagonal shift x_i -> x_i + t, so fixing x_1 = 0 loses nothing.
inline UnValue un(const GroupSet& a) {
  if (a.is_empty()) throw std::invalid_argument("oracle un: empty set");
  if (a.is_full()) return {true, 0};
  const Group& g = a.group();
  const std::vector<Elem> as = a.ranks();
  for (std::uint64_t k = 1;; ++k) {
    std::vector<Elem> x(k, 0);  // x[0] stays 0
    bool all_meet = true;
    do {
      bool meets = false;
      for (const Elem y : as) {
        bool inside = true;
        for (std::uint64_t i = 0; i < k && inside; ++i) {
          inside = a.test(unicov::add(g, y, x[i]));
        }
        if (inside) {
          meets = true;
          break;
        }
      }
      if (!meets) {
        all_meet = false;
        break;
      }
      // advance coordinates 1..k-1 only
      bool more = false;
      for (std::uint64_t i = 1; i < k; ++i) {
        if (++x[i] < g.order) {
          more = true;
          break;
        }
        x[i] = 0;
      }
      if (!more) break;
    } while (true);
    if (!all_meet) return {false, k - 1};
  }
}

/// Minimum translate count covering E, by scanning every subset of shifts.
/// 2^N cover tests; keep N <= 16.
inline std::uint64_t cov(const GroupSet& a, const GroupSet& e) {
  if (a.is_empty()) throw std::invalid_argument("oracle cov: empty set");
  const Group& g = a.group();
  const std::uint64_t n = g.order;
  if (n > 16) throw std::invalid_argument("oracle cov: order too large");
  if (e.is_empty()) return 0;
  std::vector<GroupSet> shifted;
  shifted.reserve(n);
  for (Elem x = 0; x < n; ++x) shifted.push_back(unicov::translate(a, x));
  std::uint64_t best = n + 1;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    const auto bits =
        static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (bits >= best) continue;
    GroupSet u(g);
    for (Elem x = 0; x < n; ++x) {
      if ((mask >> x) & 1) u = unite(std::move(u), shifted[x]);
    }
    if (is_subset(e, u)) best = bits;
  }
  return best;
}

inline std::uint64_t cov(const GroupSet& a) {
  return cov(a, GroupSet::full(a.group()));
}

/// E_k(A) by direct enumeration of 2k-tuples with a common difference.
inline std::uint64_t higher_energy(const GroupSet& a, std::uint64_t k) {
  const Group& g = a.group();
  const std::vector<Elem> as = a.ranks();
  std::uint64_t total = 0;
  std::vector<std::size_t> idx(2 * k, 0);
  if (as.empty()) return 0;
  while (true) {
    bool chain = true;
    const Elem d0 = unicov::sub(g, as[idx[0]], as[idx[1]]);
    for (std::uint64_t p = 1; p < k && chain; ++p) {
      chain = unicov::sub(g, as[idx[2 * p]], as[idx[2 * p + 1]]) == d0;
    }
    if (chain) ++total;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == as.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return total;
}

/// hat f(chi_c) = sum_x f(x) conj(chi_c(x)) with the character evaluated
/// coordinatewise through std::polar.
inline DensityFunction dft(const DensityFunction& f) {
  const Group& g = f.group;
  const std::uint64_t n = g.order;
  DensityFunction out;
  out.group = g;
  out.values.assign(n, {0.0, 0.0});
  for (Elem c = 0; c < n; ++c) {
    std::complex<double> acc{0.0, 0.0};
    for (Elem x = 0; x < n; ++x) {
      double phase = 0.0;
      Elem cr = c;
      Elem xr = x;
      for (std::size_t i = g.factors.size(); i-- > 0;) {
        const std::uint64_t ni = g.factors[i];
        const std::uint64_t ci = cr % ni;
        const std::uint64_t xi = xr % ni;
        cr /= ni;
        xr /= ni;
        phase += unicov::kTau * static_cast<double>(ci * xi) /
                 static_cast<double>(ni);
      }
      acc += f.values[x] * std::polar(1.0, -phase);
    }
    out.values[c] = acc;
  }
  return out;
}

/// (f*g)(z) = sum_{x+y=z} f(x) g(y), complex arithmetic only.
inline DensityFunction convolve(const DensityFunction& f,
                                const DensityFunction& h) {
  const Group& g = f.group;
  DensityFunction out;
  out.group = g;
  out.values.assign(g.order, {0.0, 0.0});
  for (Elem x = 0; x < g.order; ++x) {
    for (Elem y = 0; y < g.order; ++y) {
      out.values[unicov::add(g, x, y)] += f.values[x] * h.values[y];
    }
  }
  return out;
}

/// Number of solutions of sum_i coeffs[i] * x_i = beta with all x_i in A.
inline std::uint64_t solution_count(const GroupSet& a,
                                    const std::vector<std::int64_t>& coeffs,
                                    Elem beta) {
  const Group& g = a.group();
  const std::vector<Elem> as = a.ranks();
  if (as.empty()) return 0;
  std::vector<std::size_t> idx(coeffs.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    Elem acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      acc = unicov::add(g, acc,
                        unicov::scalar_mul(g, coeffs[i], as[idx[i]]));
    }
    if (acc == beta) ++count;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == as.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return count;
}

}  // namespace oracles
