#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "unicov/fourier.hpp"
#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/numeric.hpp"

namespace unicov {

/// States kept by the intersection-profile dynamic programs below.
inline constexpr std::size_t kDefaultProfileCap = 1u << 16;

/// Counting cap for tuple spaces: N^n must stay below 2^62 so every tally
/// fits comfortably in uint64.
inline constexpr std::uint64_t kCountCap = 1ull << 62;

/// (A*B)(x) = #{(a,b) in A x B : a+b = x}, returned with the exact layer
/// populated (den = 1).
inline DensityFunction representation_count(const GroupSet& a,
                                            const GroupSet& b) {
  a.require_same_group(b);
  DensityFunction f;
  f.group = a.group();
  f.values.assign(a.order(), {0.0, 0.0});
  f.exact = true;
  f.den = 1;
  f.nums.assign(a.order(), 0);
  const auto ra = a.ranks();
  const auto rb = b.ranks();
  for (Elem x : ra) {
    for (Elem y : rb) ++f.nums[add(a.group(), x, y)];
  }
  for (std::uint64_t i = 0; i < a.order(); ++i) {
    f.values[i] = {static_cast<double>(f.nums[i]), 0.0};
  }
  return f;
}

/// {x : (A*B)(x) >= eps*N}.  The guard band admits exact boundary ties; a
/// positive count is required so the result is always inside A+B.
inline GroupSet popular_sumset(const GroupSet& a, const GroupSet& b,
                               double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("popular_sumset: eps must lie in (0,1]");
  }
  const DensityFunction counts = representation_count(a, b);
  const double threshold = eps * static_cast<double>(a.order());
  GroupSet out(a.group());
  for (Elem x = 0; x < a.order(); ++x) {
    const auto c = static_cast<double>(counts.nums[x]);
    if (counts.nums[x] >= 1 && ge_guarded(c, threshold)) out.insert(x);
  }
  return out;
}

/// Membership test for x in A_1 x...x A_n - Delta_n(S):
/// true iff S intersects every A_i - x_i.
inline bool higher_diff_membership(const std::vector<GroupSet>& factors,
                                   const GroupSet& s,
                                   const std::vector<Elem>& xs) {
  if (factors.size() != xs.size() || factors.empty()) {
    throw std::invalid_argument("higher_diff_membership: arity mismatch");
  }
  GroupSet t = s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    factors[i].require_same_group(s);
    t = intersect(t, translate(factors[i], neg(s.group(), xs[i])));
    if (t.is_empty()) return false;
  }
  return !t.is_empty();
}

namespace detail {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t x : w) {
      h ^= x;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// words(A - x) for every x in G, indexed by x.
inline std::vector<std::vector<std::uint64_t>> translate_table(
    const GroupSet& a) {
  const Group& g = a.group();
  if (g.order > 8192) {
    throw std::overflow_error("translate_table: group too large for the DP");
  }
  std::vector<std::vector<std::uint64_t>> table(g.order);
  for (Elem x = 0; x < g.order; ++x) {
    table[x] = translate(a, neg(g, x)).words();
  }
  return table;
}

inline bool intersect_words(const std::vector<std::uint64_t>& a,
                            const std::vector<std::uint64_t>& b,
                            std::vector<std::uint64_t>& out) {
  bool nonempty = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] & b[i];
    nonempty |= out[i] != 0;
  }
  return nonempty;
}

}  // namespace detail

/// |A_1 x...x A_n - Delta_n(S)| = #{(x_1..x_n) : S meets every A_i - x_i},
/// computed by a dynamic program over distinct running intersections
/// ("profiles") instead of the N^n tuple space.  Throws when the profile
/// population exceeds `profile_cap` or N^n leaves the counting range.
inline std::uint64_t prod_diff_size(const std::vector<GroupSet>& factors,
                                    const GroupSet& s,
                                    std::size_t profile_cap = kDefaultProfileCap) {
  if (factors.empty()) {
    throw std::invalid_argument("prod_diff_size: no factors");
  }
  for (const GroupSet& f : factors) f.require_same_group(s);
  checked_pow(s.order(), factors.size(), kCountCap);
  if (s.is_empty()) return 0;

  using Words = std::vector<std::uint64_t>;
  std::unordered_map<Words, std::uint64_t, detail::WordsHash> states;
  states.emplace(s.words(), 1);

  std::unordered_map<Words, std::vector<std::vector<std::uint64_t>>,
                     detail::WordsHash>
      tables;
  Words scratch(s.words().size());
  for (const GroupSet& f : factors) {
    auto it = tables.find(f.words());
    if (it == tables.end()) {
      it = tables.emplace(f.words(), detail::translate_table(f)).first;
    }
    const auto& table = it->second;
    std::unordered_map<Words, std::uint64_t, detail::WordsHash> next;
    for (const auto& [t, count] : states) {
      for (Elem x = 0; x < s.order(); ++x) {
        if (detail::intersect_words(t, table[x], scratch)) {
          next[scratch] += count;
        }
      }
      if (next.size() > profile_cap) {
        throw std::overflow_error("prod_diff_size: profile cap exceeded");
      }
    }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  std::uint64_t total = 0;
  for (const auto& [t, count] : states) total += count;
  return total;
}

/// |A^n - Delta_n(S)|.
inline std::uint64_t higher_diff_size(const GroupSet& a, std::uint64_t n,
                                      const GroupSet& s,
                                      std::size_t profile_cap = kDefaultProfileCap) {
  if (n == 0) throw std::invalid_argument("higher_diff_size: n must be >= 1");
  return prod_diff_size(std::vector<GroupSet>(n, a), s, profile_cap);
}

/// Block structure (m_1,...,m_n) for tuple shift sets: an m-coordinate
/// space split into n consecutive blocks, block i shifted by one witness
/// coordinate.
struct TupleSpec {
  std::vector<std::uint32_t> blocks;

  std::size_t parts() const { return blocks.size(); }
  std::uint64_t arity() const {
    std::uint64_t m = 0;
    for (std::uint32_t b : blocks) {
      if (b == 0) throw std::invalid_argument("TupleSpec: empty block");
      m += b;
    }
    if (m == 0) throw std::invalid_argument("TupleSpec: no blocks");
    return m;
  }
};

using Tuple = std::vector<Elem>;

/// Validate arity/coordinates, then sort and dedupe.
inline std::vector<Tuple> normalize_tuples(const Group& g,
                                           std::vector<Tuple> tuples,
                                           std::size_t arity) {
  for (const Tuple& t : tuples) {
    if (t.size() != arity) {
      throw std::invalid_argument("normalize_tuples: arity mismatch");
    }
    for (Elem x : t) check_elem(g, x);
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return tuples;
}

/// |A^m - Delta_{m_1..m_n;n}(B)| for B a set of n-tuples: the number of
/// x in G^m such that some b in B has b_i in the intersection of A - x_{i,j}
/// over block i, for every block simultaneously.  Witness sets are tracked
/// as 64-bit masks, so |B| <= 64.
inline std::uint64_t gen_diff_size(const GroupSet& a, const TupleSpec& spec,
                                   const std::vector<Tuple>& b_tuples) {
  const Group& g = a.group();
  const std::uint64_t m = spec.arity();
  checked_pow(g.order, m, kCountCap);
  const std::vector<Tuple> b = normalize_tuples(g, b_tuples, spec.parts());
  if (b.empty()) return 0;
  if (b.size() > 64) {
    throw std::invalid_argument("gen_diff_size: witness set larger than 64");
  }

  // Per block: tally mask -> number of block assignments realizing it.
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> block_masks;
  block_masks.reserve(spec.parts());
  for (std::size_t i = 0; i < spec.parts(); ++i) {
    const std::uint32_t mi = spec.blocks[i];
    checked_pow(g.order, mi, 1ull << 20);
    std::unordered_map<std::uint64_t, std::uint64_t> tally;
    std::vector<Elem> y(mi, 0);
    while (true) {
      GroupSet t = translate(a, neg(g, y[0]));
      for (std::uint32_t j = 1; j < mi && !t.is_empty(); ++j) {
        t = intersect(t, translate(a, neg(g, y[j])));
      }
      std::uint64_t mask = 0;
      for (std::size_t idx = 0; idx < b.size(); ++idx) {
        if (t.test(b[idx][i])) mask |= 1ull << idx;
      }
      if (mask != 0) ++tally[mask];
      std::uint32_t pos = 0;
      while (pos < mi && ++y[pos] == g.order) y[pos++] = 0;
      if (pos == mi) break;
    }
    if (tally.empty()) return 0;
    block_masks.push_back(std::move(tally));
  }

  std::unordered_map<std::uint64_t, std::uint64_t> acc{
      {b.size() == 64 ? ~0ull : (1ull << b.size()) - 1, 1}};
  for (const auto& tally : block_masks) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    for (const auto& [m1, c1] : acc) {
      for (const auto& [m2, c2] : tally) {
        const std::uint64_t mm = m1 & m2;
        if (mm != 0) next[mm] += c1 * c2;
      }
    }
    if (next.empty()) return 0;
    acc = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [mask, count] : acc) total += count;
  return total;
}

namespace detail {

inline std::uint64_t rank_coords(const Group& g,
                                 const std::vector<Elem>& coords) {
  std::uint64_t r = 0;
  for (Elem c : coords) r = r * g.order + c;
  return r;
}

}  // namespace detail

/// |A x_{m_1..m_n} B - Delta_{m_1+1..m_n+1;n}(C)| where A holds m-tuples and
/// B, C hold n-tuples: images are the interleaved tuples
/// (a_{i,1}-c_i, ..., a_{i,m_i}-c_i, b_i-c_i)_{i<=n}, deduplicated by rank.
inline std::uint64_t gen_product_diff_size(const std::vector<Tuple>& a_tuples,
                                           const std::vector<Tuple>& b_tuples,
                                           const std::vector<Tuple>& c_tuples,
                                           const TupleSpec& spec,
                                           const Group& g) {
  const std::uint64_t m = spec.arity();
  const std::size_t n = spec.parts();
  checked_pow(g.order, m + n, kCountCap);
  const auto as = normalize_tuples(g, a_tuples, m);
  const auto bs = normalize_tuples(g, b_tuples, n);
  const auto cs = normalize_tuples(g, c_tuples, n);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Elem> coords(m + n);
  for (const Tuple& a : as) {
    for (const Tuple& b : bs) {
      for (const Tuple& c : cs) {
        std::size_t src = 0;
        std::size_t dst = 0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::uint32_t j = 0; j < spec.blocks[i]; ++j) {
            coords[dst++] = sub(g, a[src++], c[i]);
          }
          coords[dst++] = sub(g, b[i], c[i]);
        }
        seen.insert(detail::rank_coords(g, coords));
      }
    }
  }
  return seen.size();
}

/// |A +- Delta_{m_1..m_n;n}(B)| for A a set of m-tuples, B n-tuples:
/// coordinates a_{i,j} +- b_i, deduplicated.  sign is +1 or -1.
inline std::uint64_t tuple_diff_size(const std::vector<Tuple>& a_tuples,
                                     const TupleSpec& spec,
                                     const std::vector<Tuple>& b_tuples,
                                     int sign, const Group& g) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("tuple_diff_size: sign must be +-1");
  }
  const std::uint64_t m = spec.arity();
  checked_pow(g.order, m, kCountCap);
  const auto as = normalize_tuples(g, a_tuples, m);
  const auto bs = normalize_tuples(g, b_tuples, spec.parts());
  std::unordered_set<std::uint64_t> seen;
  std::vector<Elem> coords(m);
  for (const Tuple& a : as) {
    for (const Tuple& b : bs) {
      std::size_t src = 0;
      for (std::size_t i = 0; i < spec.parts(); ++i) {
        for (std::uint32_t j = 0; j < spec.blocks[i]; ++j) {
          coords[src] = sign > 0 ? add(g, a[src], b[i]) : sub(g, a[src], b[i]);
          ++src;
        }
      }
      seen.insert(detail::rank_coords(g, coords));
    }
  }
  return seen.size();
}

/// |B +- C| for sets of n-tuples (coordinatewise sums/differences).
inline std::uint64_t tuple_pm_size(const std::vector<Tuple>& b_tuples,
                                   const std::vector<Tuple>& c_tuples,
                                   int sign, const Group& g) {
  if (b_tuples.empty() || c_tuples.empty()) return 0;
  const std::size_t n = b_tuples.front().size();
  checked_pow(g.order, n, kCountCap);
  const auto bs = normalize_tuples(g, b_tuples, n);
  const auto cs = normalize_tuples(g, c_tuples, n);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Elem> coords(n);
  for (const Tuple& b : bs) {
    for (const Tuple& c : cs) {
      for (std::size_t i = 0; i < n; ++i) {
        coords[i] = sign > 0 ? add(g, b[i], c[i]) : sub(g, b[i], c[i]);
      }
      seen.insert(detail::rank_coords(g, coords));
    }
  }
  return seen.size();
}

/// All m-tuples of a set, i.e. A^m as a tuple list.  Guarded by |A|^m.
inline std::vector<Tuple> tuple_power(const GroupSet& a, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("tuple_power: m must be >= 1");
  checked_pow(std::max<std::uint64_t>(a.size(), 1), m, 1ull << 20);
  std::vector<Tuple> out;
  const auto ranks = a.ranks();
  if (ranks.empty()) return out;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    Tuple t(m);
    for (std::uint32_t i = 0; i < m; ++i) t[i] = ranks[idx[i]];
    out.push_back(std::move(t));
    std::uint32_t pos = 0;
    while (pos < m && ++idx[pos] == ranks.size()) idx[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

/// 0A = {0}; otherwise A + ... + A, n summands.
inline GroupSet iterated_sumset(const GroupSet& a, std::uint64_t n) {
  GroupSet acc = GroupSet::from_ranks(a.group(), {0});
  for (std::uint64_t i = 0; i < n; ++i) acc = sumset(acc, a);
  return acc;
}

/// nA - mA.
inline GroupSet span_set(const GroupSet& a, std::uint64_t n, std::uint64_t m) {
  GroupSet acc = iterated_sumset(a, n);
  const GroupSet na = negate_set(a);
  for (std::uint64_t i = 0; i < m; ++i) acc = sumset(acc, na);
  return acc;
}

struct SolutionCount {
  std::uint64_t count = 0;
  bool all_unit_coefficients = true;
};

/// Number of tuples (x_1..x_n) in A^n with sum_j coeffs[j]*x_j = beta,
/// computed by n-1 convolutions of the dilated indicator count vectors.
/// Counts of tuples are bounded by |A|^n, which is range-checked.
inline SolutionCount solution_count(const GroupSet& a,
                                    const std::vector<std::int64_t>& coeffs,
                                    Elem beta) {
  if (coeffs.size() < 2) {
    throw std::invalid_argument("solution_count: need at least two terms");
  }
  const Group& g = a.group();
  check_elem(g, beta);
  checked_pow(std::max<std::uint64_t>(a.size(), 1), coeffs.size(), kCountCap);
  SolutionCount result;
  for (std::int64_t c : coeffs) {
    result.all_unit_coefficients =
        result.all_unit_coefficients && is_unit(g, c);
  }
  auto dilated_counts = [&](std::int64_t c) {
    std::vector<std::uint64_t> v(g.order, 0);
    a.for_each([&](Elem x) { ++v[scalar_mul(g, c, x)]; });
    return v;
  };
  std::vector<std::uint64_t> acc = dilated_counts(coeffs[0]);
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    const std::vector<std::uint64_t> next = dilated_counts(coeffs[j]);
    std::vector<std::uint64_t> out(g.order, 0);
    for (Elem x = 0; x < g.order; ++x) {
      if (acc[x] == 0) continue;
      for (Elem y = 0; y < g.order; ++y) {
        if (next[y] != 0) out[add(g, x, y)] += acc[x] * next[y];
      }
    }
    acc = std::move(out);
  }
  result.count = acc[beta];
  return result;
}

inline bool is_solution_free(const GroupSet& a,
                             const std::vector<std::int64_t>& coeffs,
                             Elem beta) {
  return solution_count(a, coeffs, beta).count == 0;
}

namespace detail {

inline std::uint64_t require_prime_field(const Group& g) {
  if (g.factors.size() != 1 || !is_prime_u64(g.factors[0])) {
    throw std::invalid_argument("multiplicative set operation needs Z/p");
  }
  return g.factors[0];
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace detail

/// AB = {ab : a in A, b in B} in F_p (zero products included).
inline GroupSet product_set(const GroupSet& a, const GroupSet& b) {
  a.require_same_group(b);
  const std::uint64_t p = detail::require_prime_field(a.group());
  GroupSet out(a.group());
  a.for_each([&](Elem x) {
    b.for_each([&](Elem y) { out.insert(x * y % p); });
  });
  return out;
}

/// A/B = {a b^{-1} : a in A, b in B, b != 0}; zero divisors are dropped, so
/// the result is empty when B <= {0}.
inline GroupSet ratio_set(const GroupSet& a, const GroupSet& b) {
  a.require_same_group(b);
  const std::uint64_t p = detail::require_prime_field(a.group());
  GroupSet out(a.group());
  b.for_each([&](Elem y) {
    if (y == 0) return;
    const std::uint64_t inv = detail::mod_inverse(y, p);
    a.for_each([&](Elem x) { out.insert(x * inv % p); });
  });
  return out;
}

/// A^{-1} = {a^{-1} : a in A, a != 0}.
inline GroupSet inverse_set(const GroupSet& a) {
  const std::uint64_t p = detail::require_prime_field(a.group());
  GroupSet out(a.group());
  a.for_each([&](Elem x) {
    if (x != 0) out.insert(detail::mod_inverse(x, p));
  });
  return out;
}

}  // namespace unicov
