#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "unicov/fourier.hpp"
#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/numeric.hpp"
#include "unicov/rng.hpp"
#include "unicov/setops.hpp"

namespace unicov {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000ull;

/// Result of a covering search: X with E <= A + X.  `optimal` is true only
/// when the search proved minimality; otherwise `value` is an upper bound
/// and `lower_bound` the best bound proven before the node budget ran out.
struct CoverWitness {
  std::uint64_t value = 0;
  GroupSet witness;
  bool optimal = false;
  std::uint64_t lower_bound = 0;
  std::uint64_t nodes = 0;

  CoverWitness() : witness(GroupSet(make_group({1}))) {}
  explicit CoverWitness(const Group& g) : witness(GroupSet(g)) {}
};

namespace detail {

/// Branch-and-bound minimum cover by translates of a fixed set.  Branches on
/// the smallest-rank uncovered element; candidate translates are tried by
/// decreasing fresh coverage.  The lower bound combines |uncovered|/|A| with
/// a greedy packing of elements no single translate can share.
class CoverSearch {
 public:
  CoverSearch(const GroupSet& a, const GroupSet& e, std::uint64_t budget)
      : g_(a.group()),
        n_(g_.order),
        nw_((n_ + 63) / 64),
        a_size_(a.size()),
        budget_(budget),
        e_words_(e.words()) {
    a.require_same_group(e);
    if (a.is_empty()) {
      throw std::invalid_argument("cover search: empty covering set");
    }
    if (n_ > (1u << 14)) {
      throw std::overflow_error("cover search: group too large");
    }
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, WordsHash>
        seen;
    rep_of_.assign(n_, 0);
    for (Elem x = 0; x < n_; ++x) {
      auto words = translate(a, x).words();
      auto it = seen.find(words);
      if (it == seen.end()) {
        const auto id = static_cast<std::uint32_t>(cand_words_.size());
        seen.emplace(words, id);
        cand_words_.push_back(std::move(words));
        cand_rep_.push_back(x);
        rep_of_[x] = id;
      } else {
        rep_of_[x] = it->second;
      }
    }
    neg_a_ranks_ = negate_set(a).ranks();
    if (n_ <= 4096) {
      const GroupSet d = difference_set(a, a);
      d_table_.reserve(n_);
      for (Elem x = 0; x < n_; ++x) d_table_.push_back(translate(d, x).words());
    }
  }

  CoverWitness greedy() const {
    CoverWitness r{g_};
    std::vector<std::uint64_t> uncovered = e_words_;
    std::uint64_t left = popcount(uncovered);
    while (left > 0) {
      std::uint32_t best_id = 0;
      std::uint64_t best_gain = 0;
      for (std::uint32_t id = 0; id < cand_words_.size(); ++id) {
        std::uint64_t gain = 0;
        for (std::size_t wi = 0; wi < nw_; ++wi) {
          gain += static_cast<std::uint64_t>(
              std::popcount(cand_words_[id][wi] & uncovered[wi]));
        }
        if (gain > best_gain) {
          best_gain = gain;
          best_id = id;
        }
      }
      if (best_gain == 0) {
        throw std::logic_error("cover greedy: no progress on nonempty set");
      }
      r.witness.insert(cand_rep_[best_id]);
      for (std::size_t wi = 0; wi < nw_; ++wi) {
        uncovered[wi] &= ~cand_words_[best_id][wi];
      }
      left -= best_gain;
    }
    r.value = r.witness.size();
    r.lower_bound = lower_bound(e_words_, popcount(e_words_));
    r.optimal = r.value == r.lower_bound;
    r.nodes = 0;
    return r;
  }

  CoverWitness solve() {
    const CoverWitness seed = greedy();
    best_value_ = seed.value;
    best_ids_.clear();
    seed.witness.for_each([&](Elem x) { best_ids_.push_back(rep_of_[x]); });
    root_lb_ = seed.lower_bound;
    if (best_value_ > root_lb_) {
      std::vector<std::uint32_t> chosen;
      dfs(e_words_, popcount(e_words_), chosen);
    }
    CoverWitness r{g_};
    r.value = best_value_;
    for (std::uint32_t id : best_ids_) r.witness.insert(cand_rep_[id]);
    r.optimal = !aborted_;
    r.lower_bound = aborted_ ? root_lb_ : best_value_;
    r.nodes = nodes_;
    return r;
  }

 private:
  static std::uint64_t popcount(const std::vector<std::uint64_t>& w) {
    std::uint64_t c = 0;
    for (std::uint64_t x : w) c += static_cast<std::uint64_t>(std::popcount(x));
    return c;
  }

  std::uint64_t lower_bound(const std::vector<std::uint64_t>& uncovered,
                            std::uint64_t left) const {
    std::uint64_t lb = (left + a_size_ - 1) / a_size_;
    if (!d_table_.empty() && left > 0) {
      std::vector<std::uint64_t> blocked(nw_, 0);
      std::uint64_t packed = 0;
      for (std::size_t wi = 0; wi < nw_; ++wi) {
        std::uint64_t bits = uncovered[wi] & ~blocked[wi];
        while (bits != 0) {
          const Elem e = static_cast<Elem>(wi * 64) +
                         static_cast<Elem>(std::countr_zero(bits));
          ++packed;
          const auto& block = d_table_[e];
          for (std::size_t wj = 0; wj < nw_; ++wj) blocked[wj] |= block[wj];
          // e blocks itself (0 lies in A - A), so the refresh always drops it.
          bits = uncovered[wi] & ~blocked[wi];
        }
      }
      lb = std::max(lb, packed);
    }
    return lb;
  }

  void dfs(const std::vector<std::uint64_t>& uncovered, std::uint64_t left,
           std::vector<std::uint32_t>& chosen) {
    if (aborted_) return;
    if (++nodes_ >= budget_) {
      aborted_ = true;
      return;
    }
    if (left == 0) {
      best_value_ = chosen.size();
      best_ids_ = chosen;
      return;
    }
    const std::uint64_t lb = lower_bound(uncovered, left);
    if (chosen.size() + lb >= best_value_) return;

    Elem branch_elem = 0;
    for (std::size_t wi = 0; wi < nw_; ++wi) {
      if (uncovered[wi] != 0) {
        branch_elem = static_cast<Elem>(wi * 64) +
                      static_cast<Elem>(std::countr_zero(uncovered[wi]));
        break;
      }
    }
    std::vector<std::uint32_t> ids;
    ids.reserve(neg_a_ranks_.size());
    for (Elem na : neg_a_ranks_) {
      ids.push_back(rep_of_[add(g_, branch_elem, na)]);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::pair<std::uint64_t, std::uint32_t>> order;
    order.reserve(ids.size());
    for (std::uint32_t id : ids) {
      std::uint64_t gain = 0;
      for (std::size_t wi = 0; wi < nw_; ++wi) {
        gain += static_cast<std::uint64_t>(
            std::popcount(cand_words_[id][wi] & uncovered[wi]));
      }
      order.emplace_back(gain, id);
    }
    std::sort(order.begin(), order.end(), [&](const auto& l, const auto& r) {
      if (l.first != r.first) return l.first > r.first;
      return cand_rep_[l.second] < cand_rep_[r.second];
    });
    std::vector<std::uint64_t> child(nw_);
    for (const auto& [gain, id] : order) {
      for (std::size_t wi = 0; wi < nw_; ++wi) {
        child[wi] = uncovered[wi] & ~cand_words_[id][wi];
      }
      chosen.push_back(id);
      dfs(child, left - gain, chosen);
      chosen.pop_back();
      if (aborted_) return;
    }
  }

  const Group& g_;
  std::uint64_t n_;
  std::size_t nw_;
  std::uint64_t a_size_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> e_words_;
  std::vector<std::vector<std::uint64_t>> cand_words_;
  std::vector<Elem> cand_rep_;
  std::vector<std::uint32_t> rep_of_;
  std::vector<Elem> neg_a_ranks_;
  std::vector<std::vector<std::uint64_t>> d_table_;

  std::uint64_t best_value_ = 0;
  std::vector<std::uint32_t> best_ids_;
  std::uint64_t root_lb_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// cov(A; E): minimum number of translates of A covering E.  Exact unless
/// the node budget is exhausted, in which case `optimal` is false and
/// value/lower_bound bracket the answer.
inline CoverWitness cov_exact(const GroupSet& a, const GroupSet& e,
                              std::uint64_t budget = kDefaultNodeBudget) {
  a.require_same_group(e);
  if (e.is_empty()) {
    CoverWitness r{a.group()};
    r.value = 0;
    r.optimal = true;
    return r;
  }
  if (a.is_empty()) {
    throw std::invalid_argument("cov_exact: empty set cannot cover");
  }
  detail::CoverSearch search(a, e, budget);
  return search.solve();
}

/// cov(A) = cov(A; G).
inline CoverWitness cov_exact(const GroupSet& a,
                              std::uint64_t budget = kDefaultNodeBudget) {
  return cov_exact(a, GroupSet::full(a.group()), budget);
}

/// Greedy cover; `optimal` is set when the greedy value meets the lower
/// bound.  Ties are broken toward the smallest translate rank.
inline CoverWitness cov_greedy(const GroupSet& a, const GroupSet& e) {
  a.require_same_group(e);
  if (e.is_empty()) {
    CoverWitness r{a.group()};
    r.value = 0;
    r.optimal = true;
    return r;
  }
  if (a.is_empty()) {
    throw std::invalid_argument("cov_greedy: empty set cannot cover");
  }
  detail::CoverSearch search(a, e, 0);
  return search.greedy();
}

inline CoverWitness cov_greedy(const GroupSet& a) {
  return cov_greedy(a, GroupSet::full(a.group()));
}

/// un(A) plus a witnessing failure: when finite, `witnessing_failure` holds
/// (x_1..x_un) with A meeting every A - x_i in no common point, i.e. the
/// (un+1)-tuple (0, x_1..x_un) certifies that A is not (un+1)-universal.
struct UniversalityReport {
  bool infinite = false;
  std::uint64_t un = 0;
  std::vector<Elem> witnessing_failure;
  bool optimal = true;
  std::uint64_t nodes = 0;
};

/// un(A) via the complement covering identity cov(A^c) = un(A) + 1.
inline UniversalityReport un_exact(const GroupSet& a,
                                   std::uint64_t budget = kDefaultNodeBudget) {
  if (a.is_empty()) {
    throw std::invalid_argument("un_exact: empty set");
  }
  UniversalityReport rep;
  if (a.is_full()) {
    rep.infinite = true;
    return rep;
  }
  const CoverWitness c = cov_exact(complement(a), budget);
  rep.un = c.value - 1;
  rep.optimal = c.optimal;
  rep.nodes = c.nodes;
  const Elem pivot = c.witness.min_element();
  c.witness.for_each([&](Elem x) {
    if (x != pivot) rep.witnessing_failure.push_back(sub(a.group(), pivot, x));
  });
  return rep;
}

/// Reference implementation of un by searching for a shortest tuple
/// (x_1..x_t) with A and all A - x_i sharing no point.  Exponential; only
/// for cross-checking at toy sizes.
inline std::uint64_t un_by_tuple_search(const GroupSet& a) {
  if (a.is_empty()) throw std::invalid_argument("un_by_tuple_search: empty");
  const Group& g = a.group();
  if (g.order > 12) {
    throw std::overflow_error("un_by_tuple_search: group too large");
  }
  if (a.is_full()) {
    throw std::invalid_argument("un_by_tuple_search: full set is universal");
  }
  std::uint64_t best = g.order;  // a proper set fails at depth <= N-1
  auto dfs = [&](auto&& self, const GroupSet& t, std::uint64_t depth) -> void {
    if (depth + 1 >= best) return;
    for (Elem x = 0; x < g.order; ++x) {
      const GroupSet next = intersect(t, translate(a, neg(g, x)));
      if (next.is_empty()) {
        best = depth + 1;
        return;
      }
      if (next.size() < t.size()) self(self, next, depth + 1);
    }
  };
  dfs(dfs, a, 0);
  return best;
}

/// U_n(A) = |A^n - Delta_n(G)| / N^n as an exact fraction.
inline Frac u_n(const GroupSet& a, std::uint64_t n) {
  if (a.is_empty()) throw std::invalid_argument("u_n: empty set");
  const std::uint64_t total = checked_pow(a.order(), n, kCountCap);
  return Frac::make(higher_diff_size(a, n, GroupSet::full(a.group())), total);
}

/// U_1..U_kmax.
inline std::vector<Frac> u_profile(const GroupSet& a, std::uint64_t kmax) {
  std::vector<Frac> out;
  out.reserve(kmax);
  for (std::uint64_t n = 1; n <= kmax; ++n) out.push_back(u_n(a, n));
  return out;
}

/// Smallest primitive root mod p (p prime); p = 2 yields 1.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("primitive_root: not prime");
  if (p == 2) return 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  auto pow_mod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t q : prime_factors) {
      if (pow_mod(g, (p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

/// Log-transfer context: multiplicative problems over F_p^* are solved
/// additively in Z/(p-1) through the discrete logarithm at the smallest
/// primitive root.
struct MultContext {
  std::uint64_t p = 0;
  std::uint64_t generator = 1;
  Group log_group;
  bool dropped_zero_from_set = false;
  bool dropped_zero_from_universe = false;
};

namespace detail {

inline MultContext make_mult_context(const Group& g) {
  MultContext ctx;
  ctx.p = require_prime_field(g);
  ctx.generator = primitive_root(ctx.p);
  ctx.log_group = make_group({static_cast<std::uint32_t>(ctx.p - 1)});
  return ctx;
}

/// dlog[x] for x in F_p^*; index 0 is unused.
inline std::vector<Elem> dlog_table(const MultContext& ctx) {
  std::vector<Elem> dl(ctx.p, 0);
  std::uint64_t v = 1;
  for (std::uint64_t k = 0; k + 1 < ctx.p; ++k) {
    dl[v] = k;
    v = v * ctx.generator % ctx.p;
  }
  return dl;
}

inline GroupSet log_image(const GroupSet& a, const MultContext& ctx,
                          const std::vector<Elem>& dl, bool& dropped_zero) {
  GroupSet out(ctx.log_group);
  dropped_zero = a.test(0);
  a.for_each([&](Elem x) {
    if (x != 0) out.insert(dl[x]);
  });
  return out;
}

}  // namespace detail

struct MultCover {
  CoverWitness cover;
  MultContext ctx;
};

/// cov^x(A; E): translates are dilations x -> ax; solved additively in the
/// log group.  Zeros are dropped from both sets (recorded in the context).
inline MultCover cov_mult(const GroupSet& a, const GroupSet& e,
                          std::uint64_t budget = kDefaultNodeBudget) {
  a.require_same_group(e);
  MultContext ctx = detail::make_mult_context(a.group());
  const auto dl = detail::dlog_table(ctx);
  const GroupSet la =
      detail::log_image(a, ctx, dl, ctx.dropped_zero_from_set);
  const GroupSet le =
      detail::log_image(e, ctx, dl, ctx.dropped_zero_from_universe);
  if (la.is_empty() && !le.is_empty()) {
    throw std::invalid_argument("cov_mult: set has no nonzero elements");
  }
  MultCover out;
  out.ctx = ctx;
  out.cover = cov_exact(la, le, budget);
  return out;
}

/// cov^x(A) over the full multiplicative group F_p^*.
inline MultCover cov_mult(const GroupSet& a,
                          std::uint64_t budget = kDefaultNodeBudget) {
  return cov_mult(a, complement(GroupSet::from_ranks(a.group(), {0})), budget);
}

struct MultUniversality {
  UniversalityReport report;
  MultContext ctx;
};

/// un^x(A): universality of the log image inside Z/(p-1).
inline MultUniversality un_mult(const GroupSet& a,
                                std::uint64_t budget = kDefaultNodeBudget) {
  MultContext ctx = detail::make_mult_context(a.group());
  const auto dl = detail::dlog_table(ctx);
  const GroupSet la =
      detail::log_image(a, ctx, dl, ctx.dropped_zero_from_set);
  if (la.is_empty()) {
    throw std::invalid_argument("un_mult: set has no nonzero elements");
  }
  MultUniversality out;
  out.ctx = ctx;
  out.report = un_exact(la, budget);
  return out;
}

/// Randomized search for a cover witness that is also Fourier-flat:
/// every nonprincipal character must satisfy
/// |hat 1_X(chi) hat 1_A(chi)| <= eps |X| |A|.
struct FourierCoverResult {
  bool found = false;
  GroupSet witness;
  std::uint64_t value = 0;
  double reference_bound = 0.0;  // eps^{-2} log^2 N, reported not asserted
  std::uint64_t trials = 0;
  std::string note;

  FourierCoverResult() : witness(GroupSet(make_group({1}))) {}
  explicit FourierCoverResult(const Group& g) : witness(GroupSet(g)) {}
};

inline FourierCoverResult cov_fourier_constrained(const GroupSet& a,
                                                  double eps,
                                                  std::uint64_t seed,
                                                  std::uint64_t trials = 256) {
  if (a.is_empty()) {
    throw std::invalid_argument("cov_fourier_constrained: empty set");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("cov_fourier_constrained: eps must be > 0");
  }
  const Group& g = a.group();
  const std::uint64_t n = g.order;
  FourierCoverResult result{g};
  const double logn = std::log(static_cast<double>(std::max<std::uint64_t>(n, 2)));
  result.reference_bound = logn * logn / (eps * eps);

  const DensityFunction fa = dft(indicator(a));
  std::vector<std::uint64_t> grid;
  for (std::uint64_t s = std::max<std::uint64_t>(1, (n + a.size() - 1) / a.size());
       s < n; s *= 2) {
    grid.push_back(s);
  }
  if (grid.empty()) grid.push_back(1);

  Rng rng(seed);
  const std::uint64_t per_size = std::max<std::uint64_t>(1, trials / grid.size());
  double tightest_ratio = std::numeric_limits<double>::infinity();
  std::uint64_t cover_misses = 0;
  std::vector<Elem> pool(n);
  for (Elem i = 0; i < n; ++i) pool[i] = i;

  for (std::uint64_t size : grid) {
    for (std::uint64_t t = 0; t < per_size; ++t) {
      ++result.trials;
      for (std::uint64_t i = 0; i < size; ++i) {
        const std::uint64_t j = i + rng.below(n - i);
        std::swap(pool[i], pool[j]);
      }
      GroupSet x(g);
      for (std::uint64_t i = 0; i < size; ++i) x.insert(pool[i]);
      if (!sumset(a, x).is_full()) {
        ++cover_misses;
        continue;
      }
      const DensityFunction fx = dft(indicator(x));
      const double bound =
          eps * static_cast<double>(x.size()) * static_cast<double>(a.size());
      double worst = 0.0;
      for (Elem c = 1; c < n; ++c) {
        worst = std::max(worst, std::abs(fx.values[c]) * std::abs(fa.values[c]));
      }
      if (le_guarded(worst, bound)) {
        result.found = true;
        result.witness = x;
        result.value = x.size();
        return result;
      }
      tightest_ratio = std::min(tightest_ratio, worst / std::max(bound, 1e-300));
    }
  }
  result.note = "no sampled set met both constraints; " +
                std::to_string(cover_misses) + "/" +
                std::to_string(result.trials) + " samples failed covering; " +
                "tightest spectral ratio " +
                (std::isfinite(tightest_ratio) ? std::to_string(tightest_ratio)
                                               : std::string("n/a"));
  return result;
}

}  // namespace unicov
