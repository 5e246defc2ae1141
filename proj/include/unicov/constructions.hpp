#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unicov/group.hpp"
#include "unicov/groupset.hpp"
#include "unicov/rng.hpp"
#include "unicov/setops.hpp"
#include "unicov/solver.hpp"

namespace unicov {

/// {start + i*step : 0 <= i < length} in a cyclic group.
inline GroupSet ap(const Group& g, Elem start, std::uint64_t step,
                   std::uint64_t length) {
  if (g.factors.size() != 1) {
    throw std::invalid_argument("ap: cyclic groups only");
  }
  if (length == 0 || length > g.order) {
    throw std::invalid_argument("ap: bad length");
  }
  check_elem(g, start);
  GroupSet out(g);
  Elem x = start;
  for (std::uint64_t i = 0; i < length; ++i) {
    out.insert(x);
    x = add(g, x, step % g.order);
  }
  return out;
}

struct RandomSetResult {
  GroupSet set;
  double realized_density = 0.0;
  std::uint64_t seed = 0;
};

/// Bernoulli(density) sample by rank; deterministic in the seed.
inline RandomSetResult random_set(const Group& g, double density,
                                  std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_set: density must lie in (0,1]");
  }
  Rng rng(seed);
  RandomSetResult r{GroupSet(g), 0.0, seed};
  for (Elem x = 0; x < g.order; ++x) {
    if (rng.bernoulli(density)) r.set.insert(x);
  }
  r.realized_density =
      static_cast<double>(r.set.size()) / static_cast<double>(g.order);
  return r;
}

/// Nonzero squares of F_p.
inline GroupSet quadratic_residues(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("quadratic_residues: p must be prime");
  }
  const Group g = make_group({static_cast<std::uint32_t>(p)});
  GroupSet out(g);
  for (std::uint64_t x = 1; x < p; ++x) out.insert(x * x % p);
  return out;
}

/// {ceil(p/3), ..., floor(2p/3)} in Z/p.
inline GroupSet interval_middle_third(std::uint64_t p) {
  if (p < 5) throw std::invalid_argument("interval_middle_third: p too small");
  const Group g = make_group({static_cast<std::uint32_t>(p)});
  GroupSet out(g);
  for (std::uint64_t x = (p + 2) / 3; x <= 2 * p / 3; ++x) out.insert(x);
  return out;
}

enum class BlockStyle { kContiguous, kRoundRobin };

/// Union of the k coordinate subspaces of (Z/2)^n obtained by zeroing one
/// block of a partition of the coordinates; near-equal block sizes, either
/// consecutive or round-robin.  The union is k-universal (certify with
/// un_exact on demand).
inline GroupSet subspace_union_universal(std::uint64_t n, std::uint64_t k,
                                         BlockStyle style = BlockStyle::kContiguous) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("subspace_union_universal: need 1 <= k <= n");
  }
  std::vector<std::uint32_t> fac(n, 2);
  const Group g = make_group(fac);
  std::vector<std::uint64_t> block_of(n);
  if (style == BlockStyle::kContiguous) {
    const std::uint64_t base = n / k;
    const std::uint64_t extra = n % k;
    std::uint64_t coord = 0;
    for (std::uint64_t b = 0; b < k; ++b) {
      const std::uint64_t size = base + (b < extra ? 1 : 0);
      for (std::uint64_t j = 0; j < size; ++j) block_of[coord++] = b;
    }
  } else {
    for (std::uint64_t j = 0; j < n; ++j) block_of[j] = j % k;
  }
  std::vector<std::uint64_t> zero_mask(k, 0);  // bit j set: coordinate j must vanish
  for (std::uint64_t j = 0; j < n; ++j) zero_mask[block_of[j]] |= 1ull << j;

  GroupSet out(g);
  for (Elem x = 0; x < g.order; ++x) {
    // Coordinate j of x is the bit at place[j]; for (Z/2)^n rank bits are the
    // coordinates with coordinate 0 most significant.
    std::uint64_t bits = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      if ((x / g.place[j]) % 2 == 1) bits |= 1ull << j;
    }
    for (std::uint64_t b = 0; b < k; ++b) {
      if ((bits & zero_mask[b]) == 0) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

/// All nonempty subsets of G with no solution of
/// sum_j coeffs[j] * x_j = beta inside them.  Exhaustive (2^N), so N <= 16.
inline std::vector<GroupSet> find_solution_free_sets(
    const Group& g, const std::vector<std::int64_t>& coeffs, Elem beta) {
  if (g.order > 16) {
    throw std::overflow_error("find_solution_free_sets: group too large");
  }
  std::vector<GroupSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << g.order); ++mask) {
    GroupSet a(g);
    for (Elem x = 0; x < g.order; ++x) {
      if ((mask >> x) & 1) a.insert(x);
    }
    if (is_solution_free(a, coeffs, beta)) out.push_back(std::move(a));
  }
  return out;
}

/// What was machine-checked about a sumset construction.
struct SumsetCertificate {
  std::uint64_t n = 0;
  std::uint64_t k_requested = 0;
  std::uint64_t k_achieved = 0;
  std::uint64_t d = 0;
  std::uint64_t base_attempts = 0;
  bool base_certified = false;   // un(S0) >= k_achieved in Z/d, exact
  bool lift_premises = false;    // d*d >= n and 2d <= n
  bool direct_un_checked = false;
  std::uint64_t direct_un = 0;
  bool difference_full_checked = false;
  std::uint64_t u_size = 0;
  std::uint64_t a_size = 0;
  std::uint64_t b_size = 0;
};

struct SumsetConstruction {
  GroupSet a;
  GroupSet b;
  GroupSet u;  // a + b
  SumsetCertificate cert;
};

/// Builds sets A, B of size >= N/512 whose sumset is k'-universal yet misses
/// at least a quarter of Z/N.  Recipe: certify a random S0 <= Z/d
/// (d ~ sqrt(N) prime, d not dividing N) with un(S0) >= k', double it to
/// S = S0 u (S0+d) so block arithmetic absorbs carries, and hide S inside
/// A = S u dQ, B = dS u Q with Q a pseudorandom dilate-intersection of a
/// short interval.  Universality of A+B >= that of S+dS, which the doubled
/// copy and d^2 >= N make exact; all premises are machine-checked and the
/// certificate records which direct checks ran.  Throws when any check
/// fails; k' is decremented (and reported) when certification of k fails
/// within the retry budget.
inline SumsetConstruction universal_sumset(std::uint64_t n, std::uint64_t k,
                                           std::uint64_t seed) {
  if (n < 1024) {
    throw std::invalid_argument("universal_sumset: need N >= 1024");
  }
  if (k == 0 || static_cast<double>(2 * k) > std::log2(static_cast<double>(n))) {
    throw std::invalid_argument("universal_sumset: need 1 <= k <= log2(N)/2");
  }
  const auto d0 = static_cast<std::uint64_t>(
      std::ceil(std::sqrt(static_cast<double>(n))));
  std::uint64_t d = 0;
  for (std::uint64_t c = d0; c <= 2 * d0; ++c) {
    if (is_prime_u64(c) && n % c != 0) {
      d = c;
      break;
    }
  }
  if (d == 0) {
    throw std::runtime_error("universal_sumset: no admissible prime near sqrt(N)");
  }
  const Group zd = make_group({static_cast<std::uint32_t>(d)});
  const Group zn = make_group({static_cast<std::uint32_t>(n)});

  SumsetConstruction out{GroupSet(zn), GroupSet(zn), GroupSet(zn), {}};
  SumsetCertificate& cert = out.cert;
  cert.n = n;
  cert.k_requested = k;
  cert.d = d;
  cert.lift_premises = d * d >= n && 2 * d <= n;
  if (!cert.lift_premises) {
    throw std::runtime_error("universal_sumset: lifting premises failed");
  }

  // Base set: a random ceil(d/8)-subset of Z/d certified k'-universal.
  const std::uint64_t s0_size = (d + 7) / 8;
  Rng rng(seed);
  GroupSet s0(zd);
  std::vector<Elem> pool(d);
  for (std::uint64_t k2 = k;; --k2) {
    bool done = false;
    for (int attempt = 0; attempt < 40 && !done; ++attempt) {
      ++cert.base_attempts;
      for (Elem i = 0; i < d; ++i) pool[i] = i;
      for (std::uint64_t i = 0; i < s0_size; ++i) {
        const std::uint64_t j = i + rng.below(d - i);
        std::swap(pool[i], pool[j]);
      }
      GroupSet candidate(zd);
      for (std::uint64_t i = 0; i < s0_size; ++i) candidate.insert(pool[i]);
      const UniversalityReport rep = un_exact(candidate);
      if (rep.optimal && !rep.infinite && rep.un >= k2) {
        s0 = candidate;
        cert.k_achieved = k2;
        cert.base_certified = true;
        done = true;
      }
    }
    if (done) break;
    if (k2 == 1) {
      throw std::runtime_error("universal_sumset: base certification failed");
    }
  }

  // S = S0 u (S0 + d) as integers below 2d, inside Z/N.
  GroupSet s(zn);
  s0.for_each([&](Elem x) {
    s.insert(x);
    s.insert(x + d);
  });

  // P an initial interval, Q = d^{-1}(P+shift) n P with |Q| >= N/512.
  const std::uint64_t p_len = n / 16;
  GroupSet q(zn);
  bool q_found = false;
  for (int attempt = 0; attempt < 200 && !q_found; ++attempt) {
    const std::uint64_t shift = rng.below(n);
    GroupSet cand(zn);
    for (std::uint64_t x = 0; x < p_len; ++x) {
      const std::uint64_t dx = (x * d) % n;
      const std::uint64_t back = (dx + n - shift % n) % n;
      if (back < p_len) cand.insert(x);
    }
    if (512 * cand.size() >= n) {
      q = cand;
      q_found = true;
    }
  }
  if (!q_found) {
    throw std::runtime_error("universal_sumset: no dense dilate intersection");
  }

  const GroupSet dq = dilate(static_cast<std::int64_t>(d), q).image;
  const GroupSet ds = dilate(static_cast<std::int64_t>(d), s).image;
  out.a = unite(s, dq);
  out.b = unite(ds, q);
  out.u = sumset(out.a, out.b);
  cert.a_size = out.a.size();
  cert.b_size = out.b.size();
  cert.u_size = out.u.size();

  if (4 * cert.u_size > 3 * n) {
    throw std::runtime_error("universal_sumset: sumset too large");
  }
  if (512 * cert.a_size < n || 512 * cert.b_size < n) {
    throw std::runtime_error("universal_sumset: factor too small");
  }
  if (n <= 4096) {
    const UniversalityReport rep = un_exact(out.u);
    cert.direct_un_checked = rep.optimal;
    cert.direct_un = rep.infinite ? n : rep.un;
    if (cert.direct_un_checked && !rep.infinite && rep.un < cert.k_achieved) {
      throw std::runtime_error("universal_sumset: direct check failed");
    }
  } else if (cert.k_achieved >= 2) {
    cert.difference_full_checked = true;
    if (!difference_set(out.u, out.u).is_full()) {
      throw std::runtime_error("universal_sumset: U - U misses elements");
    }
  }
  return out;
}

}  // namespace unicov
