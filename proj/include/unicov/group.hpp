#pragma once

#include <cctype>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace unicov {

/// Elements are identified with their rank: the mixed-radix encoding of the
/// coordinate vector with the FIRST factor most significant.  For example the
/// element (5,3) of Z6xZ4 has rank 5*4 + 3 = 23.
using Elem = std::uint64_t;

inline constexpr std::uint64_t kDefaultOrderCap = 1ull << 20;

/// A finite abelian group presented as a product of cyclic factors
/// Z n1 x ... x Z nr.  Factors are kept in the given order (no canonical
/// re-sorting), so Z6xZ4 and Z4xZ6 are distinct presentations.
struct Group {
  std::vector<std::uint32_t> factors;
  std::uint64_t order = 1;                // product of the factors
  std::vector<std::uint64_t> place;       // place[i] = prod_{j>i} factors[j]
  std::uint64_t exponent = 1;             // lcm of the factors

  friend bool operator==(const Group&, const Group&) = default;
};

/// n^m with an overflow/cap guard; throws std::overflow_error past the cap.
inline std::uint64_t checked_pow(std::uint64_t n, std::uint32_t m,
                                 std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (n != 0 && r > cap / n) {
      throw std::overflow_error("checked_pow: result exceeds cap");
    }
    r *= n;
  }
  if (r > cap) throw std::overflow_error("checked_pow: result exceeds cap");
  return r;
}

inline Group make_group(const std::vector<std::uint32_t>& factors,
                        std::uint64_t order_cap = kDefaultOrderCap) {
  if (factors.empty()) {
    throw std::invalid_argument("make_group: factor list is empty");
  }
  Group g;
  g.factors = factors;
  for (std::uint32_t n : factors) {
    if (n == 0) throw std::invalid_argument("make_group: zero factor");
    if (g.order > order_cap / n) {
      throw std::overflow_error("make_group: group order exceeds cap");
    }
    g.order *= n;
    g.exponent = std::lcm(g.exponent, static_cast<std::uint64_t>(n));
  }
  g.place.assign(factors.size(), 1);
  for (std::size_t i = factors.size(); i-- > 1;) {
    g.place[i - 1] = g.place[i] * factors[i];
  }
  return g;
}

/// Group spec grammar: `Z<k>` factors joined by `x`, with `^<m>` repetition,
/// e.g. "Z12", "Z2^4", "Z6xZ4", "Z3^2xZ9".  Case-insensitive; no whitespace.
inline Group parse_group(std::string_view spec,
                         std::uint64_t order_cap = kDefaultOrderCap) {
  std::vector<std::uint32_t> factors;
  std::size_t i = 0;
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("parse_group: malformed group spec '" +
                                 std::string(spec) + "'");
  };
  auto read_uint = [&]() -> std::uint64_t {
    if (i >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[i]))) {
      throw fail();
    }
    std::uint64_t v = 0;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(spec[i] - '0');
      if (v > order_cap) throw std::overflow_error("parse_group: factor too large");
      ++i;
    }
    return v;
  };
  while (true) {
    if (i >= spec.size() || (spec[i] != 'Z' && spec[i] != 'z')) throw fail();
    ++i;
    const std::uint64_t n = read_uint();
    if (n == 0) throw fail();
    std::uint64_t reps = 1;
    if (i < spec.size() && spec[i] == '^') {
      ++i;
      reps = read_uint();
      if (reps == 0) throw fail();
      if (reps > 64) throw std::overflow_error("parse_group: repetition too large");
    }
    for (std::uint64_t r = 0; r < reps; ++r) {
      factors.push_back(static_cast<std::uint32_t>(n));
    }
    if (i == spec.size()) break;
    if (spec[i] != 'x' && spec[i] != 'X') throw fail();
    ++i;
  }
  return make_group(factors, order_cap);
}

/// Canonical rendering; runs of equal factors are shown as Z<n>^<m>.
inline std::string group_to_string(const Group& g) {
  std::string out;
  std::size_t i = 0;
  while (i < g.factors.size()) {
    std::size_t j = i;
    while (j < g.factors.size() && g.factors[j] == g.factors[i]) ++j;
    if (!out.empty()) out += 'x';
    out += 'Z' + std::to_string(g.factors[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline void check_elem(const Group& g, Elem a) {
  if (a >= g.order) throw std::out_of_range("element rank out of range");
}

inline std::vector<std::uint32_t> unrank(const Group& g, Elem a) {
  check_elem(g, a);
  std::vector<std::uint32_t> c(g.factors.size());
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    c[i] = static_cast<std::uint32_t>((a / g.place[i]) % g.factors[i]);
  }
  return c;
}

inline Elem rank_of(const Group& g, const std::vector<std::uint32_t>& coords) {
  if (coords.size() != g.factors.size()) {
    throw std::invalid_argument("rank_of: coordinate arity mismatch");
  }
  Elem a = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= g.factors[i]) {
      throw std::out_of_range("rank_of: coordinate out of range");
    }
    a += static_cast<Elem>(coords[i]) * g.place[i];
  }
  return a;
}

inline Elem add(const Group& g, Elem a, Elem b) {
  check_elem(g, a);
  check_elem(g, b);
  if (g.factors.size() == 1) {
    const std::uint64_t s = a + b;
    return s >= g.order ? s - g.order : s;
  }
  Elem r = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const std::uint64_t n = g.factors[i];
    std::uint64_t s = (a / g.place[i]) % n + (b / g.place[i]) % n;
    if (s >= n) s -= n;
    r += s * g.place[i];
  }
  return r;
}

inline Elem neg(const Group& g, Elem a) {
  check_elem(g, a);
  if (g.factors.size() == 1) return a == 0 ? 0 : g.order - a;
  Elem r = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const std::uint64_t n = g.factors[i];
    const std::uint64_t c = (a / g.place[i]) % n;
    r += (c == 0 ? 0 : n - c) * g.place[i];
  }
  return r;
}

inline Elem sub(const Group& g, Elem a, Elem b) { return add(g, a, neg(g, b)); }

/// lambda * a with lambda reduced into each cyclic factor.
inline Elem scalar_mul(const Group& g, std::int64_t lambda, Elem a) {
  check_elem(g, a);
  Elem r = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const std::int64_t n = static_cast<std::int64_t>(g.factors[i]);
    const std::int64_t c = static_cast<std::int64_t>(
        (a / g.place[i]) % static_cast<std::uint64_t>(n));
    std::int64_t lm = lambda % n;
    if (lm < 0) lm += n;
    const std::int64_t v = (lm * c) % n;
    r += static_cast<Elem>(v) * g.place[i];
  }
  return r;
}

/// True when x -> lambda*x is a bijection of G, i.e. gcd(lambda, exponent)=1.
inline bool is_unit(const Group& g, std::int64_t lambda) {
  std::int64_t lm = lambda % static_cast<std::int64_t>(g.exponent);
  if (lm < 0) lm += static_cast<std::int64_t>(g.exponent);
  return std::gcd(static_cast<std::uint64_t>(lm), g.exponent) == 1;
}

/// G^m as a group in its own right.  Ranks are compatible with base ranks:
/// rank(g_1,...,g_m) = sum_i rank(g_i) * N^(m-i).
inline Group power_group(const Group& g, std::uint32_t m,
                         std::uint64_t order_cap = kDefaultOrderCap) {
  if (m == 0) throw std::invalid_argument("power_group: m must be >= 1");
  checked_pow(g.order, m, order_cap);
  std::vector<std::uint32_t> factors;
  factors.reserve(g.factors.size() * m);
  for (std::uint32_t i = 0; i < m; ++i) {
    factors.insert(factors.end(), g.factors.begin(), g.factors.end());
  }
  return make_group(factors, order_cap);
}

/// Rank of the tuple (parts[0], ..., parts[m-1]) in G^m.
inline Elem tuple_rank(const Group& g, const std::vector<Elem>& parts) {
  Elem r = 0;
  for (Elem p : parts) {
    check_elem(g, p);
    r = r * g.order + p;
  }
  return r;
}

inline std::vector<Elem> tuple_unrank(const Group& g, std::uint32_t m, Elem t) {
  std::vector<Elem> parts(m);
  for (std::uint32_t i = m; i-- > 0;) {
    parts[i] = t % g.order;
    t /= g.order;
  }
  if (t != 0) throw std::out_of_range("tuple_unrank: rank out of range");
  return parts;
}

inline constexpr double kTau = 6.283185307179586476925286766559;

/// A character value as an exact root of unity exp(2*pi*i*num/den), with
/// num/den reduced and den dividing the group exponent.
struct RootOfUnity {
  std::uint64_t num = 0;  // 0 <= num < den
  std::uint64_t den = 1;

  std::complex<double> approx() const {
    const double t = kTau * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
  }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Value of the character indexed by chi at g:
///   chi(g) = exp(2*pi*i * sum_i chi_i g_i / n_i).
/// Characters are indexed by group elements (the dual group of Z n1 x...x Z nr
/// is the same product), so chi ranges over ranks as well.
inline RootOfUnity character_value(const Group& g, Elem chi, Elem x) {
  check_elem(g, chi);
  check_elem(g, x);
  const std::uint64_t L = g.exponent;
  std::uint64_t t = 0;  // accumulated numerator over denominator L
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const std::uint64_t n = g.factors[i];
    const std::uint64_t ci = (chi / g.place[i]) % n;
    const std::uint64_t xi = (x / g.place[i]) % n;
    // ci*xi/n = ci*xi*(L/n)/L; all quantities < 2^20 so products fit easily.
    t = (t + ci * xi % n * (L / n)) % L;
  }
  const std::uint64_t d = std::gcd(t, L);
  if (t == 0) return {0, 1};
  return {t / d, L / d};
}

inline std::complex<double> character_value_approx(const Group& g, Elem chi,
                                                   Elem x) {
  return character_value(g, chi, x).approx();
}

}  // namespace unicov
