#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unicov {

/// Arbitrary-precision integers/rationals for the inequality harness.  All
/// comparisons between rational quantities are done by cross-multiplication
/// in BigInt, never in floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt bi_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

/// Reduced nonnegative fraction; large enough for counts up to 2^63.
struct Frac {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Frac make(std::uint64_t n, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("Frac: zero denominator");
    const std::uint64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }
  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
  friend bool operator==(const Frac&, const Frac&) = default;
};

/// Guard band for comparisons of an exact left side against a right side
/// assembled from logs or fractional powers: the 1e-9 slack absorbs floating
/// error and stays far below any meaningful margin at desk scale.
inline constexpr double kFloatGuard = 1e-9;

inline bool le_guarded(double lhs, double rhs) {
  return lhs <= rhs + kFloatGuard * std::max(1.0, std::fabs(rhs));
}

inline bool ge_guarded(double lhs, double rhs) {
  return lhs >= rhs - kFloatGuard * std::max(1.0, std::fabs(rhs));
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace unicov
