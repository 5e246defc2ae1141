// Character sums and energies: transform pair, Parseval, convolution
// theorem, exact integer layers, spectra, Wiener norm, Bohr sets.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "unicov/fourier.hpp"
#include "unicov/rng.hpp"

#include "oracles.hpp"

using namespace unicov;

namespace {

constexpr double kTol = 1e-9;

GroupSet random_subset(const Group& g, Rng& rng, double density) {
  GroupSet s(g);
  for (Elem x = 0; x < g.order; ++x) {
    if (rng.bernoulli(density)) s.insert(x);
  }
  return s;
}

DensityFunction random_function(const Group& g, Rng& rng) {
  DensityFunction f;
  f.group = g;
  f.values.resize(g.order);
  for (auto& v : f.values) {
    v = {static_cast<double>(rng.below(2001)) / 1000.0 - 1.0,
         static_cast<double>(rng.below(2001)) / 1000.0 - 1.0};
  }
  return f;
}

double max_abs_diff(const DensityFunction& f, const DensityFunction& g) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    worst = std::max(worst, std::abs(f.values[i] - g.values[i]));
  }
  return worst;
}

}  // namespace

TEST(Fourier, IndicatorAndBalancedExactLayers) {
  const Group g = parse_group("Z10");
  const GroupSet a = GroupSet::from_ranks(g, {0, 3, 7});
  const DensityFunction ind = indicator(a);
  ASSERT_TRUE(ind.exact);
  EXPECT_EQ(ind.den, 1);
  std::int64_t total = 0;
  for (Elem x = 0; x < g.order; ++x) {
    EXPECT_EQ(ind.nums[x], a.test(x) ? 1 : 0);
    total += ind.nums[x];
  }
  EXPECT_EQ(total, 3);
  const DensityFunction bal = balanced_function(a);
  ASSERT_TRUE(bal.exact);
  EXPECT_EQ(bal.den, 10);
  std::int64_t bal_total = 0;
  for (Elem x = 0; x < g.order; ++x) {
    EXPECT_EQ(bal.nums[x], a.test(x) ? 7 : -3);
    bal_total += bal.nums[x];
  }
  EXPECT_EQ(bal_total, 0);  // mean-zero, exactly
}

TEST(Fourier, DftMatchesDirectCharacterSums) {
  Rng rng(41);
  for (const char* spec : {"Z7", "Z12", "Z2^3", "Z6xZ4", "Z24"}) {
    const Group g = parse_group(spec);
    for (int trial = 0; trial < 4; ++trial) {
      const DensityFunction f = random_function(g, rng);
      const DensityFunction fast = dft(f);
      const DensityFunction slow = oracles::dft(f);
      EXPECT_LT(max_abs_diff(fast, slow), kTol) << spec;
    }
  }
}

TEST(Fourier, InverseTransformRoundTrip) {
  Rng rng(43);
  for (const char* spec : {"Z11", "Z6xZ4", "Z2^4"}) {
    const Group g = parse_group(spec);
    const DensityFunction f = random_function(g, rng);
    EXPECT_LT(max_abs_diff(idft(dft(f)), f), kTol) << spec;
    EXPECT_LT(max_abs_diff(dft(idft(f)), f), kTol) << spec;
  }
}

TEST(Fourier, Parseval) {
  Rng rng(47);
  for (const char* spec : {"Z16", "Z6xZ6"}) {
    const Group g = parse_group(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityFunction f = random_function(g, rng);
      const DensityFunction fh = dft(f);
      double time_side = 0.0, freq_side = 0.0;
      for (std::uint64_t i = 0; i < g.order; ++i) {
        time_side += std::norm(f.values[i]);
        freq_side += std::norm(fh.values[i]);
      }
      EXPECT_NEAR(time_side, freq_side / static_cast<double>(g.order),
                  kTol * (1.0 + time_side));
    }
  }
}

TEST(Fourier, ConvolutionTheorem) {
  Rng rng(53);
  const Group g = parse_group("Z18");
  const DensityFunction f = random_function(g, rng);
  const DensityFunction h = random_function(g, rng);
  const DensityFunction lhs = dft(convolve(f, h));
  const DensityFunction fh = dft(f);
  const DensityFunction hh = dft(h);
  for (Elem c = 0; c < g.order; ++c) {
    EXPECT_LT(std::abs(lhs.values[c] - fh.values[c] * hh.values[c]), kTol);
  }
  // autocorrelation of a real function transforms to |hat f|^2
  DensityFunction real_f = random_function(g, rng);
  for (auto& v : real_f.values) v = {v.real(), 0.0};
  const DensityFunction corr = dft(correlate(real_f, real_f));
  const DensityFunction rh = dft(real_f);
  for (Elem c = 0; c < g.order; ++c) {
    EXPECT_LT(std::abs(corr.values[c] -
                       std::complex<double>{std::norm(rh.values[c]), 0.0}),
              kTol);
  }
}

TEST(Fourier, ConvolveMatchesOracleAndExactCounts) {
  Rng rng(59);
  const Group g = parse_group("Z6xZ2");
  const GroupSet a = random_subset(g, rng, 0.5);
  const GroupSet b = random_subset(g, rng, 0.5);
  const DensityFunction conv = convolve(indicator(a), indicator(b));
  EXPECT_LT(max_abs_diff(conv, oracles::convolve(indicator(a), indicator(b))),
            kTol);
  // the exact layer of 1_A * 1_B is the representation count
  ASSERT_TRUE(conv.exact);
  ASSERT_EQ(conv.den, 1);
  const DensityFunction reps = representation_count(a, b);
  for (Elem x = 0; x < g.order; ++x) {
    EXPECT_EQ(BigInt(conv.nums[x]), reps.nums[x]);
  }
}

TEST(Fourier, CorrelationCountsMatchBruteForce) {
  Rng rng(61);
  const Group g = parse_group("Z6xZ4");
  const GroupSet a = random_subset(g, rng, 0.4);
  const auto cnt = correlation_counts(a);
  for (Elem z = 0; z < g.order; ++z) {
    std::uint64_t direct = 0;
    a.for_each([&](Elem x) {
      a.for_each([&](Elem y) { direct += sub(g, y, x) == z; });
    });
    EXPECT_EQ(cnt[z], direct);
  }
}

TEST(Fourier, HigherEnergyFrozenAndOracle) {
  const Group z4 = parse_group("Z4");
  EXPECT_EQ(higher_energy(GroupSet::from_ranks(z4, {0, 1}), 2), BigInt(6));
  // E_1 = |A|^2 always
  EXPECT_EQ(higher_energy(GroupSet::from_ranks(z4, {0, 1}), 1), BigInt(4));
  Rng rng(67);
  for (const char* spec : {"Z7", "Z8"}) {
    const Group g = parse_group(spec);
    for (int trial = 0; trial < 5; ++trial) {
      const GroupSet a = random_subset(g, rng, 0.5);
      for (std::uint64_t k = 1; k <= 3; ++k) {
        EXPECT_EQ(higher_energy(a, k), oracles::higher_energy(a, k));
      }
    }
  }
  EXPECT_THROW(higher_energy(GroupSet::full(z4), 0), std::invalid_argument);
}

TEST(Fourier, BalancedEnergyOneIsExactlyZero) {
  Rng rng(71);
  for (const char* spec : {"Z13", "Z16", "Z6xZ4"}) {
    const Group g = parse_group(spec);
    for (int trial = 0; trial < 8; ++trial) {
      const GroupSet a = random_subset(g, rng, 0.5);
      EXPECT_EQ(balanced_correlation_power_sum(a, 1), BigInt(0)) << spec;
      EXPECT_NEAR(ek_norm(balanced_function(a), 1), 0.0, kTol);
    }
  }
}

TEST(Fourier, BalancedPowerSumTracksFloatRoute) {
  Rng rng(73);
  const Group g = parse_group("Z12");
  for (int trial = 0; trial < 6; ++trial) {
    const GroupSet a = random_subset(g, rng, 0.5);
    for (std::uint64_t l = 1; l <= 3; ++l) {
      const BigInt exact = balanced_correlation_power_sum(a, l);
      const double scale = std::pow(static_cast<double>(g.order),
                                    2.0 * static_cast<double>(l));
      const double approx = ek_norm(balanced_function(a), l) * scale;
      EXPECT_NEAR(exact.convert_to<double>(), approx,
                  1e-6 * (1.0 + std::fabs(approx)));
    }
  }
}

TEST(Fourier, SpectrumFrozenAndBoundary) {
  const Group z8 = parse_group("Z8");
  const SpectrumSet s = spectrum(GroupSet::from_ranks(z8, {0, 1, 2}), 0.4);
  EXPECT_EQ(s.chars, (std::vector<Elem>{0, 1, 7}));
  EXPECT_EQ(s.prime(), (std::vector<Elem>{1, 7}));
  // evens form a subgroup: the annihilator {0,4} hits |hat 1| = |A| exactly,
  // and the guard keeps the boundary tie at eps = 1
  const SpectrumSet evens = spectrum(GroupSet::from_ranks(z8, {0, 2, 4, 6}), 1.0);
  EXPECT_EQ(evens.chars, (std::vector<Elem>{0, 4}));
  EXPECT_THROW(spectrum(GroupSet(z8), 0.5), std::invalid_argument);
  EXPECT_THROW(spectrum(GroupSet::full(z8), 0.0), std::invalid_argument);
  EXPECT_THROW(spectrum(GroupSet::full(z8), 1.5), std::invalid_argument);
}

TEST(Fourier, WienerNorm) {
  const Group g = parse_group("Z9");
  // a singleton's transform has modulus 1 everywhere
  EXPECT_NEAR(wiener_norm(indicator(GroupSet::from_ranks(g, {4}))), 1.0, kTol);
  // the full group concentrates on the principal character: norm = 1
  EXPECT_NEAR(wiener_norm(indicator(GroupSet::full(g))), 1.0, kTol);
  // Wiener norm dominates the sup norm of f
  Rng rng(79);
  const GroupSet a = random_subset(g, rng, 0.5);
  if (!a.is_empty()) {
    EXPECT_GT(wiener_norm(indicator(a)) + kTol, 1.0);
  }
}

TEST(Fourier, BohrSets) {
  const Group z12 = parse_group("Z12");
  EXPECT_EQ(bohr_set(z12, {1}, 0.6).ranks(), (std::vector<Elem>{0, 1, 11}));
  // empty frequency set imposes no constraint
  EXPECT_TRUE(bohr_set(z12, {}, 0.1).is_full());
  // radius >= 2 admits everything
  EXPECT_TRUE(bohr_set(z12, {1, 5}, 2.0).is_full());
  // radius 0 keeps exactly the joint kernel
  EXPECT_EQ(bohr_set(z12, {4}, 0.0).ranks(), (std::vector<Elem>{0, 3, 6, 9}));
  EXPECT_THROW(bohr_set(z12, {1}, -0.5), std::invalid_argument);
  EXPECT_THROW(bohr_set(z12, {12}, 0.5), std::out_of_range);
  // Bohr sets are symmetric and contain 0
  const Group g = parse_group("Z6xZ4");
  const GroupSet b = bohr_set(g, {3, 7}, 0.9);
  EXPECT_TRUE(b.test(0));
  EXPECT_EQ(negate_set(b).ranks(), b.ranks());
}
