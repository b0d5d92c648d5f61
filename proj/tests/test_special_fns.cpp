#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wulffnt/special_fns.hpp"

using namespace wulffnt;
using oracle::pi;

TEST(Lobachevsky, EndPointsAndKnownValues) {
  EXPECT_EQ(lobachevsky(0.0), 0.0);
  EXPECT_NEAR(lobachevsky(pi / 2), 0.0, 1e-15);
  EXPECT_NEAR(lobachevsky(pi), 0.0, 1e-15);
  EXPECT_NEAR(lobachevsky(pi / 2), oracle::lobachevsky_quadrature(pi / 2), 1e-12);
  // Tail of the series beyond 10^6 terms is below 1e-12 / sin(pi/3).
  EXPECT_NEAR(lobachevsky(pi / 3), oracle::lobachevsky_series(pi / 3, 1000000), 1e-10);
  EXPECT_NEAR(lobachevsky(pi / 3), 0.338313, 1e-6);
}

TEST(Lobachevsky, MatchesFourierSeriesOnUniformGrid) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = i == 99 ? pi : pi * i / 99.0;
    worst = std::max(worst, std::abs(lobachevsky(x) - oracle::lobachevsky_series(x, 100000)));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(Lobachevsky, MatchesQuadratureOnFirstHalf) {
  for (int i = 1; i <= 20; ++i) {
    const double x = 2.5 * i / 20.0;
    EXPECT_NEAR(lobachevsky(x), oracle::lobachevsky_quadrature(x), 1e-10) << "x = " << x;
  }
}

TEST(Lobachevsky, OddAboutPi) {
  for (double x : {0.1, 0.7, 1.3}) EXPECT_NEAR(lobachevsky(pi - x), -lobachevsky(x), 1e-14);
}

TEST(Lobachevsky, RejectsOutsideDomain) {
  EXPECT_THROW(lobachevsky(-0.1), std::domain_error);
  EXPECT_THROW(lobachevsky(3.2), std::domain_error);
  EXPECT_THROW(lobachevsky(std::nan("")), std::domain_error);
}

TEST(Ronkin, DominantCoefficient) { EXPECT_NEAR(ronkin_f(0.6, 0.2, 0.2), std::log(0.6), 1e-12); }

TEST(Ronkin, SymmetricPointAgainstMahlerMeasure) {
  const double f = ronkin_f(1.0 / 3, 1.0 / 3, 1.0 / 3);
  EXPECT_NEAR(f, oracle::mahler_1xy() - std::log(3.0), 1e-10);
  EXPECT_NEAR(f, -0.775546, 1e-6);
}

TEST(Ronkin, SymmetricPointAgainstBruteForceGrid) {
  const double brute = oracle::ronkin_brute(1.0 / 3, 1.0 / 3, 1.0 / 3, 4096);
  EXPECT_NEAR(ronkin_f(1.0 / 3, 1.0 / 3, 1.0 / 3), brute, 1e-8);
}

TEST(Ronkin, BruteForceGridAtGenericPoint) {
  const double brute = oracle::ronkin_brute(0.45, 0.35, 0.2, 2048);
  EXPECT_NEAR(ronkin_f(0.45, 0.35, 0.2), brute, 1e-6);
}

TEST(Ronkin, HomogeneityExample) {
  const double f = ronkin_f(1.0 / 3, 1.0 / 3, 1.0 / 3);
  EXPECT_NEAR(ronkin_f(2.0 / 3, 2.0 / 3, 2.0 / 3), f + std::log(2.0), 1e-12);
}

TEST(Ronkin, PermutationSymmetry) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::array<double, 3> x{u(rng), u(rng), u(rng)};
    const double base = ronkin_f(x[0], x[1], x[2]);
    std::sort(x.begin(), x.end());
    do {
      worst = std::max(worst, std::abs(ronkin_f(x[0], x[1], x[2]) - base));
    } while (std::next_permutation(x.begin(), x.end()));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Ronkin, Homogeneity) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(0.05, 1.0), lam(0.1, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng), l = lam(rng);
    worst = std::max(worst, std::abs(ronkin_f(l * a, l * b, l * c) - ronkin_f(a, b, c) - std::log(l)));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Ronkin, FrozenFacets) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.01, 1.0), extra(0.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double b = u(rng), c = u(rng);
    const double a = (b + c) * (1.0 + extra(rng));
    worst = std::max(worst, std::abs(ronkin_f(a, b, c) - std::log(a)));
    worst = std::max(worst, std::abs(ronkin_f(b, a, c) - std::log(a)));
    worst = std::max(worst, std::abs(ronkin_f(c, b, a) - std::log(a)));
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Ronkin, RejectsNonPositive) {
  EXPECT_THROW(ronkin_f(0.0, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(ronkin_f(1.0, -1.0, 1.0), std::domain_error);
  EXPECT_THROW(ronkin_f(1.0, 1.0, INFINITY), std::domain_error);
}

TEST(Sigma2, Examples) {
  EXPECT_EQ(sigma2(1), 1u);
  EXPECT_EQ(sigma2(6), 50u);
  EXPECT_EQ(sigma2(12), 210u);
  EXPECT_THROW(sigma2(0), std::domain_error);
}

TEST(Sigma2, TrialDivision) {
  for (std::uint64_t k = 1; k <= 2000; ++k) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (k % d == 0) s += d * d;
    }
    ASSERT_EQ(sigma2(k), s) << "k = " << k;
  }
}

TEST(Constants, ZetaAndExponents) {
  double z = 0.0;
  for (long k = 1000000; k >= 1; --k) z += 1.0 / (static_cast<double>(k) * k * k);
  EXPECT_NEAR(constants::zeta3, z, 1e-12);
  EXPECT_NEAR(constants::young_exponent * constants::young_exponent, 2.0 * pi * pi / 3.0, 1e-13);
  const double s = constants::skyscraper_exponent;
  EXPECT_NEAR(s * s * s, 27.0 * constants::zeta3 / 4.0, 1e-13);
  EXPECT_NEAR(s, 2.0094457, 1e-7);
}
