#pragma once

// Scalar special functions behind the entropy functionals and the limit
// shapes: the Lobachevsky function, the Ronkin-type logarithmic integral
// f(A,B,C), divisor sums and a few named constants.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wulffnt {

namespace constants {

inline constexpr double pi = std::numbers::pi;
/// Apery's constant zeta(3).
inline constexpr double zeta3 = 1.2020569031595942853997381615114499907649862923405;

/// Leading exponent of ln p(N) / sqrt(N): pi * sqrt(2/3).
inline const double young_exponent = pi * std::sqrt(2.0 / 3.0);

/// Leading exponent of ln pp(N) / N^(2/3): 3 * (zeta(3)/4)^(1/3).
inline const double skyscraper_exponent = 3.0 * std::cbrt(zeta3 / 4.0);

}  // namespace constants

namespace detail {

// Coefficients of the power series
//   Cl2(t) = t - t ln t + sum_k c_k t^(2k+1),  c_k = 2 zeta(2k) / (2k (2k+1) (2 pi)^(2k)),
// convergent for 0 <= t < 2 pi. We only use it on [0, pi], where the ratio of
// successive terms is at most 1/4.
inline constexpr int kClausenTerms = 40;

inline const std::array<double, kClausenTerms>& clausen_coefficients() {
  static const std::array<double, kClausenTerms> table = [] {
    std::array<double, kClausenTerms> c{};
    const double two_pi = 2.0 * constants::pi;
    for (int k = 1; k <= kClausenTerms; ++k) {
      const int s = 2 * k;
      double zeta;
      if (k == 1) {
        zeta = constants::pi * constants::pi / 6.0;
      } else if (k == 2) {
        zeta = std::pow(constants::pi, 4) / 90.0;
      } else {
        // zeta(s) - 1 decays like 2^-s; 64 terms plus the integral tail is plenty.
        zeta = 0.0;
        for (int j = 64; j >= 1; --j) zeta += std::pow(static_cast<double>(j), -s);
        zeta += std::pow(64.5, 1 - s) / (s - 1);
      }
      c[k - 1] = 2.0 * zeta / (s * (s + 1.0) * std::pow(two_pi, s));
    }
    return c;
  }();
  return table;
}

// Cl2(t) for t in [0, pi].
inline double clausen_reduced(double t) {
  if (t == 0.0) return 0.0;
  const auto& c = clausen_coefficients();
  const double t2 = t * t;
  double power = t * t2;  // t^(2k+1), k = 1
  double series = 0.0;
  for (int k = 0; k < kClausenTerms; ++k) {
    const double term = c[k] * power;
    series += term;
    if (term < 1e-18 * std::abs(series)) break;
    power *= t2;
  }
  return t - t * std::log(t) + series;
}

}  // namespace detail

/// Lobachevsky function L(x) = -int_0^x ln(2 sin t) dt on [0, pi].
///
/// Evaluated as Cl2(2x)/2 through the Clausen power series, with the
/// reflection Cl2(2 pi - t) = -Cl2(t) keeping the argument in [0, pi].
/// Absolute error is at the level of double rounding.
inline double lobachevsky(double x) {
  if (!(x >= 0.0 && x <= constants::pi)) {
    throw std::domain_error("lobachevsky: argument outside [0, pi]");
  }
  const double t = 2.0 * x;
  if (t <= constants::pi) return 0.5 * detail::clausen_reduced(t);
  return -0.5 * detail::clausen_reduced(2.0 * constants::pi - t);
}

/// f(A,B,C) = (1/4 pi^2) int int ln|A + B e^{iu} + C e^{iv}| du dv for A,B,C > 0.
///
/// The v-integral is done in closed form (Jensen):
///   (1/2 pi) int ln|D + C e^{iv}| dv = ln max(|D|, C),
/// leaving (1/pi) int_0^pi ln max(|A + B e^{iu}|, C) du. The integrand has a
/// kink where |A + B e^{iu}| = C; the interval is split there so each piece
/// is smooth.
inline double ronkin_f(double a, double b, double c) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0) || !std::isfinite(a + b + c)) {
    throw std::domain_error("ronkin_f: arguments must be positive and finite");
  }
  // |A + B e^{iu}| decreases from A + B at u = 0 to |A - B| at u = pi.
  if (c >= a + b) return std::log(c);
  // No kink: Jensen applies to the u-integral as well.
  if (c <= std::abs(a - b)) return std::log(std::max(a, b));
  const double log_c = std::log(c);
  auto log_modulus = [a, b](double u) {
    // (A-B)^2 + 4AB cos^2(u/2) avoids cancellation near u = pi when A ~ B.
    const double h = std::cos(0.5 * u);
    return 0.5 * std::log((a - b) * (a - b) + 4.0 * a * b * h * h);
  };
  // (A-B)^2 + 4AB cos^2(u*/2) = C^2
  const double h2 = (c * c - (a - b) * (a - b)) / (4.0 * a * b);
  const double kink = 2.0 * std::acos(std::sqrt(std::clamp(h2, 0.0, 1.0)));
  using quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0.0;
  const double smooth_part =
      kink > 0.0 ? quadrature::integrate(log_modulus, 0.0, kink, 20, 1e-14, &err) : 0.0;
  return (smooth_part + (constants::pi - kink) * log_c) / constants::pi;
}

/// Sum of squares of the divisors of k.
inline std::uint64_t sigma2(std::uint64_t k) {
  if (k == 0) throw std::domain_error("sigma2: k must be positive");
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    const std::uint64_t e = k / d;
    total += d * d;
    if (e != d) total += e * e;
  }
  return total;
}

}  // namespace wulffnt
