#pragma once

// Entropy functionals on the positive part of the unit sphere: eta_Y on the
// quarter circle (Young diagrams), eta_S on the spherical triangle
// (plane partitions), their 1-homogeneous extensions, and boundary
// mollification.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wulffnt/geometry.hpp"
#include "wulffnt/special_fns.hpp"

namespace wulffnt {

/// Unit vector with nonnegative components: an admissible normal in Delta^d.
template <int D>
class Direction {
 public:
  /// Normalizes `v`. Components down to -1e-12 (relative) are rounded to 0;
  /// anything more negative, or a zero vector, is rejected.
  static Direction from_vector(const Vec<D>& v) {
    const double len = norm<D>(v);
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw std::domain_error("Direction: zero or non-finite vector");
    }
    Direction d;
    for (int i = 0; i <= D; ++i) {
      double c = v[i] / len;
      if (c < 0.0) {
        if (c < -1e-12) throw std::domain_error("Direction: component outside the positive octant");
        c = 0.0;
      }
      d.c_[i] = c;
    }
    return d;
  }

  /// From an angle in [0, pi/2] (d = 1 only).
  static Direction from_angle(double theta)
    requires(D == 1)
  {
    return from_vector({std::cos(theta), std::sin(theta)});
  }

  double operator[](int i) const { return c_[i]; }
  const Vec<D>& vec() const { return c_; }
  double l1() const { return norm1<D>(c_); }

  /// Angular distance to the boundary of Delta^d: min_i arcsin(n_i).
  double boundary_distance() const {
    double m = c_[0];
    for (int i = 1; i <= D; ++i) m = std::min(m, c_[i]);
    return std::asin(std::min(m, 1.0));
  }

 private:
  Direction() = default;
  Vec<D> c_{};
};

/// A normal-dependent weight on Delta^d: houses eta, tau and tau_eta.
///
/// The optional gradient is the gradient of the 1-homogeneous extension,
/// evaluated at an arbitrary vector with nonnegative components.
template <int D>
class Tension {
 public:
  using Evaluator = std::function<double(const Direction<D>&)>;
  using Gradient = std::function<Vec<D>(const Vec<D>&)>;

  Tension(std::string name, Evaluator eval, Gradient grad = {}, double mollification_delta = 0.0)
      : name_(std::move(name)),
        eval_(std::move(eval)),
        grad_(std::move(grad)),
        delta_(mollification_delta) {}

  double operator()(const Direction<D>& n) const { return eval_(n); }

  const std::string& name() const { return name_; }
  double mollification_delta() const { return delta_; }
  bool has_gradient() const { return static_cast<bool>(grad_); }
  const Gradient& gradient() const { return grad_; }

  /// Value at the reflection-symmetric extension to the whole sphere.
  double symmetric(const Vec<D>& unit) const {
    Vec<D> a;
    for (int i = 0; i <= D; ++i) a[i] = std::abs(unit[i]);
    return eval_(Direction<D>::from_vector(a));
  }

 private:
  std::string name_;
  Evaluator eval_;
  Gradient grad_;
  double delta_;
};

namespace detail {

// x ln(x / s), with 0 ln 0 := 0.
inline double xlog_ratio(double x, double s) { return x > 0.0 ? x * std::log(x / s) : 0.0; }

}  // namespace detail

/// eta_Y(n) = -(n1 ln(n1/(n1+n2)) + n2 ln(n2/(n1+n2))).
inline double eta_young(const Direction<1>& n) {
  const double s = n[0] + n[1];
  return -(detail::xlog_ratio(n[0], s) + detail::xlog_ratio(n[1], s));
}

/// eta_S(n) = (|n|_1 / pi) sum_i L(pi n_i / |n|_1).
inline double eta_skyscraper(const Direction<2>& n) {
  const double s = n.l1();
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (n[i] > 0.0) total += lobachevsky(std::min(constants::pi * n[i] / s, constants::pi));
  }
  // Exact zero on the edges of Delta^2 (L(pi - x) = -L(x)) can come out as -1e-17.
  return std::max(0.0, s / constants::pi * total);
}

/// Gradient of the homogeneous extension of eta_Y: (ln(|v|_1/v1), ln(|v|_1/v2)).
/// These points satisfy e^-x + e^-y = 1.
inline Vec2 young_gradient(const Vec2& v) {
  const double s = v[0] + v[1];
  return {std::log(s / v[0]), std::log(s / v[1])};
}

/// Gradient of the homogeneous extension of eta_S. With p = v/|v|_1 and
/// l_j = ln(2 sin(pi p_j)):
///   x_j = (1/pi) sum_i L(pi p_i) + sum_i p_i l_i - l_j.
inline Vec3 skyscraper_gradient(const Vec3& v) {
  const double s = v[0] + v[1] + v[2];
  Vec3 l{};
  double common = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double p = v[i] / s;
    l[i] = std::log(2.0 * std::sin(constants::pi * p));
    common += lobachevsky(constants::pi * p) / constants::pi;
    if (p > 0.0) common += p * l[i];
  }
  return {common - l[0], common - l[1], common - l[2]};
}

inline Tension<1> young_tension() { return {"eta_Y", eta_young, young_gradient}; }

inline Tension<2> skyscraper_tension() { return {"eta_S", eta_skyscraper, skyscraper_gradient}; }

template <int D>
Tension<D> constant_tension(double c) {
  return {"constant", [c](const Direction<D>&) { return c; }, [](const Vec<D>& v) { return (1.0 / norm<D>(v)) * v; }};
}

template <int D>
Tension<D> zero_tension() {
  return {"zero", [](const Direction<D>&) { return 0.0; }, [](const Vec<D>&) { return Vec<D>{}; }};
}

/// tau(n) = |n|_1: support function of the unit cube [0,1]^{d+1} in the octant.
template <int D>
Tension<D> l1_tension() {
  return {"l1", [](const Direction<D>& n) { return n.l1(); }};
}

/// |v| * eta(v / |v|), the 1-homogeneous extension.
template <int D>
double homogeneous_extension(const Tension<D>& eta, const Vec<D>& v) {
  const double len = norm<D>(v);
  if (!(len > 0.0)) throw std::domain_error("homogeneous_extension: zero vector");
  return len * eta(Direction<D>::from_vector(v));
}

/// Gradient of the homogeneous extension: closed form when the tension has
/// one, otherwise central differences with step 1e-5 |v| (one-sided next to
/// the octant boundary).
template <int D>
Vec<D> homogeneous_gradient(const Tension<D>& eta, const Vec<D>& v) {
  if (eta.has_gradient()) return eta.gradient()(v);
  const double h = 1e-5 * norm<D>(v);
  Vec<D> g{};
  for (int j = 0; j <= D; ++j) {
    Vec<D> plus = v, minus = v;
    plus[j] += h;
    if (v[j] >= h) {
      minus[j] -= h;
      g[j] = (homogeneous_extension(eta, plus) - homogeneous_extension(eta, minus)) / (2.0 * h);
    } else {
      g[j] = (homogeneous_extension(eta, plus) - homogeneous_extension(eta, v)) / h;
    }
  }
  return g;
}

/// Largest admissible mollification width: the angular inradius of Delta^d.
template <int D>
double delta_inradius() {
  return std::asin(1.0 / std::sqrt(static_cast<double>(D + 1)));
}

/// eta forced to 0 within angular distance delta/2 of the boundary of
/// Delta^d, unchanged beyond delta, linear in angular distance in between.
template <int D>
Tension<D> mollify(const Tension<D>& eta, double delta) {
  if (!(delta >= 0.0) || delta >= delta_inradius<D>()) {
    throw std::domain_error("mollify: delta must lie in [0, inradius of Delta^d)");
  }
  if (delta == 0.0) return eta;
  auto eval = [eta, delta](const Direction<D>& n) {
    const double dist = n.boundary_distance();
    if (dist >= delta) return eta(n);
    if (dist <= 0.5 * delta) return 0.0;
    return eta(n) * (dist - 0.5 * delta) / (0.5 * delta);
  };
  return {eta.name() + "+mollified", eval, {}, delta};
}

}  // namespace wulffnt
