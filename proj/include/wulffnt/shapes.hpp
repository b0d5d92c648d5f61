#pragma once

// Closed-form limit shapes: the Vershik curve e^-x + e^-y = 1 and the
// Cerf-Kenyon surface x = (f - ln A, f - ln B, f - ln C), plus the metrics
// used to compare them with the support-function engine.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wulffnt/geometry.hpp"
#include "wulffnt/special_fns.hpp"
#include "wulffnt/wulff.hpp"

namespace wulffnt {

/// Factor taking the raw Vershik curve to unit area: sqrt(6)/pi.
inline const double kVershikScale = std::sqrt(6.0) / constants::pi;

/// Factor taking the raw Cerf-Kenyon surface to unit volume: (zeta(3)/4)^(-1/3).
inline const double kCerfKenyonScale = 1.0 / std::cbrt(constants::zeta3 / 4.0);

/// (-ln t, -ln(1 - t)), optionally scaled to unit area.
inline Vec2 vershik_point(double t, bool scaled) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("vershik_point: t must lie in (0, 1)");
  const Vec2 p{-std::log(t), -std::log1p(-t)};
  return scaled ? kVershikScale * p : p;
}

/// Point (A, B, C) of the closed simplex A + B + C = 1.
struct SimplexPoint {
  double a, b, c;

  SimplexPoint(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(a >= 0.0 && b >= 0.0 && c >= 0.0) || std::abs(a + b + c - 1.0) > 1e-12) {
      throw std::domain_error("SimplexPoint: need nonnegative components summing to 1");
    }
  }

  bool interior() const { return a > 0.0 && b > 0.0 && c > 0.0; }
  std::array<double, 3> array() const { return {a, b, c}; }
};

/// (f - ln A, f - ln B, f - ln C) with f = ronkin_f(A, B, C).
inline Vec3 cerf_kenyon_point(const SimplexPoint& p, bool scaled) {
  if (!p.interior()) throw std::domain_error("cerf_kenyon_point: point on the simplex boundary");
  const double f = ronkin_f(p.a, p.b, p.c);
  const Vec3 x{f - std::log(p.a), f - std::log(p.b), f - std::log(p.c)};
  return scaled ? kCerfKenyonScale * x : x;
}

/// Normal of the Cerf-Kenyon surface at p in l1 normalization, i.e.
/// (A f_A, B f_B, C f_C): the angles of the triangle with sides A, B, C
/// divided by pi, or a unit vector when the triangle degenerates.
inline std::array<double, 3> facet_densities(const SimplexPoint& p) {
  const double a = p.a, b = p.b, c = p.c;
  if (a >= b + c) return {1.0, 0.0, 0.0};
  if (b >= a + c) return {0.0, 1.0, 0.0};
  if (c >= a + b) return {0.0, 0.0, 1.0};
  auto angle = [](double opposite, double s1, double s2) {
    return std::acos(std::clamp((s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2), -1.0, 1.0));
  };
  const double pa = angle(a, b, c) / constants::pi;
  const double pb = angle(b, a, c) / constants::pi;
  return {pa, pb, 1.0 - (pa + pb)};
}

/// |(x, p) - (1/pi) sum L(pi p_i)| for x = cerf_kenyon_point(q, raw) and
/// p = facet_densities(q): the surface is the inner body of eta_S.
inline double support_identity_residual(const SimplexPoint& q) {
  const auto p = facet_densities(q);
  const Vec3 x = cerf_kenyon_point(q, false);
  double lhs = 0.0, rhs = 0.0;
  for (int i = 0; i < 3; ++i) {
    lhs += x[i] * p[i];
    rhs += lobachevsky(constants::pi * p[i]) / constants::pi;
  }
  return std::abs(lhs - rhs);
}

/// Polyline through vershik_point(i / (samples + 1)), i = samples..1, so the
/// curve runs from the top-left to the bottom-right.
inline ConvexShape<1> sample_vershik(int samples, bool scaled) {
  if (samples < 1) throw std::domain_error("sample_vershik: samples must be positive");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int i = samples; i >= 1; --i) pts.push_back(vershik_point(static_cast<double>(i) / (samples + 1), scaled));
  auto shape = polyline_surface(pts, 0.0);
  for (const auto& p : pts) shape.window = std::max({shape.window, p[0], p[1]});
  return shape;
}

/// (A, B, C) = ((1 - s1)/2, (1 - s2)/2, (1 - s3)/2) for s in the simplex.
inline SimplexPoint liquid_point(const std::array<double, 3>& s) {
  return {0.5 * (1.0 - s[0]), 0.5 * (1.0 - s[1]), 0.5 * (1.0 - s[2])};
}

/// Surface point over liquid parameter s. On the edge s_k = 0 the triangle
/// degenerates (A_k = A_i + A_j): f = ln A_k, so x_k = 0 and the point is
/// (-ln s_j, -ln s_i) in the other two coordinates, evaluated directly.
inline Vec3 liquid_surface_point(const std::array<double, 3>& s, bool scaled) {
  const int frozen = s[0] == 0.0 ? 0 : s[1] == 0.0 ? 1 : s[2] == 0.0 ? 2 : -1;
  if (frozen < 0) return cerf_kenyon_point(liquid_point(s), scaled);
  const int i = (frozen + 1) % 3, j = (frozen + 2) % 3;
  Vec3 x{};
  x[i] = -std::log(s[j]);
  x[j] = -std::log(s[i]);
  return scaled ? kCerfKenyonScale * x : x;
}

/// Cerf-Kenyon surface over its liquid region. The triangle inequality
/// region of (A, B, C) is parametrized by s in the simplex through
/// (A, B, C) = ((1 - s1)/2, (1 - s2)/2, (1 - s3)/2); on a uniform grid of
/// side m. Nodes with s_k = 0 are frozen (they lie on the Vershik curve in a
/// coordinate plane); nodes with s_k = 1 run off to infinity and are left out
/// together with their triangles.
inline ConvexShape<2> sample_cerf_kenyon(int m, bool scaled) {
  if (m < 2) throw std::domain_error("sample_cerf_kenyon: grid side must be at least 2");
  const detail::SimplexGrid grid(m);
  std::vector<Vec3> pts(grid.nodes.size());
  std::vector<bool> valid(grid.nodes.size(), true);
  for (std::size_t idx = 0; idx < grid.nodes.size(); ++idx) {
    const auto& c = grid.nodes[idx];
    if (c[0] == m || c[1] == m || c[2] == m) {
      valid[idx] = false;
      continue;
    }
    const std::array<double, 3> s{static_cast<double>(c[0]) / m, static_cast<double>(c[1]) / m,
                                  static_cast<double>(c[2]) / m};
    pts[idx] = liquid_surface_point(s, scaled);
  }
  ConvexShape<2> shape;
  shape.window = 0.0;
  auto add = [&](std::size_t i0, std::size_t i1, std::size_t i2) {
    if (!valid[i0] || !valid[i1] || !valid[i2]) return;
    Facet<2> f;
    f.polygon = {pts[i0], pts[i1], pts[i2]};
    const Vec3 va = vector_area(f.polygon);
    f.area = norm<2>(va);
    if (!(f.area > 0.0)) return;
    // Normal from the parameter at the centroid, which stays inside Delta^2.
    std::array<double, 3> s{};
    for (std::size_t id : {i0, i1, i2}) {
      for (int l = 0; l < 3; ++l) s[l] += grid.nodes[id][l] / (3.0 * m);
    }
    const auto p = facet_densities(liquid_point(s));
    f.normal = Direction<2>::from_vector({p[0], p[1], p[2]}).vec();
    f.support = dot<2>(f.polygon[0], f.normal);
    shape.facets.push_back(std::move(f));
    for (std::size_t id : {i0, i1, i2}) {
      for (double v : pts[id]) shape.window = std::max(shape.window, v);
    }
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - i; ++j) {
      add(grid.index(i, j), grid.index(i + 1, j), grid.index(i, j + 1));
      if (i + j + 2 <= m) add(grid.index(i + 1, j), grid.index(i + 1, j + 1), grid.index(i, j + 1));
    }
  }
  return shape;
}

/// Segments (d = 1) or a fan triangulation of every facet polygon (d = 2).
template <int D>
std::vector<Simplex<D>> to_simplicial(const ConvexShape<D>& shape) {
  std::vector<Simplex<D>> out;
  for (const auto& f : shape.facets) {
    if constexpr (D == 1) {
      if (f.polygon.size() == 2) out.push_back({f.polygon[0], f.polygon[1]});
    } else {
      for (std::size_t i = 1; i + 1 < f.polygon.size(); ++i) out.push_back({f.polygon[0], f.polygon[i], f.polygon[i + 1]});
    }
  }
  return out;
}

/// Symmetric Hausdorff distance: vertices of each shape inside [0, window]^{d+1}
/// against the segments/triangles of the other.
template <int D>
double hausdorff_distance(const ConvexShape<D>& a, const ConvexShape<D>& b, double window) {
  auto inside = [window](const Vec<D>& p) {
    for (double x : p) {
      if (x < -1e-12 * (1.0 + window) || x > window) return false;
    }
    return true;
  };
  auto one_sided = [&](const ConvexShape<D>& from, const ConvexShape<D>& to) {
    const SimplexTree<D> tree(to_simplicial(to));
    if (tree.empty()) throw std::domain_error("hausdorff_distance: empty shape");
    double worst = 0.0;
    bool any = false;
    for (const auto& p : from.vertices()) {
      if (!inside(p)) continue;
      any = true;
      worst = std::max(worst, tree.nearest(p));
    }
    if (!any) throw std::domain_error("hausdorff_distance: no vertices inside the window");
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace wulffnt
