#pragma once

// Support-function bodies in the positive octant.
//
//   inner body  K^>  = { x >= 0 : (x, n) >= eta(n) for all n in Delta^d }
//   Wulff body  K^<  = { x >= 0 : (x, n) <= tau(n) for all n in Delta^d }
//
// Both are built as exact intersections of finitely many sampled half-spaces.
// Every facet of the result lies in one sampled support plane, so facet
// normals are sampled normals (always inside Delta^d) and the support value
// of each facet is the tension at its normal.
//
// The inner body is unbounded (it runs off along the axes), so it is
// represented inside a box [0, W]^{d+1} and volumes add an exponential tail
// estimate for the part beyond the box.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wulffnt/entropy.hpp"
#include "wulffnt/geometry.hpp"

namespace wulffnt {

enum class ShapeKind {
  inner,   // boundary of K^> (origin side is the region R below it)
  wulff,   // boundary of K^< restricted to the octant
  surface  // any hypersurface with normals in Delta^d, e.g. test staircases
};

enum class Side { origin, infinity };

template <int D>
struct Facet {
  Vec<D> normal;                 // unit, in Delta^d
  double support = 0.0;          // (x, normal) on the facet
  std::vector<Vec<D>> polygon;   // segment (d = 1) or convex polygon (d = 2)
  double area = 0.0;
};

template <int D>
struct ConvexShape {
  ShapeKind kind = ShapeKind::surface;
  double window = 0.0;         // the shape is represented inside [0, window]^{d+1}
  bool open_tail = false;      // region continues past the window (raw inner bodies)
  double scale = 1.0;          // product of all scaled() factors applied so far
  std::vector<Facet<D>> facets;
  std::vector<HalfSpace<D>> constraints;  // x in the body iff h.slack(x) >= 0 for all h

  /// Dilation about the origin.
  ConvexShape scaled(double s) const {
    if (!(s > 0.0)) throw std::domain_error("ConvexShape::scaled: factor must be positive");
    ConvexShape out = *this;
    out.window *= s;
    out.scale *= s;
    const double area_factor = std::pow(s, D);
    for (auto& f : out.facets) {
      f.support *= s;
      f.area *= area_factor;
      for (auto& p : f.polygon) p = s * p;
    }
    for (auto& h : out.constraints) h.offset *= s;
    return out;
  }

  /// All polygon vertices with near-duplicates (shared between facets) removed.
  std::vector<Vec<D>> vertices() const {
    std::vector<Vec<D>> pts;
    for (const auto& f : facets) pts.insert(pts.end(), f.polygon.begin(), f.polygon.end());
    std::sort(pts.begin(), pts.end());
    const double eps = 1e-12 * std::max(1.0, window);
    std::vector<Vec<D>> out;
    for (const auto& p : pts) {
      if (!out.empty() && distance<D>(out.back(), p) <= eps) continue;
      out.push_back(p);
    }
    return out;
  }

  double total_area() const {
    double s = 0.0;
    for (const auto& f : facets) s += f.area;
    return s;
  }
};

/// Default number of sampled normals: 4096 directions for d = 1, a 128 x 128
/// simplex grid for d = 2.
template <int D>
constexpr int default_samples() {
  return D == 1 ? 4096 : 128 * 128;
}

inline constexpr double kDefaultWindow = 30.0;

/// Grading exponent for inner bodies: clusters normals near the boundary of
/// Delta^d, where the inner body runs off to infinity.
inline constexpr double kInnerGrading = 3.0;

namespace detail {

inline double grade(double u, double alpha) {
  if (alpha == 1.0) return u;
  const double a = std::pow(u, alpha);
  const double b = std::pow(1.0 - u, alpha);
  return a / (a + b);
}

// Barycentric grid {(i, j, k) : i + j + k = m} on the simplex.
struct SimplexGrid {
  int m = 0;
  std::vector<std::array<int, 3>> nodes;

  explicit SimplexGrid(int m_) : m(m_) {
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m - i; ++j) nodes.push_back({i, j, m - i - j});
    }
  }

  std::size_t index(int i, int j) const {
    const std::size_t row = static_cast<std::size_t>(i) * (m + 1) - static_cast<std::size_t>(i) * (i - 1) / 2;
    return row + static_cast<std::size_t>(j);
  }

  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i + j <= m; }
};

inline int grid_side(int samples) {
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(samples))));
  if (m < 4) throw std::domain_error("samples: need at least 16 normals");
  return m;
}

template <int D>
std::vector<Vec<D>> sample_normals(int samples, double alpha) {
  if (samples < 16) throw std::domain_error("samples: need at least 16 normals");
  std::vector<Vec<D>> out;
  if constexpr (D == 1) {
    out.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      if (i == 0) {
        out.push_back({1.0, 0.0});
      } else if (i == samples - 1) {
        out.push_back({0.0, 1.0});
      } else {
        const double theta = 0.5 * constants::pi * grade(static_cast<double>(i) / (samples - 1), alpha);
        out.push_back({std::cos(theta), std::sin(theta)});
      }
    }
  } else {
    const SimplexGrid grid(grid_side(samples));
    out.reserve(grid.nodes.size());
    for (const auto& c : grid.nodes) {
      Vec3 q;
      for (int l = 0; l < 3; ++l) q[l] = std::pow(static_cast<double>(c[l]) / grid.m, alpha);
      out.push_back((1.0 / norm<2>(q)) * q);
    }
  }
  return out;
}

template <int D>
std::vector<HalfSpace<D>> box_halfspaces(double w) {
  std::vector<HalfSpace<D>> out;
  for (int k = 0; k <= D; ++k) {
    out.push_back({unit_axis<D>(k), 0.0});
    out.push_back({-1.0 * unit_axis<D>(k), -w});
  }
  return out;
}

template <int D>
std::vector<Vec<D>> clip_to_box(std::vector<Vec<D>> poly, double w, double tol) {
  for (const auto& h : box_halfspaces<D>(w)) {
    poly = clip<D>(poly, h, tol);
    if (poly.empty()) break;
  }
  return poly;
}

template <int D>
std::vector<Vec<D>> drop_repeats(const std::vector<Vec<D>>& poly, double eps) {
  std::vector<Vec<D>> out;
  for (const auto& p : poly) {
    if (!out.empty() && distance<D>(out.back(), p) <= eps) continue;
    out.push_back(p);
  }
  while (out.size() > 1 && distance<D>(out.front(), out.back()) <= eps) out.pop_back();
  return out;
}

inline Vec2 intersect_lines(const HalfSpace<1>& a, const HalfSpace<1>& b) {
  const double det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
  return {(a.offset * b.normal[1] - b.offset * a.normal[1]) / det,
          (a.normal[0] * b.offset - b.normal[0] * a.offset) / det};
}

// Boundary of the intersection of half-planes whose normals are sorted by
// angle and span less than pi. Returns one segment per surviving line, with
// the index of the line, clipped to [0, w]^2.
inline std::vector<std::pair<std::size_t, std::vector<Vec2>>> envelope_2d(
    const std::vector<HalfSpace<1>>& hs, double w) {
  const double tol = 1e-13 * (1.0 + w);
  std::vector<std::size_t> st;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    while (st.size() >= 2) {
      const Vec2 v = intersect_lines(hs[st[st.size() - 2]], hs[st.back()]);
      if (hs[k].slack(v) < -tol) {
        st.pop_back();
      } else {
        break;
      }
    }
    st.push_back(k);
  }
  std::vector<Vec2> verts;
  for (std::size_t j = 0; j + 1 < st.size(); ++j) verts.push_back(intersect_lines(hs[st[j]], hs[st[j + 1]]));

  const double far = 8.0 * w + 1.0;
  auto along = [](const Vec2& n) { return Vec2{-n[1], n[0]}; };
  std::vector<std::pair<std::size_t, std::vector<Vec2>>> out;
  for (std::size_t j = 0; j < st.size(); ++j) {
    const HalfSpace<1>& h = hs[st[j]];
    Vec2 a, b;
    if (st.size() == 1) {
      const Vec2 foot = (h.offset / dot<1>(h.normal, h.normal)) * h.normal;
      const Vec2 t = along(h.normal);
      a = foot - (far + norm<1>(foot)) * t;
      b = foot + (far + norm<1>(foot)) * t;
    } else {
      if (j == 0) {
        Vec2 t = along(h.normal);
        if (dot<1>(t, hs[st[1]].normal) < 0.0) t = -1.0 * t;
        a = verts[0] + (far + norm<1>(verts[0])) * t;
      } else {
        a = verts[j - 1];
      }
      if (j + 1 == st.size()) {
        Vec2 t = along(h.normal);
        if (dot<1>(t, hs[st[j - 1]].normal) < 0.0) t = -1.0 * t;
        b = verts[j - 1] + (far + norm<1>(verts[j - 1])) * t;
      } else {
        b = verts[j];
      }
    }
    auto seg = clip_to_box<1>({a, b}, w, 0.0);
    if (seg.size() == 2 && distance<1>(seg[0], seg[1]) > 1e-14 * (1.0 + w)) out.push_back({st[j], seg});
  }
  return out;
}

// Facet of half-space `self` in the intersection of all `hs` within [0, w]^3.
// Neighbours are tried first so that the polygon shrinks quickly; the
// bounding-sphere test then skips almost every other constraint.
inline std::vector<Vec3> facet_3d(const std::vector<HalfSpace<2>>& hs, std::size_t self,
                                  const std::vector<std::size_t>& neighbours, double w) {
  const HalfSpace<2>& h = hs[self];
  const Vec3 n = (1.0 / norm<2>(h.normal)) * h.normal;
  const double offset = h.offset / norm<2>(h.normal);
  // Orthonormal basis of the plane.
  int axis = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(n[k]) < std::abs(n[axis])) axis = k;
  }
  Vec3 u = cross(n, unit_axis<2>(axis));
  u = (1.0 / norm<2>(u)) * u;
  const Vec3 v = cross(n, u);
  const Vec3 c = offset * n;
  const double r = std::abs(offset) + 2.0 * w + 1.0;
  std::vector<Vec3> poly{c + r * (u + v), c + r * (v - u), c - r * (u + v), c + r * (u - v)};

  const double tol = 1e-12 * (1.0 + w);
  poly = clip_to_box<2>(poly, w, tol);
  for (std::size_t nb : neighbours) {
    if (poly.size() < 3) return {};
    if (nb != self) poly = clip<2>(poly, hs[nb], tol);
  }
  if (poly.size() < 3) return {};
  auto [center, radius] = bounding_sphere<2>(poly);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (i == self) continue;
    if (strictly_inside<2>(center, radius, hs[i], tol)) continue;
    const std::size_t before = poly.size();
    auto clipped = clip<2>(poly, hs[i], tol);
    if (clipped.size() < 3) return {};
    if (clipped.size() != before || clipped != poly) {
      poly = std::move(clipped);
      std::tie(center, radius) = bounding_sphere<2>(poly);
    }
  }
  return drop_repeats<2>(poly, 1e-13 * (1.0 + w));
}

// Shared construction. sign = +1: (x, n) >= value (inner); sign = -1:
// (x, n) <= value (Wulff).
template <int D>
ConvexShape<D> build_halfspace_body(const std::vector<Vec<D>>& normals, const std::vector<double>& values,
                                    double sign, double w, int samples) {
  ConvexShape<D> shape;
  shape.window = w;
  shape.constraints.reserve(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    shape.constraints.push_back({sign * normals[i], sign * values[i]});
  }
  auto add_facet = [&](std::size_t i, std::vector<Vec<D>> poly) {
    Facet<D> f;
    f.normal = normals[i];
    f.support = values[i];
    f.polygon = std::move(poly);
    f.area = facet_measure<D>(f.polygon);
    if (f.area > 1e-14 * std::pow(1.0 + w, D)) shape.facets.push_back(std::move(f));
  };
  if constexpr (D == 1) {
    (void)samples;
    for (auto& [i, seg] : envelope_2d(shape.constraints, w)) add_facet(i, std::move(seg));
  } else {
    const SimplexGrid grid(grid_side(samples));
    std::vector<std::size_t> nb;
    for (std::size_t idx = 0; idx < grid.nodes.size(); ++idx) {
      const auto& c = grid.nodes[idx];
      nb.clear();
      for (int di = -2; di <= 2; ++di) {
        for (int dj = -2; dj <= 2; ++dj) {
          if (std::abs(di + dj) > 2 || (di == 0 && dj == 0)) continue;
          if (grid.contains(c[0] + di, c[1] + dj)) nb.push_back(grid.index(c[0] + di, c[1] + dj));
        }
      }
      auto poly = facet_3d(shape.constraints, idx, nb, w);
      if (poly.size() >= 3) add_facet(idx, std::move(poly));
    }
  }
  return shape;
}

template <int D>
double face_measure_power(double w) {
  return std::pow(w, D);
}

}  // namespace detail

/// Boundary of K^> over `samples` graded normals, clipped to [0, window]^{d+1}.
template <int D>
ConvexShape<D> build_inner_shape(const Tension<D>& eta, int samples = default_samples<D>(),
                                 double window = kDefaultWindow) {
  if (!(window > 0.0)) throw std::domain_error("build_inner_shape: window must be positive");
  const auto normals = detail::sample_normals<D>(samples, kInnerGrading);
  std::vector<double> values;
  values.reserve(normals.size());
  for (const auto& n : normals) {
    const double v = eta(Direction<D>::from_vector(n));
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::domain_error("build_inner_shape: eta is negative or not finite at a sampled direction");
    }
    values.push_back(v);
  }
  auto shape = detail::build_halfspace_body<D>(normals, values, 1.0, window, samples);
  shape.kind = ShapeKind::inner;
  shape.open_tail = true;
  return shape;
}

/// Boundary of K^< inside the octant, sampled uniformly.
template <int D>
ConvexShape<D> build_wulff_shape(const Tension<D>& tau, int samples = default_samples<D>()) {
  const auto normals = detail::sample_normals<D>(samples, 1.0);
  std::vector<double> values;
  values.reserve(normals.size());
  double extent = 0.0;
  for (const auto& n : normals) {
    const double v = tau(Direction<D>::from_vector(n));
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error("build_wulff_shape: tau must be strictly positive");
    }
    values.push_back(v);
  }
  // The axis directions are always sampled, so the body sits in [0, max tau(e_k)].
  for (int k = 0; k <= D; ++k) extent = std::max(extent, tau(Direction<D>::from_vector(unit_axis<D>(k))));
  auto shape = detail::build_halfspace_body<D>(normals, values, -1.0, 1.5 * extent, samples);
  shape.kind = ShapeKind::wulff;
  return shape;
}

/// Sum over facets of weight(normal) * area.
template <int D>
double functional_value(const Tension<D>& weight, const ConvexShape<D>& shape) {
  double total = 0.0;
  for (const auto& f : shape.facets) {
    if (f.area > 0.0) total += weight(Direction<D>::from_vector(f.normal)) * f.area;
  }
  return total;
}

/// Measure of the origin-side region on the slice x_k = t of [0, w]^{d+1}.
template <int D>
double cross_section(const ConvexShape<D>& shape, int k, double t, double w) {
  if (shape.kind == ShapeKind::surface) return 0.0;
  std::vector<Vec<D>> face;
  if constexpr (D == 1) {
    Vec2 a{}, b{};
    a[k] = b[k] = t;
    b[1 - k] = w;
    face = {a, b};
  } else {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    Vec3 p{};
    p[k] = t;
    const std::array<std::pair<double, double>, 4> corners{{{0.0, 0.0}, {w, 0.0}, {w, w}, {0.0, w}}};
    for (const auto& [si, sj] : corners) {
      p[i] = si;
      p[j] = sj;
      face.push_back(p);
    }
  }
  const double full = detail::face_measure_power<D>(w);
  for (const auto& h : shape.constraints) {
    face = clip<D>(face, h, 0.0);
    if (face.size() < static_cast<std::size_t>(D + 1)) {
      face.clear();
      break;
    }
  }
  const double body = facet_measure<D>(face);
  return shape.kind == ShapeKind::inner ? std::max(0.0, full - body) : body;
}

/// Volume of the origin-side region inside [0, w]^{d+1}, w <= window:
/// (1/(d+1)) [ sum_facets support * area + w * sum_k cross_section_k(w) ].
template <int D>
double volume_below(const ConvexShape<D>& shape, double w) {
  const double tol = 1e-13 * (1.0 + w);
  double cones = 0.0;
  for (const auto& f : shape.facets) {
    if (f.support == 0.0) continue;
    const auto poly = detail::clip_to_box<D>(f.polygon, w, tol);
    if (poly.size() < static_cast<std::size_t>(D + 1)) continue;
    cones += f.support * facet_measure<D>(poly);
  }
  double faces = 0.0;
  if (shape.kind != ShapeKind::surface) {
    for (int k = 0; k <= D; ++k) faces += cross_section(shape, k, w, w);
  }
  return (cones + w * faces) / (D + 1);
}

namespace detail {

struct TailTerm {
  double area = 0.0;  // cross-section at the window
  double rate = 0.0;  // exponential decay rate beyond it
};

// Per-axis exponential model a_k(t) ~ a_k(W) exp(-rate (t - W)), fitted on
// [W - W/8, W].
template <int D>
std::array<TailTerm, D + 1> tail_terms(const ConvexShape<D>& shape) {
  std::array<TailTerm, D + 1> out{};
  if (!shape.open_tail) return out;
  const double w = shape.window;
  const double delta = w / 8.0;
  for (int k = 0; k <= D; ++k) {
    const double a = cross_section(shape, k, w, w);
    if (a <= 1e-12 * std::pow(w, D)) continue;
    const double a_in = cross_section(shape, k, w - delta, w);
    const double rate = std::log(a_in / a) / delta;
    if (!(rate > 0.0) || !std::isfinite(rate)) {
      throw std::runtime_error("enclosed_volume: region does not decay past the window (open shape)");
    }
    out[k] = {a, rate};
  }
  return out;
}

}  // namespace detail

/// Origin-side volume inside [0, w]^{d+1} for any w > 0: beyond the window
/// the tail model supplies the missing part.
template <int D>
double volume_in_box(const ConvexShape<D>& shape, double w) {
  if (w <= shape.window) return volume_below(shape, w);
  double v = volume_below(shape, shape.window);
  for (const auto& t : detail::tail_terms(shape)) {
    if (t.area > 0.0) v += t.area * (1.0 - std::exp(-t.rate * (w - shape.window))) / t.rate;
  }
  return v;
}

/// Volume between the octant corner and the shape (Side::origin). For Wulff
/// bodies that is the body itself, which is also what Side::infinity asks
/// for; the inner body's far side is unbounded and rejected.
template <int D>
double enclosed_volume(const ConvexShape<D>& shape, Side side = Side::origin) {
  if (side == Side::infinity && shape.kind != ShapeKind::wulff) {
    throw std::domain_error("enclosed_volume: the far side is unbounded for this shape");
  }
  double v = volume_below(shape, shape.window);
  for (const auto& t : detail::tail_terms(shape)) {
    if (t.area > 0.0) v += t.area / t.rate;
  }
  return v;
}

/// tau_eta(n) = N |n|_1 - eta(n), reflection-symmetric.
template <int D>
Tension<D> dual_tension(const Tension<D>& eta, double n_side) {
  if (!(n_side > 0.0)) throw std::domain_error("dual_tension: N must be positive");
  auto eval = [eta, n_side](const Direction<D>& n) { return n_side * n.l1() - eta(n); };
  for (const auto& n : detail::sample_normals<D>(D == 1 ? 2048 : 64 * 64, 1.0)) {
    if (!(eval(Direction<D>::from_vector(n)) > 0.0)) {
      throw std::domain_error("dual_tension: N |n|_1 - eta(n) is not positive; N too small");
    }
  }
  typename Tension<D>::Gradient grad;
  if (eta.has_gradient()) {
    grad = [eta, n_side](const Vec<D>& v) {
      Vec<D> g = -1.0 * eta.gradient()(v);
      for (auto& x : g) x += n_side;
      return g;
    };
  }
  return {"tau_" + eta.name(), eval, grad};
}

template <int D>
struct CubeProblem {
  double n_side;  // N
  double volume;  // V in (0, N^{d+1})
  Tension<D> eta;

  void validate() const {
    if (!(n_side > 0.0)) throw std::domain_error("CubeProblem: N must be positive");
    if (!(volume > 0.0 && volume < std::pow(n_side, D + 1))) {
      throw std::domain_error("CubeProblem: V must lie in (0, N^{d+1})");
    }
  }
};

/// lambda with lambda^{d+1} * volume_in_box(raw, N / lambda) = V, by bisection.
template <int D>
double solve_dilatation(const ConvexShape<D>& raw, double n_side, double volume) {
  if (!(volume > 0.0 && volume < std::pow(n_side, D + 1))) {
    throw std::domain_error("solve_dilatation: V must lie in (0, N^{d+1})");
  }
  auto vol = [&](double lam) { return std::pow(lam, D + 1) * volume_in_box(raw, n_side / lam); };
  double lo = 1.0, hi = 1.0;
  int guard = 0;
  while (vol(hi) < volume) {
    hi *= 2.0;
    if (++guard > 200) throw std::runtime_error("solve_dilatation: V outside the attainable range");
  }
  guard = 0;
  while (vol(lo) > volume) {
    lo *= 0.5;
    if (++guard > 200) throw std::runtime_error("solve_dilatation: V outside the attainable range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (vol(mid) < volume ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

template <int D>
double solve_dilatation(const CubeProblem<D>& problem, int samples = default_samples<D>(),
                        double window = kDefaultWindow) {
  problem.validate();
  const auto raw = build_inner_shape(problem.eta, samples, window);
  return solve_dilatation(raw, problem.n_side, problem.volume);
}

/// Q_N cut by lambda(V, N) * G_eta. The largeness check requires the
/// origin-side region to reach the far faces x_k = N only in a band of width
/// at most 1e-3 N around the axes.
template <int D>
ConvexShape<D> scaled_maximizer(const CubeProblem<D>& problem, int samples = default_samples<D>(),
                                double window = kDefaultWindow) {
  problem.validate();
  const double n_side = problem.n_side;
  auto raw = build_inner_shape(problem.eta, samples, window);
  bool degenerate = true;
  for (const auto& h : raw.constraints) degenerate = degenerate && h.offset == 0.0;
  if (degenerate) {
    // eta == 0: K^> is the whole octant and the shape is its boundary.
    auto axes = build_inner_shape(problem.eta, samples, n_side);
    axes.open_tail = false;
    return axes;
  }
  const double lambda = solve_dilatation(raw, n_side, problem.volume);
  auto shape = build_inner_shape(problem.eta, samples, n_side / lambda).scaled(lambda);
  shape.open_tail = false;
  for (int k = 0; k <= D; ++k) {
    const double contact = std::pow(cross_section(shape, k, n_side, n_side), 1.0 / D);
    if (contact > 1e-3 * n_side) {
      throw std::runtime_error("scaled_maximizer: N too small, the shape meets the far faces of the cube");
    }
  }
  return shape;
}

/// (Lambda (d+1) / W_tau(W_tau))^{1/(d+1)} * W_tau.
template <int D>
ConvexShape<D> wulff_minimizer(const Tension<D>& tau, double big_lambda, int samples = default_samples<D>()) {
  if (!(big_lambda > 0.0)) throw std::domain_error("wulff_minimizer: Lambda must be positive");
  const auto body = build_wulff_shape(tau, samples);
  const double w = functional_value(tau, body);
  return body.scaled(std::pow(big_lambda * (D + 1) / w, 1.0 / (D + 1)));
}

/// Area of the orthogonal projection onto the hyperplane orthogonal to
/// (1, ..., 1): sum of (n, 1/sqrt(d+1)) * area.
template <int D>
double projection_area(const ConvexShape<D>& shape, double n_side) {
  const double slack = 1e-9 * std::max(1.0, n_side);
  double total = 0.0;
  for (const auto& f : shape.facets) {
    for (const auto& p : f.polygon) {
      for (double x : p) {
        if (x < -slack || x > n_side + slack) throw std::domain_error("projection_area: shape leaves Q_N");
      }
    }
    total += norm1<D>(f.normal) * f.area;
  }
  return total / std::sqrt(static_cast<double>(D + 1));
}

/// |V_eta(G) + W_tau(G) - |OA| S(P(G))| with tau = dual_tension(eta, N) and
/// |OA| = N sqrt(d+1). Facet by facet eta + tau = N |n|_1 = |OA| (n, OA/|OA|),
/// so this is a pure consistency check of the three facet sums.
template <int D>
double duality_residual(const Tension<D>& eta, double n_side, const ConvexShape<D>& shape) {
  const double v = functional_value(eta, shape);
  const double w = functional_value(dual_tension(eta, n_side), shape);
  const double oa = n_side * std::sqrt(static_cast<double>(D + 1));
  return std::abs(v + w - oa * projection_area(shape, n_side));
}

/// The d+1 faces of Q_N through the origin, with normals e_k.
template <int D>
ConvexShape<D> cube_corner_surface(double n_side) {
  ConvexShape<D> shape;
  shape.window = n_side;
  for (int k = 0; k <= D; ++k) {
    Facet<D> f;
    f.normal = unit_axis<D>(k);
    if constexpr (D == 1) {
      Vec2 b{};
      b[1 - k] = n_side;
      f.polygon = {Vec2{}, b};
    } else {
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      Vec3 p{}, q{}, r{};
      p[i] = n_side;
      q[i] = q[j] = n_side;
      r[j] = n_side;
      f.polygon = {Vec3{}, p, q, r};
    }
    f.area = facet_measure<D>(f.polygon);
    shape.facets.push_back(std::move(f));
  }
  return shape;
}

/// Planar polyline through `points` (d = 1). Each segment's normal is the
/// left-hand normal of its direction, which must lie in Delta^1: the points
/// go right and down.
inline ConvexShape<1> polyline_surface(const std::vector<Vec2>& points, double window) {
  ConvexShape<1> shape;
  shape.window = window;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Vec2 d = points[i + 1] - points[i];
    const double len = norm<1>(d);
    if (len == 0.0) continue;
    Facet<1> f;
    f.normal = Direction<1>::from_vector({-d[1], d[0]}).vec();
    f.polygon = {points[i], points[i + 1]};
    f.support = dot<1>(points[i], f.normal);
    f.area = len;
    shape.facets.push_back(std::move(f));
  }
  return shape;
}

}  // namespace wulffnt
