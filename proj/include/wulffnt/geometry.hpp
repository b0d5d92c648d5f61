#pragma once

// Small fixed-dimension vector helpers and the handful of computational
// geometry primitives the Wulff engine needs: half-space clipping of convex
// polygons, polygon area, point-to-simplex distances and an AABB tree for
// nearest-simplex queries.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace wulffnt {

/// A point or vector in R^{d+1}; d = 1 (plane) or d = 2 (space).
template <int D>
using Vec = std::array<double, D + 1>;

using Vec2 = Vec<1>;
using Vec3 = Vec<2>;

template <int D>
constexpr double dot(const Vec<D>& a, const Vec<D>& b) {
  double s = 0.0;
  for (int i = 0; i <= D; ++i) s += a[i] * b[i];
  return s;
}

// Arithmetic on std::array<double, N>; found by ordinary lookup inside this
// namespace (bring it in with a using-directive elsewhere).
template <std::size_t N>
constexpr std::array<double, N> operator+(std::array<double, N> a, const std::array<double, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
  return a;
}

template <std::size_t N>
constexpr std::array<double, N> operator-(std::array<double, N> a, const std::array<double, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] -= b[i];
  return a;
}

template <std::size_t N>
constexpr std::array<double, N> operator*(double s, std::array<double, N> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <int D>
double norm(const Vec<D>& a) {
  return std::sqrt(dot<D>(a, a));
}

template <int D>
double norm1(const Vec<D>& a) {
  double s = 0.0;
  for (double x : a) s += std::abs(x);
  return s;
}

template <int D>
double distance(const Vec<D>& a, const Vec<D>& b) {
  return norm<D>(a - b);
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <int D>
Vec<D> unit_axis(int k) {
  Vec<D> e{};
  e[k] = 1.0;
  return e;
}

/// Closed half-space {x : (x, normal) >= offset}.
template <int D>
struct HalfSpace {
  Vec<D> normal;
  double offset = 0.0;

  double slack(const Vec<D>& x) const { return dot<D>(x, normal) - offset; }
};

/// Sutherland-Hodgman step: keeps the part of a convex polygon (or segment,
/// for two points) inside `h`. Points within `tol` of the boundary count as
/// inside. Orientation is preserved.
template <int D>
std::vector<Vec<D>> clip(const std::vector<Vec<D>>& poly, const HalfSpace<D>& h, double tol) {
  std::vector<Vec<D>> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  out.reserve(n + 2);
  if (n == 2) {
    // Open segment: no wrap-around edge.
    const double f0 = h.slack(poly[0]);
    const double f1 = h.slack(poly[1]);
    const bool in0 = f0 >= -tol, in1 = f1 >= -tol;
    if (in0 && in1) return poly;
    if (!in0 && !in1) return out;
    const double t = f0 / (f0 - f1);
    const Vec<D> x = poly[0] + t * (poly[1] - poly[0]);
    if (in0) return {poly[0], x};
    return {x, poly[1]};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<D>& p = poly[i];
    const Vec<D>& q = poly[(i + 1) % n];
    const double fp = h.slack(p);
    const double fq = h.slack(q);
    const bool in_p = fp >= -tol, in_q = fq >= -tol;
    if (in_p) out.push_back(p);
    if (in_p != in_q) {
      const double t = std::clamp(fp / (fp - fq), 0.0, 1.0);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

/// True when every vertex of `poly` is at least `margin` inside `h`, decided
/// from a bounding sphere first.
template <int D>
bool strictly_inside(const Vec<D>& center, double radius, const HalfSpace<D>& h, double margin) {
  return h.slack(center) >= radius * norm<D>(h.normal) + margin;
}

template <int D>
std::pair<Vec<D>, double> bounding_sphere(const std::vector<Vec<D>>& pts) {
  Vec<D> c{};
  for (const auto& p : pts) c = c + p;
  c = (1.0 / static_cast<double>(pts.size())) * c;
  double r = 0.0;
  for (const auto& p : pts) r = std::max(r, distance<D>(p, c));
  return {c, r};
}

/// Vector area (Newell) of a planar polygon in R^3; its length is the area and
/// its direction the right-handed normal.
inline Vec3 vector_area(const std::vector<Vec3>& poly) {
  Vec3 s{};
  const std::size_t n = poly.size();
  if (n < 3) return s;
  // Fan from the first vertex: avoids cancellation for small facets far from the origin.
  for (std::size_t i = 1; i + 1 < n; ++i) s = s + cross(poly[i] - poly[0], poly[i + 1] - poly[0]);
  return 0.5 * s;
}

/// d-dimensional measure of a facet polygon: length for d = 1, area for d = 2.
template <int D>
double facet_measure(const std::vector<Vec<D>>& poly) {
  if constexpr (D == 1) {
    return poly.size() == 2 ? distance<1>(poly[0], poly[1]) : 0.0;
  } else {
    return poly.size() < 3 ? 0.0 : norm<2>(vector_area(poly));
  }
}

/// Signed area of a polygon in R^2 (counter-clockwise positive).
inline double signed_area(std::span<const Vec2> poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    s += p[0] * q[1] - p[1] * q[0];
  }
  return 0.5 * s;
}

inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = dot<1>(ab, ab);
  double t = len2 > 0.0 ? dot<1>(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance<1>(p, a + t * ab);
}

inline double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = dot<2>(ab, ab);
  double t = len2 > 0.0 ? dot<2>(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance<2>(p, a + t * ab);
}

/// Euclidean distance from p to the (closed) triangle abc.
inline double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n = cross(b - a, c - a);
  const double n2 = dot<2>(n, n);
  if (n2 > 0.0) {
    // Barycentric coordinates of the projection.
    const Vec3 ap = p - a;
    const double dist_plane = dot<2>(ap, n) / n2;
    const Vec3 proj = p - dist_plane * n;
    const double u = dot<2>(cross(c - b, proj - b), n) / n2;
    const double v = dot<2>(cross(a - c, proj - c), n) / n2;
    const double w = 1.0 - u - v;
    if (u >= 0.0 && v >= 0.0 && w >= 0.0) return std::abs(dist_plane) * std::sqrt(n2);
  }
  return std::min({point_segment_distance(p, a, b), point_segment_distance(p, b, c),
                   point_segment_distance(p, c, a)});
}

/// A segment (d = 1) or triangle (d = 2).
template <int D>
using Simplex = std::array<Vec<D>, D + 1>;

template <int D>
double point_simplex_distance(const Vec<D>& p, const Simplex<D>& s) {
  if constexpr (D == 1) {
    return point_segment_distance(p, s[0], s[1]);
  } else {
    return point_triangle_distance(p, s[0], s[1], s[2]);
  }
}

/// Bounding-volume hierarchy over simplices answering nearest-distance queries.
template <int D>
class SimplexTree {
 public:
  explicit SimplexTree(std::vector<Simplex<D>> simplices) : simplices_(std::move(simplices)) {
    order_.resize(simplices_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (!simplices_.empty()) build(0, simplices_.size());
  }

  bool empty() const { return simplices_.empty(); }

  double nearest(const Vec<D>& p) const {
    double best = std::numeric_limits<double>::infinity();
    if (nodes_.empty()) return best;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const Node& node = nodes_[stack.back()];
      stack.pop_back();
      if (box_distance(node, p) >= best) continue;
      if (node.left == kLeaf) {
        for (std::size_t i = node.begin; i < node.end; ++i) {
          best = std::min(best, point_simplex_distance<D>(p, simplices_[order_[i]]));
        }
        continue;
      }
      const double dl = box_distance(nodes_[node.left], p);
      const double dr = box_distance(nodes_[node.right], p);
      // Visit the closer child first.
      if (dl < dr) {
        stack.push_back(node.right);
        stack.push_back(node.left);
      } else {
        stack.push_back(node.left);
        stack.push_back(node.right);
      }
    }
    return best;
  }

 private:
  static constexpr std::size_t kLeaf = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kLeafSize = 4;

  struct Node {
    Vec<D> lo, hi;
    std::size_t begin = 0, end = 0;
    std::size_t left = kLeaf, right = kLeaf;
  };

  static double box_distance(const Node& n, const Vec<D>& p) {
    double s = 0.0;
    for (int i = 0; i <= D; ++i) {
      const double e = std::max({n.lo[i] - p[i], 0.0, p[i] - n.hi[i]});
      s += e * e;
    }
    return std::sqrt(s);
  }

  Vec<D> centroid(std::size_t idx) const {
    Vec<D> c{};
    for (const auto& v : simplices_[idx]) c = c + v;
    return (1.0 / (D + 1)) * c;
  }

  std::size_t build(std::size_t begin, std::size_t end) {
    const std::size_t id = nodes_.size();
    nodes_.push_back({});
    Node node;
    node.begin = begin;
    node.end = end;
    node.lo.fill(std::numeric_limits<double>::infinity());
    node.hi.fill(-std::numeric_limits<double>::infinity());
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& v : simplices_[order_[i]]) {
        for (int k = 0; k <= D; ++k) {
          node.lo[k] = std::min(node.lo[k], v[k]);
          node.hi[k] = std::max(node.hi[k], v[k]);
        }
      }
    }
    if (end - begin > kLeafSize) {
      int axis = 0;
      for (int k = 1; k <= D; ++k) {
        if (node.hi[k] - node.lo[k] > node.hi[axis] - node.lo[axis]) axis = k;
      }
      const std::size_t mid = begin + (end - begin) / 2;
      std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                       order_.begin() + static_cast<std::ptrdiff_t>(mid),
                       order_.begin() + static_cast<std::ptrdiff_t>(end),
                       [&](std::size_t a, std::size_t b) { return centroid(a)[axis] < centroid(b)[axis]; });
      node.left = build(begin, mid);
      node.right = build(mid, end);
    }
    nodes_[id] = node;
    return id;
  }

  std::vector<Simplex<D>> simplices_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace wulffnt
