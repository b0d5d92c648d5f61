// Why normals are restricted to the positive quadrant.
//
// Take the flat roof y = h over [0, a] (area a h, entropy 0) and replace it
// by a sawtooth of slope +-s with the same area. If eta is allowed on all of
// S^1 through its symmetric extension, the sawtooth scores a * eta(s, 1) per
// unit length of x, which grows like ln s. The admissible maximizer at the
// same area stays put.
//
//   ill_posed_demo

#include <cmath>
#include <cstdio>

#include "wulffnt/wulffnt.hpp"

using namespace wulffnt;

namespace {

// Sum of len * eta(n) over the segments of a sawtooth with `teeth` teeth.
double sawtooth_value(const Tension<1>& eta, double a, double h, double slope, int teeth) {
  const double w = a / teeth;
  const double rise = 0.5 * w * slope;
  double total = 0.0;
  for (int i = 0; i < teeth; ++i) {
    const double x0 = i * w;
    // Up then down, centred on y = h so the area below is unchanged.
    const Vec2 p0{x0, h - 0.5 * rise}, p1{x0 + 0.5 * w, h + 0.5 * rise}, p2{x0 + w, h - 0.5 * rise};
    for (const auto& [p, q] : {std::pair{p0, p1}, std::pair{p1, p2}}) {
      const double dx = q[0] - p[0], dy = q[1] - p[1];
      const double len = std::hypot(dx, dy);
      // Normal pointing away from the region below the curve.
      const Vec2 n{-dy / len, dx / len};
      total += len * eta.symmetric(n);
    }
  }
  return total;
}

}  // namespace

int main() {
  const auto eta = young_tension();
  const double a = 2.0, h = constants::pi * constants::pi / 12.0;  // area pi^2/6
  const auto best = scaled_maximizer(CubeProblem<1>{20.0, a * h, eta}, 4096);
  std::printf("area %.6f, admissible maximizer value %.6f\n\n", a * h, functional_value(eta, best));
  std::printf("%10s %16s %16s\n", "slope", "sawtooth value", "a * ln(1 + s)");
  for (double s : {1.0, 10.0, 100.0, 1e3, 1e4, 1e6}) {
    std::printf("%10.0e %16.6f %16.6f\n", s, sawtooth_value(eta, a, h, s, 64), a * std::log1p(s));
  }
}
