// Builds the Young limit shape from its entropy alone and compares it with
// the closed-form curve e^{-c x} + e^{-c y} = 1, c = pi / sqrt 6.
//
//   vershik_demo [samples] [out.svg]

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "wulffnt/wulffnt.hpp"

using namespace wulffnt;

int main(int argc, char** argv) {
  const int samples = argc > 1 ? std::stoi(argv[1]) : 4096;
  const auto raw = build_inner_shape(young_tension(), samples);
  const double area = enclosed_volume(raw);
  const auto unit = raw.scaled(1.0 / std::sqrt(area));

  std::printf("facets           %zu\n", raw.facets.size());
  std::printf("raw area         %.10f  (pi^2/6 = %.10f)\n", area, constants::pi * constants::pi / 6.0);
  std::printf("unit functional  %.10f  (pi sqrt(2/3) = %.10f)\n", functional_value(young_tension(), unit),
              constants::young_exponent);
  std::printf("hausdorff [0,5]^2 vs closed form  %.3e\n", hausdorff_distance(raw, sample_vershik(20000, false), 5.0));

  std::printf("\n%10s %14s %14s\n", "x", "engine y", "closed form y");
  const double c = constants::pi / std::sqrt(6.0);
  for (double x : {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0}) {
    // Lowest point of the unit body above x: max over facets of the support line.
    double y = 0.0;
    for (const auto& f : unit.facets) {
      if (f.normal[1] > 1e-12) y = std::max(y, (f.support - f.normal[0] * x) / f.normal[1]);
    }
    std::printf("%10.3f %14.8f %14.8f\n", x, y, -std::log1p(-std::exp(-c * x)) / c);
  }

  if (argc > 2) {
    std::vector<Vec2> pts;
    for (const auto& v : unit.vertices()) {
      if (v[0] <= 4.0 && v[1] <= 4.0) pts.push_back(v);
    }
    std::ofstream(argv[2]) << write_svg(pts);
    std::printf("\nwrote %s\n", argv[2]);
  }
}
