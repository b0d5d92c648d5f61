#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wulffnt/entropy.hpp"
#include "wulffnt/shapes.hpp"
#include "wulffnt/wulff.hpp"

using namespace wulffnt;

namespace {

const double kPi = constants::pi;
const double kPi2over6 = kPi * kPi / 6.0;

// The 128^2 eta_S body takes a few seconds; build it once.
const ConvexShape<2>& skyscraper_raw() {
  static const auto shape = build_inner_shape(skyscraper_tension(), 128 * 128);
  return shape;
}

const ConvexShape<1>& young_raw() {
  static const auto shape = build_inner_shape(young_tension(), 4096);
  return shape;
}

double max_vertex_error(int samples) {
  const auto shape = build_inner_shape(young_tension(), samples);
  double worst = 0.0;
  for (const auto& v : shape.vertices()) {
    if (v[0] > 0.0 && v[1] > 0.0 && v[0] <= 5.0 && v[1] <= 5.0) {
      worst = std::max(worst, oracle::vershik_distance(v[0], v[1]));
    }
  }
  return worst;
}

}  // namespace

TEST(InnerShape, YoungVerticesOnTheCurve) {
  const auto shape = build_inner_shape(young_tension(), 4096, 10.0);
  double worst = 0.0;
  for (const auto& v : shape.vertices()) {
    ASSERT_LE(std::max(v[0], v[1]), 10.0 + 1e-12);
    if (v[0] > 0.0 && v[1] > 0.0) worst = std::max(worst, std::abs(std::exp(-v[0]) + std::exp(-v[1]) - 1.0));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(InnerShape, ZeroTensionGivesTheAxes) {
  const auto shape = build_inner_shape(zero_tension<1>(), 256, 7.0);
  EXPECT_NEAR(shape.total_area(), 14.0, 1e-12);
  for (const auto& v : shape.vertices()) EXPECT_EQ(std::min(v[0], v[1]), 0.0);
  const auto shape2 = build_inner_shape(zero_tension<2>(), 16 * 16, 3.0);
  EXPECT_NEAR(shape2.total_area(), 27.0, 1e-9);
}

TEST(InnerShape, RejectsNegativeTension) {
  EXPECT_THROW(build_inner_shape(constant_tension<1>(-1.0), 64), std::domain_error);
  EXPECT_THROW(build_inner_shape(young_tension(), 64, 0.0), std::domain_error);
}

TEST(InnerShape, YoungSupportPropertyAndConvexity) {
  const auto& shape = young_raw();
  double prev = -1.0;
  for (const auto& f : shape.facets) {
    const double eta = eta_young(Direction<1>::from_vector(f.normal));
    for (const auto& x : f.polygon) {
      ASSERT_LE(std::abs(dot<1>(x, f.normal) - eta), 1e-9 * (1.0 + norm<1>(x)));
    }
    const double angle = std::atan2(f.normal[1], f.normal[0]);
    ASSERT_GT(angle, prev);
    prev = angle;
  }
}

TEST(InnerShape, SkyscraperSupportIdentity) {
  const auto& shape = skyscraper_raw();
  double worst = 0.0;
  for (const auto& f : shape.facets) {
    const double l1 = f.normal[0] + f.normal[1] + f.normal[2];
    const Vec3 p = (1.0 / l1) * f.normal;
    double rhs = 0.0;
    for (double c : p) rhs += lobachevsky(kPi * c) / kPi;
    for (const auto& x : f.polygon) worst = std::max(worst, std::abs(dot<2>(x, p) - rhs) / (1.0 + norm<2>(x)));
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(InnerShape, SkyscraperConvexity) {
  const auto& shape = skyscraper_raw();
  const auto verts = shape.vertices();
  double worst = 0.0;
  // Every 7th vertex against every facet plane.
  for (std::size_t i = 0; i < verts.size(); i += 7) {
    for (const auto& f : shape.facets) worst = std::max(worst, f.support - dot<2>(verts[i], f.normal));
  }
  EXPECT_LE(worst, 1e-9 * shape.window);
  for (const auto& f : shape.facets) {
    for (double c : f.normal) ASSERT_GE(c, -1e-12);
  }
}

TEST(InnerShape, AreasMatchPolygons) {
  for (const auto& f : skyscraper_raw().facets) {
    ASSERT_NEAR(f.area, norm<2>(vector_area(f.polygon)), 1e-12 * std::max(1.0, f.area));
  }
}

TEST(WulffShape, QuarterCircle) {
  const auto shape = build_wulff_shape(constant_tension<1>(1.0), 4096);
  double worst = 0.0;
  for (const auto& v : shape.vertices()) {
    if (v[0] > 0.0 && v[1] > 0.0) worst = std::max(worst, std::abs(norm<1>(v) - 1.0));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(WulffShape, Square) {
  // Near-axis normals touch only the corner (1, 1) and come out with zero area.
  const auto shape = build_wulff_shape(l1_tension<1>(), 256);
  int sides = 0;
  for (const auto& f : shape.facets) {
    if (f.area <= 1e-12) continue;
    ++sides;
    const bool vertical = f.normal[0] == 1.0;
    for (const auto& v : f.polygon) EXPECT_NEAR(vertical ? v[0] : v[1], 1.0, 1e-12);
    EXPECT_NEAR(f.area, 1.0, 1e-12);
  }
  EXPECT_EQ(sides, 2);
  EXPECT_NEAR(enclosed_volume(shape), 1.0, 1e-10);
}

TEST(WulffShape, SphereOctant) {
  const auto shape = build_wulff_shape(constant_tension<2>(1.0), 128 * 128);
  double worst = 0.0;
  for (const auto& v : shape.vertices()) {
    if (v[0] > 0.0 && v[1] > 0.0 && v[2] > 0.0) worst = std::max(worst, std::abs(norm<2>(v) - 1.0));
  }
  EXPECT_LE(worst, 1e-4);
}

TEST(Functional, ArcLength) {
  const auto circle = wulff_minimizer(constant_tension<1>(1.0), kPi, 4096);  // radius 2
  EXPECT_NEAR(functional_value(constant_tension<1>(1.0), circle), kPi, 1e-4);
}

TEST(Functional, YoungUnitArea) {
  const auto& raw = young_raw();
  const auto unit = raw.scaled(1.0 / std::sqrt(enclosed_volume(raw)));
  EXPECT_NEAR(functional_value(young_tension(), unit), kPi * std::sqrt(2.0 / 3.0), 2e-3);
}

TEST(Functional, SkyscraperUnitVolume) {
  const auto& raw = skyscraper_raw();
  const auto unit = raw.scaled(1.0 / std::cbrt(enclosed_volume(raw)));
  EXPECT_NEAR(functional_value(skyscraper_tension(), unit), 3.0 * std::cbrt(constants::zeta3 / 4.0), 5e-3);
}

TEST(Volume, YoungRaw) { EXPECT_NEAR(enclosed_volume(young_raw()), kPi2over6, 1e-4); }

TEST(Volume, SkyscraperRawAgainstCerfKenyonMesh) {
  // Divergence theorem on the closed-form surface: coordinate planes carry
  // no flux, so vol = (1/3) sum (centroid, area vector).
  const auto mesh = sample_cerf_kenyon(256, false);
  double flux = 0.0;
  for (const auto& f : mesh.facets) {
    Vec3 c{};
    for (const auto& p : f.polygon) c = c + p;
    flux += std::abs(dot<2>((1.0 / 3.0) * c, vector_area(f.polygon)));
  }
  const double mesh_volume = flux / 3.0;
  EXPECT_NEAR(mesh_volume, constants::zeta3 / 4.0, 1e-4);
  const double v = enclosed_volume(skyscraper_raw());
  EXPECT_NEAR(v, constants::zeta3 / 4.0, 1e-3);
  EXPECT_NEAR(v, mesh_volume, 1e-3);
}

TEST(Volume, QuarterDisc) {
  const auto disc = build_wulff_shape(constant_tension<1>(1.0), 4096);
  EXPECT_NEAR(enclosed_volume(disc), kPi / 4.0, 1e-6);
  EXPECT_DOUBLE_EQ(enclosed_volume(disc, Side::infinity), enclosed_volume(disc));
  EXPECT_THROW(enclosed_volume(young_raw(), Side::infinity), std::domain_error);
}

TEST(Volume, OpenShapeIsReported) {
  const auto open = build_inner_shape(constant_tension<1>(1.0), 512, 10.0);
  EXPECT_THROW(enclosed_volume(open), std::runtime_error);
}

TEST(DualTension, Examples) {
  const auto tau = dual_tension(young_tension(), 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(tau(Direction<1>::from_vector({r, r})), std::sqrt(2.0) * (1.0 - std::log(2.0)), 1e-15);
  EXPECT_NEAR(tau(Direction<1>::from_vector({r, r})), 0.433955, 1e-6);
  EXPECT_DOUBLE_EQ(dual_tension(young_tension(), 3.0)(Direction<1>::from_vector({1.0, 0.0})), 3.0);
  const auto tau_s = dual_tension(skyscraper_tension(), 1.0);
  const double s = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(tau_s(Direction<2>::from_vector({s, s, s})), std::sqrt(3.0) - 0.559567, 1e-6);
}

TEST(DualTension, RequiresLargeEnoughN) {
  EXPECT_THROW(dual_tension(young_tension(), 0.5), std::domain_error);
  EXPECT_THROW(dual_tension(young_tension(), 0.0), std::domain_error);
}

TEST(Dilatation, ForwardInverse) {
  const auto& raw = young_raw();
  const double v1 = volume_in_box(raw, 20.0);
  EXPECT_NEAR(solve_dilatation(raw, 20.0, v1), 1.0, 1e-8);
  const double v2 = 4.0 * volume_in_box(raw, 10.0);
  EXPECT_NEAR(solve_dilatation(raw, 20.0, v2), 2.0, 1e-6);
  EXPECT_LT(solve_dilatation(raw, 10.0, 1e-9), 1e-3);
  EXPECT_THROW(solve_dilatation(raw, 10.0, 100.0), std::domain_error);
  EXPECT_THROW(solve_dilatation(raw, 10.0, 0.0), std::domain_error);
}

TEST(Dilatation, MonotoneInVolume) {
  const auto& raw = young_raw();
  double prev = 0.0;
  for (double v : {0.01, 0.1, 1.0, 5.0, 20.0}) {
    const double lam = solve_dilatation(raw, 20.0, v);
    EXPECT_GT(lam, prev);
    prev = lam;
  }
}

TEST(ScaledMaximizer, FixedPoint) {
  const CubeProblem<1> problem{20.0, kPi2over6, young_tension()};
  const auto shape = scaled_maximizer(problem, 4096);
  EXPECT_NEAR(shape.scale, 1.0, 1e-6);
  EXPECT_NEAR(volume_in_box(shape, 20.0), kPi2over6, 1e-9);
  EXPECT_FALSE(shape.open_tail);
}

TEST(ScaledMaximizer, Homogeneity) {
  // 2 G_eta reaches past Q_20 by about e^-10; that shifts lambda by ~6e-5.
  const CubeProblem<1> problem{20.0, 4.0 * kPi2over6, young_tension()};
  const auto shape = scaled_maximizer(problem, 4096);
  EXPECT_NEAR(shape.scale, 2.0, 1e-4);
  EXPECT_NEAR(volume_in_box(shape, 20.0), 4.0 * kPi2over6, 1e-8);
}

TEST(ScaledMaximizer, ZeroTension) {
  const auto shape = scaled_maximizer(CubeProblem<1>{5.0, 3.0, zero_tension<1>()}, 256);
  EXPECT_EQ(functional_value(zero_tension<1>(), shape), 0.0);
  EXPECT_NEAR(shape.total_area(), 10.0, 1e-12);
}

TEST(ScaledMaximizer, Errors) {
  EXPECT_THROW(scaled_maximizer(CubeProblem<1>{2.0, 2.0, young_tension()}, 1024), std::runtime_error);
  EXPECT_THROW(scaled_maximizer(CubeProblem<1>{2.0, 4.0, young_tension()}, 1024), std::domain_error);
  EXPECT_THROW(scaled_maximizer(CubeProblem<1>{-1.0, 1.0, young_tension()}, 1024), std::domain_error);
}

TEST(WulffMinimizer, Examples) {
  const auto r1 = wulff_minimizer(constant_tension<1>(1.0), kPi / 4.0, 4096);
  const auto r2 = wulff_minimizer(constant_tension<1>(1.0), kPi, 4096);
  for (const auto& v : r1.vertices()) {
    if (v[0] > 0.0 && v[1] > 0.0) {
      ASSERT_NEAR(norm<1>(v), 1.0, 1e-6);
    }
  }
  for (const auto& v : r2.vertices()) {
    if (v[0] > 0.0 && v[1] > 0.0) {
      ASSERT_NEAR(norm<1>(v), 2.0, 2e-6);
    }
  }
  const auto sq = wulff_minimizer(l1_tension<1>(), 4.0, 256);
  for (const auto& v : sq.vertices()) EXPECT_NEAR(std::max(v[0], v[1]), 2.0, 1e-10);
  EXPECT_THROW(wulff_minimizer(constant_tension<1>(1.0), 0.0), std::domain_error);
}

TEST(WulffMinimizer, VolumeMatchesTarget) {
  for (double lam : {0.1, 1.0, 10.0}) {
    const auto shape = wulff_minimizer(constant_tension<1>(1.0), lam, 4096);
    EXPECT_NEAR(enclosed_volume(shape) / lam, 1.0, 1e-6) << "Lambda = " << lam;
    const auto sq = wulff_minimizer(l1_tension<1>(), lam, 256);
    EXPECT_NEAR(enclosed_volume(sq) / lam, 1.0, 1e-6) << "Lambda = " << lam;
  }
}

TEST(Projection, Examples) {
  EXPECT_NEAR(projection_area(cube_corner_surface<1>(3.0), 3.0), 3.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(projection_area(cube_corner_surface<2>(1.0), 1.0), std::sqrt(3.0), 1e-12);
  const auto circle = build_wulff_shape(constant_tension<1>(1.0), 4096);
  EXPECT_NEAR(projection_area(circle, 1.0), std::sqrt(2.0), 1e-9);
  EXPECT_THROW(projection_area(cube_corner_surface<1>(3.0), 2.0), std::domain_error);
}

TEST(Duality, Examples) {
  const auto shape = scaled_maximizer(CubeProblem<1>{20.0, kPi2over6, young_tension()}, 4096);
  EXPECT_LE(duality_residual(young_tension(), 20.0, shape), 1e-10);
  const double r = 1.0 / std::sqrt(2.0);
  const auto single = polyline_surface({Vec2{0.0, 2.0}, Vec2{2.0, 0.0}}, 20.0);
  ASSERT_NEAR(single.facets[0].normal[0], r, 1e-15);
  EXPECT_LE(duality_residual(young_tension(), 20.0, single), 1e-12);
  const auto sphere = build_wulff_shape(constant_tension<2>(1.0), 64 * 64);
  EXPECT_LE(duality_residual(skyscraper_tension(), 10.0, sphere), 1e-9);
}

TEST(Identities, InnerVolumeEqualsFunctionalOverDimension) {
  const auto& y = young_raw();
  EXPECT_NEAR(enclosed_volume(y), functional_value(young_tension(), y) / 2.0, 2e-3);
  const auto& s = skyscraper_raw();
  EXPECT_NEAR(enclosed_volume(s), functional_value(skyscraper_tension(), s) / 3.0, 2e-3);
}

TEST(Identities, WulffVolumeEqualsFunctionalOverDimension) {
  const auto one = constant_tension<1>(1.0);
  const auto b1 = build_wulff_shape(one, 4096);
  EXPECT_NEAR(enclosed_volume(b1), functional_value(one, b1) / 2.0, 2e-3);
  const auto tau = dual_tension(young_tension(), 5.0);
  const auto b2 = build_wulff_shape(tau, 4096);
  EXPECT_NEAR(enclosed_volume(b2), functional_value(tau, b2) / 2.0, 2e-3);
  const auto one2 = constant_tension<2>(1.0);
  const auto b3 = build_wulff_shape(one2, 64 * 64);
  EXPECT_NEAR(enclosed_volume(b3), functional_value(one2, b3) / 3.0, 2e-3);
}

TEST(Maximality, StaircasesDoNotBeatTheMaximizer) {
  const double n_side = 20.0;
  const auto eta = young_tension();
  const auto best = scaled_maximizer(CubeProblem<1>{n_side, kPi2over6, eta}, 4096);
  const double best_value = functional_value(eta, best);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = oracle::staircase(rng, kPi2over6);
    std::vector<Vec2> poly;
    for (const auto& p : pts) poly.push_back({p[0], p[1]});
    const auto g = polyline_surface(poly, n_side);
    EXPECT_NEAR(volume_below(g, n_side), kPi2over6, 1e-9);
    EXPECT_LE(functional_value(eta, g), best_value + 1e-6);
    EXPECT_LE(duality_residual(eta, n_side, g), 1e-9);
    EXPECT_LE(projection_area(g, n_side), projection_area(cube_corner_surface<1>(n_side), n_side) + 1e-9);
  }
}

TEST(GradientConsistency, ErrorBoundAndSecondOrder) {
  const double e1 = max_vertex_error(1024), e2 = max_vertex_error(2048), e3 = max_vertex_error(4096);
  EXPECT_LE(e3, 5e-3);
  EXPECT_GE(e1 / e2, 4.0);
  EXPECT_GE(e2 / e3, 4.0);
}

TEST(Mollify, VolumeConvergesAsBandShrinks) {
  double prev = INFINITY;
  for (double delta : {0.08, 0.04, 0.02, 0.01}) {
    const auto shape = build_inner_shape(mollify(young_tension(), delta), 4096);
    const double err = std::abs(enclosed_volume(shape) - kPi2over6);
    EXPECT_LT(err, prev);
    EXPECT_LE(err, 1.1 * delta);
    prev = err;
  }
}
