#include <doctest.h>

#include <cmath>
#include <vector>

#include "sysfill/deform.hpp"
#include "sysfill/errors.hpp"
#include "sysfill/hyptrig.hpp"

using namespace sysfill;

namespace {

// calibration at p = q = 3, t = t0 + 0.05, frozen from 40-digit arithmetic
const double kCalR = 0.36882807558530826;
const double kCalTheta = 1.1988607028633671;

SurfaceMap octahedron_map() {
  return map_from_faces(
      {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4}, {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}},
      6);
}

// xi coefficient of each blue curve at a vertex: alternating signs in star
// order, summed in case an edge shows up twice
std::vector<double> xi_coefficients(const CurveSystem& curves, int vertex) {
  const VertexStar& star = curves.star(vertex);
  std::vector<double> c(static_cast<size_t>(curves.blue_count()), 0.0);
  for (int k = 0; k < static_cast<int>(star.blue.size()); ++k)
    c[star.blue[k]] += (k % 2 == 0) ? -1.0 : 1.0;
  return c;
}

}  // namespace

TEST_CASE("calibration: closed forms, frozen point, and the balance point") {
  // frozen oracle
  double t0 = solve_t0(3, 3);
  CalibratedDeformation cal = calibrate_twist(3, 3, t0 + 0.05);
  CHECK(cal.r == doctest::Approx(kCalR).epsilon(1e-9));
  CHECK(cal.theta == doctest::Approx(kCalTheta).epsilon(1e-9));
  CHECK(cal.mu == 2 * (t0 + 0.05));
  CHECK(std::isnan(cal.margin));

  // at the balance point the twist degenerates to zero and angles to pi/2
  CalibratedDeformation flat = calibrate_twist(3, 3, t0);
  CHECK(std::fabs(flat.r) < 1e-6);
  CHECK(std::fabs(flat.theta - kPi / 2) < 1e-6);

  // defining relations hold on a grid above the balance point for all types
  for (auto [p, q] : {std::pair{3, 3}, std::pair{4, 3}, std::pair{5, 3}}) {
    double base = solve_t0(p, q);
    for (int k = 1; k <= 10; ++k) {
      double t = base + 0.02 * k;
      double s = red_side_length(q, t);
      CalibratedDeformation c = calibrate_twist(p, q, t);
      CHECK(c.mu == 2 * t);
      CHECK(c.r > 0);
      CHECK(c.theta > 0);
      CHECK(c.theta < kPi / 2);
      CHECK(std::fabs(std::cosh(c.mu / (2 * p)) - std::cosh(c.r / 2) * std::cosh(s / 2)) <=
            1e-12);
      CHECK(std::fabs(std::sin(c.theta) * std::sinh(c.mu / (2 * p)) - std::sinh(s / 2)) <=
            1e-12);
    }
  }

  // below the balance point there is nothing to calibrate
  CHECK_THROWS_AS(calibrate_twist(3, 3, t0 - 0.01), DomainError);
  CHECK_THROWS_AS(calibrate_twist(2, 3, 1.0), DomainError);
  CHECK_THROWS_AS(calibrate_twist(3, 3, 0.0), DomainError);
}

TEST_CASE("measured crossing angles match the calibrated angle") {
  SurfaceMap map = catalog_map("tetrahedron");
  CurveSystem curves(map);
  double t0 = solve_t0(3, 3);

  // at zero twist every crossing is a right angle
  HolonomyRep flat = build_surface(map, t0 + 0.05, 0.0);
  for (int x = 0; x < map.dart_count(); ++x)
    CHECK(measure_angle_at(flat, curves, x) == doctest::Approx(kPi / 2).epsilon(1e-12));

  // on the calibrated grid the red curves close up at length 2t and every
  // crossing shows the same angle theta
  for (int k = 1; k <= 10; ++k) {
    double t = t0 + 0.02 * k;
    CalibratedDeformation cal = calibrate_twist(3, 3, t);
    HolonomyRep rep = build_surface(map, t, cal.r);
    for (int f = 0; f < map.face_count(); ++f)
      CHECK(rep.curve_length(curves.red(f)) == doctest::Approx(2 * t).epsilon(1e-11));
    for (int x = 0; x < map.dart_count(); ++x)
      CHECK(measure_angle_at(rep, curves, x) == doctest::Approx(cal.theta).epsilon(1e-10));
  }

  // pair addressing agrees with crossing addressing, and rejects non-incident
  // pairs
  CalibratedDeformation cal = calibrate_twist(3, 3, t0 + 0.05);
  HolonomyRep rep = build_surface(map, t0 + 0.05, cal.r);
  int face = map.face_of(0);
  int edge = map.edge_of(0);
  CHECK(measure_angle(rep, curves, face, edge) ==
        doctest::Approx(measure_angle_at(rep, curves, 0)).epsilon(1e-14));
  int missing = -1;
  for (int e = 0; e < map.edge_count() && missing < 0; ++e) {
    bool incident = false;
    for (int x : curves.red_crossings(face))
      if (map.edge_of(x) == e) incident = true;
    if (!incident) missing = e;
  }
  REQUIRE(missing >= 0);
  CHECK_THROWS_AS(measure_angle(rep, curves, face, missing), DomainError);

  CHECK_THROWS_AS(measure_angle_at(rep, curves, -1), DomainError);
  CHECK_THROWS_AS(measure_angle_at(rep, curves, map.dart_count()), DomainError);
  CHECK_THROWS_AS(measure_angle(rep, curves, -1, 0), DomainError);
  CHECK_THROWS_AS(measure_angle(rep, curves, 0, 99), DomainError);
}

TEST_CASE("structural differential: shape, entries, and certified rank") {
  double theta = 1.0;
  double c = std::cos(theta);

  for (const char* name : {"tetrahedron", "cube", "dodecahedron"}) {
    SurfaceMap map = catalog_map(name);
    auto [p, q] = catalog_type(name);
    CurveSystem curves(map);
    DifferentialReport report = wolpert_differential(curves, theta);
    CHECK(report.red_count == map.face_count());
    CHECK(report.blue_count == map.edge_count());
    CHECK(report.measured.empty());

    // each face crosses its p edges once, each edge is crossed by two faces
    for (int f = 0; f < report.red_count; ++f) {
      double row = 0;
      int nonzero = 0;
      for (int e = 0; e < report.blue_count; ++e) {
        double entry = report.formula[static_cast<size_t>(f) * report.blue_count + e];
        CHECK((entry == 0.0 || entry == doctest::Approx(c).epsilon(1e-14)));
        row += entry;
        if (entry != 0.0) ++nonzero;
      }
      CHECK(nonzero == p);
      CHECK(row == doctest::Approx(p * c).epsilon(1e-13));
    }
    for (int e = 0; e < report.blue_count; ++e) {
      double col = 0;
      for (int f = 0; f < report.red_count; ++f)
        col += report.formula[static_cast<size_t>(f) * report.blue_count + e];
      CHECK(col == doctest::Approx(2 * c).epsilon(1e-13));
    }

    CHECK(differential_rank(report) == map.face_count());
    CHECK(report.rank == map.face_count());
    CHECK(report.sigma_max > 0);
    CHECK(report.sigma_min > 1e-9 * report.sigma_max);
  }

  // degenerate angle and tampered entries are rejected
  SurfaceMap map = catalog_map("tetrahedron");
  CurveSystem curves(map);
  DifferentialReport degenerate = wolpert_differential(curves, kPi / 2);
  CHECK_THROWS_AS(differential_rank(degenerate), DomainError);
  DifferentialReport tampered = wolpert_differential(curves, theta);
  tampered.formula[0] = 0.5 * c;
  CHECK_THROWS_AS(differential_rank(tampered), RankCertificationError);
  DifferentialReport truncated = wolpert_differential(curves, theta);
  truncated.red_count -= 1;
  CHECK_THROWS_AS(differential_rank(truncated), DomainError);
}

TEST_CASE("alternating vertex probe") {
  double theta = 1.1;
  double c = std::cos(theta);

  // odd q: the wrap-around corner keeps -2 cos theta, everything else cancels
  for (const char* name : {"tetrahedron", "cube", "dodecahedron"}) {
    SurfaceMap map = catalog_map(name);
    CurveSystem curves(map);
    for (int v = 0; v < map.vertex_count(); ++v) {
      std::vector<double> probe = xi_probe(curves, v, theta);
      REQUIRE(probe.size() == 3);
      CHECK(probe[0] == doctest::Approx(-2 * c).epsilon(1e-14));
      CHECK(probe[1] == 0.0);
      CHECK(probe[2] == 0.0);

      // consistency: the probe is the formula differential applied to the
      // alternating twist direction
      std::vector<double> coeff = xi_coefficients(curves, v);
      DifferentialReport report = wolpert_differential(curves, theta);
      const VertexStar& star = curves.star(v);
      for (int j = 0; j < static_cast<int>(star.red.size()); ++j) {
        double pairing = 0;
        for (int e = 0; e < report.blue_count; ++e)
          pairing +=
              report.formula[static_cast<size_t>(star.red[j]) * report.blue_count + e] *
              coeff[e];
        CHECK(probe[j] == doctest::Approx(pairing).epsilon(1e-13));
      }
    }
  }

  // even q: both corner contributions cancel at every slot
  SurfaceMap octa = octahedron_map();
  CHECK(validate_map(octa, 3, 4).pass);
  CurveSystem curves(octa);
  for (int v = 0; v < octa.vertex_count(); ++v) {
    std::vector<double> probe = xi_probe(curves, v, theta);
    REQUIRE(probe.size() == 4);
    for (double entry : probe) CHECK(entry == 0.0);
  }
  CHECK_THROWS_AS(xi_probe(curves, -1, theta), DomainError);
  CHECK_THROWS_AS(xi_probe(curves, 6, theta), DomainError);
}

TEST_CASE("measured differential agrees with the formula and with finite differences") {
  for (const char* name : {"tetrahedron", "cube"}) {
    SurfaceMap map = catalog_map(name);
    auto [p, q] = catalog_type(name);
    double t = solve_t0(p, q) + 0.05;
    CalibratedDeformation cal = calibrate_twist(p, q, t);
    HolonomyRep rep = build_surface(map, t, cal.r);
    CurveSystem curves(map);

    DifferentialReport measured = wolpert_differential(curves, rep, cal.theta);
    DifferentialReport structural = wolpert_differential(curves, cal.theta);
    REQUIRE(measured.formula.size() == structural.formula.size());
    REQUIRE(measured.measured.size() == structural.formula.size());
    for (size_t i = 0; i < structural.formula.size(); ++i) {
      CHECK(measured.formula[i] == doctest::Approx(structural.formula[i]).epsilon(1e-14));
      CHECK(measured.measured[i] == doctest::Approx(structural.formula[i]).epsilon(1e-9));
    }
    CHECK(differential_rank(measured) == map.face_count());

    FdReport fd = finite_difference_check(rep, curves, cal.theta, 1e-5);
    CHECK(fd.max_residual <= 1e-6);
    CHECK(fd.max_blue_drift <= 1e-10);
    CHECK_FALSE(fd.step_warning);

    // single-column probe matches the full table
    std::vector<double> column = twist_derivatives(rep, curves, 0, 1e-5);
    REQUIRE(column.size() == static_cast<size_t>(map.face_count()));
    for (int f = 0; f < map.face_count(); ++f)
      CHECK(column[f] ==
            doctest::Approx(fd.derivatives[static_cast<size_t>(f) * map.edge_count()])
                .epsilon(1e-12));
  }

  // the residual shrinks like step^2
  SurfaceMap map = catalog_map("tetrahedron");
  double t = solve_t0(3, 3) + 0.05;
  CalibratedDeformation cal = calibrate_twist(3, 3, t);
  HolonomyRep rep = build_surface(map, t, cal.r);
  CurveSystem curves(map);
  FdReport coarse = finite_difference_check(rep, curves, cal.theta, 1e-3);
  FdReport fine = finite_difference_check(rep, curves, cal.theta, 5e-4);
  REQUIRE(fine.max_residual > 0);
  double ratio = coarse.max_residual / fine.max_residual;
  CHECK(ratio > 3.2);
  CHECK(ratio < 4.8);
  CHECK(finite_difference_check(rep, curves, cal.theta, 5e-3).step_warning);

  CHECK_THROWS_AS(twist_derivatives(rep, curves, -1, 1e-5), DomainError);
  CHECK_THROWS_AS(twist_derivatives(rep, curves, 6, 1e-5), DomainError);
  CHECK_THROWS_AS(twist_derivatives(rep, curves, 0, 0.0), DomainError);
  CHECK_THROWS_AS(finite_difference_check(rep, curves, cal.theta, -1.0), DomainError);
}

TEST_CASE("parameter selection certifies the first grid point") {
  for (const char* name : {"tetrahedron", "cube"}) {
    SurfaceMap map = catalog_map(name);
    auto [p, q] = catalog_type(name);
    double t0 = solve_t0(p, q);
    CalibratedDeformation sel = select_parameter(map, p, q);
    CHECK(sel.t == doctest::Approx(t0 + 0.02).epsilon(1e-12));
    CHECK(sel.margin > 1e-7);
    CHECK(std::isfinite(sel.margin));
    CalibratedDeformation direct = calibrate_twist(p, q, sel.t);
    CHECK(sel.r == direct.r);
    CHECK(sel.theta == direct.theta);
  }
}
