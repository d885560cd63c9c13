#include <doctest.h>

#include <cmath>
#include <vector>

#include "sysfill/hyptrig.hpp"

using namespace sysfill;

namespace {

// Independent oracle: solve cos(pi/q) = sinh(t/2) sinh(s/2) for s by plain
// bisection, never touching the closed form under test.
double bisect_red_side(int q, double t) {
  double target = std::cos(kPi / q);
  auto f = [&](double s) { return std::sinh(t / 2) * std::sinh(s / 2) - target; };
  double lo = 1e-12, hi = 64.0;
  REQUIRE(f(lo) < 0);
  REQUIRE(f(hi) > 0);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double interior_angle_cos(const PolygonEmbedding& poly, int vertex) {
  int n = poly.sides();
  const Sym2& before = poly.side_geodesics[((vertex - 1) % n + n) % n];
  const Sym2& after = poly.side_geodesics[vertex % n];
  return std::fabs(inner(before, after));
}

}  // namespace

TEST_CASE("red side length matches the defining identity") {
  for (int q : {3, 4, 5, 7, 11}) {
    for (double t : {0.5, 1.0, 1.7, 2.4}) {
      double s = red_side_length(q, t);
      CHECK(std::fabs(std::cos(kPi / q) - std::sinh(t / 2) * std::sinh(s / 2)) < 1e-12);
      CHECK(s == doctest::Approx(bisect_red_side(q, t)).epsilon(1e-10));
    }
  }
}

TEST_CASE("red side length reference values") {
  // frozen from the bisection oracle evaluated at high precision
  CHECK(red_side_length(3, 1.5) == doctest::Approx(1.1514107615090956).epsilon(1e-13));
  CHECK(red_side_length(3, 2.0) == doctest::Approx(0.8271369016385568).epsilon(1e-13));
  CHECK(red_side_length(4, 1.0) == doctest::Approx(2.2254196317613576).epsilon(1e-13));
  CHECK(red_side_length(5, 1.0) == doctest::Approx(2.4471074685897168).epsilon(1e-13));
  CHECK(red_side_length(7, 0.5) == doctest::Approx(3.9677192982986954).epsilon(1e-13));
  // symmetric fixed point: t = s = 2 asinh(sqrt(cos(pi/3)))
  double tsym = 1.3169578969248167;
  CHECK(red_side_length(3, tsym) == doctest::Approx(tsym).epsilon(1e-13));
}

TEST_CASE("red side length is strictly decreasing in t") {
  for (int q : {3, 5}) {
    double prev = red_side_length(q, 0.25);
    for (double t = 0.5; t < 4.0; t += 0.25) {
      double cur = red_side_length(q, t);
      CHECK(cur < prev);
      prev = cur;
    }
  }
  CHECK(red_side_length(3, 1.5) > red_side_length(3, 2.0));
}

TEST_CASE("red side length domain errors") {
  CHECK_THROWS_AS(red_side_length(2, 1.0), DomainError);
  CHECK_THROWS_AS(red_side_length(3, 0.0), DomainError);
  CHECK_THROWS_AS(red_side_length(3, -1.0), DomainError);
}

TEST_CASE("balance point") {
  // frozen from the oracle: t0 solves 2 t0 = p s(t0)
  struct Row {
    int p, q;
    double t0;
  };
  const std::vector<Row> rows = {
      {3, 3, 1.6049912889172694}, {4, 3, 1.8356372159148183}, {5, 3, 2.0298950709447916}};
  for (const Row& row : rows) {
    double t0 = solve_t0(row.p, row.q, 1e-12);
    CHECK(t0 == doctest::Approx(row.t0).epsilon(1e-10));
    CHECK(std::fabs(2 * t0 - row.p * red_side_length(row.q, t0)) <= 1e-12);
    // restated contract: s(t0) = 2 t0 / p within tol / p
    CHECK(std::fabs(red_side_length(row.q, t0) - 2 * t0 / row.p) <= 1e-12 / row.p);
  }
}

TEST_CASE("balance point is bracket-independent") {
  double a = solve_t0_bracketed(3, 3, 0.5, 2.0, 1e-12);
  double b = solve_t0_bracketed(3, 3, 0.01, 8.0, 1e-12);
  double c = solve_t0_bracketed(3, 3, 1.0, 1.2, 1e-12);  // bad bracket gets widened
  CHECK(std::fabs(a - b) <= 2e-12);
  CHECK(std::fabs(a - c) <= 2e-12);
}

TEST_CASE("polygon embedding invariants") {
  std::vector<int> qs = {3, 4, 5, 7};
  for (int q : qs) {
    std::vector<double> ts = {0.5, 1.0, solve_t0(3, q, 1e-12), 2.0};
    for (double t : ts) {
      PolygonEmbedding poly = embed_polygon(q, t);
      const int n = 2 * q;
      REQUIRE(poly.sides() == n);

      // side lengths alternate t, s
      for (int j = 0; j < n; ++j) {
        Sym2 a = point(poly.vertices[j]);
        Sym2 b = point(poly.vertices[(j + 1) % n]);
        double expect = (j % 2 == 0) ? t : poly.spec.s;
        CHECK(distance(a, b) == doctest::Approx(expect).epsilon(1e-10));
        // the side's carrier geodesic really carries both endpoints
        CHECK(std::fabs(signed_sinh_distance(a, poly.side_geodesics[j])) < 1e-10);
        CHECK(std::fabs(signed_sinh_distance(b, poly.side_geodesics[j])) < 1e-10);
      }

      // all interior angles are right angles
      double angle_sum = 0;
      for (int v = 0; v < n; ++v) {
        double c = interior_angle_cos(poly, v);
        CHECK(c < 1e-10);
        angle_sum += std::acos(clamp_unit(c));
      }

      // angle-defect area
      double defect = (n - 2) * kPi - angle_sum;
      CHECK(defect == doctest::Approx(kPi * (q - 2)).epsilon(1e-9));
      CHECK(poly.spec.area == doctest::Approx(kPi * (q - 2)));

      // vertices sit on the circumradius
      Sym2 center = point(poly.center);
      for (int v = 0; v < n; ++v) {
        CHECK(distance(center, point(poly.vertices[v])) ==
              doctest::Approx(poly.circumradius).epsilon(1e-10));
      }

      // the order-q rotation shifts vertex labels by 2
      for (int v = 0; v < n; ++v) {
        cplx moved = poly.rotation.m.apply(poly.vertices[v]);
        CHECK(std::abs(moved - poly.vertices[(v + 2) % n]) < 1e-10);
      }

      // both routes to the circumradius agree
      double via_red = std::acosh(std::cosh(poly.spec.s / 2) * std::cosh(poly.apothem_red));
      CHECK(via_red == doctest::Approx(poly.circumradius).epsilon(1e-12));
    }
  }
}

TEST_CASE("polygon at q=3 balance point: frozen geometry") {
  double t0 = solve_t0(3, 3, 1e-12);
  PolygonEmbedding poly = embed_polygon(3, t0);
  CHECK(poly.apothem_blue == doctest::Approx(0.7846161063559156).epsilon(1e-12));
  CHECK(poly.apothem_red == doctest::Approx(1.0032438521365052).epsilon(1e-12));
  CHECK(poly.circumradius == doctest::Approx(1.1750883098107833).epsilon(1e-12));
}

TEST_CASE("side distances realize the arc bounds") {
  for (int q : {3, 4, 5, 7}) {
    double t = (q == 3) ? solve_t0(3, 3, 1e-12) : 1.1;
    PolygonEmbedding poly = embed_polygon(q, t);
    const int n = 2 * q;

    // red sides separated by exactly one blue side: distance t
    for (int k = 0; k < q; ++k) {
      int i = 2 * k + 1;
      int j = (2 * k + 3) % n;
      CHECK(side_distance(poly, i, j) == doctest::Approx(t).epsilon(1e-10));
      CHECK(side_distance(poly, j, i) == doctest::Approx(t).epsilon(1e-10));
    }
    // blue sides separated by exactly one red side: distance s
    for (int k = 0; k < q; ++k) {
      int i = 2 * k;
      int j = (2 * k + 2) % n;
      CHECK(side_distance(poly, i, j) == doctest::Approx(poly.spec.s).epsilon(1e-10));
    }
    // farther pairs are strictly longer
    if (q >= 4) {
      for (int k = 2; k < q - 1; ++k) {
        CHECK(side_distance(poly, 1, (1 + 2 * k) % n) > t + 1e-6);
        CHECK(side_distance(poly, 0, (2 * k) % n) > poly.spec.s + 1e-6);
      }
    }
    CHECK_THROWS_AS(side_distance(poly, 0, 1), DomainError);
    CHECK_THROWS_AS(side_distance(poly, 0, n - 1), DomainError);
    CHECK_THROWS_AS(side_distance(poly, 0, 0), DomainError);
  }
}
