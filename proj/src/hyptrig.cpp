#include "sysfill/hyptrig.hpp"

#include <cmath>

#include "sysfill/errors.hpp"

namespace sysfill {

double red_side_length(int q, double t) {
  if (q < 3) throw DomainError("polygon parameter q must be >= 3, got " + std::to_string(q));
  if (!(t > 0)) throw DomainError("blue side length must be positive, got " + std::to_string(t));
  return 2.0 * std::asinh(std::cos(kPi / q) / std::sinh(t / 2.0));
}

PolygonSpec polygon_spec(int q, double t) {
  PolygonSpec spec;
  spec.q = q;
  spec.t = t;
  spec.s = red_side_length(q, t);
  spec.area = kPi * (q - 2);
  return spec;
}

double solve_t0_bracketed(int p, int q, double lo, double hi, double tol) {
  if (p < 3 || q < 3) throw DomainError("balance point needs p, q >= 3");
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto residual = [&](double t) { return p * red_side_length(q, t) - 2.0 * t; };
  // residual is strictly decreasing: s(t) blows up as t -> 0 and decays as
  // t grows, so any bracket with a sign change pins the unique root.
  double flo = residual(lo);
  double fhi = residual(hi);
  int widen = 0;
  while (flo < 0 && widen++ < 60) {
    lo /= 2;
    flo = residual(lo);
  }
  widen = 0;
  while (fhi > 0 && widen++ < 60) {
    hi *= 2;
    fhi = residual(hi);
  }
  if (flo < 0 || fhi > 0) throw NumericError("balance-point bracketing failed");
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    double fm = residual(mid);
    if (std::fabs(fm) <= tol) return mid;
    if (fm > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NumericError("balance-point bisection did not reach tolerance " + std::to_string(tol));
}

double solve_t0(int p, int q, double tol) { return solve_t0_bracketed(p, q, 0.25, 4.0, tol); }

PolygonEmbedding embed_polygon(int q, double t) {
  PolygonEmbedding poly;
  poly.spec = polygon_spec(q, t);
  const double s = poly.spec.s;
  const double sq = std::sin(kPi / q);

  // Split the polygon into 2q right triangles (center, side midpoint, vertex).
  // The triangle at a blue side has legs t/2 (half side) and d_b (apothem)
  // and hypotenuse R; the angle at the center is the blue half-angle phi_b.
  // Right-triangle identities give the three closed forms below, and the
  // red/blue routes to R must agree (checked in tests).
  poly.apothem_blue = std::asinh(std::sinh(s / 2) * std::cosh(t / 2) / sq);
  poly.apothem_red = std::asinh(std::sinh(t / 2) * std::cosh(s / 2) / sq);
  poly.circumradius = std::acosh(std::cosh(t / 2) * std::cosh(poly.apothem_blue));
  poly.half_angle_blue = std::atan2(std::tanh(t / 2), std::sinh(poly.apothem_blue));

  const int n = 2 * q;
  poly.vertices.reserve(n);
  poly.side_colors.reserve(n);
  poly.side_geodesics.reserve(n);
  poly.side_frames.reserve(n);

  const Sym2 unit_circle = geodesic_circle(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    const int k = j / 2;
    const double dir = (j % 2 == 0) ? 2.0 * kPi * k / q - poly.half_angle_blue
                                    : 2.0 * kPi * k / q + poly.half_angle_blue;
    poly.vertices.push_back(to_complex(point_at(dir, poly.circumradius)));
    poly.side_colors.push_back(j % 2 == 0 ? SideColor::blue : SideColor::red);

    const double apothem = (j % 2 == 0) ? poly.apothem_blue : poly.apothem_red;
    const Mat2 frame =
        rotation_about_i(j * kPi / q) * translation_x(apothem) * rotation_about_i(kPi / 2);
    poly.side_frames.push_back(frame);
    poly.side_geodesics.push_back(normalize_geodesic(transform(frame, unit_circle)));
  }

  poly.rotation = classify(rotation_about_i(2.0 * kPi / q));
  return poly;
}

double side_distance(const PolygonEmbedding& poly, int i, int j) {
  const int n = poly.sides();
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("side index out of range");
  if (i == j) throw DomainError("side distance needs two distinct sides");
  const int diff = ((i - j) % n + n) % n;
  if (diff == 1 || diff == n - 1) throw DomainError("adjacent sides share a vertex; distance is not meaningful");
  return geodesic_distance(poly.side_geodesics[i], poly.side_geodesics[j]);
}

}  // namespace sysfill
