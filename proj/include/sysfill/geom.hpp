#pragma once

// Plane-geometry kernel for the upper half-plane model.
//
// Two representations are used side by side:
//   * Mat2: real 2x2 matrices with det 1 acting by Mobius maps; traces give
//     translation lengths.
//   * Sym2: symmetric 2x2 matrices [[a,b],[b,c]] in the Minkowski (Killing
//     form) picture.  Points of the plane are det +1 matrices (normalized so
//     c > 0), complete geodesics are det -1 matrices (sign = orientation).
//
// With inner(S,T) = (S.a*T.c + T.a*S.c)/2 - S.b*T.b:
//   cosh dist(z,w)            = inner(point(z),  point(w))
//   sinh signed_dist(z, G)    = inner(point(z),  G)        (sign = side of G)
//   geodesics G,H cross      <=> |inner(G,H)| < 1, angle via cos = -inner
//   disjoint geodesics        : cosh dist = |inner|
// The "cross product" (Minkowski-orthogonal complement of a pair) gives the
// geodesic through two points, the intersection point of two crossing
// geodesics, and the perpendicular from a point to a geodesic, all without
// special cases.

#include <cmath>
#include <complex>
#include <string>

#include "sysfill/errors.hpp"

namespace sysfill {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline double clamp_acosh(double x) { return std::acosh(x < 1.0 ? 1.0 : x); }
inline double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }

  Mat2 inverse() const {
    double dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  // Rescale so det is exactly +1; requires det > 0.
  Mat2 unit_det() const {
    double dt = det();
    if (!(dt > 0)) throw NumericError("matrix determinant not positive: " + std::to_string(dt));
    double s = 1.0 / std::sqrt(dt);
    return {a * s, b * s, c * s, d * s};
  }

  // Flip the overall sign so the first entry of largest magnitude is
  // positive; +-M act identically on the plane.
  Mat2 sign_canonical() const {
    double m = a;
    if (std::fabs(b) > std::fabs(m)) m = b;
    if (std::fabs(c) > std::fabs(m)) m = c;
    if (std::fabs(d) > std::fabs(m)) m = d;
    if (m < 0) return {-a, -b, -c, -d};
    return *this;
  }

  cplx apply(cplx z) const { return (a * z + b) / (c * z + d); }
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

struct Sym2 {
  double a = 0, b = 0, c = 0;

  double det() const { return a * c - b * b; }
  Sym2 operator-() const { return {-a, -b, -c}; }
};

inline Sym2 operator*(double s, const Sym2& m) { return {s * m.a, s * m.b, s * m.c}; }

inline double inner(const Sym2& s, const Sym2& t) {
  return 0.5 * (s.a * t.c + t.a * s.c) - s.b * t.b;
}

// Minkowski cross product, normalized so that for two points z, w it yields
// the geodesic oriented from z to w.
inline Sym2 cross(const Sym2& s, const Sym2& t) {
  return {s.b * t.a - s.a * t.b, 0.5 * (t.a * s.c - s.a * t.c), s.c * t.b - s.b * t.c};
}

// --- points ---------------------------------------------------------------

inline Sym2 point(cplx z) {
  double x = z.real(), y = z.imag();
  if (!(y > 0)) throw DomainError("point not in the upper half-plane");
  return {(x * x + y * y) / y, x / y, 1.0 / y};
}

inline Sym2 normalize_point(const Sym2& s) {
  double dt = s.det();
  if (!(dt > 0)) throw NumericError("not a point (det <= 0)");
  double f = 1.0 / std::sqrt(dt);
  if (s.c < 0) f = -f;
  return f * s;
}

inline cplx to_complex(const Sym2& s) {
  Sym2 p = normalize_point(s);
  return {p.b / p.c, 1.0 / p.c};
}

// --- geodesics ------------------------------------------------------------

// Semicircle centered at m with radius r, oriented left-to-right (the
// orientation such that the vertical-line limit below is "upward" for
// m -> +inf ... concretely: the unit circle {-1,0,1} points in the +x
// direction where it passes through i).
inline Sym2 geodesic_circle(double m, double r) {
  return {(m * m - r * r) / r, m / r, 1.0 / r};
}

// Vertical line x = v, oriented upward.
inline Sym2 geodesic_vertical(double v) { return {2 * v, 1, 0}; }

inline Sym2 normalize_geodesic(const Sym2& s) {
  double dt = s.det();
  if (!(dt < 0)) throw NumericError("not a geodesic (det >= 0)");
  return (1.0 / std::sqrt(-dt)) * s;
}

// Geodesic through two points, oriented from the first to the second.
inline Sym2 geodesic_through(const Sym2& p, const Sym2& q) {
  return normalize_geodesic(cross(p, q));
}

// Isometry action S |-> M S M^T (covariant for both points and geodesics).
inline Sym2 transform(const Mat2& m, const Sym2& s) {
  double ra = m.a * s.a + m.b * s.b, rb = m.a * s.b + m.b * s.c;
  double rc = m.c * s.a + m.d * s.b, rd = m.c * s.b + m.d * s.c;
  return {ra * m.a + rb * m.b, ra * m.c + rb * m.d, rc * m.c + rd * m.d};
}

// --- metric queries -------------------------------------------------------

inline double distance(const Sym2& p, const Sym2& q) { return clamp_acosh(inner(p, q)); }

// Positive on the left of the oriented geodesic.
inline double signed_sinh_distance(const Sym2& p, const Sym2& g) { return inner(p, g); }

inline bool geodesics_cross(const Sym2& g, const Sym2& h) { return std::fabs(inner(g, h)) < 1.0; }

inline double geodesic_distance(const Sym2& g, const Sym2& h) {
  double i = std::fabs(inner(g, h));
  return i <= 1.0 ? 0.0 : std::acosh(i);
}

// Intersection point of two crossing geodesics.
inline Sym2 intersection(const Sym2& g, const Sym2& h) {
  Sym2 x = cross(g, h);
  if (!(x.det() > 0)) throw NumericError("geodesics do not cross");
  return normalize_point(x);
}

// Geodesic through p orthogonal to g.
inline Sym2 perpendicular(const Sym2& p, const Sym2& g) { return normalize_geodesic(cross(p, g)); }

inline Sym2 foot_of_perpendicular(const Sym2& p, const Sym2& g) {
  return intersection(perpendicular(p, g), g);
}

// Angle from g to h at their crossing, counter-clockwise, in (-pi, pi].
// |sin| comes from the Gram identity det(cross(g,h)) = sin^2; the bare wedge
// minor equals sin * cosh(dist of the crossing from i), so it only supplies
// the sign.
inline double ccw_angle(const Sym2& g, const Sym2& h) {
  double cosv = -inner(g, h);
  double sinv = 0.5 * (g.b * h.a - g.a * h.b + g.c * h.b - g.b * h.c);
  double s2 = cross(g, h).det();
  double mag = std::sqrt(s2 > 0 ? s2 : 0);
  return std::atan2(std::copysign(mag, sinv), cosv);
}

// --- elementary isometries ------------------------------------------------

// Rotation by phi (counter-clockwise) about i.
inline Mat2 rotation_about_i(double phi) {
  double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return {c, s, -s, c};
}

// Translation by d along the unit circle through i (moves i "rightward",
// i.e. in the +x direction, for d > 0).
inline Mat2 translation_x(double d) {
  double ch = std::cosh(d / 2), sh = std::sinh(d / 2);
  return {ch, sh, sh, ch};
}

// The point at distance d from i in direction omega (omega = 0 is +x).
inline Sym2 point_at(double omega, double d) {
  return transform(rotation_about_i(omega) * translation_x(d), point(cplx(0, 1)));
}

// Translation by len along an oriented geodesic g (normalized, det -1).
inline Mat2 translation_along(const Sym2& g, double len) {
  double ch = std::cosh(len / 2), sh = std::sinh(len / 2);
  return {ch + sh * g.b, -sh * g.a, sh * g.c, ch - sh * g.b};
}

enum class IsomClass { elliptic, parabolic, hyperbolic };

struct Isometry {
  Mat2 m;
  IsomClass cls = IsomClass::elliptic;
  double translation_length = 0;  // 2 arccosh(|tr|/2) when hyperbolic
};

inline Isometry classify(const Mat2& raw, double parabolic_band = 1e-9) {
  Mat2 m = raw.unit_det();
  double t = std::fabs(m.trace());
  Isometry iso;
  iso.m = m;
  if (t > 2.0 + parabolic_band) {
    iso.cls = IsomClass::hyperbolic;
    iso.translation_length = 2.0 * std::acosh(t / 2.0);
  } else if (t >= 2.0 - parabolic_band) {
    iso.cls = IsomClass::parabolic;
  } else {
    iso.cls = IsomClass::elliptic;
  }
  return iso;
}

// Oriented axis of a hyperbolic isometry (translation direction matches the
// isometry's attracting direction).
inline Sym2 axis_of(const Mat2& raw) {
  Mat2 m = raw.unit_det();
  if (m.trace() < 0) m = {-m.a, -m.b, -m.c, -m.d};
  double off = 0.5 * (m.a - m.d);
  Sym2 ax{-m.b, off, m.c};
  return normalize_geodesic(ax);
}

// Reflection across a geodesic g.  As a point map it is the anti-Mobius
// z -> M conj(z) with M = mat(g)J (det -1).  On Sym2 data the action is
// S -> M S M^T; for points that lands on the c > 0 branch automatically
// (the 22 entry is a positive-definite form evaluated at a nonzero vector),
// while for oriented geodesics the pushforward orientation is the extra
// overall sign flip (anti-isometries swap left and right).
inline Mat2 reflection_matrix(const Sym2& g) {
  Sym2 n = normalize_geodesic(g);
  return {n.b, -n.a, n.c, -n.b};
}

inline Sym2 reflect_point(const Sym2& g, const Sym2& p) {
  return transform(reflection_matrix(g), p);
}

inline Sym2 reflect_geodesic(const Sym2& g, const Sym2& h) {
  return -transform(reflection_matrix(g), h);
}

// Composition of reflections across g then across h (first g, then h), as a
// proper isometry.  Both matrices have det -1, so the product has det +1.
inline Mat2 compose_reflections(const Sym2& h, const Sym2& g) {
  return (reflection_matrix(h) * reflection_matrix(g)).unit_det();
}

}  // namespace sysfill
