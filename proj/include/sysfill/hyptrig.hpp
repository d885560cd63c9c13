#pragma once

#include <string>
#include <vector>

#include "sysfill/geom.hpp"

namespace sysfill {

// Side-length data of the right-angled 2q-gon with sides alternating between
// length t (blue, even positions) and s (red, odd positions).
struct PolygonSpec {
  int q = 0;
  double t = 0;       // blue side length
  double s = 0;       // red side length, tied to t by cos(pi/q) = sinh(t/2) sinh(s/2)
  double area = 0;    // pi (q - 2)
};

// s such that cos(pi/q) = sinh(t/2) sinh(s/2); strictly decreasing in t.
double red_side_length(int q, double t);

PolygonSpec polygon_spec(int q, double t);

// The balance point t0 with 2 t0 = p * red_side_length(q, t0), found by
// bisection (the residual p*s(t) - 2t is strictly decreasing).
double solve_t0(int p, int q, double tol = 1e-12);
double solve_t0_bracketed(int p, int q, double lo, double hi, double tol);

enum class SideColor { blue, red };

// Concrete coordinates for the polygon in the upper half-plane, centered at
// i with the first blue side's midpoint on the positive-x axis of directions.
// Side j runs from vertices[j] to vertices[j+1 mod 2q]; the side-j midpoint
// sits at direction j*pi/q from the center; even j is blue.
struct PolygonEmbedding {
  std::string model = "upper-half-plane";
  PolygonSpec spec;
  std::vector<cplx> vertices;        // 2q corners, counter-clockwise
  std::vector<SideColor> side_colors;
  cplx center{0, 1};
  Isometry rotation;                 // order-q elliptic about the center

  double apothem_blue = 0;           // center-to-midpoint distance, blue sides
  double apothem_red = 0;
  double circumradius = 0;
  double half_angle_blue = 0;        // angular half-width of a blue side seen from center

  // Carrier geodesic of side j, oriented counter-clockwise around the polygon.
  std::vector<Sym2> side_geodesics;
  // Frame of side j: maps i to the side midpoint and the +x direction to the
  // counter-clockwise tangent.  side_geodesics[j] = frame_j . (unit circle).
  std::vector<Mat2> side_frames;

  int sides() const { return static_cast<int>(vertices.size()); }
  double side_length(int j) const { return j % 2 == 0 ? spec.t : spec.s; }
};

PolygonEmbedding embed_polygon(int q, double t);

// Distance between the complete geodesics carrying sides i and j.  Adjacent
// sides (sharing a vertex) are rejected: their carriers meet and the value
// would be a meaningless 0.
double side_distance(const PolygonEmbedding& poly, int i, int j);

}  // namespace sysfill
