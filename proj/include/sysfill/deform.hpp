#pragma once

#include <limits>
#include <vector>

#include "sysfill/assembly.hpp"
#include "sysfill/geodesics.hpp"

namespace sysfill {

// Twist calibration toward the equal-length surface: the unique r >= 0 with
// every red curve as long as the blue ones,
//   cosh(mu / 2p) = cosh(r/2) cosh(s/2),   sin(theta) sinh(mu / 2p) = sinh(s/2),
// where mu = 2t and theta is the common red-blue crossing angle.
struct CalibratedDeformation {
  double t = 0;
  double r = 0;
  double mu = 0;
  double theta = 0;
  // systole gap at the calibrated surface; filled by select_parameter
  double margin = std::numeric_limits<double>::quiet_NaN();
};

// Closed-form calibration. Throws DomainError below the balance point, where
// cosh(r/2) would have to dip under 1.
CalibratedDeformation calibrate_twist(int p, int q, double t);

// Angle at the crossing between the red curve of face_of(crossing) and the
// blue curve of edge_of(crossing), measured between the two geodesic axes on
// the built surface and folded to (0, pi). The folded value is independent
// of either curve's orientation and of the lift used.
double measure_angle_at(const HolonomyRep& rep, const CurveSystem& curves, int crossing);

// Same, addressed by curve pair. Throws DomainError when they do not meet.
double measure_angle(const HolonomyRep& rep, const CurveSystem& curves, int face, int edge);

// Derivative table of red lengths against blue twists. `formula` holds the
// cosine-formula entries (cos theta per crossing); when built from a surface
// the signs come from the measured angles and `measured` holds the exact
// measured cosines next to them. Row-major, red_count x blue_count.
struct DifferentialReport {
  int red_count = 0;
  int blue_count = 0;
  double theta = 0;
  std::vector<double> formula;
  std::vector<double> measured;
  int rank = -1;
  double sigma_max = 0;
  double sigma_min = 0;
};

DifferentialReport wolpert_differential(const CurveSystem& curves, double theta);
DifferentialReport wolpert_differential(const CurveSystem& curves, const HolonomyRep& rep,
                                        double theta);

// Rank of the differential, certified twice: fraction-free integer
// elimination on the entry pattern divided by cos theta, and a singular value
// count at threshold 1e-9 * sigma_max on the floating entries (measured too,
// when present). Fills rank and the sigma fields. Any disagreement throws
// RankCertificationError; theta = pi/2 throws DomainError (every entry is 0).
int differential_rank(DifferentialReport& report);

// Central differences d(red length) / d(twist of edge), one entry per red.
std::vector<double> twist_derivatives(const HolonomyRep& rep, const CurveSystem& curves,
                                      int edge, double step);

struct FdReport {
  double max_residual = 0;
  double max_blue_drift = 0;
  bool step_warning = false;
  std::vector<double> derivatives;  // red_count x blue_count, row-major
};

// Compares twist_derivatives on every blue curve against the signed formula
// entries, and verifies blue lengths stay put under the probing twists.
FdReport finite_difference_check(const HolonomyRep& rep, const CurveSystem& curves,
                                 double theta, double step = 1e-5);

// Cosine-formula pairing of the alternating vertex direction
// xi = sum_k (-1)^(k+1) tau_(blue[k]) with the red curves of the star, in
// star order. For odd q the wrap-around slot 0 carries -2 cos theta and the
// rest vanish; for even q everything cancels.
std::vector<double> xi_probe(const CurveSystem& curves, int vertex, double theta);

// Smallest t on the grid t0 + k/50, k = 1..10, whose calibrated surface still
// has the blue and red curves as its only systoles with a certified gap above
// the next length. Returns the calibration with margin filled.
CalibratedDeformation select_parameter(const SurfaceMap& map, int p, int q,
                                       const EnumerationOptions& options = {});

}  // namespace sysfill
