#include "sysfill/deform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "sysfill/errors.hpp"
#include "sysfill/hyptrig.hpp"

namespace sysfill {

namespace {

constexpr double kIntegerTol = 1e-9;
constexpr double kSvdThresholdFactor = 1e-9;

// Rank over the integers by fraction-free (Bareiss) elimination.  The
// divisions are exact; intermediates fit easily in 128 bits at these sizes.
int integer_rank(std::vector<std::int64_t> a, int rows, int cols) {
  std::int64_t prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[static_cast<size_t>(i) * cols + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<size_t>(pivot) * cols + j],
                  a[static_cast<size_t>(rank) * cols + j]);
    }
    std::int64_t lead = a[static_cast<size_t>(rank) * cols + col];
    for (int i = rank + 1; i < rows; ++i) {
      std::int64_t head = a[static_cast<size_t>(i) * cols + col];
      for (int j = col; j < cols; ++j) {
        __int128 v = static_cast<__int128>(a[static_cast<size_t>(i) * cols + j]) * lead -
                     static_cast<__int128>(head) * a[static_cast<size_t>(rank) * cols + j];
        a[static_cast<size_t>(i) * cols + j] = static_cast<std::int64_t>(v / prev);
      }
    }
    prev = lead;
    ++rank;
  }
  return rank;
}

// Singular-value rank at a relative threshold; also reports the extreme
// retained values.
int numeric_rank(const std::vector<double>& entries, int rows, int cols, double* sigma_max,
                 double* sigma_min) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = entries[static_cast<size_t>(i) * cols + j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  double top = sv.size() > 0 ? sv(0) : 0.0;
  double threshold = kSvdThresholdFactor * top;
  int rank = 0;
  double smallest = 0.0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold && sv(i) > 0.0) {
      smallest = sv(i);
      ++rank;
    }
  }
  if (sigma_max) *sigma_max = top;
  if (sigma_min) *sigma_min = rank > 0 ? smallest : 0.0;
  return rank;
}

// Chart-change matrix from the chart of steps[index].tile to the chart of
// the walk's base tile (the prefix product of the transition matrices).
Mat2 transport_to(const HolonomyRep& rep, const CurveClass& curve, int index) {
  Mat2 phi;
  for (int i = 0; i < index; ++i)
    phi = phi * rep.transition(curve.steps[i].tile, curve.steps[i].model_wall).matrix;
  return phi;
}

double fold_to_half_turn(double angle) {
  double folded = angle - kPi * std::floor(angle / kPi);
  if (folded <= 0.0) folded += kPi;
  if (folded > kPi) folded -= kPi;
  return folded;
}

}  // namespace

CalibratedDeformation calibrate_twist(int p, int q, double t) {
  if (p < 3 || q < 3) throw DomainError("polygon type needs p, q >= 3");
  if (!(t > 0)) throw DomainError("t must be positive");
  double s = red_side_length(q, t);
  double half_mu_leg = t / p;  // mu / 2p with mu = 2t
  double ratio = std::cosh(half_mu_leg) / std::cosh(s / 2);
  if (ratio < 1.0 - 1e-12)
    throw DomainError("t below the balance point: red curves already longer than 2t");
  CalibratedDeformation cal;
  cal.t = t;
  cal.mu = 2 * t;
  cal.r = 2 * clamp_acosh(ratio);
  cal.theta = std::asin(clamp_unit(std::sinh(s / 2) / std::sinh(half_mu_leg)));
  return cal;
}

double measure_angle_at(const HolonomyRep& rep, const CurveSystem& curves, int crossing) {
  const SurfaceMap& map = curves.map();
  if (crossing < 0 || crossing >= map.dart_count())
    throw DomainError("crossing id out of range");
  int face = map.face_of(crossing);
  const CurveClass& red = curves.red(face);
  const std::vector<int>& cycle = curves.red_crossings(face);
  int index = -1;
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
    if (cycle[i] == crossing) {
      index = i;
      break;
    }
  }
  if (index < 0) throw StructuralError("crossing missing from its own face cycle");

  Mat2 phi = transport_to(rep, red, index);
  Mat2 local = phi.inverse() * rep.holonomy(red) * phi;
  Sym2 red_axis = axis_of(local.unit_det());
  Sym2 blue_axis = rep.tile_shape().side_geodesics[red.steps[index].model_wall];
  if (!geodesics_cross(red_axis, blue_axis))
    throw NumericError("red and blue axes fail to cross at a listed crossing");
  return fold_to_half_turn(ccw_angle(red_axis, blue_axis));
}

double measure_angle(const HolonomyRep& rep, const CurveSystem& curves, int face, int edge) {
  const SurfaceMap& map = curves.map();
  if (face < 0 || face >= map.face_count()) throw DomainError("face id out of range");
  if (edge < 0 || edge >= map.edge_count()) throw DomainError("edge id out of range");
  for (int crossing : curves.red_crossings(face)) {
    if (map.edge_of(crossing) == edge) return measure_angle_at(rep, curves, crossing);
  }
  throw DomainError("the red and blue curves do not meet");
}

DifferentialReport wolpert_differential(const CurveSystem& curves, double theta) {
  DifferentialReport report;
  report.red_count = curves.red_count();
  report.blue_count = curves.blue_count();
  report.theta = theta;
  report.formula.assign(static_cast<size_t>(report.red_count) * report.blue_count, 0.0);
  double c = std::cos(theta);
  for (int face = 0; face < report.red_count; ++face) {
    for (int crossing : curves.red_crossings(face)) {
      int edge = curves.map().edge_of(crossing);
      report.formula[static_cast<size_t>(face) * report.blue_count + edge] += c;
    }
  }
  return report;
}

DifferentialReport wolpert_differential(const CurveSystem& curves, const HolonomyRep& rep,
                                        double theta) {
  DifferentialReport report;
  report.red_count = curves.red_count();
  report.blue_count = curves.blue_count();
  report.theta = theta;
  size_t cells = static_cast<size_t>(report.red_count) * report.blue_count;
  report.formula.assign(cells, 0.0);
  report.measured.assign(cells, 0.0);
  double c = std::cos(theta);
  for (int face = 0; face < report.red_count; ++face) {
    for (int crossing : curves.red_crossings(face)) {
      int edge = curves.map().edge_of(crossing);
      size_t cell = static_cast<size_t>(face) * report.blue_count + edge;
      double angle = measure_angle_at(rep, curves, crossing);
      double cosine = std::cos(angle);
      report.measured[cell] += cosine;
      report.formula[cell] += cosine >= 0 ? c : -c;
    }
  }
  return report;
}

int differential_rank(DifferentialReport& report) {
  double c = std::cos(report.theta);
  if (std::fabs(c) < 1e-12)
    throw DomainError("differential vanishes at the balance point (theta = pi/2)");
  size_t cells = static_cast<size_t>(report.red_count) * report.blue_count;
  if (report.formula.size() != cells)
    throw DomainError("formula table does not match the stated dimensions");

  std::vector<std::int64_t> pattern(cells, 0);
  for (size_t i = 0; i < cells; ++i) {
    double scaled = report.formula[i] / c;
    std::int64_t nearest = std::llround(scaled);
    if (std::fabs(scaled - static_cast<double>(nearest)) > kIntegerTol)
      throw RankCertificationError("formula entry is not an integer multiple of cos theta");
    pattern[i] = nearest;
  }
  int exact = integer_rank(std::move(pattern), report.red_count, report.blue_count);

  double sigma_max = 0.0, sigma_min = 0.0;
  int numeric =
      numeric_rank(report.formula, report.red_count, report.blue_count, &sigma_max, &sigma_min);
  if (numeric != exact)
    throw RankCertificationError("integer elimination and singular values disagree on rank");
  if (!report.measured.empty()) {
    int measured_rank =
        numeric_rank(report.measured, report.red_count, report.blue_count, nullptr, nullptr);
    if (measured_rank != exact)
      throw RankCertificationError("measured-angle table disagrees on rank");
  }
  report.rank = exact;
  report.sigma_max = sigma_max;
  report.sigma_min = sigma_min;
  return exact;
}

std::vector<double> twist_derivatives(const HolonomyRep& rep, const CurveSystem& curves,
                                      int edge, double step) {
  if (edge < 0 || edge >= curves.blue_count()) throw DomainError("edge id out of range");
  if (!(step > 0)) throw DomainError("step must be positive");
  HolonomyRep probe = rep;
  double base = rep.twists().at(static_cast<size_t>(edge));
  int reds = curves.red_count();
  std::vector<double> result(static_cast<size_t>(reds), 0.0);
  probe.set_twist(edge, base + step);
  for (int f = 0; f < reds; ++f) result[f] = probe.curve_length(curves.red(f));
  probe.set_twist(edge, base - step);
  for (int f = 0; f < reds; ++f) {
    result[f] = (result[f] - probe.curve_length(curves.red(f))) / (2 * step);
  }
  return result;
}

FdReport finite_difference_check(const HolonomyRep& rep, const CurveSystem& curves,
                                 double theta, double step) {
  if (!(step > 0)) throw DomainError("step must be positive");
  DifferentialReport signed_table = wolpert_differential(curves, rep, theta);
  int reds = curves.red_count();
  int blues = curves.blue_count();

  FdReport out;
  out.step_warning = step > 1e-3 || step < 1e-10;
  out.derivatives.assign(static_cast<size_t>(reds) * blues, 0.0);

  std::vector<double> blue_at_rest(static_cast<size_t>(blues), 0.0);
  for (int e = 0; e < blues; ++e) blue_at_rest[e] = rep.curve_length(curves.blue(e));

  HolonomyRep probe = rep;
  std::vector<double> plus(static_cast<size_t>(reds), 0.0);
  for (int edge = 0; edge < blues; ++edge) {
    double base = rep.twists().at(static_cast<size_t>(edge));
    probe.set_twist(edge, base + step);
    for (int f = 0; f < reds; ++f) plus[f] = probe.curve_length(curves.red(f));
    for (int e = 0; e < blues; ++e) {
      double drift = std::fabs(probe.curve_length(curves.blue(e)) - blue_at_rest[e]);
      out.max_blue_drift = std::max(out.max_blue_drift, drift);
    }
    probe.set_twist(edge, base - step);
    for (int f = 0; f < reds; ++f) {
      double derivative = (plus[f] - probe.curve_length(curves.red(f))) / (2 * step);
      out.derivatives[static_cast<size_t>(f) * blues + edge] = derivative;
      double residual =
          std::fabs(derivative - signed_table.formula[static_cast<size_t>(f) * blues + edge]);
      out.max_residual = std::max(out.max_residual, residual);
    }
    for (int e = 0; e < blues; ++e) {
      double drift = std::fabs(probe.curve_length(curves.blue(e)) - blue_at_rest[e]);
      out.max_blue_drift = std::max(out.max_blue_drift, drift);
    }
    probe.set_twist(edge, base);
  }
  return out;
}

std::vector<double> xi_probe(const CurveSystem& curves, int vertex, double theta) {
  const SurfaceMap& map = curves.map();
  if (vertex < 0 || vertex >= map.vertex_count()) throw DomainError("vertex id out of range");
  const VertexStar& star = curves.star(vertex);
  int q = static_cast<int>(star.blue.size());

  std::vector<double> coefficient(static_cast<size_t>(curves.blue_count()), 0.0);
  for (int k = 0; k < q; ++k) coefficient[star.blue[k]] += (k % 2 == 0) ? -1.0 : 1.0;

  double c = std::cos(theta);
  std::vector<double> result(static_cast<size_t>(q), 0.0);
  for (int j = 0; j < q; ++j) {
    double acc = 0.0;
    for (int crossing : curves.red_crossings(star.red[j]))
      acc += coefficient[map.edge_of(crossing)];
    result[j] = c * acc;
  }
  return result;
}

CalibratedDeformation select_parameter(const SurfaceMap& map, int p, int q,
                                       const EnumerationOptions& options) {
  double t0 = solve_t0(p, q);
  int edges = map.edge_count();
  int faces = map.face_count();
  for (int k = 1; k <= 10; ++k) {
    double t = t0 + 0.02 * k;
    CalibratedDeformation cal = calibrate_twist(p, q, t);
    HolonomyRep rep = build_surface(map, t, cal.r);
    SystoleReport report = systole_report(rep, options);
    if (std::fabs(report.systole_length - 2 * t) > 1e-9) continue;
    if (report.blue_multiplicity != edges || report.red_multiplicity != faces) continue;
    if (static_cast<int>(report.systole_classes.size()) != edges + faces) continue;
    if (!(report.margin > 1e-7)) continue;
    cal.margin = report.margin;
    return cal;
  }
  throw NumericError("no grid parameter in (t0, t0 + 0.2] certifies the systole family");
}

}  // namespace sysfill
