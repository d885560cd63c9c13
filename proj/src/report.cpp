#include "sysfill/report.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "sysfill/errors.hpp"
#include "sysfill/geodesics.hpp"
#include "sysfill/hyptrig.hpp"

namespace sysfill {

namespace {

constexpr double kBalanceTol = 1e-12;
constexpr double kClosedFormTol = 1e-12;
constexpr double kRedLengthTol = 1e-9;
constexpr double kAngleTol = 1e-8;
constexpr double kSystoleLengthTol = 1e-9;
constexpr double kMarginMin = 1e-7;
constexpr double kFdStep = 1e-5;
constexpr double kFdTol = 1e-6;
constexpr double kBlueDriftTol = 1e-10;
constexpr double kCornerTol = 1e-9;
constexpr double kAreaTol = 1e-9;
constexpr double kXiTol = 1e-9;

}  // namespace

VerifyRun run_verify_all(const SurfaceMap& map, const std::string& instance, int p, int q,
                         const VerifyOptions& options) {
  nlohmann::ordered_json report;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  bool all = true;
  auto add = [&checks, &all](const std::string& name, bool pass,
                             nlohmann::ordered_json detail) {
    nlohmann::ordered_json entry;
    entry["name"] = name;
    entry["pass"] = pass;
    for (auto& [key, value] : detail.items()) entry[key] = value;
    checks.push_back(std::move(entry));
    all = all && pass;
  };

  report["schema_version"] = 1;
  report["instance"] = {{"map", instance}, {"p", p}, {"q", q}, {"t", nullptr}, {"r", nullptr}};
  report["polygon"] = nullptr;
  report["counts"] = nullptr;
  report["systoles"] = nullptr;
  report["filling"] = nullptr;
  report["calibration"] = nullptr;
  report["differential"] = nullptr;
  report["dimensions"] = nullptr;

  ValidationReport valid = validate_map(map, p, q);
  add("map_valid", valid.pass, {{"reasons", valid.reasons}});

  if (valid.pass) {
    MapCounts counts = map_counts(map, p, q);
    CellDimensions dims = cell_dimension(p, q, counts.genus);
    report["counts"] = {{"V", counts.V},
                        {"E", counts.E},
                        {"F", counts.F},
                        {"g", counts.genus},
                        {"blue", counts.blue_count},
                        {"red", counts.red_count}};
    report["dimensions"] = {{"dim_w", dims.dim_w.str()}, {"dim_c", dims.dim_c.str()}};

    double t0 = solve_t0(p, q);
    double s0 = red_side_length(q, t0);
    report["polygon"] = {{"t0", t0}, {"s_t0", s0}, {"area", (q - 2) * kPi}};
    double balance = std::fabs(2 * t0 - p * s0);
    double side_relation = std::fabs(std::cos(kPi / q) - std::sinh(t0 / 2) * std::sinh(s0 / 2));
    add("balance_point", balance <= kBalanceTol && side_relation <= kBalanceTol,
        {{"residual", balance}, {"side_relation_residual", side_relation}});

    try {
      EnumerationOptions eopt;
      eopt.workers = options.workers;
      CalibratedDeformation sel = select_parameter(map, p, q, eopt);
      report["instance"]["t"] = sel.t;
      report["instance"]["r"] = sel.r;
      report["calibration"] = {{"t_star", sel.t}, {"r_star", sel.r}, {"theta", sel.theta}};
      add("parameter_selected", true,
          {{"t", sel.t}, {"r", sel.r}, {"theta", sel.theta}, {"margin", sel.margin}});

      double s = red_side_length(q, sel.t);
      double form_a =
          std::fabs(std::cosh(sel.mu / (2 * p)) - std::cosh(sel.r / 2) * std::cosh(s / 2));
      double form_b = std::fabs(std::sin(sel.theta) * std::sinh(sel.mu / (2 * p)) -
                                std::sinh(s / 2));
      add("calibration_closed_forms", form_a <= kClosedFormTol && form_b <= kClosedFormTol,
          {{"length_residual", form_a}, {"angle_residual", form_b}});

      HolonomyRep rep = build_surface(map, sel.t, sel.r);
      double corner = rep.corner_cycle_residual();
      double area_err = std::fabs(rep.area() - 4 * kPi * (counts.genus - 1));
      add("assembly", corner <= kCornerTol && area_err <= kAreaTol,
          {{"corner_residual", corner}, {"area_residual", area_err}});

      CurveSystem curves(map);
      SystoleReport sys = systole_report(rep, eopt);
      bool sys_ok = std::fabs(sys.systole_length - 2 * sel.t) <= kSystoleLengthTol &&
                    sys.blue_multiplicity == counts.E && sys.red_multiplicity == counts.F &&
                    static_cast<long long>(sys.systole_classes.size()) ==
                        counts.blue_count + counts.red_count &&
                    sys.margin > kMarginMin;
      report["systoles"] = {{"L0", sys.systole_length},
                            {"multiplicity", sys.systole_classes.size()},
                            {"L1", sys.next_length},
                            {"margin", sys.margin}};
      add("systoles", sys_ok,
          {{"L0", sys.systole_length},
           {"blue_multiplicity", sys.blue_multiplicity},
           {"red_multiplicity", sys.red_multiplicity},
           {"margin", sys.margin}});

      FillingReport fill = verify_filling(curves, counts.genus);
      report["filling"] = fill.filling;
      add("filling", fill.filling && fill.euler == fill.expected_euler,
          {{"vertices", fill.vertices},
           {"edges", fill.edges},
           {"faces", fill.faces},
           {"euler", fill.euler}});

      double worst_angle = 0;
      for (int x = 0; x < map.dart_count(); ++x)
        worst_angle =
            std::max(worst_angle, std::fabs(measure_angle_at(rep, curves, x) - sel.theta));
      double worst_red = 0;
      for (int f = 0; f < map.face_count(); ++f)
        worst_red =
            std::max(worst_red, std::fabs(rep.curve_length(curves.red(f)) - 2 * sel.t));
      add("crossing_angles", worst_angle <= kAngleTol && worst_red <= kRedLengthTol,
          {{"max_angle_deviation", worst_angle}, {"max_red_length_deviation", worst_red}});

      DifferentialReport diff = wolpert_differential(curves, rep, sel.theta);
      int rank = differential_rank(diff);
      FdReport fd = finite_difference_check(rep, curves, sel.theta, kFdStep);
      report["differential"] = {{"rank", rank},
                                {"red_count", counts.F},
                                {"fd_max_residual", fd.max_residual}};
      add("differential_rank", rank == counts.F,
          {{"rank", rank},
           {"red_count", counts.F},
           {"sigma_min", diff.sigma_min},
           {"sigma_max", diff.sigma_max}});
      add("wolpert_fd", fd.max_residual <= kFdTol && fd.max_blue_drift <= kBlueDriftTol &&
                            !fd.step_warning,
          {{"max_residual", fd.max_residual}, {"max_blue_drift", fd.max_blue_drift}});

      double expected_wrap = (q % 2 != 0 ? -2.0 : 0.0) * std::cos(sel.theta);
      double worst_xi = 0;
      for (int v = 0; v < map.vertex_count(); ++v) {
        std::vector<double> probe = xi_probe(curves, v, sel.theta);
        worst_xi = std::max(worst_xi, std::fabs(probe[0] - expected_wrap));
        for (size_t j = 1; j < probe.size(); ++j)
          worst_xi = std::max(worst_xi, std::fabs(probe[j]));
      }
      add("xi_probe", worst_xi <= kXiTol,
          {{"max_deviation", worst_xi}, {"expected_first_slot", expected_wrap}});

      bool dims_ok = dims.dim_w == Rational(counts.blue_count) &&
                     dims.dim_c == Rational(counts.blue_count - counts.red_count) &&
                     dims.dim_w - dims.dim_c == Rational(rank);
      add("dimensions", dims_ok,
          {{"dim_w", dims.dim_w.str()}, {"dim_c", dims.dim_c.str()}});
    } catch (const std::exception& err) {
      add("pipeline", false, {{"error", err.what()}});
    }
  }

  report["tolerances"] = {{"balance", kBalanceTol},
                          {"closed_form", kClosedFormTol},
                          {"red_length", kRedLengthTol},
                          {"angle", kAngleTol},
                          {"systole_length", kSystoleLengthTol},
                          {"margin_min", kMarginMin},
                          {"fd_step", kFdStep},
                          {"fd_residual", kFdTol},
                          {"blue_drift", kBlueDriftTol},
                          {"corner_cycle", kCornerTol},
                          {"area", kAreaTol},
                          {"xi", kXiTol},
                          {"svd_threshold_factor", 1e-9}};
  report["checks"] = checks;
  report["verdict"] = all ? "pass" : "fail";
  return {std::move(report), all};
}

}  // namespace sysfill
