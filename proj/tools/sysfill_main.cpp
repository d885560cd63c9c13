#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "sysfill/errors.hpp"
#include "sysfill/geodesics.hpp"
#include "sysfill/hyptrig.hpp"
#include "sysfill/report.hpp"

using namespace sysfill;

namespace {

struct Args {
  std::string map_arg;
  int p = 0;
  int q = 0;
  double t = std::numeric_limits<double>::quiet_NaN();
  double r = 0.0;
  double lmax = std::numeric_limits<double>::quiet_NaN();
  double tol = 1e-9;
  long long g = 0;
  int workers = 1;
  std::string format = "text";
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

const char* tag_name(CurveTag tag) {
  switch (tag) {
    case CurveTag::blue: return "blue";
    case CurveTag::red: return "red";
    default: return "other";
  }
}

// catalog names resolve directly; anything else is a map file and needs an
// explicit type
SurfaceMap resolve_map(Args& args) {
  for (const std::string& name : catalog_names()) {
    if (args.map_arg == name) {
      auto [p, q] = catalog_type(name);
      if (args.p == 0) args.p = p;
      if (args.q == 0) args.q = q;
      return catalog_map(name);
    }
  }
  if (args.p == 0 || args.q == 0)
    throw DomainError("--p and --q are required when --map is a file");
  return load_map_file(args.map_arg);
}

void emit(const Args& args, const nlohmann::ordered_json& doc, const std::string& text) {
  if (args.format == "structured")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

int run_catalog(const Args& args) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  std::string text;
  for (const std::string& name : catalog_names()) {
    SurfaceMap map = catalog_map(name);
    auto [p, q] = catalog_type(name);
    MapCounts c = map_counts(map, p, q);
    CellDimensions dims = cell_dimension(p, q, c.genus);
    doc.push_back({{"name", name},
                   {"p", p},
                   {"q", q},
                   {"V", c.V},
                   {"E", c.E},
                   {"F", c.F},
                   {"g", c.genus},
                   {"blue", c.blue_count},
                   {"red", c.red_count},
                   {"dim_w", dims.dim_w.str()},
                   {"dim_c", dims.dim_c.str()}});
    text += name + " {" + std::to_string(p) + "," + std::to_string(q) +
            "}: V=" + std::to_string(c.V) + " E=" + std::to_string(c.E) +
            " F=" + std::to_string(c.F) + " g=" + std::to_string(c.genus) +
            " blue=" + std::to_string(c.blue_count) + " red=" + std::to_string(c.red_count) +
            " dim_w=" + dims.dim_w.str() + " dim_c=" + dims.dim_c.str() + "\n";
  }
  emit(args, doc, text);
  return 0;
}

int run_validate(Args& args) {
  SurfaceMap map = resolve_map(args);
  ValidationReport v = validate_map(map, args.p, args.q);
  nlohmann::ordered_json doc = {{"map", args.map_arg},
                                {"p", args.p},
                                {"q", args.q},
                                {"pass", v.pass},
                                {"reasons", v.reasons}};
  std::string text;
  if (v.pass) {
    text = "valid map of type {" + std::to_string(args.p) + "," + std::to_string(args.q) +
           "}\n";
  } else {
    text = "invalid map:\n";
    for (const std::string& reason : v.reasons) text += "  - " + reason + "\n";
  }
  emit(args, doc, text);
  return v.pass ? 0 : 1;
}

int run_build(Args& args) {
  SurfaceMap map = resolve_map(args);
  double t0 = solve_t0(args.p, args.q);
  double t = std::isnan(args.t) ? t0 : args.t;
  HolonomyRep rep = build_surface(map, t, args.r);
  MapCounts c = map_counts(map, args.p, args.q);
  double corner = rep.corner_cycle_residual();
  double area_res = std::fabs(rep.area() - 4 * kPi * (c.genus - 1));
  bool pass = corner <= args.tol && area_res <= 1e-9;
  nlohmann::ordered_json doc = {{"map", args.map_arg},
                                {"t0", t0},
                                {"t", t},
                                {"r", args.r},
                                {"s", rep.red_side()},
                                {"tiles", rep.tile_count()},
                                {"walls", rep.wall_count()},
                                {"area", rep.area()},
                                {"corner_residual", corner},
                                {"area_residual", area_res},
                                {"pass", pass}};
  std::string text = "t0 = " + num(t0) + ", t = " + num(t) + ", r = " + num(args.r) +
                     ", s = " + num(rep.red_side()) + "\n" +
                     std::to_string(rep.tile_count()) + " tiles, " +
                     std::to_string(rep.wall_count()) + " walls, area " + num(rep.area()) +
                     "\ncorner residual " + num(corner) + ", area residual " + num(area_res) +
                     (pass ? "\nok\n" : "\nFAIL\n");
  emit(args, doc, text);
  return pass ? 0 : 1;
}

int run_systoles(Args& args) {
  SurfaceMap map = resolve_map(args);
  double t = std::isnan(args.t) ? solve_t0(args.p, args.q) : args.t;
  HolonomyRep rep = build_surface(map, t, args.r);
  EnumerationOptions eopt;
  eopt.workers = args.workers;

  if (!std::isnan(args.lmax)) {
    EnumerationResult res = enumerate_closed_geodesics(rep, args.lmax, eopt);
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    std::string text = "t = " + num(t) + ", r = " + num(args.r) +
                       ", lmax = " + num(args.lmax) + ", " +
                       std::to_string(res.classes.size()) + " classes\n";
    for (const GeodesicClass& cls : res.classes) {
      nlohmann::ordered_json word = cls.crossing_word;
      classes.push_back({{"length", cls.length},
                         {"trace", cls.trace},
                         {"tag", tag_name(cls.tag)},
                         {"word", std::move(word)}});
      text += "  " + num(cls.length) + "  " + tag_name(cls.tag) + "  [";
      for (size_t i = 0; i < cls.crossing_word.size(); ++i)
        text += (i ? "," : "") + std::to_string(cls.crossing_word[i]);
      text += "]\n";
    }
    nlohmann::ordered_json doc = {{"t", t},
                                  {"r", args.r},
                                  {"lmax", args.lmax},
                                  {"complete", res.complete},
                                  {"classes", std::move(classes)}};
    emit(args, doc, text);
    return res.complete ? 0 : 1;
  }

  SystoleReport sr = systole_report(rep, eopt);
  nlohmann::ordered_json doc = {{"t", t},
                                {"r", args.r},
                                {"L0", sr.systole_length},
                                {"multiplicity", sr.systole_classes.size()},
                                {"blue_multiplicity", sr.blue_multiplicity},
                                {"red_multiplicity", sr.red_multiplicity},
                                {"L1", sr.next_length},
                                {"margin", sr.margin}};
  std::string text = "systole " + num(sr.systole_length) + " with multiplicity " +
                     std::to_string(sr.systole_classes.size()) + " (" +
                     std::to_string(sr.blue_multiplicity) + " blue, " +
                     std::to_string(sr.red_multiplicity) + " red)\nnext length " +
                     num(sr.next_length) + ", margin " + num(sr.margin) + "\n";
  emit(args, doc, text);
  return 0;
}

int run_filling(Args& args) {
  SurfaceMap map = resolve_map(args);
  MapCounts c = map_counts(map, args.p, args.q);
  CurveSystem curves(map);
  FillingReport f = verify_filling(curves, c.genus);
  bool pass = f.filling && f.euler == f.expected_euler;
  nlohmann::ordered_json doc = {{"filling", f.filling},
                                {"vertices", f.vertices},
                                {"edges", f.edges},
                                {"faces", f.faces},
                                {"euler", f.euler},
                                {"expected_euler", f.expected_euler},
                                {"isolated_curve", f.isolated_curve}};
  std::string text = std::string(f.filling ? "filling" : "not filling") + ": V'=" +
                     std::to_string(f.vertices) + " E'=" + std::to_string(f.edges) + " F'=" +
                     std::to_string(f.faces) + " euler=" + std::to_string(f.euler) +
                     " expected=" + std::to_string(f.expected_euler) + "\n";
  emit(args, doc, text);
  return pass ? 0 : 1;
}

int run_calibrate(const Args& args) {
  double t0 = solve_t0(args.p, args.q);
  CalibratedDeformation cal = calibrate_twist(args.p, args.q, args.t);
  double s = red_side_length(args.q, args.t);
  double form_a =
      std::fabs(std::cosh(cal.mu / (2 * args.p)) - std::cosh(cal.r / 2) * std::cosh(s / 2));
  double form_b =
      std::fabs(std::sin(cal.theta) * std::sinh(cal.mu / (2 * args.p)) - std::sinh(s / 2));
  nlohmann::ordered_json doc = {{"p", args.p}, {"q", args.q},
                                {"t0", t0},   {"t", cal.t},
                                {"r", cal.r}, {"theta", cal.theta},
                                {"mu", cal.mu},
                                {"length_residual", form_a},
                                {"angle_residual", form_b}};
  std::string text = "t0 = " + num(t0) + "\nt = " + num(cal.t) + ", r = " + num(cal.r) +
                     ", theta = " + num(cal.theta) + ", mu = " + num(cal.mu) +
                     "\nresiduals " + num(form_a) + ", " + num(form_b) + "\n";
  emit(args, doc, text);
  return 0;
}

int run_differential(Args& args) {
  SurfaceMap map = resolve_map(args);
  double t0 = solve_t0(args.p, args.q);
  double t = std::isnan(args.t) ? t0 + 0.05 : args.t;
  CalibratedDeformation cal = calibrate_twist(args.p, args.q, t);
  HolonomyRep rep = build_surface(map, t, cal.r);
  CurveSystem curves(map);
  DifferentialReport diff = wolpert_differential(curves, rep, cal.theta);
  int rank = differential_rank(diff);
  FdReport fd = finite_difference_check(rep, curves, cal.theta, 1e-5);
  bool pass = rank == map.face_count() && fd.max_residual <= 1e-6 &&
              fd.max_blue_drift <= 1e-10;
  nlohmann::ordered_json doc = {{"t", t},
                                {"r", cal.r},
                                {"theta", cal.theta},
                                {"rank", rank},
                                {"red_count", map.face_count()},
                                {"blue_count", map.edge_count()},
                                {"sigma_min", diff.sigma_min},
                                {"sigma_max", diff.sigma_max},
                                {"fd_max_residual", fd.max_residual},
                                {"max_blue_drift", fd.max_blue_drift},
                                {"pass", pass}};
  std::string text = "rank " + std::to_string(rank) + " of " +
                     std::to_string(map.face_count()) + " red curves, theta = " +
                     num(cal.theta) + "\nfd residual " + num(fd.max_residual) +
                     ", blue drift " + num(fd.max_blue_drift) + (pass ? "\nok\n" : "\nFAIL\n");
  emit(args, doc, text);
  return pass ? 0 : 1;
}

int run_dimension(const Args& args) {
  if (args.g < 2) throw DomainError("--g must be at least 2");
  CellDimensions dims = cell_dimension(args.p, args.q, args.g);
  Rational coefficient = (dims.dim_c) / Rational(args.g - 1);
  nlohmann::ordered_json doc = {{"p", args.p},
                                {"q", args.q},
                                {"g", args.g},
                                {"dim_w", dims.dim_w.str()},
                                {"dim_c", dims.dim_c.str()},
                                {"coefficient", coefficient.as_double()}};
  std::string text = "dim_w = " + dims.dim_w.str() + ", dim_c = " + dims.dim_c.str() +
                     ", per-(g-1) coefficient " + num(coefficient.as_double()) + "\n";
  emit(args, doc, text);
  return 0;
}

std::string render_verify_text(const nlohmann::ordered_json& report) {
  std::string text = "instance " + report["instance"]["map"].get<std::string>() + " {" +
                     std::to_string(report["instance"]["p"].get<int>()) + "," +
                     std::to_string(report["instance"]["q"].get<int>()) + "}\n";
  for (const auto& check : report["checks"]) {
    text += check["pass"].get<bool>() ? "[ ok ] " : "[FAIL] ";
    text += check["name"].get<std::string>();
    for (auto& [key, value] : check.items()) {
      if (key == "name" || key == "pass") continue;
      text += " " + key + "=" + value.dump();
    }
    text += "\n";
  }
  text += "verdict: " + report["verdict"].get<std::string>() + "\n";
  return text;
}

int run_verify(Args& args) {
  SurfaceMap map = resolve_map(args);
  VerifyOptions opt;
  opt.workers = args.workers;
  VerifyRun run = run_verify_all(map, args.map_arg, args.p, args.q, opt);
  emit(args, run.report, render_verify_text(run.report));
  return run.pass ? 0 : 1;
}

void add_format(CLI::App* cmd, Args& args) {
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filling systole surfaces from combinatorial maps"};
  app.require_subcommand(1);
  Args args;

  CLI::App* catalog = app.add_subcommand("catalog", "list the built-in maps");
  add_format(catalog, args);

  CLI::App* validate = app.add_subcommand("validate-map", "check a map against a type {p,q}");
  validate->add_option("--map", args.map_arg, "catalog name or map file")->required();
  validate->add_option("--p", args.p, "face size");
  validate->add_option("--q", args.q, "vertex degree");
  add_format(validate, args);

  CLI::App* build = app.add_subcommand("build", "assemble the surface and check its gluing");
  build->add_option("--map", args.map_arg)->required();
  build->add_option("--p", args.p);
  build->add_option("--q", args.q);
  build->add_option("--t", args.t, "blue side length (default: balance point)");
  build->add_option("--r", args.r, "uniform twist");
  build->add_option("--tol", args.tol, "corner-cycle tolerance");
  add_format(build, args);

  CLI::App* systoles = app.add_subcommand("systoles", "shortest closed geodesics");
  systoles->add_option("--map", args.map_arg)->required();
  systoles->add_option("--p", args.p);
  systoles->add_option("--q", args.q);
  systoles->add_option("--t", args.t);
  systoles->add_option("--r", args.r);
  systoles->add_option("--lmax", args.lmax, "list every class up to this length");
  systoles->add_option("--workers", args.workers);
  add_format(systoles, args);

  CLI::App* filling = app.add_subcommand("filling", "complement census of the curve system");
  filling->add_option("--map", args.map_arg)->required();
  filling->add_option("--p", args.p);
  filling->add_option("--q", args.q);
  add_format(filling, args);

  CLI::App* calibrate = app.add_subcommand("calibrate", "equal-length twist for a type");
  calibrate->add_option("--p", args.p)->required();
  calibrate->add_option("--q", args.q)->required();
  calibrate->add_option("--t", args.t)->required();
  add_format(calibrate, args);

  CLI::App* differential =
      app.add_subcommand("differential", "twist differential of red lengths, with rank");
  differential->add_option("--map", args.map_arg)->required();
  differential->add_option("--p", args.p);
  differential->add_option("--q", args.q);
  differential->add_option("--t", args.t, "deformed length (default: balance + 0.05)");
  add_format(differential, args);

  CLI::App* dimension = app.add_subcommand("dimension", "cell dimensions for a type and genus");
  dimension->add_option("--p", args.p)->required();
  dimension->add_option("--q", args.q)->required();
  dimension->add_option("--g", args.g)->required();
  add_format(dimension, args);

  CLI::App* verify = app.add_subcommand("verify-all", "run the full certification pipeline");
  verify->add_option("--map", args.map_arg)->required();
  verify->add_option("--p", args.p);
  verify->add_option("--q", args.q);
  verify->add_option("--workers", args.workers);
  add_format(verify, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (catalog->parsed()) return run_catalog(args);
    if (validate->parsed()) return run_validate(args);
    if (build->parsed()) return run_build(args);
    if (systoles->parsed()) return run_systoles(args);
    if (filling->parsed()) return run_filling(args);
    if (calibrate->parsed()) return run_calibrate(args);
    if (differential->parsed()) return run_differential(args);
    if (dimension->parsed()) return run_dimension(args);
    if (verify->parsed()) return run_verify(args);
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const StructuralError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 2;
}
