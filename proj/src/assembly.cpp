#include "sysfill/assembly.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sysfill/errors.hpp"

namespace sysfill {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int uniform_degree(const SurfaceMap& map, const char* who) {
  if (map.vertex_count() == 0) throw StructuralError(std::string(who) + ": empty map");
  int q = static_cast<int>(map.vertex_cycle(0).size());
  for (int v = 1; v < map.vertex_count(); ++v)
    if (static_cast<int>(map.vertex_cycle(v).size()) != q)
      throw StructuralError(std::string(who) + ": vertex degrees differ");
  return q;
}

double deviation_from_pm_identity(const Mat2& m) {
  double dp = std::fabs(m.a - 1);
  dp = std::max(dp, std::fabs(m.b));
  dp = std::max(dp, std::fabs(m.c));
  dp = std::max(dp, std::fabs(m.d - 1));
  double dm = std::fabs(m.a + 1);
  dm = std::max(dm, std::fabs(m.b));
  dm = std::max(dm, std::fabs(m.c));
  dm = std::max(dm, std::fabs(m.d + 1));
  return std::min(dp, dm);
}

}  // namespace

CurveSystem::CurveSystem(const SurfaceMap& map) : map_(map) {
  q_ = uniform_degree(map_, "CurveSystem");
  const int E = map_.edge_count();
  const int twoq = 2 * q_;

  stars_.resize(map_.vertex_count());
  for (int v = 0; v < map_.vertex_count(); ++v) {
    VertexStar& star = stars_[v];
    star.blue.resize(q_);
    star.red.resize(q_);
    for (int k = 0; k < q_; ++k) {
      star.blue[k] = map_.edge_of(map_.dart_at(v, k));
      star.red[k] = map_.face_of(map_.opposite(map_.dart_at(v, k - 1)));
    }
  }

  // Blue curve of edge e: the doubled glued side.  Viewed from the front
  // tile of a dart (v, k) it runs along model side 2k, crossing the two
  // mirror walls at that side's ends; the second crossing is recorded from
  // the back tile, where side 2k appears as model side 2q-2k.
  blues_.resize(E);
  blue_crossings_.assign(E, {});
  std::vector<int> first_dart(E, -1);
  for (int d = 0; d < map_.dart_count(); ++d)
    if (first_dart[map_.edge_of(d)] < 0) first_dart[map_.edge_of(d)] = d;
  for (int e = 0; e < E; ++e) {
    int d = first_dart[e];
    blue_crossings_[e] = {d, map_.opposite(d)};
    int v = map_.vertex_of(d);
    int k = map_.position_at_vertex(d);
    CurveClass curve;
    curve.color = SideColor::blue;
    curve.id = e;
    curve.base_tile = HolonomyRep::tile_of(v, 0);
    curve.steps = {{HolonomyRep::tile_of(v, 0), 2 * k + 1},
                   {HolonomyRep::tile_of(v, 1), mod(twoq - 2 * k + 1, twoq)}};
    curve.wall_word = {2 * E + v * q_ + k, 2 * E + v * q_ + mod(k - 1, q_)};
    blues_[e] = std::move(curve);
  }

  // Red curve of face f: the mirror-locus component around the face.  The
  // face cycle dart x_i sits at (w_i, k_i); between crossings the curve runs
  // through the corner of tile w_{i+1} and leaves it across blue side
  // 2 k_{i+1}, always in the front layer.
  reds_.resize(map_.face_count());
  for (int f = 0; f < map_.face_count(); ++f) {
    const auto& cycle = map_.face_cycle(f);
    CurveClass curve;
    curve.color = SideColor::red;
    curve.id = f;
    curve.base_tile = HolonomyRep::tile_of(map_.vertex_of(cycle[0]), 0);
    for (int x : cycle) {
      int w = map_.vertex_of(x);
      int k = map_.position_at_vertex(x);
      curve.steps.push_back({HolonomyRep::tile_of(w, 0), 2 * k});
      curve.wall_word.push_back(2 * map_.edge_of(x));
    }
    reds_[f] = std::move(curve);
  }
}

HolonomyRep::HolonomyRep(const SurfaceMap& map, double t, std::vector<double> twists,
                         AssemblyOptions options)
    : map_(map), twists_(std::move(twists)), back_twist_sign_(options.back_twist_sign) {
  int q = uniform_degree(map_, "HolonomyRep");
  if (static_cast<int>(twists_.size()) != map_.edge_count())
    throw AssemblyError("need one twist per edge: got " + std::to_string(twists_.size()) +
                        " for " + std::to_string(map_.edge_count()) + " edges");
  if (back_twist_sign_ != 1 && back_twist_sign_ != -1)
    throw AssemblyError("back_twist_sign must be +1 or -1");
  shape_ = embed_polygon(q, t);
  rebuild_all();
}

void HolonomyRep::set_twists(std::vector<double> twists) {
  if (static_cast<int>(twists.size()) != map_.edge_count())
    throw AssemblyError("need one twist per edge");
  twists_ = std::move(twists);
  for (int e = 0; e < map_.edge_count(); ++e) rebuild_blue(e);
}

void HolonomyRep::set_twist(int edge, double value) {
  if (edge < 0 || edge >= map_.edge_count()) throw AssemblyError("twist edge out of range");
  twists_[edge] = value;
  rebuild_blue(edge);
}

const Transition& HolonomyRep::transition(int tile, int model_wall) const {
  if (tile < 0 || tile >= tile_count()) throw AssemblyError("tile out of range");
  if (model_wall < 0 || model_wall >= 2 * q()) throw AssemblyError("wall out of range");
  return transitions_[tile][model_wall];
}

void HolonomyRep::rebuild_all() {
  const int q = shape_.spec.q;
  const int twoq = 2 * q;
  const int E = map_.edge_count();
  transitions_.assign(tile_count(), std::vector<Transition>(twoq));

  // Mirror walls.  Crossing model side m of either layer of vertex v lands
  // on the other layer through model side 2q-m; the matrix is the reflection
  // in the crossed side composed with the reflection in the direction-0 axis
  // through the center (the in-chart realization of the doubling map).
  const Sym2 axis0 = geodesic_circle(0.0, 1.0);
  for (int v = 0; v < map_.vertex_count(); ++v) {
    for (int j = 0; j < q; ++j) {
      int m = 2 * j + 1;
      int mb = twoq - m;
      int id = red_wall(v, j);
      transitions_[tile_of(v, 0)][m] = {tile_of(v, 1), mb, id,
                                        compose_reflections(shape_.side_geodesics[m], axis0)};
      transitions_[tile_of(v, 1)][mb] = {tile_of(v, 0), m, id,
                                         compose_reflections(shape_.side_geodesics[mb], axis0)};
    }
  }

  for (int e = 0; e < E; ++e) rebuild_blue(e);
}

void HolonomyRep::rebuild_blue(int edge) {
  const int q = shape_.spec.q;
  const int twoq = 2 * q;

  int d0 = -1;
  for (int d = 0; d < map_.dart_count() && d0 < 0; ++d)
    if (map_.edge_of(d) == edge) d0 = d;
  int d1 = map_.opposite(d0);
  int v = map_.vertex_of(d0), k = map_.position_at_vertex(d0);
  int w = map_.vertex_of(d1), m = map_.position_at_vertex(d1);

  // Side A of one tile meets side B of the other so that, at zero twist,
  // corner B lands on corner A+1.  A positive twist slides the neighbor by
  // F(delta) in the crossed side's forward direction; the same formula from
  // both ends yields mutually inverse matrices.
  auto matrix = [&](int A, int B, double delta) {
    return shape_.side_frames[A] * translation_x(delta) * rotation_about_i(kPi) *
           shape_.side_frames[B].inverse();
  };

  double r = twists_[edge];
  int front = blue_wall(edge, 0), back = blue_wall(edge, 1);
  int A = 2 * k, B = 2 * m;
  transitions_[tile_of(v, 0)][A] = {tile_of(w, 0), B, front, matrix(A, B, r)};
  transitions_[tile_of(w, 0)][B] = {tile_of(v, 0), A, front, matrix(B, A, r)};

  // The back charts are mirror images of the front ones and their side
  // frames flip with them, so the slide carries over with the same sign.
  int Ab = mod(twoq - A, twoq), Bb = mod(twoq - B, twoq);
  double rb = back_twist_sign_ * r;
  transitions_[tile_of(v, 1)][Ab] = {tile_of(w, 1), Bb, back, matrix(Ab, Bb, rb)};
  transitions_[tile_of(w, 1)][Bb] = {tile_of(v, 1), Ab, back, matrix(Bb, Ab, rb)};
}

double HolonomyRep::corner_cycle_residual() const {
  const int twoq = 2 * q();
  double worst = 0;
  for (int tile = 0; tile < tile_count(); ++tile) {
    for (int corner = 0; corner < twoq; ++corner) {
      Mat2 phi;
      int at = tile, c = corner;
      for (int step = 0; step < 4; ++step) {
        const Transition& tr = transitions_[at][c];
        phi = phi * tr.matrix;
        at = tr.target_tile;
        c = mod(tr.target_wall + 1, twoq);
      }
      if (at != tile || c != corner)
        throw AssemblyError("corner walk fails to return: tile " + std::to_string(tile) +
                            " corner " + std::to_string(corner));
      worst = std::max(worst, deviation_from_pm_identity(phi));
    }
  }
  return worst;
}

void HolonomyRep::check_corner_cycles(double tol) const {
  double worst = corner_cycle_residual();
  if (!(worst <= tol))
    throw AssemblyError("corner cycle residual " + std::to_string(worst) +
                        " exceeds tolerance " + std::to_string(tol));
}

double HolonomyRep::area() const { return tile_count() * shape_.spec.area; }

Mat2 HolonomyRep::holonomy(int base_tile, const std::vector<WallStep>& steps) const {
  Mat2 phi;
  int at = base_tile;
  for (const WallStep& step : steps) {
    if (step.tile != at)
      throw AssemblyError("wall walk expects tile " + std::to_string(at) + ", steps through " +
                          std::to_string(step.tile));
    const Transition& tr = transition(at, step.model_wall);
    phi = phi * tr.matrix;
    at = tr.target_tile;
  }
  if (at != base_tile) throw AssemblyError("wall walk does not close up");
  return phi;
}

Mat2 HolonomyRep::holonomy(const CurveClass& curve) const {
  return holonomy(curve.base_tile, curve.steps);
}

double HolonomyRep::curve_length(const CurveClass& curve) const {
  Isometry iso = classify(holonomy(curve));
  if (iso.cls != IsomClass::hyperbolic)
    throw AssemblyError("curve holonomy is not hyperbolic");
  return iso.translation_length;
}

HolonomyRep build_surface(const SurfaceMap& map, double t, double twist,
                          AssemblyOptions options) {
  return HolonomyRep(map, t, std::vector<double>(map.edge_count(), twist), options);
}

}  // namespace sysfill
