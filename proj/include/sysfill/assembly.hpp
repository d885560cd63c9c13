#pragma once

#include <vector>

#include "sysfill/geom.hpp"
#include "sysfill/hyptrig.hpp"
#include "sysfill/maps.hpp"

namespace sysfill {

// One step of a wall walk: cross the given model wall of the given tile.
struct WallStep {
  int tile = 0;
  int model_wall = 0;
};

// A closed curve on the surface, recorded as the walk it induces on tiles
// together with the global ids of the walls it crosses.
struct CurveClass {
  SideColor color = SideColor::blue;
  int id = 0;  // edge id for blue curves, face id for red curves
  int base_tile = 0;
  std::vector<WallStep> steps;
  std::vector<int> wall_word;  // global wall ids, parallel to steps
};

// Curves incident to one vertex, in rotation order.  blue[k] is the edge at
// position k; red[j] is the face occupying the corner between positions j-1
// and j, so red[j] meets blue[j-1] and blue[j] (indices mod q).
struct VertexStar {
  std::vector<int> blue;
  std::vector<int> red;
};

// Combinatorics of the canonical curve system: one blue curve per edge, one
// red curve per face, crossings indexed by darts.  The crossing with id x
// is the point where the blue curve of edge_of(x) meets the red curve of
// face_of(x).  Purely map-derived; no geometry enters.
class CurveSystem {
 public:
  explicit CurveSystem(const SurfaceMap& map);

  const SurfaceMap& map() const { return map_; }
  int q() const { return q_; }
  int blue_count() const { return static_cast<int>(blues_.size()); }
  int red_count() const { return static_cast<int>(reds_.size()); }
  int crossing_count() const { return map_.dart_count(); }

  const CurveClass& blue(int edge) const { return blues_.at(edge); }
  const CurveClass& red(int face) const { return reds_.at(face); }
  const std::vector<CurveClass>& blues() const { return blues_; }
  const std::vector<CurveClass>& reds() const { return reds_; }

  const VertexStar& star(int vertex) const { return stars_.at(vertex); }

  // Crossings along the blue curve of an edge: its two darts.
  const std::vector<int>& blue_crossings(int edge) const { return blue_crossings_.at(edge); }
  // Crossings along a red curve in traversal order: the face cycle.
  const std::vector<int>& red_crossings(int face) const { return map_.face_cycle(face); }

 private:
  SurfaceMap map_;
  int q_;
  std::vector<CurveClass> blues_;
  std::vector<CurveClass> reds_;
  std::vector<VertexStar> stars_;
  std::vector<std::vector<int>> blue_crossings_;
};

// How a tile chart continues across one of its walls.
struct Transition {
  int target_tile = 0;
  int target_wall = 0;  // model wall of the target tile one arrives through
  int global_wall = 0;  // id shared by both sides of the wall
  Mat2 matrix;          // target chart coordinates -> source chart coordinates
};

struct AssemblyOptions {
  // Relative sign of the twist as seen from the back layer.  The back chart
  // is the mirror image of the front one and its wall frames reverse with
  // it, so the same slide value is consistent on both layers (+1); the
  // parameter exists so tests can demonstrate that -1 breaks the corner
  // cycles once twists are nonzero.
  int back_twist_sign = +1;
};

// The glued surface: 2V copies of the right-angled 2q-gon, one front and one
// back tile per map vertex.  Blue walls join tiles of the same layer across
// map edges (with a twist parameter per edge); red walls join the two layers
// of one vertex through the mirror.  All tiles share the model chart of the
// polygon, so geometry is carried entirely by the transition matrices.
class HolonomyRep {
 public:
  HolonomyRep(const SurfaceMap& map, double t, std::vector<double> twists,
              AssemblyOptions options = {});

  const SurfaceMap& map() const { return map_; }
  const PolygonEmbedding& tile_shape() const { return shape_; }
  double t() const { return shape_.spec.t; }
  double red_side() const { return shape_.spec.s; }
  int q() const { return shape_.spec.q; }
  const std::vector<double>& twists() const { return twists_; }

  void set_twists(std::vector<double> twists);
  void set_twist(int edge, double value);

  int tile_count() const { return 2 * map_.vertex_count(); }
  static int tile_of(int vertex, int layer) { return 2 * vertex + layer; }
  static int vertex_of_tile(int tile) { return tile / 2; }
  static int layer_of_tile(int tile) { return tile % 2; }

  int wall_count() const { return 4 * map_.edge_count(); }
  int blue_wall(int edge, int layer) const { return 2 * edge + layer; }
  int red_wall(int vertex, int corner) const {
    return 2 * map_.edge_count() + vertex * q() + corner;
  }

  const Transition& transition(int tile, int model_wall) const;

  // Largest deviation of any corner composite from plus or minus identity.
  double corner_cycle_residual() const;
  void check_corner_cycles(double tol) const;  // throws AssemblyError

  double area() const;

  Mat2 holonomy(int base_tile, const std::vector<WallStep>& steps) const;
  Mat2 holonomy(const CurveClass& curve) const;
  double curve_length(const CurveClass& curve) const;

 private:
  void rebuild_blue(int edge);
  void rebuild_all();

  SurfaceMap map_;
  PolygonEmbedding shape_;
  std::vector<double> twists_;
  int back_twist_sign_;
  std::vector<std::vector<Transition>> transitions_;  // [tile][model wall]
};

// Surface with every twist set to the same value.
HolonomyRep build_surface(const SurfaceMap& map, double t, double twist = 0.0,
                          AssemblyOptions options = {});

}  // namespace sysfill
