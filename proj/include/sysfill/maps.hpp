#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sysfill/rational.hpp"

namespace sysfill {

// Rotation-system encoding of a map on a closed orientable surface.  Darts
// are half-edges; vertex_rotation cycles them counter-clockwise around each
// vertex and edge_involution swaps the two darts of every edge.  Vertices,
// edges, and faces are derived from the two permutations, never stored.
class SurfaceMap {
 public:
  SurfaceMap(std::vector<int> vertex_rotation, std::vector<int> edge_involution);

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int vertex_count() const { return static_cast<int>(vertex_cycles_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(face_cycles_.size()); }

  int next_at_vertex(int dart) const { return sigma_[dart]; }
  int prev_at_vertex(int dart) const { return sigma_inv_[dart]; }
  int opposite(int dart) const { return theta_[dart]; }
  // face permutation: vertex_rotation composed with edge_involution
  int next_in_face(int dart) const { return sigma_[theta_[dart]]; }

  int vertex_of(int dart) const { return dart_vertex_[dart]; }
  int edge_of(int dart) const { return dart_edge_[dart]; }
  int face_of(int dart) const { return dart_face_[dart]; }
  int position_at_vertex(int dart) const { return dart_position_[dart]; }

  const std::vector<int>& vertex_cycle(int v) const { return vertex_cycles_[v]; }
  const std::vector<int>& face_cycle(int f) const { return face_cycles_[f]; }
  int dart_at(int vertex, int position) const {
    int q = static_cast<int>(vertex_cycles_[vertex].size());
    return vertex_cycles_[vertex][((position % q) + q) % q];
  }

  const std::vector<int>& vertex_rotation() const { return sigma_; }
  const std::vector<int>& edge_involution() const { return theta_; }

  bool connected() const;

 private:
  std::vector<int> sigma_, sigma_inv_, theta_;
  std::vector<std::vector<int>> vertex_cycles_, face_cycles_;
  std::vector<int> dart_vertex_, dart_edge_, dart_face_, dart_position_;
};

// Build a map from oriented face tables (each face lists its vertices in
// boundary order).  Faces are re-oriented consistently by a flood fill, so
// the input may mix orientations as long as the surface is orientable.
SurfaceMap map_from_faces(const std::vector<std::vector<int>>& faces, int vertex_count);

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> reasons;
};

// Degree, face-size, connectivity, and girth checks for a type-{p,q} map.
ValidationReport validate_map(const SurfaceMap& map, int p, int q);

// Shortest graph cycle; empty for forests.  Loops count as cycles of length
// 1 and parallel edges as cycles of length 2.
std::optional<int> girth(const SurfaceMap& map);

// Built-in instances: "tetrahedron", "cube", "dodecahedron".
SurfaceMap catalog_map(const std::string& name);
std::vector<std::string> catalog_names();
// (p, q) for a catalog name.
std::pair<int, int> catalog_type(const std::string& name);

struct MapCounts {
  int V = 0, E = 0, F = 0;
  int map_genus = 0;      // genus of the surface the map lives on
  long long genus = 0;    // genus of the assembled surface: 2(g-1) = (q-2) V
  long long blue_count = 0;
  long long red_count = 0;
};

// Curve/genus counts for the surface assembled from a validated {p,q} map.
// Formula values are computed in exact rational arithmetic and must agree
// with the direct counts.
MapCounts map_counts(const SurfaceMap& map, int p, int q);

struct CellDimensions {
  Rational dim_w;  // (6 - q/(q-2)) (g-1)
  Rational dim_c;  // dim_w - 2q/(p(q-2)) (g-1)
};

CellDimensions cell_dimension(int p, int q, long long g);

// Map file format: a JSON object {"darts": N, "vertex_rotation": [...],
// "edge_involution": [...]}, written with a fixed two-space indent so that
// save/load round-trips are byte-identical.
SurfaceMap map_from_json_text(const std::string& text);
std::string map_to_json_text(const SurfaceMap& map);
SurfaceMap load_map_file(const std::string& path);
void save_map_file(const SurfaceMap& map, const std::string& path);

}  // namespace sysfill
