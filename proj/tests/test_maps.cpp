#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "sysfill/maps.hpp"

using namespace sysfill;

namespace {

// Oracle: shortest cycle through each edge = 1 + shortest path between its
// endpoints with the edge removed.  Independent of the BFS the library uses.
int edge_removal_girth(const SurfaceMap& map) {
  int best = INT32_MAX;
  const int V = map.vertex_count();
  for (int probe = 0; probe < map.dart_count(); probe += 1) {
    int skip_edge = map.edge_of(probe);
    int u = map.vertex_of(probe);
    int v = map.vertex_of(map.opposite(probe));
    if (u == v) return 1;  // loop
    std::vector<int> dist(V, -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int d : map.vertex_cycle(x)) {
        if (map.edge_of(d) == skip_edge) continue;
        int y = map.vertex_of(map.opposite(d));
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
  }
  return best;
}

const std::vector<std::vector<int>> kOctahedronFaces = {
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
    {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};

SurfaceMap octahedron() { return map_from_faces(kOctahedronFaces, 6); }

}  // namespace

TEST_CASE("catalog counts") {
  SurfaceMap tet = catalog_map("tetrahedron");
  CHECK(tet.vertex_count() == 4);
  CHECK(tet.edge_count() == 6);
  CHECK(tet.face_count() == 4);

  SurfaceMap cube = catalog_map("cube");
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(cube.face_count() == 6);

  SurfaceMap dod = catalog_map("dodecahedron");
  CHECK(dod.vertex_count() == 20);
  CHECK(dod.edge_count() == 30);
  CHECK(dod.face_count() == 12);

  CHECK_THROWS_AS(catalog_map("icosahedron"), DomainError);
}

TEST_CASE("catalog maps validate at their type") {
  for (const auto& name : catalog_names()) {
    auto [p, q] = catalog_type(name);
    SurfaceMap map = catalog_map(name);
    ValidationReport report = validate_map(map, p, q);
    for (const auto& why : report.reasons) INFO(why);
    CHECK(report.pass);
  }
}

TEST_CASE("girth agrees with the edge-removal oracle") {
  CHECK(girth(catalog_map("tetrahedron")) == 3);
  CHECK(girth(catalog_map("cube")) == 4);
  CHECK(girth(catalog_map("dodecahedron")) == 5);
  CHECK(girth(octahedron()) == 3);
  for (const auto& name : catalog_names())
    CHECK(*girth(catalog_map(name)) == edge_removal_girth(catalog_map(name)));
  CHECK(*girth(octahedron()) == edge_removal_girth(octahedron()));
}

TEST_CASE("loops and parallel edges") {
  // one vertex, one loop
  SurfaceMap loop({1, 0}, {1, 0});
  CHECK(girth(loop) == 1);
  ValidationReport r1 = validate_map(loop, 3, 3);
  CHECK_FALSE(r1.pass);
  bool girth_reason = std::any_of(r1.reasons.begin(), r1.reasons.end(), [](const std::string& s) {
    return s.find("girth") != std::string::npos;
  });
  CHECK(girth_reason);

  // two vertices joined by a double edge
  SurfaceMap digon({1, 0, 3, 2}, {2, 3, 0, 1});
  CHECK(girth(digon) == 2);
  CHECK(edge_removal_girth(digon) == 2);
  CHECK_FALSE(validate_map(digon, 3, 3).pass);
}

TEST_CASE("malformed permutation data") {
  CHECK_NOTHROW(SurfaceMap({0, 1}, {1, 0}));  // valid: one edge joining two leaves
  CHECK_THROWS_AS(SurfaceMap({1, 0}, {0, 1}), StructuralError);   // theta has fixed points
  CHECK_THROWS_AS(SurfaceMap({1, 1}, {1, 0}), StructuralError);   // sigma not a bijection
  CHECK_THROWS_AS(SurfaceMap({1, 0, 2}, {1, 0, 2}), StructuralError);  // odd dart count
  CHECK_THROWS_AS(SurfaceMap({2, 0}, {1, 0}), StructuralError);   // out of range
}

TEST_CASE("octahedron is the q=4 fixture") {
  SurfaceMap oct = octahedron();
  CHECK(oct.vertex_count() == 6);
  CHECK(oct.edge_count() == 12);
  CHECK(oct.face_count() == 8);
  CHECK(validate_map(oct, 3, 4).pass);
}

TEST_CASE("face walks have the advertised combinatorics") {
  SurfaceMap map = catalog_map("cube");
  for (int d = 0; d < map.dart_count(); ++d) {
    // the face of a dart contains it in its walk
    const auto& walk = map.face_cycle(map.face_of(d));
    CHECK(std::count(walk.begin(), walk.end(), d) == 1);
    // next_in_face stays in the same face
    CHECK(map.face_of(map.next_in_face(d)) == map.face_of(d));
    // rotation stays at the same vertex
    CHECK(map.vertex_of(map.next_at_vertex(d)) == map.vertex_of(d));
    CHECK(map.next_at_vertex(map.prev_at_vertex(d)) == d);
    // position bookkeeping
    CHECK(map.dart_at(map.vertex_of(d), map.position_at_vertex(d)) == d);
  }
}

TEST_CASE("curve counts and genus") {
  MapCounts tet = map_counts(catalog_map("tetrahedron"), 3, 3);
  CHECK(tet.genus == 3);
  CHECK(tet.blue_count == 6);
  CHECK(tet.red_count == 4);
  CHECK(tet.map_genus == 0);

  MapCounts cube = map_counts(catalog_map("cube"), 4, 3);
  CHECK(cube.genus == 5);
  CHECK(cube.blue_count == 12);
  CHECK(cube.red_count == 6);

  MapCounts dod = map_counts(catalog_map("dodecahedron"), 5, 3);
  CHECK(dod.genus == 11);
  CHECK(dod.blue_count == 30);
  CHECK(dod.red_count == 12);
}

TEST_CASE("cell dimensions") {
  CellDimensions tet = cell_dimension(3, 3, 3);
  CHECK(tet.dim_w == Rational(6));
  CHECK(tet.dim_c == Rational(2));

  CellDimensions cube = cell_dimension(4, 3, 5);
  CHECK(cube.dim_w == Rational(12));
  CHECK(cube.dim_c == Rational(6));

  CellDimensions dod = cell_dimension(5, 3, 11);
  CHECK(dod.dim_w == Rational(30));
  CHECK(dod.dim_c == Rational(18));

  // the coefficient 6 - q/(q-2) - 2q/(p(q-2)) at p=100, q=101 stays >= 4.95
  CellDimensions big = cell_dimension(100, 101, 2);  // g-1 = 1 isolates the coefficient
  Rational coeff = big.dim_c;
  CHECK(coeff >= Rational(495, 100));
  CHECK(coeff < Rational(496, 100));

  CHECK_THROWS_AS(cell_dimension(3, 2, 3), DomainError);
}

TEST_CASE("map file round trip is byte-identical") {
  SurfaceMap map = catalog_map("dodecahedron");
  std::string text = map_to_json_text(map);
  SurfaceMap back = map_from_json_text(text);
  CHECK(back.vertex_rotation() == map.vertex_rotation());
  CHECK(back.edge_involution() == map.edge_involution());
  CHECK(map_to_json_text(back) == text);
}

TEST_CASE("map file rejects malformed input") {
  CHECK_THROWS_AS(map_from_json_text("not json"), StructuralError);
  CHECK_THROWS_AS(map_from_json_text("{\"darts\": 2}"), StructuralError);
  CHECK_THROWS_AS(
      map_from_json_text(
          "{\"darts\": 2, \"vertex_rotation\": [1, 0], \"edge_involution\": [0, 1]}"),
      StructuralError);
  CHECK_THROWS_AS(
      map_from_json_text(
          "{\"darts\": 4, \"vertex_rotation\": [1, 0], \"edge_involution\": [1, 0]}"),
      StructuralError);
}

TEST_CASE("from_faces handles arbitrary input orientations") {
  // flip two faces of the tetrahedron table; the flood fill must undo it
  std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 3, 2}, {0, 3, 1}, {1, 3, 2}};
  SurfaceMap map = map_from_faces(faces, 4);
  CHECK(map.vertex_count() == 4);
  CHECK(map.face_count() == 4);
  CHECK(validate_map(map, 3, 3).pass);

  // a table with a dangling edge cannot close up
  CHECK_THROWS_AS(map_from_faces({{0, 1, 2}}, 3), StructuralError);
}
