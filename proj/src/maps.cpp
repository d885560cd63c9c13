#include "sysfill/maps.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sysfill/errors.hpp"

namespace sysfill {

namespace {

void check_permutation(const std::vector<int>& perm, const std::string& name) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = perm[i];
    if (v < 0 || v >= n)
      throw StructuralError(name + "[" + std::to_string(i) + "] = " + std::to_string(v) +
                            " is out of range");
    if (seen[v])
      throw StructuralError(name + " is not a permutation: value " + std::to_string(v) +
                            " repeats (second hit at index " + std::to_string(i) + ")");
    seen[v] = 1;
  }
}

std::vector<std::vector<int>> orbits_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int d = i; !seen[d]; d = perm[d]) {
      seen[d] = 1;
      cyc.push_back(d);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace

SurfaceMap::SurfaceMap(std::vector<int> vertex_rotation, std::vector<int> edge_involution)
    : sigma_(std::move(vertex_rotation)), theta_(std::move(edge_involution)) {
  const int n = dart_count();
  if (n == 0) throw StructuralError("a map needs at least one dart");
  if (n % 2 != 0) throw StructuralError("dart count must be even, got " + std::to_string(n));
  if (theta_.size() != sigma_.size())
    throw StructuralError("vertex_rotation and edge_involution sizes differ");
  check_permutation(sigma_, "vertex_rotation");
  check_permutation(theta_, "edge_involution");
  for (int d = 0; d < n; ++d) {
    if (theta_[d] == d)
      throw StructuralError("edge_involution fixes dart " + std::to_string(d));
    if (theta_[theta_[d]] != d)
      throw StructuralError("edge_involution is not an involution at dart " + std::to_string(d));
  }

  sigma_inv_.assign(n, 0);
  for (int d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

  vertex_cycles_ = orbits_of(sigma_);
  dart_vertex_.assign(n, 0);
  dart_position_.assign(n, 0);
  for (int v = 0; v < static_cast<int>(vertex_cycles_.size()); ++v) {
    const auto& cyc = vertex_cycles_[v];
    for (int k = 0; k < static_cast<int>(cyc.size()); ++k) {
      dart_vertex_[cyc[k]] = v;
      dart_position_[cyc[k]] = k;
    }
  }

  dart_edge_.assign(n, -1);
  int e = 0;
  for (int d = 0; d < n; ++d) {
    if (dart_edge_[d] >= 0) continue;
    dart_edge_[d] = e;
    dart_edge_[theta_[d]] = e;
    ++e;
  }

  std::vector<int> phi(n);
  for (int d = 0; d < n; ++d) phi[d] = sigma_[theta_[d]];
  face_cycles_ = orbits_of(phi);
  dart_face_.assign(n, 0);
  for (int f = 0; f < static_cast<int>(face_cycles_.size()); ++f)
    for (int d : face_cycles_[f]) dart_face_[d] = f;
}

bool SurfaceMap::connected() const {
  const int n = dart_count();
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 0;
  while (!queue.empty()) {
    int d = queue.front();
    queue.pop_front();
    ++visited;
    for (int nd : {sigma_[d], theta_[d]}) {
      if (!seen[nd]) {
        seen[nd] = 1;
        queue.push_back(nd);
      }
    }
  }
  return visited == n;
}

SurfaceMap map_from_faces(const std::vector<std::vector<int>>& faces, int vertex_count) {
  const int nf = static_cast<int>(faces.size());
  if (nf == 0) throw StructuralError("face table is empty");
  for (const auto& f : faces) {
    if (f.size() < 2) throw StructuralError("a face needs at least two vertices");
    for (int v : f)
      if (v < 0 || v >= vertex_count)
        throw StructuralError("face table references vertex " + std::to_string(v) +
                              " outside [0, " + std::to_string(vertex_count) + ")");
  }

  // 1. Orient faces consistently: flood-fill over shared undirected edges,
  //    flipping a face whenever it traverses a shared edge in the same
  //    direction as its already-oriented neighbor.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;  // undirected edge -> faces
  for (int f = 0; f < nf; ++f) {
    const auto& cyc = faces[f];
    const int len = static_cast<int>(cyc.size());
    for (int k = 0; k < len; ++k) {
      int u = cyc[k], v = cyc[(k + 1) % len];
      if (u == v) throw StructuralError("face " + std::to_string(f) + " repeats vertex " +
                                        std::to_string(u) + " consecutively");
      edge_faces[{std::min(u, v), std::max(u, v)}].push_back(f);
    }
  }
  for (const auto& [edge, fs] : edge_faces) {
    if (fs.size() != 2)
      throw StructuralError("edge (" + std::to_string(edge.first) + "," +
                            std::to_string(edge.second) + ") lies on " +
                            std::to_string(fs.size()) + " faces; a closed surface needs 2");
  }

  std::vector<std::vector<int>> oriented = faces;
  auto traverses = [&](int f, int u, int v) {
    const auto& cyc = oriented[f];
    const int len = static_cast<int>(cyc.size());
    for (int k = 0; k < len; ++k)
      if (cyc[k] == u && cyc[(k + 1) % len] == v) return true;
    return false;
  };

  std::vector<int> state(nf, 0);  // 0 unvisited, 1 oriented
  std::deque<int> queue{0};
  state[0] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    const auto cyc = oriented[f];
    const int len = static_cast<int>(cyc.size());
    for (int k = 0; k < len; ++k) {
      int u = cyc[k], v = cyc[(k + 1) % len];
      for (int g : edge_faces[{std::min(u, v), std::max(u, v)}]) {
        if (g == f) continue;
        if (state[g] == 0) {
          if (traverses(g, u, v)) std::reverse(oriented[g].begin(), oriented[g].end());
          state[g] = 1;
          queue.push_back(g);
        } else if (traverses(g, u, v)) {
          throw StructuralError("face table is not orientable (conflict between faces " +
                                std::to_string(f) + " and " + std::to_string(g) + ")");
        }
      }
    }
  }
  for (int f = 0; f < nf; ++f)
    if (state[f] == 0) throw StructuralError("face table is not connected");

  // 2. Darts are directed edges.  The face permutation advances along each
  //    oriented face; the vertex rotation is phi composed with the edge flip.
  std::map<std::pair<int, int>, int> dart_id;
  std::vector<std::pair<int, int>> dart_list;
  for (const auto& cyc : oriented) {
    const int len = static_cast<int>(cyc.size());
    for (int k = 0; k < len; ++k) {
      std::pair<int, int> key{cyc[k], cyc[(k + 1) % len]};
      if (dart_id.count(key))
        throw StructuralError("directed edge repeats across faces; orientation broke");
      dart_id[key] = static_cast<int>(dart_list.size());
      dart_list.push_back(key);
    }
  }

  const int n = static_cast<int>(dart_list.size());
  std::vector<int> phi(n), theta(n), sigma(n);
  for (const auto& cyc : oriented) {
    const int len = static_cast<int>(cyc.size());
    for (int k = 0; k < len; ++k) {
      int a = dart_id[{cyc[k], cyc[(k + 1) % len]}];
      int b = dart_id[{cyc[(k + 1) % len], cyc[(k + 2) % len]}];
      phi[a] = b;
    }
  }
  for (int d = 0; d < n; ++d) {
    auto [u, v] = dart_list[d];
    auto it = dart_id.find({v, u});
    if (it == dart_id.end())
      throw StructuralError("directed edge (" + std::to_string(v) + "," + std::to_string(u) +
                            ") missing; face table does not close up");
    theta[d] = it->second;
  }
  for (int d = 0; d < n; ++d) sigma[theta[d]] = phi[d];

  return SurfaceMap(sigma, theta);
}

ValidationReport validate_map(const SurfaceMap& map, int p, int q) {
  ValidationReport report;
  auto fail = [&](const std::string& why) {
    report.pass = false;
    report.reasons.push_back(why);
  };
  if (p < 3) fail("face size p must be >= 3, got " + std::to_string(p));
  if (q < 3) fail("vertex degree q must be >= 3, got " + std::to_string(q));

  if (!map.connected()) fail("map is not connected");

  for (int v = 0; v < map.vertex_count(); ++v) {
    int deg = static_cast<int>(map.vertex_cycle(v).size());
    if (deg != q) {
      fail("vertex " + std::to_string(v) + " has degree " + std::to_string(deg) + ", expected " +
           std::to_string(q));
    }
  }
  for (int f = 0; f < map.face_count(); ++f) {
    int len = static_cast<int>(map.face_cycle(f).size());
    if (len != p) {
      fail("face " + std::to_string(f) + " has " + std::to_string(len) + " sides, expected " +
           std::to_string(p));
    }
  }

  std::optional<int> g = girth(map);
  if (!g.has_value()) {
    fail("graph has no cycle at all");
  } else if (*g < p) {
    fail("girth is " + std::to_string(*g) + ", below the face size " + std::to_string(p));
  } else if (*g > p) {
    // unreachable for a map whose faces are p-gons; guards corrupt data
    fail("girth is " + std::to_string(*g) + ", above the face size " + std::to_string(p));
  }
  return report;
}

std::optional<int> girth(const SurfaceMap& map) {
  const int n = map.dart_count();
  // loops first: an edge with both darts at one vertex
  for (int d = 0; d < n; ++d)
    if (map.vertex_of(d) == map.vertex_of(map.opposite(d))) return 1;

  int best = INT32_MAX;
  const int V = map.vertex_count();
  std::vector<int> dist(V), parent_edge(V);
  for (int start = 0; start < V; ++start) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    dist[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) continue;
      for (int d : map.vertex_cycle(u)) {
        int e = map.edge_of(d);
        if (e == parent_edge[u]) continue;
        int w = map.vertex_of(map.opposite(d));
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == INT32_MAX) return std::nullopt;
  return best;
}

namespace {

// Platonic face tables.  The dodecahedron is written as a drum: top cap,
// upper ring A0..A4, lower ring B0..B4 interleaved, bottom cap.
const std::vector<std::vector<int>> kTetrahedronFaces = {
    {0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};

const std::vector<std::vector<int>> kCubeFaces = {
    {0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};

const std::vector<std::vector<int>> kDodecahedronFaces = {
    {0, 1, 2, 3, 4},
    {0, 5, 10, 6, 1},
    {1, 6, 11, 7, 2},
    {2, 7, 12, 8, 3},
    {3, 8, 13, 9, 4},
    {4, 9, 14, 5, 0},
    {10, 15, 16, 11, 6},
    {11, 16, 17, 12, 7},
    {12, 17, 18, 13, 8},
    {13, 18, 19, 14, 9},
    {14, 19, 15, 10, 5},
    {19, 18, 17, 16, 15}};

}  // namespace

std::vector<std::string> catalog_names() { return {"tetrahedron", "cube", "dodecahedron"}; }

std::pair<int, int> catalog_type(const std::string& name) {
  if (name == "tetrahedron") return {3, 3};
  if (name == "cube") return {4, 3};
  if (name == "dodecahedron") return {5, 3};
  std::string names;
  for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw DomainError("unknown catalog map '" + name + "' (available: " + names + ")");
}

SurfaceMap catalog_map(const std::string& name) {
  catalog_type(name);  // validates the name
  if (name == "tetrahedron") return map_from_faces(kTetrahedronFaces, 4);
  if (name == "cube") return map_from_faces(kCubeFaces, 8);
  return map_from_faces(kDodecahedronFaces, 20);
}

MapCounts map_counts(const SurfaceMap& map, int p, int q) {
  MapCounts counts;
  counts.V = map.vertex_count();
  counts.E = map.edge_count();
  counts.F = map.face_count();

  int chi = counts.V - counts.E + counts.F;
  if (chi % 2 != 0 || chi > 2)
    throw StructuralError("map Euler characteristic " + std::to_string(chi) + " is not 2 - 2g");
  counts.map_genus = (2 - chi) / 2;

  // 2 (g - 1) = (q - 2) V, exact
  Rational g_minus_1 = Rational(q - 2) * Rational(counts.V) / Rational(2);
  Rational genus = g_minus_1 + Rational(1);
  if (!genus.is_integer())
    throw StructuralError("(q-2) V = " + (Rational(q - 2) * Rational(counts.V)).str() +
                          " is odd; surface genus is not an integer");
  counts.genus = genus.as_integer();

  Rational blue = Rational(q) / Rational(q - 2) * g_minus_1;
  Rational red = Rational(2 * q) / (Rational(p) * Rational(q - 2)) * g_minus_1;
  if (!blue.is_integer() || blue.as_integer() != counts.E)
    throw StructuralError("blue-curve formula " + blue.str() + " disagrees with edge count " +
                          std::to_string(counts.E));
  if (!red.is_integer() || red.as_integer() != counts.F)
    throw StructuralError("red-curve formula " + red.str() + " disagrees with face count " +
                          std::to_string(counts.F));
  counts.blue_count = blue.as_integer();
  counts.red_count = red.as_integer();
  return counts;
}

CellDimensions cell_dimension(int p, int q, long long g) {
  if (q <= 2) throw DomainError("cell dimension needs q >= 3");
  if (p <= 2) throw DomainError("cell dimension needs p >= 3");
  Rational g1 = Rational(g) - Rational(1);
  Rational dim_w = (Rational(6) - Rational(q) / Rational(q - 2)) * g1;
  Rational red = Rational(2 * q) / (Rational(p) * Rational(q - 2)) * g1;
  return {dim_w, dim_w - red};
}

namespace {

nlohmann::ordered_json map_to_json(const SurfaceMap& map) {
  nlohmann::ordered_json j;
  j["darts"] = map.dart_count();
  j["vertex_rotation"] = map.vertex_rotation();
  j["edge_involution"] = map.edge_involution();
  return j;
}

}  // namespace

std::string map_to_json_text(const SurfaceMap& map) { return map_to_json(map).dump(2) + "\n"; }

SurfaceMap map_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw StructuralError(std::string("map file is not valid JSON: ") + err.what());
  }
  if (!j.is_object() || !j.contains("darts") || !j.contains("vertex_rotation") ||
      !j.contains("edge_involution"))
    throw StructuralError("map file needs fields darts, vertex_rotation, edge_involution");
  if (!j["darts"].is_number_integer())
    throw StructuralError("field 'darts' must be an integer");
  const long long n = j["darts"].get<long long>();
  auto read_perm = [&](const char* field) {
    if (!j[field].is_array() || static_cast<long long>(j[field].size()) != n)
      throw StructuralError(std::string("field '") + field + "' must be an array of length " +
                            std::to_string(n));
    std::vector<int> perm;
    perm.reserve(j[field].size());
    for (const auto& entry : j[field]) {
      if (!entry.is_number_integer())
        throw StructuralError(std::string("field '") + field + "' has a non-integer entry");
      perm.push_back(entry.get<int>());
    }
    return perm;
  };
  return SurfaceMap(read_perm("vertex_rotation"), read_perm("edge_involution"));
}

SurfaceMap load_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open map file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return map_from_json_text(buf.str());
}

void save_map_file(const SurfaceMap& map, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write map file '" + path + "'");
  out << map_to_json_text(map);
}

}  // namespace sysfill
