#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "sysfill/errors.hpp"
#include "sysfill/geodesics.hpp"

namespace sysfill {

// Slots at a crossing, counter-clockwise: 0 = red arc toward the previous
// crossing, 1 = blue back-layer arc, 2 = red arc toward the next crossing,
// 3 = blue front-layer arc.  Strands of one curve occupy opposite slots and
// the two curves alternate, which is all the face tracing depends on.
FillingReport verify_filling(const CurveSystem& curves, long long genus,
                             const std::vector<int>& removed_blue,
                             const std::vector<int>& removed_red) {
  const SurfaceMap& map = curves.map();
  std::vector<char> blue_on(curves.blue_count(), 1);
  std::vector<char> red_on(curves.red_count(), 1);
  for (int e : removed_blue) {
    if (e < 0 || e >= curves.blue_count()) throw DomainError("removed blue curve out of range");
    blue_on[e] = 0;
  }
  for (int f : removed_red) {
    if (f < 0 || f >= curves.red_count()) throw DomainError("removed red curve out of range");
    red_on[f] = 0;
  }
  const int n = map.dart_count();
  auto alive = [&](int x) { return blue_on[map.edge_of(x)] && red_on[map.face_of(x)]; };

  FillingReport rep;
  rep.expected_euler = 2 - 2 * genus;

  std::vector<int> mate(4 * static_cast<std::size_t>(n), -1);
  auto link = [&mate](int h1, int h2) {
    if (mate[h1] != -1 || mate[h2] != -1) throw StructuralError("arc slot paired twice");
    mate[h1] = h2;
    mate[h2] = h1;
  };

  bool isolated = false;
  for (int e = 0; e < curves.blue_count(); ++e) {
    if (!blue_on[e]) continue;
    std::vector<std::pair<int, int>> ps;  // (crossing, 0 front-first dart / 1 opposite)
    const std::vector<int>& xs = curves.blue_crossings(e);
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (alive(xs[i])) ps.push_back({xs[i], static_cast<int>(i)});
    if (ps.empty()) {
      isolated = true;
      continue;
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto [x, side] = ps[i];
      auto [y, side2] = ps[(i + 1) % ps.size()];
      int out = side == 0 ? 3 : 1;
      int in = side2 == 0 ? 1 : 3;
      link(4 * x + out, 4 * y + in);
    }
  }
  for (int f = 0; f < curves.red_count(); ++f) {
    if (!red_on[f]) continue;
    std::vector<int> ps;
    for (int x : curves.red_crossings(f))
      if (alive(x)) ps.push_back(x);
    if (ps.empty()) {
      isolated = true;
      continue;
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
      int x = ps[i];
      int y = ps[(i + 1) % ps.size()];
      link(4 * x + 2, 4 * y + 0);
    }
  }
  rep.isolated_curve = isolated;

  long long v = 0;
  for (int x = 0; x < n; ++x) {
    if (alive(x)) {
      ++v;
      for (int s = 0; s < 4; ++s)
        if (mate[4 * x + s] == -1) throw StructuralError("open arc slot at a live crossing");
    } else {
      for (int s = 0; s < 4; ++s)
        if (mate[4 * x + s] != -1) throw StructuralError("arc attached to a removed crossing");
    }
  }
  rep.vertices = v;
  rep.edges = 2 * v;

  std::vector<char> seen(mate.size(), 0);
  long long faces = 0;
  for (std::size_t h = 0; h < mate.size(); ++h) {
    if (seen[h] || mate[h] == -1) continue;
    ++faces;
    std::size_t cur = h;
    while (!seen[cur]) {
      seen[cur] = 1;
      int m = mate[cur];
      cur = 4 * static_cast<std::size_t>(m / 4) + static_cast<std::size_t>((m % 4 + 1) % 4);
    }
  }
  rep.faces = faces;
  rep.euler = rep.vertices - rep.edges + rep.faces;
  rep.filling = !isolated && rep.vertices > 0 && rep.euler == rep.expected_euler;
  return rep;
}

// The blue-blue distance across one red side is the red side itself (the
// common perpendicular), so the minimum over distinct blue carriers is s(t).
// Boundary-to-self arcs unfold, by reflecting across a red carrier, into
// distances from a blue carrier to a reflected blue carrier.
BlockLemmaReport verify_block_lemma(int q, double t) {
  PolygonEmbedding poly = embed_polygon(q, t);
  const int sides = 2 * q;
  BlockLemmaReport rep;
  rep.t = t;
  rep.s = poly.spec.s;

  const double inf = std::numeric_limits<double>::infinity();
  double min_all = inf;
  double min_far = inf;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      double d = side_distance(poly, 2 * i, 2 * j);
      min_all = std::min(min_all, d);
      bool consecutive = (j == i + 1) || (i == 0 && j == q - 1);
      if (!consecutive) min_far = std::min(min_far, d);
    }
  }
  rep.min_boundary_distance = min_all;
  rep.next_boundary_distance = min_far;

  double min_self = inf;
  for (int i = 0; i < q; ++i) {
    const int b = 2 * i;
    for (int j = 0; j < q; ++j) {
      const int m = 2 * j + 1;
      int gap = (m - b + sides) % sides;
      if (gap == 1 || gap == sides - 1) continue;  // shares a corner with the side
      Sym2 image = reflect_geodesic(poly.side_geodesics[m], poly.side_geodesics[b]);
      if (geodesics_cross(image, poly.side_geodesics[b])) {
        min_self = 0;
        continue;
      }
      min_self = std::min(min_self, geodesic_distance(image, poly.side_geodesics[b]));
    }
  }
  rep.min_self_arc = min_self;

  bool boundary_ok = std::fabs(rep.min_boundary_distance - rep.s) <= 1e-10;
  bool far_ok = !(rep.next_boundary_distance <= rep.s + 1e-9);
  rep.pass = boundary_ok && far_ok && rep.min_self_arc > rep.t;
  return rep;
}

}  // namespace sysfill
