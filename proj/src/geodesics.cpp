#include "sysfill/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sysfill/errors.hpp"

namespace sysfill {
namespace {

constexpr double kWallSlack = 1e-9;  // grazing tolerance in wall clipping
constexpr double kLengthTol = 1e-8;  // lengths closer than this are one value
constexpr double kViewTol = 1e-6;    // matching tolerance for local views
constexpr double kBig = 1e300;

const Sym2 kCenter = point(cplx(0.0, 1.0));

struct Lift {
  int tile = 0;
  Mat2 m;  // tile chart -> base chart
};

struct LiftKey {
  int tile = 0;
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  bool operator==(const LiftKey&) const = default;
};

bool operator<(const LiftKey& x, const LiftKey& y) {
  if (x.tile != y.tile) return x.tile < y.tile;
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.c != y.c) return x.c < y.c;
  return x.d < y.d;
}

struct LiftKeyHash {
  std::size_t operator()(const LiftKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(k.tile));
    mix(static_cast<std::uint64_t>(k.a));
    mix(static_cast<std::uint64_t>(k.b));
    mix(static_cast<std::uint64_t>(k.c));
    mix(static_cast<std::uint64_t>(k.d));
    return static_cast<std::size_t>(h);
  }
};

std::int64_t quantize(double x) { return std::llround(x * 1e7); }

LiftKey lift_key(int tile, const Mat2& m) {
  Mat2 c = m.sign_canonical();
  return {tile, quantize(c.a), quantize(c.b), quantize(c.c), quantize(c.d)};
}

// Point on the axis at arclength u from the foot point:
// X(u) = cosh(u) x0 + sinh(u) w.
struct AxisFrame {
  Sym2 axis;
  Sym2 x0;
  Sym2 w;
};

AxisFrame make_frame(const Sym2& axis) {
  AxisFrame f;
  f.axis = axis;
  f.x0 = foot_of_perpendicular(kCenter, axis);
  Sym2 w = cross(axis, f.x0);
  double n = inner(w, w);
  if (!(n < 0)) throw NumericError("degenerate axis frame");
  f.w = (1.0 / std::sqrt(-n)) * w;
  return f;
}

struct Interval {
  double lo = -kBig, hi = kBig;
  bool empty() const { return !(lo <= hi); }
};

// Solution set of a cosh(u) + b sinh(u) >= -slack.
Interval halfspace(double a, double b, double slack) {
  double aa = std::fabs(a), bb = std::fabs(b);
  if (aa <= slack && bb <= slack) return {};  // the axis runs along the wall
  if (aa > bb) {
    if (a > 0) return {};
    double c = std::sqrt(a * a - b * b);
    if (c > slack) return {1.0, -1.0};  // strictly outside
    double u0 = std::atanh(-b / a);
    double w = std::acosh(slack / c);
    return {u0 - w, u0 + w};
  }
  if (bb > aa) {
    double d = (b > 0 ? 1.0 : -1.0) * std::sqrt(b * b - a * a);
    double psi = std::asinh(a / d);
    double ur = std::asinh(-slack / d) - psi;
    if (b > 0) return {ur, kBig};
    return {-kBig, ur};
  }
  // |a| = |b| exactly: one exponential branch
  if (a > 0) return {};
  double edge = std::log(std::fabs(a) / slack);
  if (b > 0) return {edge, kBig};
  return {-kBig, -edge};
}

// Geodesic in model coordinates with a noise-stable overall sign.
Sym2 canonical_view(const Sym2& g) {
  Sym2 v = normalize_geodesic(g);
  double pick = std::fabs(v.c) > 1e-3 ? v.c : v.b;
  return pick < 0 ? -v : v;
}

struct ViewEntry {
  int tile = 0;
  double a = 0, b = 0, c = 0;
};

bool entry_match(const ViewEntry& x, const ViewEntry& y) {
  return x.tile == y.tile && std::fabs(x.a - y.a) <= kViewTol &&
         std::fabs(x.b - y.b) <= kViewTol && std::fabs(x.c - y.c) <= kViewTol;
}

// Tolerance multiset equality; entries of one view set are far apart, so a
// greedy match is unambiguous.
bool views_match(const std::vector<ViewEntry>& x, const std::vector<ViewEntry>& y) {
  if (x.size() != y.size()) return false;
  std::vector<char> used(y.size(), 0);
  for (const ViewEntry& e : x) {
    bool ok = false;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j] || !entry_match(e, y[j])) continue;
      used[j] = 1;
      ok = true;
      break;
    }
    if (!ok) return false;
  }
  return true;
}

// Local appearance of the geodesic: for every tile lift whose polygon meets
// the fundamental segment [X(0), X(period)], the axis pulled back to model
// coordinates.  The set is intrinsic to the (unoriented) geodesic, so it
// identifies one class across bases and conjugates.
std::vector<ViewEntry> local_views(const TileComplex& cx, const std::vector<Lift>& lifts,
                                   const AxisFrame& f, double period) {
  const PolygonEmbedding& shape = cx.shape();
  const int walls = shape.sides();
  const double sinh_hit = std::sinh(shape.circumradius) + 1e-6;
  std::vector<ViewEntry> views;
  for (const Lift& lift : lifts) {
    if (std::fabs(inner(transform(lift.m, kCenter), f.axis)) > sinh_hit) continue;
    Interval itv{-kWallSlack, period + kWallSlack};
    for (int j = 0; j < walls && !itv.empty(); ++j) {
      Sym2 g = transform(lift.m, shape.side_geodesics[j]);
      Interval h = halfspace(inner(f.x0, g), inner(f.w, g), kWallSlack);
      itv.lo = std::max(itv.lo, h.lo);
      itv.hi = std::min(itv.hi, h.hi);
    }
    if (itv.empty()) continue;
    Sym2 v = canonical_view(transform(lift.m.inverse(), f.axis));
    ViewEntry e{lift.tile, v.a, v.b, v.c};
    bool dup = false;
    for (const ViewEntry& old : views) {
      if (entry_match(e, old)) {
        dup = true;
        break;
      }
    }
    if (!dup) views.push_back(e);
  }
  return views;
}

struct Candidate {
  int base = 0;
  int index = 0;
  Mat2 h;  // unit determinant
  double length = 0;
  double trace_abs = 0;
  std::vector<ViewEntry> views;
  std::vector<int> path_word;   // global wall ids along the discovery path
  std::vector<int> path_tiles;  // one longer than path_word
};

struct BaseResult {
  bool complete = true;
  long long explored = 0;
  std::vector<Candidate> candidates;
  std::vector<Lift> lifts;
};

// Breadth-first flood of tile lifts around one base tile, pruned by center
// displacement, followed by candidate extraction: hyperbolic lifts of the
// base whose translation length fits the bound and whose axis meets the
// base polygon's circumdisk (classes elsewhere are found from their own
// tiles).  One orientation of each element is kept.
BaseResult search_base(const TileComplex& cx, int base, double lmax, double prune,
                       long long ceiling) {
  const PolygonEmbedding& shape = cx.shape();
  const int walls = shape.sides();
  const double cosh_prune = std::cosh(prune);
  const double sinh_near = std::sinh(shape.circumradius + 1e-6);

  BaseResult out;
  std::vector<int> parent{-1};
  std::vector<int> via{-1};
  std::unordered_set<LiftKey, LiftKeyHash> seen;
  out.lifts.push_back({base, Mat2{}});
  seen.insert(lift_key(base, Mat2{}));
  for (std::size_t head = 0; head < out.lifts.size() && out.complete; ++head) {
    const Lift cur = out.lifts[head];
    for (int w = 0; w < walls; ++w) {
      const Transition* tr = cx.transition(cur.tile, w);
      if (tr == nullptr) continue;
      Mat2 nm = (cur.m * tr->matrix).unit_det();
      if (inner(transform(nm, kCenter), kCenter) > cosh_prune) continue;
      if (!seen.insert(lift_key(tr->target_tile, nm)).second) continue;
      if (static_cast<long long>(out.lifts.size()) >= ceiling) {
        out.complete = false;
        break;
      }
      out.lifts.push_back({tr->target_tile, nm});
      parent.push_back(static_cast<int>(head));
      via.push_back(tr->global_wall);
    }
  }
  out.explored = static_cast<long long>(out.lifts.size());

  int count = 0;
  for (std::size_t i = 1; i < out.lifts.size(); ++i) {
    if (out.lifts[i].tile != base) continue;
    Isometry iso = classify(out.lifts[i].m);
    if (iso.cls != IsomClass::hyperbolic) continue;
    if (iso.translation_length > lmax + 1e-12) continue;
    Sym2 ax = axis_of(iso.m);
    if (std::fabs(inner(kCenter, ax)) > sinh_near) continue;
    LiftKey kh = lift_key(base, iso.m);
    LiftKey ki = lift_key(base, iso.m.inverse());
    if (ki < kh) continue;  // the inverse lift carries this class
    Candidate cand;
    cand.base = base;
    cand.index = count++;
    cand.h = iso.m;
    cand.length = iso.translation_length;
    cand.trace_abs = std::fabs(iso.m.trace());
    cand.views = local_views(cx, out.lifts, make_frame(ax), iso.translation_length);
    for (int at = static_cast<int>(i); parent[at] != -1; at = parent[at]) {
      cand.path_word.push_back(via[at]);
      cand.path_tiles.push_back(out.lifts[at].tile);
    }
    cand.path_tiles.push_back(base);
    std::reverse(cand.path_word.begin(), cand.path_word.end());
    std::reverse(cand.path_tiles.begin(), cand.path_tiles.end());
    out.candidates.push_back(std::move(cand));
  }
  return out;
}

void erase_cyclic_pair(std::vector<int>& w, std::size_t i) {
  std::size_t j = (i + 1) % w.size();
  if (j == i + 1) {
    w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
  } else {
    w.erase(w.begin() + static_cast<long>(i));
    w.erase(w.begin());
  }
}

// Remove immediate backtracks (the same wall crossed twice in a row),
// cyclically.
std::vector<int> cyclic_reduce(std::vector<int> w) {
  bool again = true;
  while (again && w.size() >= 2) {
    again = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == w[(i + 1) % w.size()]) {
        erase_cyclic_pair(w, i);
        again = true;
        break;
      }
    }
  }
  return w;
}

// Lexicographic minimum over rotations of the word and of its reversal.
std::vector<int> canonical_cyclic(std::vector<int> w) {
  w = cyclic_reduce(std::move(w));
  const std::size_t n = w.size();
  if (n <= 1) return w;
  std::vector<int> best = w;
  std::vector<int> cand = w;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < n; ++k) {
      std::rotate(cand.begin(), cand.begin() + 1, cand.end());
      if (cand < best) best = cand;
    }
    std::reverse(cand.begin(), cand.end());
  }
  return best;
}

std::vector<int> reduce_dart_walk(std::vector<int> darts, const SurfaceMap& map) {
  bool again = true;
  while (again && darts.size() >= 2) {
    again = false;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      std::size_t j = (i + 1) % darts.size();
      if (darts[j] == map.opposite(darts[i])) {
        erase_cyclic_pair(darts, i);
        again = true;
        break;
      }
    }
  }
  return darts;
}

Mat2 walk_holonomy(const TileComplex& cx, const CurveClass& curve) {
  Mat2 m;
  int tile = curve.base_tile;
  for (const WallStep& st : curve.steps) {
    if (st.tile != tile) throw AssemblyError("curve walk leaves its tile sequence");
    const Transition* tr = cx.transition(st.tile, st.model_wall);
    if (tr == nullptr) throw AssemblyError("curve walk crosses a free wall");
    m = (m * tr->matrix).unit_det();
    tile = tr->target_tile;
  }
  if (tile != curve.base_tile) throw AssemblyError("curve walk does not close");
  return m;
}

struct ConstructedRef {
  CurveTag tag = CurveTag::other;
  double length = 0;
  std::vector<ViewEntry> views;
  std::vector<int> word;
  std::vector<int> shadow_edges;
  bool contractible = false;
  bool found = false;
};

ConstructedRef make_ref(const TileComplex& cx, const std::vector<BaseResult>& results,
                        const CurveClass& curve, CurveTag tag) {
  ConstructedRef ref;
  ref.tag = tag;
  Mat2 h = walk_holonomy(cx, curve);
  Isometry iso = classify(h);
  if (iso.cls != IsomClass::hyperbolic)
    throw AssemblyError("constructed curve holonomy is not hyperbolic");
  ref.length = iso.translation_length;
  ref.views = local_views(cx, results[curve.base_tile].lifts, make_frame(axis_of(iso.m)),
                          ref.length);
  ref.word = canonical_cyclic(curve.wall_word);
  if (tag == CurveTag::red && cx.map() != nullptr) {
    const SurfaceMap& map = *cx.map();
    std::vector<int> darts = reduce_dart_walk(map.face_cycle(curve.id), map);
    ref.contractible = darts.empty();
    for (int d : darts) ref.shadow_edges.push_back(map.edge_of(d));
  } else {
    ref.contractible = true;
  }
  return ref;
}

void shadow_from_path(const TileComplex& cx, const Candidate& cand, GeodesicClass* out) {
  const SurfaceMap* map = cx.map();
  if (map == nullptr) {
    out->shadow_contractible = true;
    return;
  }
  const int blue_limit = 2 * map->edge_count();
  std::vector<int> first_dart(map->edge_count(), -1);
  for (int d = 0; d < map->dart_count(); ++d) {
    int e = map->edge_of(d);
    if (first_dart[e] == -1) first_dart[e] = d;
  }
  std::vector<int> walk;
  for (std::size_t i = 0; i < cand.path_word.size(); ++i) {
    int g = cand.path_word[i];
    if (g >= blue_limit) continue;  // mirror walls stay at one vertex
    int d = first_dart[g / 2];
    if (map->vertex_of(d) != cx.map_vertex(cand.path_tiles[i])) d = map->opposite(d);
    walk.push_back(d);
  }
  walk = reduce_dart_walk(std::move(walk), *map);
  out->shadow_contractible = walk.empty();
  for (int d : walk) out->shadow_edges.push_back(map->edge_of(d));
}

int tag_rank(CurveTag t) {
  switch (t) {
    case CurveTag::blue: return 0;
    case CurveTag::red: return 1;
    default: return 2;
  }
}

}  // namespace

SurfaceComplex::SurfaceComplex(const HolonomyRep& rep) : rep_(&rep), curves_(rep.map()) {}

double SurfaceComplex::slide_pad() const {
  double m = 0;
  for (double x : rep_->twists()) m = std::max(m, std::fabs(x));
  return m;
}

BlockComplex::BlockComplex(int q, double t) : shape_(embed_polygon(q, t)) {
  const int sides = 2 * q;
  transitions_.assign(2, std::vector<Transition>(sides));
  Sym2 axis0 = geodesic_circle(0.0, 1.0);
  for (int j = 0; j < q; ++j) {
    int m = 2 * j + 1;
    int mb = sides - m;
    Transition front;
    front.target_tile = 1;
    front.target_wall = mb;
    front.global_wall = j;
    front.matrix = compose_reflections(shape_.side_geodesics[m], axis0);
    transitions_[0][m] = front;
    Transition back;
    back.target_tile = 0;
    back.target_wall = m;
    back.global_wall = j;
    back.matrix = compose_reflections(shape_.side_geodesics[mb], axis0);
    transitions_[1][mb] = back;
  }
  for (int k = 0; k < q; ++k) {
    CurveClass c;
    c.color = SideColor::blue;
    c.id = k;
    c.base_tile = 0;
    c.steps = {{0, 2 * k + 1}, {1, (sides - (2 * k - 1)) % sides}};
    c.wall_word = {k, (k - 1 + q) % q};
    boundary_.push_back(std::move(c));
  }
}

const Transition* BlockComplex::transition(int tile, int model_wall) const {
  if (model_wall % 2 == 0) return nullptr;  // blue walls are free boundary
  return &transitions_.at(tile).at(model_wall);
}

EnumerationResult enumerate_closed_geodesics(const TileComplex& cx, double lmax,
                                             EnumerationOptions options) {
  if (!(lmax > 0)) throw DomainError("search bound must be positive");
  if (options.workers < 1) throw DomainError("worker count must be at least 1");
  if (options.lift_ceiling < 1) throw DomainError("lift ceiling must be at least 1");

  const double radius = cx.shape().circumradius;
  const double prune = lmax + 3.0 * radius + cx.slide_pad() + 0.1;
  const int bases = cx.tile_count();

  std::vector<BaseResult> results(bases);
  std::vector<std::exception_ptr> errors(bases);
  const int nw = std::min(options.workers, bases);
  auto run = [&](int w) {
    for (int b = w; b < bases; b += nw) {
      try {
        results[b] = search_base(cx, b, lmax, prune, options.lift_ceiling);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };
  if (nw == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (int w = 0; w < nw; ++w) pool.emplace_back(run, w);
    for (std::thread& th : pool) th.join();
  }
  for (int b = 0; b < bases; ++b)
    if (errors[b]) std::rethrow_exception(errors[b]);

  EnumerationResult out;
  out.lmax = lmax;
  out.prune_radius = prune;
  for (const BaseResult& r : results) {
    out.complete = out.complete && r.complete;
    out.lifts_explored += r.explored;
  }
  if (!out.complete && !options.allow_partial)
    throw ResourceError("geodesic search exceeded the lift ceiling; rerun with a larger "
                        "ceiling or accept partial results");

  std::vector<const Candidate*> all;
  for (const BaseResult& r : results)
    for (const Candidate& c : r.candidates) all.push_back(&c);
  const int n = static_cast<int>(all.size());

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::fabs(all[i]->length - all[j]->length) > kLengthTol) continue;
      int ri = find(i), rj = find(j);
      if (ri == rj) continue;
      if (views_match(all[i]->views, all[j]->views)) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }

  std::vector<ConstructedRef> refs;
  for (const CurveClass& c : cx.blue_curves()) refs.push_back(make_ref(cx, results, c, CurveTag::blue));
  for (const CurveClass& c : cx.red_curves()) refs.push_back(make_ref(cx, results, c, CurveTag::red));

  struct Keyed {
    GeodesicClass cls;
    int base;
    int index;
  };
  std::vector<Keyed> keyed;
  for (int i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    const Candidate& c = *all[i];
    Keyed k;
    k.base = c.base;
    k.index = c.index;
    GeodesicClass& g = k.cls;
    g.length = c.length;
    g.trace = c.trace_abs;
    g.holonomy = c.h;
    g.base_tile = c.base;
    bool tagged = false;
    for (ConstructedRef& ref : refs) {
      if (std::fabs(ref.length - c.length) > 1e-7) continue;
      if (!views_match(ref.views, c.views)) continue;
      g.tag = ref.tag;
      g.crossing_word = ref.word;
      g.shadow_edges = ref.shadow_edges;
      g.shadow_contractible = ref.contractible;
      ref.found = true;
      tagged = true;
      break;
    }
    if (!tagged) {
      g.tag = CurveTag::other;
      g.crossing_word = canonical_cyclic(c.path_word);
      shadow_from_path(cx, c, &g);
    }
    keyed.push_back(std::move(k));
  }

  if (out.complete) {
    for (const ConstructedRef& ref : refs) {
      if (ref.length <= lmax - 1e-9 && !ref.found)
        throw NumericError("a constructed curve class is missing from the enumeration");
    }
  }

  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.cls.length != y.cls.length) return x.cls.length < y.cls.length;
    int rx = tag_rank(x.cls.tag), ry = tag_rank(y.cls.tag);
    if (rx != ry) return rx < ry;
    if (x.cls.crossing_word != y.cls.crossing_word)
      return x.cls.crossing_word < y.cls.crossing_word;
    if (x.base != y.base) return x.base < y.base;
    return x.index < y.index;
  });
  out.classes.reserve(keyed.size());
  for (Keyed& k : keyed) out.classes.push_back(std::move(k.cls));
  return out;
}

EnumerationResult enumerate_closed_geodesics(const HolonomyRep& rep, double lmax,
                                             EnumerationOptions options) {
  SurfaceComplex cx(rep);
  return enumerate_closed_geodesics(cx, lmax, options);
}

SystoleReport systole_report(const HolonomyRep& rep, EnumerationOptions options) {
  SurfaceComplex cx(rep);
  double lmax = 2.0 * rep.t() + 0.05;
  for (int round = 0; round < 12; ++round) {
    EnumerationResult res = enumerate_closed_geodesics(cx, lmax, options);
    if (!res.classes.empty()) {
      const double l0 = res.classes.front().length;
      for (const GeodesicClass& c : res.classes) {
        if (c.length <= l0 + kLengthTol) continue;
        SystoleReport out;
        out.systole_length = l0;
        out.next_length = c.length;
        out.margin = c.length - l0;
        out.lmax_used = lmax;
        for (const GeodesicClass& k : res.classes) {
          if (k.length > l0 + kLengthTol) break;
          if (k.is_blue()) ++out.blue_multiplicity;
          if (k.is_red()) ++out.red_multiplicity;
          out.systole_classes.push_back(k);
        }
        return out;
      }
    }
    lmax += 0.25;
  }
  throw ResourceError("no second geodesic length found below the grown search bound");
}

PropertyReport check_enumeration_properties(const TileComplex& cx,
                                            const EnumerationResult& result) {
  PropertyReport rep;
  auto fail = [&rep](std::size_t i, const std::string& msg) {
    rep.pass = false;
    rep.violations.push_back("class " + std::to_string(i) + ": " + msg);
  };
  const double t = cx.shape().spec.t;
  const double s = cx.shape().spec.s;
  int p = 0;
  if (cx.map() != nullptr && cx.map()->face_count() > 0)
    p = static_cast<int>(cx.map()->face_cycle(0).size());

  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const GeodesicClass& c = result.classes[i];
    if (std::fabs(c.length - 2.0 * clamp_acosh(c.trace / 2.0)) > 1e-12)
      fail(i, "length and trace disagree");
    if (c.crossing_word.empty()) {
      fail(i, "empty crossing word");
    } else if (c.crossing_word.size() >= 2) {
      for (std::size_t j = 0; j < c.crossing_word.size(); ++j) {
        if (c.crossing_word[j] == c.crossing_word[(j + 1) % c.crossing_word.size()]) {
          fail(i, "crossing word is not cyclically reduced");
          break;
        }
      }
    }
    if (c.is_blue() && !c.shadow_contractible) fail(i, "blue tag with an essential shadow");
    if (c.is_red() && c.shadow_contractible) fail(i, "red tag with a contractible shadow");
    if (c.shadow_contractible) {
      if (c.is_blue()) {
        if (std::fabs(c.length - 2.0 * t) > 1e-8) fail(i, "blue class not at the doubled side length");
      } else if (c.length <= 2.0 * t + 1e-8) {
        fail(i, "contractible shadow at or below the doubled side length");
      }
    } else if (p > 0) {
      const double floor_len = p * s;
      if (c.length < floor_len - 1e-8) fail(i, "essential class below the face girdle length");
      else if (!c.is_red() && std::fabs(c.length - floor_len) <= 1e-8)
        fail(i, "non-red class exactly at the face girdle length");
    }
  }
  return rep;
}

}  // namespace sysfill
