#pragma once

#include <string>
#include <vector>

#include "sysfill/assembly.hpp"

namespace sysfill {

// What the geodesic enumerator needs from a glued complex: tiles sharing one
// model polygon, wall transitions (absent on free boundary walls), and the
// constructed curve classes used to tag what it finds.
class TileComplex {
 public:
  virtual ~TileComplex() = default;
  virtual const PolygonEmbedding& shape() const = 0;
  virtual int tile_count() const = 0;
  // nullptr when the wall is a free boundary
  virtual const Transition* transition(int tile, int model_wall) const = 0;
  virtual const std::vector<CurveClass>& blue_curves() const = 0;
  virtual const std::vector<CurveClass>& red_curves() const = 0;
  // extra slack the pruning radius must absorb (wall slides from twisting)
  virtual double slide_pad() const = 0;
  // map vertex a tile projects to, for shadows; tiles of one block all
  // project to the same place
  virtual int map_vertex(int tile) const = 0;
  virtual const SurfaceMap* map() const = 0;  // nullptr for a bare block
};

// The closed surface, as assembled by HolonomyRep.
class SurfaceComplex final : public TileComplex {
 public:
  explicit SurfaceComplex(const HolonomyRep& rep);

  const HolonomyRep& rep() const { return *rep_; }
  const CurveSystem& curves() const { return curves_; }

  const PolygonEmbedding& shape() const override { return rep_->tile_shape(); }
  int tile_count() const override { return rep_->tile_count(); }
  const Transition* transition(int tile, int model_wall) const override {
    return &rep_->transition(tile, model_wall);
  }
  const std::vector<CurveClass>& blue_curves() const override { return curves_.blues(); }
  const std::vector<CurveClass>& red_curves() const override { return curves_.reds(); }
  double slide_pad() const override;
  int map_vertex(int tile) const override { return HolonomyRep::vertex_of_tile(tile); }
  const SurfaceMap* map() const override { return &rep_->map(); }

 private:
  const HolonomyRep* rep_;
  CurveSystem curves_;
};

// One block: the double of the polygon across its red sides.  Two tiles,
// mirror transitions only; the blue walls are free boundary.  Its shortest
// closed geodesics are the q doubled blue sides of length 2t.
class BlockComplex final : public TileComplex {
 public:
  BlockComplex(int q, double t);

  const PolygonEmbedding& shape() const override { return shape_; }
  int tile_count() const override { return 2; }
  const Transition* transition(int tile, int model_wall) const override;
  const std::vector<CurveClass>& blue_curves() const override { return boundary_; }
  const std::vector<CurveClass>& red_curves() const override { return none_; }
  double slide_pad() const override { return 0.0; }
  int map_vertex(int) const override { return 0; }
  const SurfaceMap* map() const override { return nullptr; }

 private:
  PolygonEmbedding shape_;
  std::vector<std::vector<Transition>> transitions_;  // [tile][model wall]
  std::vector<CurveClass> boundary_;
  std::vector<CurveClass> none_;
};

enum class CurveTag { blue, red, other };

// One conjugacy class of closed geodesics (free homotopy class, unoriented).
struct GeodesicClass {
  double length = 0;
  double trace = 0;  // |trace| of a unit-determinant representative
  CurveTag tag = CurveTag::other;
  // canonical cyclic wall-crossing sequence (global wall ids), cyclically
  // reduced and minimized over rotation and reversal
  std::vector<int> crossing_word;
  // the vertex-level projection of the word after backtrack reduction:
  // edge ids of the surviving walk in the map; empty means contractible
  std::vector<int> shadow_edges;
  bool shadow_contractible = false;
  Mat2 holonomy;      // representative in the chart of base_tile
  int base_tile = 0;

  bool is_blue() const { return tag == CurveTag::blue; }
  bool is_red() const { return tag == CurveTag::red; }
};

struct EnumerationOptions {
  int workers = 1;
  long long lift_ceiling = 2000000;  // per base tile
  bool allow_partial = false;        // return partials instead of throwing
};

struct EnumerationResult {
  std::vector<GeodesicClass> classes;
  bool complete = true;
  double lmax = 0;
  double prune_radius = 0;
  long long lifts_explored = 0;
};

// All closed geodesics of length <= lmax, deduplicated across orientation
// and conjugacy.  Completeness comes from displacement pruning: an element
// of translation length <= lmax whose axis meets some tile displaces that
// tile's center by at most lmax + 2R.
EnumerationResult enumerate_closed_geodesics(const TileComplex& complex, double lmax,
                                             EnumerationOptions options = {});
EnumerationResult enumerate_closed_geodesics(const HolonomyRep& rep, double lmax,
                                             EnumerationOptions options = {});

struct SystoleReport {
  double systole_length = 0;
  std::vector<GeodesicClass> systole_classes;
  double next_length = 0;
  double margin = 0;
  double lmax_used = 0;
  int blue_multiplicity = 0;
  int red_multiplicity = 0;
};

// Shortest length, its classes, and the next distinct length, growing the
// search bound until something above the minimum is seen.
SystoleReport systole_report(const HolonomyRep& rep, EnumerationOptions options = {});

struct PropertyReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Cross-checks on an enumeration: length/trace consistency, reduced words,
// contractible-shadow classes no shorter than 2t (equality only for blue
// tags), and non-blue classes with essential shadow no shorter than p s(t)
// (equality only for red tags).
PropertyReport check_enumeration_properties(const TileComplex& complex,
                                            const EnumerationResult& result);

struct FillingReport {
  bool filling = false;
  long long vertices = 0;  // surviving crossings
  long long edges = 0;
  long long faces = 0;     // traced complementary boundary cycles
  long long euler = 0;
  long long expected_euler = 0;
  bool isolated_curve = false;  // a surviving curve crosses nothing
};

// Combinatorial filling check: trace the complement of the curve system and
// test V' - E' + F' = 2 - 2g, which holds iff every complementary piece is a
// disk.  Curves listed in removed_* are dropped before the check.
FillingReport verify_filling(const CurveSystem& curves, long long genus,
                             const std::vector<int>& removed_blue = {},
                             const std::vector<int>& removed_red = {});

struct BlockLemmaReport {
  double t = 0;
  double s = 0;
  double min_boundary_distance = 0;   // over carriers of distinct blue sides
  double next_boundary_distance = 0;  // smallest value above the minimum band
  double min_self_arc = 0;            // via reflections across red sides
  bool pass = false;
};

// Distance checks in the block: distinct boundary components are s(t) apart
// (realized across single red sides), and every essential boundary-to-self
// arc is strictly longer than t.
BlockLemmaReport verify_block_lemma(int q, double t);

}  // namespace sysfill
