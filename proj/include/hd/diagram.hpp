#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hd {

/// One end of an arc: which arc, and whether it is the head end.
struct ArcEnd {
  int arc = -1;
  bool is_head = false;
  bool valid() const { return arc >= 0; }
  bool operator==(const ArcEnd&) const = default;
};

struct Curve {
  std::string id;
  int family = 0;  // 1..n
};

/// A transverse crossing of two curves from distinct families. The four
/// arc ends around it are listed in counterclockwise order; slots 0 and 2
/// carry the curve of fam_first, slots 1 and 3 the curve of fam_second.
/// Quadrant q lies counterclockwise between slots q and q+1 (mod 4).
struct Vertex {
  std::string id;
  int fam_first = 0;
  int fam_second = 0;
  std::array<ArcEnd, 4> slots{};          // filled from arc records
  std::array<int, 4> quadrant_region{-1, -1, -1, -1};  // derived
};

/// Directed segment of a curve between two vertex passages.
struct Arc {
  std::string id;
  int curve = -1;
  int tail_vertex = -1, tail_slot = -1;
  int head_vertex = -1, head_slot = -1;
  // derived: the region on each side when walking tail -> head on the
  // counterclockwise-oriented surface
  int left_region = -1, right_region = -1;
};

struct RegionCycleStep {
  int arc = -1;
  bool forward = true;  // traversed along the arc's stored direction
  bool operator==(const RegionCycleStep&) const = default;
};

/// Complement component of the curve system, with declared Euler
/// characteristic. Boundary cycles keep the region on the left; each
/// transition between consecutive arcs claims one vertex quadrant.
struct Region {
  std::string id;
  int chi = 1;
  std::vector<std::vector<RegionCycleStep>> cycles;
  std::vector<std::pair<int, int>> corners;  // (vertex, quadrant)
};

struct Basepoint {
  std::string label;
  int region = -1;
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

class HeegaardDiagram {
public:
  int genus = 0;
  int family_count = 0;      // n
  int curves_per_family = 0; // k

  std::vector<Curve> curves;
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<Region> regions;
  std::vector<Basepoint> basepoints;

  std::unordered_map<std::string, int> curve_by_id;
  std::unordered_map<std::string, int> vertex_by_id;
  std::unordered_map<std::string, int> arc_by_id;
  std::unordered_map<std::string, int> region_by_id;

  // derived by validate()
  std::vector<std::vector<int>> curve_arc_cycle;  // per curve, arcs in traversal order
  bool validated = false;

  int vertex_index(const std::string& id) const;
  int arc_index(const std::string& id) const;
  int region_index(const std::string& id) const;
  int curve_index(const std::string& id) const;

  /// Families of the two curves crossing at v, as an unordered pair test.
  bool vertex_joins(int v, int fam_a, int fam_b) const {
    const Vertex& vx = vertices[v];
    return (vx.fam_first == fam_a && vx.fam_second == fam_b) ||
           (vx.fam_first == fam_b && vx.fam_second == fam_a);
  }

  /// Curve of family `fam` passing through vertex v.
  int curve_at_vertex(int v, int fam) const;

  /// Regions containing at least one basepoint.
  std::vector<bool> basepoint_region_mask() const;
};

/// Checks every structural invariant and, on success, fills the derived
/// tables (slot occupancy, curve cycles, quadrant regions, arc sides).
/// The report lists one issue per violation, each naming the offending
/// element.
ValidationReport validate(HeegaardDiagram& dg);

/// Number of boundary arcs of a disk region (counted with multiplicity),
/// or nullopt for a non-disk region.
std::optional<int> region_sides(const HeegaardDiagram& dg, int region);

/// The region claiming each of the four quadrants, in counterclockwise
/// order. Requires a validated diagram.
std::array<int, 4> quadrant_regions(const HeegaardDiagram& dg, int vertex);

/// Copy of the diagram with one curve's stored orientation reversed
/// (every arc of that curve swaps tail and head). Revalidated.
HeegaardDiagram flip_curve(const HeegaardDiagram& dg, int curve);

/// Orientation-free canonical direction of an arc: true when the stored
/// direction runs from the lexicographically smaller (vertex, slot) end
/// to the larger. Used for orientation-independent reporting.
bool arc_stored_direction_is_canonical(const Arc& a);

}  // namespace hd
