#include "hd/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hd {

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.code << ": " << i.message << "\n";
  return os.str();
}

int HeegaardDiagram::vertex_index(const std::string& id) const {
  auto it = vertex_by_id.find(id);
  if (it == vertex_by_id.end()) throw std::invalid_argument("unknown vertex '" + id + "'");
  return it->second;
}

int HeegaardDiagram::arc_index(const std::string& id) const {
  auto it = arc_by_id.find(id);
  if (it == arc_by_id.end()) throw std::invalid_argument("unknown arc '" + id + "'");
  return it->second;
}

int HeegaardDiagram::region_index(const std::string& id) const {
  auto it = region_by_id.find(id);
  if (it == region_by_id.end()) throw std::invalid_argument("unknown region '" + id + "'");
  return it->second;
}

int HeegaardDiagram::curve_index(const std::string& id) const {
  auto it = curve_by_id.find(id);
  if (it == curve_by_id.end()) throw std::invalid_argument("unknown curve '" + id + "'");
  return it->second;
}

int HeegaardDiagram::curve_at_vertex(int v, int fam) const {
  const Vertex& vx = vertices[v];
  int slot = (vx.fam_first == fam) ? 0 : (vx.fam_second == fam) ? 1 : -1;
  if (slot < 0) return -1;
  const ArcEnd& e = vx.slots[slot];
  if (!e.valid()) return -1;
  return arcs[e.arc].curve;
}

std::vector<bool> HeegaardDiagram::basepoint_region_mask() const {
  std::vector<bool> mask(regions.size(), false);
  for (const auto& b : basepoints)
    if (b.region >= 0 && b.region < (int)regions.size()) mask[b.region] = true;
  return mask;
}

namespace {

struct Checker {
  HeegaardDiagram& dg;
  ValidationReport& rep;

  void issue(const std::string& code, const std::string& msg) {
    rep.issues.push_back({code, msg});
  }

  bool check_references() {
    bool ok = true;
    for (const auto& c : dg.curves) {
      if (c.family < 1 || c.family > dg.family_count) {
        issue("bad-family", "curve '" + c.id + "' has family " + std::to_string(c.family) +
                                " outside 1.." + std::to_string(dg.family_count));
        ok = false;
      }
    }
    for (const auto& a : dg.arcs) {
      if (a.curve < 0 || a.curve >= (int)dg.curves.size()) {
        issue("dangling-arc", "arc '" + a.id + "' references a missing curve");
        ok = false;
      }
      for (auto [v, s] : {std::pair{a.tail_vertex, a.tail_slot}, {a.head_vertex, a.head_slot}}) {
        if (v < 0 || v >= (int)dg.vertices.size()) {
          issue("dangling-arc", "arc '" + a.id + "' references a missing vertex");
          ok = false;
        }
        if (s < 0 || s > 3) {
          issue("dangling-arc", "arc '" + a.id + "' uses slot " + std::to_string(s));
          ok = false;
        }
      }
    }
    for (const auto& r : dg.regions) {
      for (const auto& cyc : r.cycles)
        for (const auto& st : cyc)
          if (st.arc < 0 || st.arc >= (int)dg.arcs.size()) {
            issue("dangling-arc", "region '" + r.id + "' cycle references a missing arc");
            ok = false;
          }
      for (auto [v, q] : r.corners)
        if (v < 0 || v >= (int)dg.vertices.size() || q < 0 || q > 3) {
          issue("bad-corner", "region '" + r.id + "' claims an invalid corner");
          ok = false;
        }
    }
    for (const auto& b : dg.basepoints)
      if (b.region < 0 || b.region >= (int)dg.regions.size()) {
        issue("bad-basepoint", "basepoint '" + b.label + "' is not attached to a region");
        ok = false;
      }
    if (dg.family_count >= 1) {
      std::vector<int> per_family(dg.family_count + 1, 0);
      for (const auto& c : dg.curves) per_family[c.family]++;
      for (int f = 1; f <= dg.family_count; ++f)
        if (per_family[f] != dg.curves_per_family) {
          issue("family-size", "family " + std::to_string(f) + " has " +
                                   std::to_string(per_family[f]) + " curves, expected " +
                                   std::to_string(dg.curves_per_family));
          ok = false;
        }
    }
    return ok;
  }

  bool fill_slots() {
    bool ok = true;
    for (auto& v : dg.vertices) v.slots = {ArcEnd{}, ArcEnd{}, ArcEnd{}, ArcEnd{}};
    for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) {
      const Arc& a = dg.arcs[ai];
      auto claim = [&](int v, int s, bool head) {
        ArcEnd& e = dg.vertices[v].slots[s];
        if (e.valid()) {
          issue("slot-conflict", "vertex '" + dg.vertices[v].id + "' slot " + std::to_string(s) +
                                     " claimed by arcs '" + dg.arcs[e.arc].id + "' and '" + a.id + "'");
          ok = false;
          return;
        }
        e = ArcEnd{ai, head};
      };
      claim(a.tail_vertex, a.tail_slot, false);
      claim(a.head_vertex, a.head_slot, true);
    }
    for (const auto& v : dg.vertices)
      for (int s = 0; s < 4; ++s)
        if (!v.slots[s].valid()) {
          issue("empty-slot", "vertex '" + v.id + "' slot " + std::to_string(s) + " has no arc end");
          ok = false;
        }
    return ok;
  }

  bool check_vertex_families() {
    bool ok = true;
    for (const auto& v : dg.vertices) {
      if (v.fam_first == v.fam_second || v.fam_first < 1 || v.fam_second < 1 ||
          v.fam_first > dg.family_count || v.fam_second > dg.family_count) {
        issue("same-family-intersection",
              "vertex '" + v.id + "' must join two distinct families, has (" +
                  std::to_string(v.fam_first) + "," + std::to_string(v.fam_second) + ")");
        ok = false;
        continue;
      }
      // slots 0,2 carry one curve of fam_first, slots 1,3 one curve of fam_second
      for (int base = 0; base < 2; ++base) {
        int fam = base == 0 ? v.fam_first : v.fam_second;
        const ArcEnd &e0 = v.slots[base], &e2 = v.slots[base + 2];
        if (!e0.valid() || !e2.valid()) { ok = false; continue; }
        int c0 = dg.arcs[e0.arc].curve, c2 = dg.arcs[e2.arc].curve;
        if (c0 != c2) {
          issue("vertex-curve-mismatch", "vertex '" + v.id + "' slots " + std::to_string(base) +
                                             "," + std::to_string(base + 2) +
                                             " lie on different curves");
          ok = false;
        } else if (dg.curves[c0].family != fam) {
          issue("same-family-intersection",
                "vertex '" + v.id + "' slot " + std::to_string(base) + " carries family " +
                    std::to_string(dg.curves[c0].family) + ", declared " + std::to_string(fam));
          ok = false;
        }
        // through-passage: one end incoming, one outgoing
        if (e0.is_head == e2.is_head) {
          issue("orientation-conflict", "curve '" + dg.curves[c0].id +
                                            "' does not pass coherently through vertex '" + v.id + "'");
          ok = false;
        }
      }
    }
    return ok;
  }

  bool check_curve_cycles() {
    bool ok = true;
    dg.curve_arc_cycle.assign(dg.curves.size(), {});
    std::vector<std::vector<int>> arcs_of_curve(dg.curves.size());
    for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) arcs_of_curve[dg.arcs[ai].curve].push_back(ai);
    for (int ci = 0; ci < (int)dg.curves.size(); ++ci) {
      if (arcs_of_curve[ci].empty()) {
        issue("empty-curve", "curve '" + dg.curves[ci].id + "' has no arcs");
        ok = false;
        continue;
      }
      int start = arcs_of_curve[ci].front();
      std::vector<int> cycle;
      int cur = start;
      bool closed = false;
      for (size_t steps = 0; steps <= arcs_of_curve[ci].size(); ++steps) {
        cycle.push_back(cur);
        const Arc& a = dg.arcs[cur];
        // continue through the head vertex: the opposite slot must hold the
        // tail of the next arc of the same curve
        int v = a.head_vertex;
        int opp = (a.head_slot + 2) % 4;
        const ArcEnd& nxt = dg.vertices[v].slots[opp];
        if (!nxt.valid() || nxt.is_head || dg.arcs[nxt.arc].curve != ci) {
          issue("broken-curve", "curve '" + dg.curves[ci].id + "' does not continue past vertex '" +
                                    dg.vertices[v].id + "'");
          ok = false;
          break;
        }
        cur = nxt.arc;
        if (cur == start) { closed = true; break; }
      }
      if (closed && cycle.size() != arcs_of_curve[ci].size()) {
        issue("broken-curve", "curve '" + dg.curves[ci].id + "' splits into several cycles");
        ok = false;
      }
      if (closed && cycle.size() == arcs_of_curve[ci].size()) dg.curve_arc_cycle[ci] = cycle;
    }
    return ok;
  }

  bool check_regions() {
    bool ok = true;
    // every (vertex, quadrant) claimed exactly once
    std::vector<std::array<int, 4>> claim(dg.vertices.size(), {-1, -1, -1, -1});
    // every directed arc side traversed exactly once
    std::vector<int> fwd_by(dg.arcs.size(), -1), bwd_by(dg.arcs.size(), -1);

    for (int ri = 0; ri < (int)dg.regions.size(); ++ri) {
      Region& r = dg.regions[ri];
      std::vector<std::pair<int, int>> derived_corners;
      for (const auto& cyc : r.cycles) {
        if (cyc.empty()) {
          issue("empty-cycle", "region '" + r.id + "' has an empty boundary cycle");
          ok = false;
          continue;
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
          const RegionCycleStep& st = cyc[i];
          int& side = st.forward ? fwd_by[st.arc] : bwd_by[st.arc];
          if (side >= 0) {
            issue("arc-side-conflict", "arc '" + dg.arcs[st.arc].id + "' side traversed twice (regions '" +
                                           dg.regions[side].id + "', '" + r.id + "')");
            ok = false;
          } else {
            side = ri;
          }
          const RegionCycleStep& nx = cyc[(i + 1) % cyc.size()];
          const Arc& a = dg.arcs[st.arc];
          int v = st.forward ? a.head_vertex : a.tail_vertex;
          int g_in = st.forward ? a.head_slot : a.tail_slot;
          int g_out = (g_in + 3) % 4;
          const Arc& b = dg.arcs[nx.arc];
          int bv = nx.forward ? b.tail_vertex : b.head_vertex;
          int bs = nx.forward ? b.tail_slot : b.head_slot;
          if (bv != v || bs != g_out) {
            issue("cycle-discontinuous",
                  "region '" + r.id + "': after arc '" + a.id + "' the boundary must continue from vertex '" +
                      dg.vertices[v].id + "' slot " + std::to_string(g_out) + ", got arc '" + b.id + "'");
            ok = false;
            continue;
          }
          derived_corners.push_back({v, g_out});
          int& cl = claim[v][g_out];
          if (cl >= 0) {
            issue("quadrant-conflict", "vertex '" + dg.vertices[v].id + "' quadrant " +
                                           std::to_string(g_out) + " claimed twice");
            ok = false;
          } else {
            cl = ri;
          }
        }
      }
      auto sorted = [](std::vector<std::pair<int, int>> v) { std::sort(v.begin(), v.end()); return v; };
      if (sorted(derived_corners) != sorted(r.corners)) {
        issue("corner-mismatch", "region '" + r.id + "' corner list does not match its boundary cycles");
        ok = false;
      }
      int b = (int)r.cycles.size();
      if (r.chi > 2 - b || ((r.chi + b) % 2 + 2) % 2 != 0) {
        issue("bad-chi", "region '" + r.id + "' declares chi=" + std::to_string(r.chi) + " with " +
                             std::to_string(b) + " boundary cycles");
        ok = false;
      }
      if (r.chi == 1 && b != 1) {
        issue("bad-chi", "disk region '" + r.id + "' must have exactly one boundary cycle");
        ok = false;
      }
    }
    for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) {
      if (fwd_by[ai] < 0 || bwd_by[ai] < 0) {
        issue("unclaimed-arc-side", "arc '" + dg.arcs[ai].id + "' is missing a region on one side");
        ok = false;
      }
    }
    for (int vi = 0; vi < (int)dg.vertices.size(); ++vi)
      for (int q = 0; q < 4; ++q)
        if (claim[vi][q] < 0) {
          issue("unclaimed-quadrant", "vertex '" + dg.vertices[vi].id + "' quadrant " +
                                          std::to_string(q) + " is claimed by no region");
          ok = false;
        }
    if (!ok) return false;

    // record derived sides and quadrants, then cross-check against slots:
    // a forward-traversing region lies on the arc's left
    for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) {
      dg.arcs[ai].left_region = fwd_by[ai];
      dg.arcs[ai].right_region = bwd_by[ai];
    }
    for (int vi = 0; vi < (int)dg.vertices.size(); ++vi) dg.vertices[vi].quadrant_region = claim[vi];
    for (const Arc& a : dg.arcs) {
      int lt = dg.vertices[a.tail_vertex].quadrant_region[a.tail_slot];
      int rt = dg.vertices[a.tail_vertex].quadrant_region[(a.tail_slot + 3) % 4];
      int lh = dg.vertices[a.head_vertex].quadrant_region[(a.head_slot + 3) % 4];
      int rh = dg.vertices[a.head_vertex].quadrant_region[a.head_slot];
      if (lt != a.left_region || lh != a.left_region || rt != a.right_region || rh != a.right_region) {
        issue("side-quadrant-mismatch",
              "arc '" + a.id + "': regions adjacent at its endpoints disagree with its boundary traversals");
        ok = false;
      }
    }
    return ok;
  }

  bool check_euler() {
    long long total = 0;
    for (const auto& r : dg.regions) total += r.chi;
    long long lhs = (long long)dg.vertices.size() - (long long)dg.arcs.size() + total;
    long long rhs = 2 - 2 * (long long)dg.genus;
    if (lhs != rhs) {
      issue("euler-mismatch", "V - E + sum(chi) = " + std::to_string(lhs) + ", expected " +
                                  std::to_string(rhs) + " for genus " + std::to_string(dg.genus));
      return false;
    }
    return true;
  }

  bool check_basepoints() {
    if (dg.curves_per_family < dg.genus) return true;  // condition not applicable
    if (dg.basepoints.empty()) return true;            // basepoint-free diagrams are allowed
    bool ok = true;
    int want = dg.curves_per_family - dg.genus + 1;
    if ((int)dg.basepoints.size() != want) {
      issue("basepoint-count", "expected " + std::to_string(want) + " basepoints, found " +
                                   std::to_string(dg.basepoints.size()));
      ok = false;
    }
    // components of the complement of each family: regions glued across
    // arcs of every other family
    for (int f = 1; f <= dg.family_count; ++f) {
      std::vector<int> parent(dg.regions.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
      for (const Arc& a : dg.arcs) {
        if (dg.curves[a.curve].family == f) continue;
        int u = find(a.left_region), v = find(a.right_region);
        if (u != v) parent[u] = v;
      }
      std::vector<int> roots;
      for (int r = 0; r < (int)dg.regions.size(); ++r)
        if (find(r) == r) roots.push_back(r);
      if ((int)roots.size() != want) {
        issue("family-complement", "family " + std::to_string(f) + " complement has " +
                                       std::to_string(roots.size()) + " components, expected " +
                                       std::to_string(want));
        ok = false;
        continue;
      }
      std::unordered_map<int, int> count;
      for (const auto& b : dg.basepoints) count[find(b.region)]++;
      for (int r : roots)
        if (count[r] != 1) {
          issue("basepoint-distribution",
                "family " + std::to_string(f) + ": a complement component contains " +
                    std::to_string(count[r]) + " basepoints (region '" + dg.regions[r].id + "')");
          ok = false;
        }
    }
    return ok;
  }
};

}  // namespace

ValidationReport validate(HeegaardDiagram& dg) {
  ValidationReport rep;
  Checker ck{dg, rep};
  dg.validated = false;
  if (dg.family_count < 1 || dg.curves_per_family < 1) {
    ck.issue("bad-header", "family and curve counts must be positive");
    return rep;
  }
  if (!ck.check_references()) return rep;
  bool ok = ck.fill_slots();
  ok = ck.check_vertex_families() && ok;
  if (!ok) return rep;
  ok = ck.check_curve_cycles() && ok;
  ok = ck.check_regions() && ok;
  ok = ck.check_euler() && ok;
  ok = ck.check_basepoints() && ok;
  dg.validated = ok;
  return rep;
}

std::optional<int> region_sides(const HeegaardDiagram& dg, int region) {
  const Region& r = dg.regions[region];
  if (r.chi != 1 || r.cycles.size() != 1) return std::nullopt;
  return (int)r.cycles.front().size();
}

std::array<int, 4> quadrant_regions(const HeegaardDiagram& dg, int vertex) {
  return dg.vertices[vertex].quadrant_region;
}

HeegaardDiagram flip_curve(const HeegaardDiagram& dg, int curve) {
  HeegaardDiagram out = dg;
  for (Arc& a : out.arcs) {
    if (a.curve != curve) continue;
    std::swap(a.tail_vertex, a.head_vertex);
    std::swap(a.tail_slot, a.head_slot);
  }
  // region cycle steps and corners are orientation-free except that
  // forward/backward swap on the flipped arcs
  for (Region& r : out.regions)
    for (auto& cyc : r.cycles)
      for (auto& st : cyc)
        if (out.arcs[st.arc].curve == curve) st.forward = !st.forward;
  ValidationReport rep = validate(out);
  if (!rep.ok()) throw std::logic_error("flip_curve produced an invalid diagram:\n" + rep.str());
  return out;
}

bool arc_stored_direction_is_canonical(const Arc& a) {
  return std::pair{a.tail_vertex, a.tail_slot} < std::pair{a.head_vertex, a.head_slot};
}

}  // namespace hd
