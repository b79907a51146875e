#include "hd/nice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hd {

NiceReport is_nice(const HeegaardDiagram& dg) {
  std::vector<bool> has_bp = dg.basepoint_region_mask();
  for (int ri = 0; ri < (int)dg.regions.size(); ++ri) {
    if (has_bp[ri]) continue;
    auto sides = region_sides(dg, ri);
    if (!sides || *sides < 2 || *sides > 4) return NiceReport{false, ri};
  }
  return NiceReport{true, -1};
}

PositivityReport check_positivity_bound(const Domain& D, const GonConfig& cfg) {
  const HeegaardDiagram& dg = *D.dg;
  if (cfg.sides() != 3) throw std::invalid_argument("positivity bound needs a three-sided configuration");
  if (!D.is_positive()) throw std::invalid_argument("positivity bound needs a positive domain");
  for (int ri = 0; ri < (int)dg.regions.size(); ++ri) {
    if (D.coeff[ri] == 0) continue;
    auto sides = region_sides(dg, ri);
    if (!sides || *sides > 4)
      throw std::invalid_argument("domain is supported on region '" + dg.regions[ri].id +
                                  "' with more than four sides");
  }
  PositivityReport rep;
  rep.iota_value = iota(D, cfg);
  if (rep.iota_value < Quarter{})
    throw std::invalid_argument("positivity bound needs iota(D) >= 0, got " + rep.iota_value.str());
  rep.mu_value = mu(D, cfg);
  rep.bound_satisfied = rep.mu_value >= Quarter{};
  rep.equality_case = rep.mu_value == Quarter{};
  if (!rep.equality_case) return rep;

  // equality census
  bool ok = rep.iota_value == Quarter{};
  if (!ok) rep.detail += "iota nonzero in the equality case; ";
  long long k = cfg.k();
  if (!(euler_measure(D, cfg.families) == Quarter::from_quarters(k))) {
    ok = false;
    rep.detail += "e(D) != k/4; ";
  }
  int fa = cfg.families[0], fb = cfg.families[1];
  for (int ri = 0; ri < (int)dg.regions.size(); ++ri) {
    if (D.coeff[ri] == 0) continue;
    int m = *region_sides(dg, ri);
    if (m == 2) {
      ok = false;
      rep.detail += "two-sided region '" + dg.regions[ri].id + "' in the support; ";
    } else if (m == 3) {
      rep.three_sided_weight += D.coeff[ri];
      Domain unit(dg);
      unit.coeff[ri] = 1;
      if (s_count(unit, fa, fb) != 1) {
        ok = false;
        rep.detail += "three-sided region '" + dg.regions[ri].id + "' has s != +1; ";
      }
    }
  }
  if (rep.three_sided_weight != k) {
    ok = false;
    rep.detail += "three-sided weight " + std::to_string(rep.three_sided_weight) + " != k; ";
  }
  rep.census_ok = ok;
  return rep;
}

namespace {

struct Side {
  std::vector<std::pair<int, int>> arcs;  // (arc, +/-1) directed from its start corner to its end
};

// The two simple paths along a curve's cycle from vertex u to vertex w,
// one with the curve orientation (+1 arcs) and one against it (-1 arcs).
std::vector<Side> side_paths(const HeegaardDiagram& dg, int curve, int u, int w) {
  const std::vector<int>& cyc = dg.curve_arc_cycle[curve];
  int n = (int)cyc.size();
  auto tail_pos = [&](int v) {
    for (int i = 0; i < n; ++i)
      if (dg.arcs[cyc[i]].tail_vertex == v) return i;
    return -1;
  };
  std::vector<Side> out;
  int pu = tail_pos(u), pw = tail_pos(w);
  if (pu < 0 || pw < 0 || u == w) return out;
  Side fwd, bwd;
  for (int i = pu; ; ++i) {
    fwd.arcs.push_back({cyc[i % n], +1});
    if (dg.arcs[cyc[i % n]].head_vertex == w) break;
    if (i - pu >= n) return out;
  }
  for (int i = pw; ; ++i) {
    bwd.arcs.push_back({cyc[i % n], -1});
    if (dg.arcs[cyc[i % n]].head_vertex == u) break;
    if (i - pw >= n) return out;
  }
  out.push_back(std::move(fwd));
  out.push_back(std::move(bwd));
  return out;
}

struct Triple {
  int curve[3];   // curves of families cfg.families[0..2]
  int corner[3];  // corner[i] joins families (i, i+1): coordinates of gens[i]
};

// Curve triples induced by the generators; empty when the three matchings
// do not compose to the identity.
std::optional<std::vector<Triple>> induced_triples(const GonConfig& cfg) {
  const HeegaardDiagram& dg = *cfg.dg;
  int f0 = cfg.families[0], f1 = cfg.families[1], f2 = cfg.families[2];
  std::map<int, std::pair<int, int>> g0, g1, g2;  // curve of f_i -> (next curve, vertex)
  for (int v : cfg.gens[0].vertices) g0[dg.curve_at_vertex(v, f0)] = {dg.curve_at_vertex(v, f1), v};
  for (int v : cfg.gens[1].vertices) g1[dg.curve_at_vertex(v, f1)] = {dg.curve_at_vertex(v, f2), v};
  for (int v : cfg.gens[2].vertices) g2[dg.curve_at_vertex(v, f2)] = {dg.curve_at_vertex(v, f0), v};
  std::vector<Triple> out;
  for (auto& [c0, step0] : g0) {
    auto [c1, v01] = step0;
    auto [c2, v12] = g1.at(c1);
    auto [c0back, v20] = g2.at(c2);
    if (c0back != c0) return std::nullopt;
    Triple t;
    t.curve[0] = c0; t.curve[1] = c1; t.curve[2] = c2;
    t.corner[0] = v01; t.corner[1] = v12; t.corner[2] = v20;
    out.push_back(t);
  }
  return out;
}

// Fill the side of a closed boundary chain: regions forced in/out by the
// boundary arcs, equality propagated across the rest. Returns the {0,1}
// support or nullopt on contradiction.
std::optional<std::vector<char>> flood_left_side(const HeegaardDiagram& dg,
                                                 const std::map<int, int>& boundary) {
  int nr = (int)dg.regions.size();
  std::vector<char> state(nr, -1);  // -1 unknown, 0 out, 1 in
  std::vector<int> work;
  auto set_state = [&](int r, char s) {
    if (state[r] == -1) {
      state[r] = s;
      work.push_back(r);
      return true;
    }
    return state[r] == s;
  };
  for (auto [ai, m] : boundary) {
    const Arc& a = dg.arcs[ai];
    int in_side = m > 0 ? a.left_region : a.right_region;
    int out_side = m > 0 ? a.right_region : a.left_region;
    if (!set_state(in_side, 1) || !set_state(out_side, 0)) return std::nullopt;
  }
  while (!work.empty()) {
    int r = work.back();
    work.pop_back();
    for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) {
      if (boundary.count(ai)) continue;
      const Arc& a = dg.arcs[ai];
      int other;
      if (a.left_region == r) other = a.right_region;
      else if (a.right_region == r) other = a.left_region;
      else continue;
      if (!set_state(other, state[r])) return std::nullopt;
    }
  }
  for (auto& s : state)
    if (s == -1) s = 0;  // components untouched by the boundary stay out
  return state;
}

}  // namespace

bool is_embedded_triangle(const Domain& T, const GonConfig& cfg) {
  const HeegaardDiagram& dg = *T.dg;
  for (int c : T.coeff)
    if (c != 0 && c != 1) return false;
  if (T.is_zero()) return false;

  // boundary supported on one curve per family, corners at generator
  // coordinates of a single induced triple
  auto triples = induced_triples(cfg);
  if (!triples) return false;
  for (const Triple& t : *triples) {
    bool match = true;
    for (int i = 0; i < 3 && match; ++i) {
      CurveOneChain d = boundary_on_family(T, cfg.families[i]);
      PointSum pb = corner_boundary(d);
      PointSum want(dg.vertices.size());
      want.coeff[t.corner[i]] += 1;
      want.coeff[t.corner[(i + 2) % 3]] -= 1;
      if (!(pb == want)) { match = false; break; }
      for (int ai = 0; ai < (int)dg.arcs.size(); ++ai)
        if (d.mult[ai] != 0 && dg.arcs[ai].curve != t.curve[i]) { match = false; break; }
    }
    if (!match) continue;

    // simple boundary: every vertex meets 0 or 2 boundary germ ends
    std::vector<int> degree(dg.vertices.size(), 0);
    bool simple = true;
    for (int i = 0; i < 3; ++i) {
      CurveOneChain d = boundary_on_family(T, cfg.families[i]);
      for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) {
        if (d.mult[ai] == 0) continue;
        if (d.mult[ai] != 1 && d.mult[ai] != -1) { simple = false; break; }
        degree[dg.arcs[ai].tail_vertex]++;
        degree[dg.arcs[ai].head_vertex]++;
      }
    }
    if (!simple) continue;
    for (int d : degree)
      if (d != 0 && d != 2) { simple = false; break; }
    if (!simple) continue;

    // disk closure: chi = V - E + sum chi(R) over the closed support
    std::set<int> verts;
    std::set<int> edges;
    long long chi = 0;
    for (int ri = 0; ri < (int)dg.regions.size(); ++ri)
      if (T.coeff[ri] == 1) chi += dg.regions[ri].chi;
    for (int ai = 0; ai < (int)dg.arcs.size(); ++ai) {
      const Arc& a = dg.arcs[ai];
      if (T.coeff[a.left_region] == 1 || T.coeff[a.right_region] == 1) edges.insert(ai);
    }
    for (int vi = 0; vi < (int)dg.vertices.size(); ++vi)
      for (int q = 0; q < 4; ++q)
        if (T.coeff[dg.vertices[vi].quadrant_region[q]] == 1) { verts.insert(vi); break; }
    chi += (long long)verts.size() - (long long)edges.size();
    if (chi != 1) continue;
    return true;
  }
  return false;
}

namespace {

// Candidate embedded triangles for one induced triple, by walking the two
// possible sides between consecutive corners and filling the left side.
std::vector<Domain> candidate_triangles(const GonConfig& cfg, const Triple& t) {
  const HeegaardDiagram& dg = *cfg.dg;
  // side i lies on curve[i+1 mod 3]? No: side on curve of family f_i runs
  // from corner (i-1, i) to corner (i, i+1), i.e. corner[(i+2)%3] -> corner[i].
  std::vector<std::vector<Side>> options(3);
  for (int i = 0; i < 3; ++i) {
    options[i] = side_paths(dg, t.curve[i], t.corner[(i + 2) % 3], t.corner[i]);
    if (options[i].empty()) return {};
  }
  std::set<std::vector<int>> seen;
  std::vector<Domain> out;
  for (const Side& s0 : options[0])
    for (const Side& s1 : options[1])
      for (const Side& s2 : options[2]) {
        std::map<int, int> boundary;
        bool overlap = false;
        for (const Side* s : {&s0, &s1, &s2})
          for (auto [ai, m] : s->arcs) {
            if (boundary.count(ai)) overlap = true;
            boundary[ai] += m;
          }
        if (overlap) continue;  // sides live on distinct curves, so any repeat is degenerate
        auto support = flood_left_side(dg, boundary);
        if (!support) continue;
        Domain T(dg);
        for (int r = 0; r < (int)T.coeff.size(); ++r) T.coeff[r] = (*support)[r];
        if (!is_embedded_triangle(T, cfg)) continue;
        if (seen.insert(T.coeff).second) out.push_back(std::move(T));
      }
  return out;
}

bool decompose_rec(const Domain& remaining, const GonConfig& cfg,
                   const std::vector<std::vector<Domain>>& candidates, size_t idx,
                   std::vector<Domain>& picked) {
  if (idx == candidates.size()) return remaining.is_zero();
  for (const Domain& T : candidates[idx]) {
    bool fits = true;
    for (size_t r = 0; r < T.coeff.size(); ++r)
      if (T.coeff[r] > remaining.coeff[r]) { fits = false; break; }
    if (!fits) continue;
    picked.push_back(T);
    if (decompose_rec(remaining - T, cfg, candidates, idx + 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Domain>> triangle_decomposition(const Domain& D, const GonConfig& cfg) {
  if (cfg.sides() != 3) throw std::invalid_argument("triangle decomposition needs a three-sided configuration");
  if (!(iota(D, cfg) == Quarter{}))
    throw std::invalid_argument("triangle decomposition needs iota(D) = 0, got " + iota(D, cfg).str());
  auto triples = induced_triples(cfg);
  if (!triples) return std::nullopt;
  std::vector<std::vector<Domain>> candidates;
  for (const Triple& t : *triples) {
    candidates.push_back(candidate_triangles(cfg, t));
    if (candidates.back().empty()) return std::nullopt;
  }
  std::vector<Domain> picked;
  if (!decompose_rec(D, cfg, candidates, 0, picked)) return std::nullopt;
  return picked;
}

long long count_index_zero_triangles(const HeegaardDiagram& dg, const GonConfig& cfg, int max_coeff) {
  NiceReport nr = is_nice(dg);
  if (!nr.nice)
    throw std::invalid_argument("diagram is not nice: region '" + dg.regions[nr.witness_region].id +
                                "' is basepoint-free with more than four sides (or not a disk)");
  if (cfg.sides() != 3) throw std::invalid_argument("triangle counting needs a three-sided configuration");
  DomainSolution sol = solve_domains(dg, cfg);
  if (!sol.feasible()) return 0;

  EnumerateOptions opt;
  opt.max_coeff = max_coeff;
  opt.require_positive = false;
  std::vector<bool> mask = dg.basepoint_region_mask();
  for (int r = 0; r < (int)mask.size(); ++r)
    if (mask[r]) opt.forbidden_regions.push_back(r);

  long long count = 0;
  for (const Domain& D : enumerate_positive_domains(sol, opt)) {
    if (!(mu(D, cfg) == Quarter{})) continue;
    if (!(iota(D, cfg) == Quarter{})) continue;
    if (triangle_decomposition(D, cfg)) ++count;
  }
  return count;
}

}  // namespace hd
