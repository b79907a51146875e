#include "hd/measures.hpp"

#include <set>
#include <stdexcept>

namespace hd {

Quarter point_measure_at(const Domain& D, int vertex) {
  const Vertex& v = D.dg->vertices[vertex];
  long long s = 0;
  for (int q = 0; q < 4; ++q) s += D.coeff[v.quadrant_region[q]];
  return Quarter::from_quarters(s);
}

Quarter point_measure(const Domain& D, const Generator& g) {
  Quarter total;
  for (int v : g.vertices) total += point_measure_at(D, v);
  return total;
}

Quarter euler_measure(const Domain& D) {
  const HeegaardDiagram& dg = *D.dg;
  long long quarters = 0;
  for (size_t ri = 0; ri < dg.regions.size(); ++ri) {
    const Region& r = dg.regions[ri];
    quarters += (long long)D.coeff[ri] * (4LL * r.chi - (long long)r.corners.size());
  }
  return Quarter::from_quarters(quarters);
}

Quarter euler_measure(const Domain& D, std::span<const int> families) {
  const HeegaardDiagram& dg = *D.dg;
  std::set<int> kept(families.begin(), families.end());
  if ((int)kept.size() == dg.family_count) return euler_measure(D);

  for (int f = 1; f <= dg.family_count; ++f)
    if (!kept.count(f) && !boundary_on_family(D, f).is_zero())
      throw std::invalid_argument("euler_measure on a family subset needs a vanishing boundary on family " +
                                  std::to_string(f));

  // chi-weighted cell count of the sub-diagram regions: full regions,
  // plus erased arcs (each merges two region sides), plus vertices whose
  // both curves are erased, minus quarter-corners at the kept vertices.
  long long quarters = 0;
  for (size_t ri = 0; ri < dg.regions.size(); ++ri)
    quarters += 4LL * D.coeff[ri] * dg.regions[ri].chi;
  for (const Arc& a : dg.arcs) {
    if (kept.count(dg.curves[a.curve].family)) continue;
    // both sides carry the same coefficient (vanishing boundary)
    quarters -= 4LL * D.coeff[a.left_region];
  }
  for (const Vertex& v : dg.vertices) {
    bool first_kept = kept.count(v.fam_first) != 0;
    bool second_kept = kept.count(v.fam_second) != 0;
    if (!first_kept && !second_kept) {
      quarters += 4LL * D.coeff[v.quadrant_region[0]];
    } else if (first_kept && second_kept) {
      for (int q = 0; q < 4; ++q) quarters -= D.coeff[v.quadrant_region[q]];
    }
    // exactly one family kept: the surviving curve runs straight through,
    // no corner and no cell correction
  }
  return Quarter::from_quarters(quarters);
}

namespace {

// Flux of the chain through vertex v along the reference direction of its
// curve there (the outward direction of the reference slot). Incoming and
// outgoing germ multiplicities add after being measured along that
// direction.
long long flux_along(const CurveOneChain& c, const HeegaardDiagram& dg, int vertex, int ref_slot) {
  const Vertex& v = dg.vertices[vertex];
  long long t = 0;
  for (int off : {0, 2}) {
    int slot = (ref_slot + off) % 4;
    const ArcEnd& e = v.slots[slot];
    long long m = c.mult[e.arc];
    if (m == 0) continue;
    // arc flow at this germ equals the reference direction exactly when
    // (tail end at the reference slot) or (head end at the opposite slot)
    bool along_ref = (off == 0) ? !e.is_head : e.is_head;
    t += along_ref ? m : -m;
  }
  return t;
}

}  // namespace

Quarter pair_one_chains(const CurveOneChain& a, const CurveOneChain& b) {
  if (a.dg != b.dg) throw std::invalid_argument("chains live on different diagrams");
  const HeegaardDiagram& dg = *a.dg;
  if (a.family == b.family) return Quarter{};

  long long quarters = 0;
  for (size_t vi = 0; vi < dg.vertices.size(); ++vi) {
    const Vertex& v = dg.vertices[vi];
    if (!dg.vertex_joins((int)vi, a.family, b.family)) continue;
    int slot_a = (v.fam_first == a.family) ? 0 : 1;
    int slot_b = (v.fam_first == b.family) ? 0 : 1;
    long long ta = flux_along(a, dg, (int)vi, slot_a);
    if (ta == 0) continue;
    long long tb = flux_along(b, dg, (int)vi, slot_b);
    if (tb == 0) continue;
    // +1 when the frame (dir_a, dir_b) is counterclockwise
    int eps = ((slot_b - slot_a + 4) % 4 == 1) ? 1 : -1;
    quarters += eps * ta * tb;
  }
  return Quarter::from_quarters(quarters);
}

}  // namespace hd
