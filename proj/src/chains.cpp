#include "hd/chains.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hd {

namespace {
void require_same_diagram(const Domain& a, const Domain& b) {
  if (a.dg != b.dg) throw std::invalid_argument("domains live on different diagrams");
}
}  // namespace

Domain Domain::operator+(const Domain& o) const {
  require_same_diagram(*this, o);
  Domain r = *this;
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
  return r;
}

Domain Domain::operator-(const Domain& o) const {
  require_same_diagram(*this, o);
  Domain r = *this;
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] -= o.coeff[i];
  return r;
}

Domain Domain::operator*(int n) const {
  Domain r = *this;
  for (auto& c : r.coeff) c *= n;
  return r;
}

bool Domain::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; });
}

bool Domain::is_positive() const {
  bool some = false;
  for (int c : coeff) {
    if (c < 0) return false;
    if (c > 0) some = true;
  }
  return some;
}

bool CurveOneChain::is_zero() const {
  return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 0; });
}

PointSum PointSum::operator+(const PointSum& o) const {
  PointSum r = *this;
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
  return r;
}

PointSum PointSum::operator-(const PointSum& o) const {
  PointSum r = *this;
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] -= o.coeff[i];
  return r;
}

bool PointSum::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; });
}

long long PointSum::total() const {
  long long t = 0;
  for (int c : coeff) t += c;
  return t;
}

Generator make_generator(const HeegaardDiagram& dg, int fam_a, int fam_b,
                         std::vector<int> vertex_indices) {
  if (fam_a == fam_b) throw std::invalid_argument("generator families must differ");
  if ((int)vertex_indices.size() != dg.curves_per_family)
    throw std::invalid_argument("generator needs one vertex per curve, got " +
                                std::to_string(vertex_indices.size()));
  std::set<int> used_a, used_b;
  for (int v : vertex_indices) {
    if (!dg.vertex_joins(v, fam_a, fam_b))
      throw std::invalid_argument("vertex '" + dg.vertices[v].id + "' does not join families " +
                                  std::to_string(fam_a) + "," + std::to_string(fam_b));
    int ca = dg.curve_at_vertex(v, fam_a);
    int cb = dg.curve_at_vertex(v, fam_b);
    if (!used_a.insert(ca).second || !used_b.insert(cb).second)
      throw std::invalid_argument("generator reuses a curve at vertex '" + dg.vertices[v].id + "'");
  }
  std::sort(vertex_indices.begin(), vertex_indices.end());
  return Generator{fam_a, fam_b, std::move(vertex_indices)};
}

GonConfig make_config(const HeegaardDiagram& dg, std::vector<int> families,
                      std::vector<Generator> gens) {
  if (families.size() < 2) throw std::invalid_argument("an n-gon needs at least 2 families");
  if (families.size() != gens.size())
    throw std::invalid_argument("need one generator per cyclic family pair");
  std::set<int> seen;
  for (int f : families) {
    if (f < 1 || f > dg.family_count) throw std::invalid_argument("bad family index");
    if (!seen.insert(f).second) throw std::invalid_argument("repeated family in configuration");
  }
  int m = (int)families.size();
  for (int i = 0; i < m; ++i) {
    int fa = families[i], fb = families[(i + 1) % m];
    if (!gens[i].joins(fa, fb))
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " joins families (" +
                                  std::to_string(gens[i].fam_a) + "," + std::to_string(gens[i].fam_b) +
                                  "), expected (" + std::to_string(fa) + "," + std::to_string(fb) + ")");
  }
  return GonConfig{&dg, std::move(families), std::move(gens)};
}

GonConfig full_config(const HeegaardDiagram& dg, std::vector<Generator> gens) {
  std::vector<int> fams(dg.family_count);
  for (int i = 0; i < dg.family_count; ++i) fams[i] = i + 1;
  return make_config(dg, std::move(fams), std::move(gens));
}

CurveOneChain boundary_on_family(const Domain& D, int family) {
  const HeegaardDiagram& dg = *D.dg;
  CurveOneChain c(dg, family);
  for (size_t ai = 0; ai < dg.arcs.size(); ++ai) {
    const Arc& a = dg.arcs[ai];
    if (dg.curves[a.curve].family != family) continue;
    c.mult[ai] = D.coeff[a.left_region] - D.coeff[a.right_region];
  }
  return c;
}

PointSum corner_boundary(const CurveOneChain& c) {
  const HeegaardDiagram& dg = *c.dg;
  PointSum p(dg.vertices.size());
  for (size_t ai = 0; ai < dg.arcs.size(); ++ai) {
    int m = c.mult[ai];
    if (m == 0) continue;
    const Arc& a = dg.arcs[ai];
    p.coeff[a.head_vertex] += m;
    p.coeff[a.tail_vertex] -= m;
  }
  return p;
}

PointSum corner_boundary_via_quadrants(const Domain& D, int family) {
  // At a vertex with the family at slots 0,2 the corner sum equals
  // -(c0 - c1 + c2 - c3); at slots 1,3 it is +(c0 - c1 + c2 - c3).
  const HeegaardDiagram& dg = *D.dg;
  PointSum p(dg.vertices.size());
  for (size_t vi = 0; vi < dg.vertices.size(); ++vi) {
    const Vertex& v = dg.vertices[vi];
    int sign;
    if (v.fam_first == family) sign = -1;
    else if (v.fam_second == family) sign = +1;
    else continue;
    long long alt = 0;
    for (int q = 0; q < 4; ++q) alt += (q % 2 == 0 ? 1 : -1) * D.coeff[v.quadrant_region[q]];
    p.coeff[vi] = sign * (int)alt;
  }
  return p;
}

PointSum generator_points(const HeegaardDiagram& dg, const Generator& g) {
  PointSum p(dg.vertices.size());
  for (int v : g.vertices) p.coeff[v] += 1;
  return p;
}

PointSum required_corner_boundary(const GonConfig& cfg, int position) {
  int m = cfg.sides();
  const Generator& plus = cfg.gens[position];
  const Generator& minus = cfg.gens[(position + m - 1) % m];
  return generator_points(*cfg.dg, plus) - generator_points(*cfg.dg, minus);
}

int first_violated_corner_condition(const Domain& D, const GonConfig& cfg) {
  for (int i = 0; i < cfg.sides(); ++i) {
    PointSum got = corner_boundary(boundary_on_family(D, cfg.families[i]));
    if (!(got == required_corner_boundary(cfg, i))) return i;
  }
  // families outside the configuration must have vanishing 1-chains
  std::set<int> listed(cfg.families.begin(), cfg.families.end());
  for (int f = 1; f <= cfg.dg->family_count; ++f) {
    if (listed.count(f)) continue;
    if (!boundary_on_family(D, f).is_zero()) return cfg.sides();
  }
  return -1;
}

bool is_domain_joining(const Domain& D, const GonConfig& cfg) {
  return first_violated_corner_condition(D, cfg) == -1;
}

Domain add_domains(const Domain& a, const Domain& b) { return a + b; }

long long s_count(const Domain& D, int fam_a, int fam_b) {
  const HeegaardDiagram& dg = *D.dg;
  PointSum p = corner_boundary(boundary_on_family(D, fam_a));
  long long s = 0;
  for (size_t vi = 0; vi < dg.vertices.size(); ++vi)
    if (dg.vertex_joins((int)vi, fam_a, fam_b)) s += p.coeff[vi];
  return s;
}

Domain domain_from_coeffs(const HeegaardDiagram& dg,
                          const std::vector<std::pair<std::string, int>>& coeffs) {
  Domain D(dg);
  for (const auto& [id, c] : coeffs) D.coeff[dg.region_index(id)] += c;
  return D;
}

}  // namespace hd
