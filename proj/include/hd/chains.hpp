#pragma once

#include <string>
#include <vector>

#include "hd/diagram.hpp"

namespace hd {

/// Integer 2-chain over the regions.
struct Domain {
  const HeegaardDiagram* dg = nullptr;
  std::vector<int> coeff;  // indexed by region

  Domain() = default;
  explicit Domain(const HeegaardDiagram& d) : dg(&d), coeff(d.regions.size(), 0) {}

  int operator[](int region) const { return coeff[region]; }
  int& operator[](int region) { return coeff[region]; }

  Domain operator+(const Domain& o) const;
  Domain operator-(const Domain& o) const;
  Domain operator*(int n) const;
  Domain operator-() const { return *this * -1; }
  bool operator==(const Domain& o) const { return dg == o.dg && coeff == o.coeff; }

  bool is_zero() const;
  /// No negative coefficient and at least one positive one.
  bool is_positive() const;
};

/// Integer 1-chain supported on the directed arcs of one curve family.
struct CurveOneChain {
  const HeegaardDiagram* dg = nullptr;
  int family = 0;
  std::vector<int> mult;  // indexed by arc; nonzero only on family arcs

  CurveOneChain() = default;
  CurveOneChain(const HeegaardDiagram& d, int fam) : dg(&d), family(fam), mult(d.arcs.size(), 0) {}
  bool is_zero() const;
};

/// Formal integer combination of vertices.
struct PointSum {
  std::vector<int> coeff;  // indexed by vertex

  explicit PointSum(size_t n_vertices = 0) : coeff(n_vertices, 0) {}
  PointSum operator+(const PointSum& o) const;
  PointSum operator-(const PointSum& o) const;
  bool operator==(const PointSum&) const = default;
  bool is_zero() const;
  long long total() const;
};

/// Intersection point of two tori: a k-tuple of vertices matching the
/// curves of one family bijectively to the curves of another.
struct Generator {
  int fam_a = 0, fam_b = 0;
  std::vector<int> vertices;  // sorted, one per curve of each family

  bool joins(int fa, int fb) const {
    return (fam_a == fa && fam_b == fb) || (fam_a == fb && fam_b == fa);
  }
};

/// Builds a generator and checks the perfect-matching property.
Generator make_generator(const HeegaardDiagram& dg, int fam_a, int fam_b,
                         std::vector<int> vertex_indices);

/// Cyclic list of families with one generator joining each consecutive
/// pair: gens[i] lies on (families[i], families[i+1 mod m]). Encodes
/// which Whitney m-gon boundary conditions a domain is tested against.
struct GonConfig {
  const HeegaardDiagram* dg = nullptr;
  std::vector<int> families;
  std::vector<Generator> gens;

  int k() const { return dg->curves_per_family; }
  int sides() const { return (int)families.size(); }
};

/// Config over the full family list 1..n.
GonConfig full_config(const HeegaardDiagram& dg, std::vector<Generator> gens);
GonConfig make_config(const HeegaardDiagram& dg, std::vector<int> families,
                      std::vector<Generator> gens);

/// d_i(D): multiplicity a(left) - a(right) on every arc of the family.
CurveOneChain boundary_on_family(const Domain& D, int family);

/// Boundary points of a 1-chain: head endpoints count +, tails -.
PointSum corner_boundary(const CurveOneChain& c);

/// Same value computed from quadrant alternating sums; used as an
/// independent cross-check of corner_boundary(boundary_on_family(...)).
PointSum corner_boundary_via_quadrants(const Domain& D, int family);

/// Sum of the generator's coordinates as a PointSum.
PointSum generator_points(const HeegaardDiagram& dg, const Generator& g);

/// Required corner boundary for family cfg.families[i]:
/// gens[i] - gens[i-1] (cyclically).
PointSum required_corner_boundary(const GonConfig& cfg, int position);

/// True iff D satisfies every corner condition of cfg, and, for families
/// outside cfg.families, has identically vanishing boundary 1-chain.
bool is_domain_joining(const Domain& D, const GonConfig& cfg);

/// Position of the first failing condition, or -1 when all hold. Families
/// outside the list report position = sides() (boundary must vanish).
int first_violated_corner_condition(const Domain& D, const GonConfig& cfg);

/// Coefficient-wise sum; both domains must live on the same diagram.
Domain add_domains(const Domain& a, const Domain& b);

/// Sum of corner_boundary(d_a D) coefficients over vertices joining the
/// unordered family pair {a, b}.
long long s_count(const Domain& D, int fam_a, int fam_b);

Domain domain_from_coeffs(const HeegaardDiagram& dg, const std::vector<std::pair<std::string, int>>& coeffs);

}  // namespace hd
