#pragma once

#include <optional>

#include "hd/gen_domains.hpp"
#include "hd/maslov.hpp"

namespace hd {

struct NiceReport {
  bool nice = false;
  int witness_region = -1;  // a basepoint-free region with > 4 sides or not a disk
};

/// A diagram is nice when every basepoint-free region is a disk with 2,
/// 3 or 4 sides.
NiceReport is_nice(const HeegaardDiagram& dg);

struct PositivityReport {
  Quarter mu_value;
  Quarter iota_value;
  bool bound_satisfied = false;  // mu >= 0
  bool equality_case = false;    // mu == 0
  bool census_ok = false;        // equality-case census (only meaningful when equality_case)
  long long three_sided_weight = 0;
  std::string detail;
};

/// For a positive domain supported on 2-/3-/4-sided regions in a
/// three-sided configuration with iota >= 0: reports mu and iota,
/// verifies mu >= 0, and in the mu == 0 case verifies the census:
/// e = k/4, exactly k three-sided regions counted with multiplicity,
/// each with s-count +1, and no two-sided region. Throws on a violated
/// precondition, naming it.
PositivityReport check_positivity_bound(const Domain& D, const GonConfig& cfg);

/// A representation of D as a sum of k embedded triangles, one per
/// curve triple induced by the generators, with corners at generator
/// coordinates; nullopt when none exists. Requires a three-sided
/// configuration and iota(D) = 0.
std::optional<std::vector<Domain>> triangle_decomposition(const Domain& D, const GonConfig& cfg);

/// Embedded-triangle check used by the decomposition: coefficients in
/// {0,1}, boundary exactly the three given sides, simple boundary, and
/// disk closure. Exposed for tests.
bool is_embedded_triangle(const Domain& T, const GonConfig& cfg);

/// Number of domains for cfg with coefficients in [0, max_coeff],
/// avoiding the diagram's basepoint regions, with mu = 0, iota = 0 and a
/// triangle decomposition. The diagram must be nice.
long long count_index_zero_triangles(const HeegaardDiagram& dg, const GonConfig& cfg, int max_coeff);

}  // namespace hd
