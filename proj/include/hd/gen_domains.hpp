#pragma once

#include <optional>

#include "hd/chains.hpp"

namespace hd {

/// All generators joining the two families: perfect matchings between the
/// curves of fam_a and of fam_b realized by vertices. Deterministic
/// order (sorted coordinate tuples).
std::vector<Generator> enumerate_generators(const HeegaardDiagram& dg, int fam_a, int fam_b);

/// Solution set of the corner-boundary system for one configuration:
/// every solution is particular + an integer combination of the basis.
/// particular is absent when no integer solution exists. The basis is in
/// row Hermite normal form over the regions in index order and spans all
/// 2-chains with vanishing corner boundary (and vanishing boundary on
/// families outside the configuration).
struct DomainSolution {
  const HeegaardDiagram* dg = nullptr;
  std::optional<std::vector<int>> particular;
  std::vector<std::vector<int>> basis;

  bool feasible() const { return particular.has_value(); }
  Domain particular_domain() const;
  Domain basis_domain(int i) const;
};

DomainSolution solve_domains(const HeegaardDiagram& dg, const GonConfig& cfg);

struct EnumerateOptions {
  int max_coeff = 0;
  bool require_positive = true;
  std::vector<int> forbidden_regions;  // coefficients pinned to zero
};

/// All solutions with every coefficient in [0, max_coeff], zero on the
/// forbidden regions, optionally dropping non-positive domains. Complete
/// within the bound; deterministic (lexicographic in region order).
std::vector<Domain> enumerate_positive_domains(const DomainSolution& sol,
                                               const EnumerateOptions& opt);

}  // namespace hd
