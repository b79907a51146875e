#pragma once

#include <span>

#include "hd/chains.hpp"
#include "hd/quarter.hpp"

namespace hd {

/// Average of the domain's coefficients over the four quadrants at v.
Quarter point_measure_at(const Domain& D, int vertex);

/// Sum of point_measure_at over the generator's coordinates.
Quarter point_measure(const Domain& D, const Generator& g);

/// Combinatorial Euler measure: sum over regions of a(R) (chi(R) -
/// corners(R)/4).
Quarter euler_measure(const Domain& D);

/// Euler measure of D seen in the sub-diagram spanned by `families`:
/// curves of other families are erased. Requires a vanishing boundary
/// 1-chain on every erased family. Computed without rebuilding the
/// sub-diagram, by Euler-characteristic bookkeeping over the erased
/// cells.
Quarter euler_measure(const Domain& D, std::span<const int> families);

/// Intersection pairing of two boundary-style 1-chains on different
/// families: the four-translate average, evaluated in closed form as
/// sum over shared vertices of sign * flux_a * flux_b / 4. Same-family
/// input returns 0.
Quarter pair_one_chains(const CurveOneChain& a, const CurveOneChain& b);

}  // namespace hd
