#pragma once

#include "hd/measures.hpp"

namespace hd {

/// Fat-diagonal intersection number of the n-gon domain D:
///   mu_{p^{n,1}}(D) + mu_{p^{1,2}}(D)
///     + sum_{n >= j > l > 1} d_j(D) . d_l(D) - e(D).
/// Throws unless D joins the configuration's generators.
Quarter iota(const Domain& D, const GonConfig& cfg);

/// Maslov index: iota(D) + 2 e(D) - k(n-2)/2.
Quarter mu(const Domain& D, const GonConfig& cfg);

/// Rewritten single-point form
///   2 mu_{p^{n,1}}(D) + sum_{n >= j > l >= 1} d_j(D) . d_l(D) - e(D);
/// agrees with iota on every domain.
Quarter iota_singlepoint_form(const Domain& D, const GonConfig& cfg);

/// Cyclically symmetric evaluation for three-sided configurations:
///   e(D) + (2/3) sum_i mu_{p^{i,i+1}}(D)
///        + (1/3) sum_i d_{i+1}(D) . d_i(D) - k/2.
/// Thirds are carried exactly on (1/12)Z internally; the result is a
/// Quarter and agrees with mu.
Quarter mu_symmetric_n3(const Domain& D, const GonConfig& cfg);

/// Two-sided evaluation e(D) + mu_x(D) + mu_y(D); agrees with mu.
Quarter mu_lipshitz_n2(const Domain& D, const GonConfig& cfg);

}  // namespace hd
