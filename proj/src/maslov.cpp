#include "hd/maslov.hpp"

#include <stdexcept>
#include <string>

namespace hd {

namespace {

void require_joining(const Domain& D, const GonConfig& cfg) {
  if (cfg.sides() < 2) throw std::invalid_argument("configuration needs at least two families");
  int bad = first_violated_corner_condition(D, cfg);
  if (bad < 0) return;
  if (bad == cfg.sides())
    throw std::invalid_argument("domain has a nonzero boundary on a family outside the configuration");
  throw std::invalid_argument("domain does not join the generators: corner condition fails for family " +
                              std::to_string(cfg.families[bad]));
}

std::vector<CurveOneChain> family_boundaries(const Domain& D, const GonConfig& cfg) {
  std::vector<CurveOneChain> d;
  d.reserve(cfg.sides());
  for (int f : cfg.families) d.push_back(boundary_on_family(D, f));
  return d;
}

}  // namespace

Quarter iota(const Domain& D, const GonConfig& cfg) {
  require_joining(D, cfg);
  int m = cfg.sides();
  auto d = family_boundaries(D, cfg);
  Quarter v = point_measure(D, cfg.gens[m - 1]) + point_measure(D, cfg.gens[0]) -
              euler_measure(D, cfg.families);
  for (int j = 2; j < m; ++j)
    for (int l = 1; l < j; ++l) v += pair_one_chains(d[j], d[l]);
  return v;
}

Quarter mu(const Domain& D, const GonConfig& cfg) {
  Quarter v = iota(D, cfg) + euler_measure(D, cfg.families) * 2;
  // k(n-2)/2 in quarter units
  long long constant = 2LL * cfg.k() * (cfg.sides() - 2);
  return v - Quarter::from_quarters(constant);
}

Quarter iota_singlepoint_form(const Domain& D, const GonConfig& cfg) {
  require_joining(D, cfg);
  int m = cfg.sides();
  auto d = family_boundaries(D, cfg);
  Quarter v = point_measure(D, cfg.gens[m - 1]) * 2 - euler_measure(D, cfg.families);
  for (int j = 1; j < m; ++j)
    for (int l = 0; l < j; ++l) v += pair_one_chains(d[j], d[l]);
  return v;
}

Quarter mu_symmetric_n3(const Domain& D, const GonConfig& cfg) {
  if (cfg.sides() != 3)
    throw std::invalid_argument("symmetric form needs a three-sided configuration, got " +
                                std::to_string(cfg.sides()));
  require_joining(D, cfg);
  auto d = family_boundaries(D, cfg);
  Quarter mus, pairs;
  for (int i = 0; i < 3; ++i) {
    mus += point_measure(D, cfg.gens[i]);
    pairs += pair_one_chains(d[(i + 1) % 3], d[i]);
  }
  Twelfth acc = Twelfth::from_quarter(euler_measure(D, cfg.families)) +
                Twelfth::from_quarters_over_three(mus.units * 2 + pairs.units) -
                Twelfth::from_quarter(Quarter::from_quarters(2LL * cfg.k()));
  return acc.to_quarter();
}

Quarter mu_lipshitz_n2(const Domain& D, const GonConfig& cfg) {
  if (cfg.sides() != 2)
    throw std::invalid_argument("two-sided form needs a two-sided configuration, got " +
                                std::to_string(cfg.sides()));
  require_joining(D, cfg);
  return euler_measure(D, cfg.families) + point_measure(D, cfg.gens[1]) +
         point_measure(D, cfg.gens[0]);
}

}  // namespace hd
