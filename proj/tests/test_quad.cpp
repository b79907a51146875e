#include <doctest.h>

#include "hd/maslov.hpp"
#include "test_helpers.hpp"

using namespace hd;
using hdt::fixture;
using hdt::gen1;

namespace {

GonConfig quad_config(const HeegaardDiagram& dg) {
  return full_config(dg, {gen1(dg, 1, 2, "v4"), gen1(dg, 2, 3, "v2"), gen1(dg, 3, 4, "v5"),
                          gen1(dg, 4, 1, "v1")});
}

}  // namespace

TEST_CASE("four-sided configurations evaluate and agree with the rewritten form") {
  HeegaardDiagram dg = fixture("quad_grid");
  GonConfig cfg = quad_config(dg);
  DomainSolution sol = solve_domains(dg, cfg);
  REQUIRE(sol.feasible());
  std::mt19937 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    Domain D = hdt::random_solution(sol, rng, 2);
    CHECK(iota_singlepoint_form(D, cfg) == iota(D, cfg));
    // the constant in mu is k(n-2)/2 = 1 here
    CHECK(mu(D, cfg) == iota(D, cfg) + euler_measure(D) * 2 - Quarter::from_integer(1));
  }
}

TEST_CASE("cyclic relabeling preserves the values on four families") {
  HeegaardDiagram dg = fixture("quad_grid");
  GonConfig cfg = quad_config(dg);
  DomainSolution sol = solve_domains(dg, cfg);
  std::mt19937 rng(45);
  for (int trial = 0; trial < 25; ++trial) {
    Domain D = hdt::random_solution(sol, rng, 2);
    Quarter i0 = iota(D, cfg), m0 = mu(D, cfg);
    for (int shift = 1; shift < 4; ++shift) {
      std::vector<int> fams;
      std::vector<Generator> gens;
      for (int i = 0; i < 4; ++i) {
        fams.push_back(cfg.families[(i + shift) % 4]);
        gens.push_back(cfg.gens[(i + shift) % 4]);
      }
      GonConfig rot = make_config(dg, fams, gens);
      CHECK(iota(D, rot) == i0);
      CHECK(mu(D, rot) == m0);
    }
  }
}

TEST_CASE("a four-sided polygon splits into two three-sided ones") {
  HeegaardDiagram dg = fixture("quad_grid");
  GonConfig whole = quad_config(dg);
  Generator q = gen1(dg, 3, 1, "v6");  // the splice corner joins families 1 and 3
  GonConfig left = make_config(dg, {1, 2, 3}, {gen1(dg, 1, 2, "v4"), gen1(dg, 2, 3, "v2"),
                                               Generator{3, 1, q.vertices}});
  GonConfig right = make_config(dg, {3, 4, 1}, {gen1(dg, 3, 4, "v5"), gen1(dg, 4, 1, "v1"),
                                                Generator{1, 3, q.vertices}});
  DomainSolution sl = solve_domains(dg, left), sr = solve_domains(dg, right);
  REQUIRE(sl.feasible());
  REQUIRE(sr.feasible());
  std::mt19937 rng(46);
  for (int trial = 0; trial < 40; ++trial) {
    Domain D1 = hdt::random_solution(sl, rng, 2);
    Domain D2 = hdt::random_solution(sr, rng, 2);
    Domain sum = D1 + D2;
    REQUIRE(is_domain_joining(sum, whole));
    CHECK(iota(sum, whole) == iota(D1, left) + iota(D2, right));
    CHECK(mu(sum, whole) == mu(D1, left) + mu(D2, right));
  }
}

TEST_CASE("erasing two families leaves their crossings inside regions") {
  HeegaardDiagram dg = fixture("quad_grid");
  // families {1,3} cross once (v6); the sub-diagram is a single square,
  // so the full surface has euler measure zero there. The (2,4) crossing
  // v3 lies inside the square.
  Domain sigma(dg);
  for (auto& c : sigma.coeff) c = 1;
  std::vector<int> f13{1, 3}, f24{2, 4};
  CHECK(euler_measure(sigma, f13) == Quarter{});
  CHECK(euler_measure(sigma, f24) == Quarter{});

  // two-sided configurations across the erased pairs
  Generator q13{3, 1, {dg.vertex_index("v6")}}, q31{1, 3, {dg.vertex_index("v6")}};
  GonConfig two = make_config(dg, {3, 1}, {q31, q13});
  DomainSolution sol = solve_domains(dg, two);
  REQUIRE(sol.feasible());
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    Domain D = hdt::random_solution(sol, rng, 2);
    CHECK(mu_lipshitz_n2(D, two) == mu(D, two));
    CHECK(iota_singlepoint_form(D, two) == iota(D, two));
  }
  // the full surface is periodic for the degenerate two-sided setup
  CHECK(is_domain_joining(sigma, two));
  CHECK(mu(sigma, two) == Quarter::from_integer(2));
}
