#include "hd/diagram_io.hpp"

namespace hd {

// Hand-built diagrams. Rotation data follows the slot convention: slots
// 0,2 carry the pair's first family, quadrant q sits counterclockwise
// between slots q and q+1, and region cycles keep the region on the left
// (arrive slot g, leave slot g-1, claiming quadrant g-1).

namespace {

// Genus-1 diagram with one curve per family meeting once: a single
// square region.
const char* s3_genus1 = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 1
curve a family 1
curve b family 2
vertex x pair 1 2
arc a1 curve a tail x 0 head x 2
arc b1 curve b tail x 1 head x 3
region R chi 1
cycle a1+ b1+ a1- b1-
corners x:1 x:2 x:3 x:0
basepoint w R
)";

// Genus-1 triple diagram: three curves pairwise crossing once, two
// three-sided regions and one six-sided region.
const char* torus_triple = R"(heegaard-diagram v1
genus 1
families 3
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
vertex x pair 1 2
vertex y pair 2 3
vertex z pair 1 3
arc a1 curve a tail z 0 head x 2
arc a2 curve a tail x 0 head z 2
arc b1 curve b tail x 1 head y 2
arc b2 curve b tail y 0 head x 3
arc g1 curve g tail z 1 head y 1
arc g2 curve g tail y 3 head z 3
region T1 chi 1
cycle a1+ b1+ g1-
corners x:1 y:1 z:0
region T2 chi 1
cycle g2+ a2- b2-
corners z:2 x:3 y:3
region H chi 1
cycle a2+ g1+ b2+ a1- g2- b1-
corners z:1 y:0 x:2 z:3 y:2 x:0
basepoint w H
)";

// Genus-1 two-family diagram with two curves per family. One curve
// carries a finger producing two two-sided regions; the rest of the
// complement is two rectangles and two hexagons.
const char* nice_double = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 2
curve a1 family 1
curve a2 family 1
curve b1 family 2
curve b2 family 2
vertex c1 pair 1 2
vertex c2 pair 1 2
vertex c3 pair 1 2
vertex c4 pair 1 2
vertex d1 pair 1 2
vertex d2 pair 1 2
arc A1a curve a1 tail c1 0 head d1 2
arc A1b curve a1 tail d1 0 head c1 2
arc A2a curve a2 tail c4 0 head c3 2
arc A2b curve a2 tail c3 0 head c2 2
arc A2c curve a2 tail c2 0 head d2 2
arc A2d curve a2 tail d2 0 head c4 2
arc B1a curve b1 tail c1 1 head c2 3
arc B1b curve b1 tail c2 1 head c3 1
arc B1c curve b1 tail c3 3 head c4 3
arc B1d curve b1 tail c4 1 head c1 3
arc B2a curve b2 tail d1 1 head d2 3
arc B2b curve b2 tail d2 1 head d1 3
region Btip chi 1
cycle A2b+ B1b+
corners c2:1 c3:0
region Rsq chi 1
cycle A2a- B1c-
corners c4:3 c3:2
region Rmid chi 1
cycle A1a+ B2a+ A2c- B1a-
corners d1:1 d2:2 c2:3 c1:0
region W2 chi 1
cycle A2d+ B1d+ A1b- B2b-
corners c4:1 c1:2 d1:3 d2:0
region W1 chi 1
cycle A1a- B1d- A2a+ B1b- A2c+ B2b+
corners c1:3 c4:0 c3:1 c2:0 d2:1 d1:2
region Rbig chi 1
cycle B1c+ A2d- B2a- A1b+ B1a+ A2b-
corners c4:2 d2:3 d1:0 c1:1 c2:2 c3:3
basepoint w1 W1
basepoint w2 Rbig
)";

// Genus-1 triple diagram whose first two families are parallel: the
// pair (1,2) has no intersection points at all.
const char* parallel_triple = R"(heegaard-diagram v1
genus 1
families 3
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
vertex u1 pair 1 3
vertex u2 pair 2 3
arc a1 curve a tail u1 0 head u1 2
arc b1 curve b tail u2 0 head u2 2
arc g1 curve g tail u1 1 head u2 3
arc g2 curve g tail u2 1 head u1 3
region Rmid chi 1
cycle a1+ g1+ b1- g1-
corners u1:1 u2:2 u2:3 u1:0
region Rwrap chi 1
cycle b1+ g2+ a1- g2-
corners u2:1 u1:2 u1:3 u2:0
basepoint w Rmid
)";

// torus_triple after pushing a finger of the family-1 curve through the
// family-2 curve inside the six-sided region: two new crossings e1, e2,
// a new two-sided tip, and the six-sided region split in two.
const char* iso_move1_post = R"(heegaard-diagram v1
genus 1
families 3
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
vertex x pair 1 2
vertex y pair 2 3
vertex z pair 1 3
vertex e1 pair 1 2
vertex e2 pair 1 2
arc a1 curve a tail z 0 head x 2
arc a2 curve a tail x 0 head e1 2
arc a3 curve a tail e1 0 head e2 0
arc a4 curve a tail e2 2 head z 2
arc b1 curve b tail x 1 head y 2
arc b2a curve b tail y 0 head e2 3
arc b2b curve b tail e2 1 head e1 3
arc b2c curve b tail e1 1 head x 3
arc g1 curve g tail z 1 head y 1
arc g2 curve g tail y 3 head z 3
region T1 chi 1
cycle a1+ b1+ g1-
corners x:1 y:1 z:0
region T2t chi 1
cycle g2+ a4- b2b+ a2- b2c- a3+ b2a-
corners z:2 e2:1 e1:2 x:3 e1:0 e2:3 y:3
region Ftip chi 1
cycle a3- b2b-
corners e1:3 e2:0
region Hw chi 1
cycle a2+ b2c+ a1- g2- b1-
corners e1:1 x:2 z:3 y:2 x:0
region He chi 1
cycle a4+ g1+ b2a+
corners z:1 y:0 e2:2
basepoint w Hw
)";

// Genus-1 triple diagram whose family-2 curve winds twice around one
// direction, so families 2 and 3 cross twice (yy is not a generator
// coordinate). The family-1 curve clips the corner at yy on one side.
const char* iso_move2_pre = R"(heegaard-diagram v1
genus 1
families 3
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
vertex x pair 1 2
vertex y pair 2 3
vertex yy pair 2 3
vertex z pair 1 3
arc A1 curve a tail z 0 head x 2
arc A2 curve a tail x 0 head z 2
arc B1 curve b tail y 0 head x 3
arc B2 curve b tail x 1 head yy 2
arc B3 curve b tail yy 0 head y 2
arc G1 curve g tail y 1 head z 3
arc G2 curve g tail z 1 head yy 3
arc G3 curve g tail yy 1 head y 3
region B chi 1
cycle B1+ A1- G1-
corners x:2 z:3 y:0
region T chi 1
cycle A2+ G2+ B2-
corners z:1 yy:2 x:0
region A chi 1
cycle G1+ A2- B1- G3- B3+
corners z:2 x:3 y:3 yy:0 y:1
region C chi 1
cycle A1+ B2+ G3+ B3- G2-
corners x:1 yy:1 y:2 yy:3 z:0
basepoint w A
)";

// The same diagram after the family-1 curve slides across yy and clips
// the opposite corner.
const char* iso_move2_post = R"(heegaard-diagram v1
genus 1
families 3
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
vertex x pair 1 2
vertex y pair 2 3
vertex yy pair 2 3
vertex z pair 1 3
arc A1 curve a tail z 0 head x 2
arc A2 curve a tail x 0 head z 2
arc B1 curve b tail y 0 head yy 2
arc B2 curve b tail yy 0 head x 3
arc B3 curve b tail x 1 head y 2
arc G1 curve g tail y 1 head yy 3
arc G2 curve g tail yy 1 head z 3
arc G3 curve g tail z 1 head y 3
region T chi 1
cycle B2+ A1- G2-
corners x:2 z:3 yy:0
region D chi 1
cycle A2+ G3+ B3-
corners z:1 y:2 x:0
region A chi 1
cycle A1+ B3+ G1+ B1- G3-
corners x:1 y:1 yy:2 y:3 z:0
region C chi 1
cycle B1+ G2+ A2- B2- G1-
corners yy:1 z:2 x:3 yy:3 y:0
basepoint w A
)";

// Genus-1 triple diagram with denser crossings (two (1,2) vertices,
// three (2,3), one (3,1)): six regions of 3, 3, 4, 4, 5 and 5 sides.
// Embedded triangles here span several regions. No basepoints.
const char* torus_dense = R"(heegaard-diagram v1
genus 1
families 3
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
vertex v1 pair 2 3
vertex v2 pair 1 2
vertex v3 pair 2 3
vertex v4 pair 2 3
vertex v5 pair 1 2
vertex v6 pair 1 3
arc a1 curve a tail v2 0 head v5 2
arc a2 curve a tail v5 0 head v6 2
arc a3 curve a tail v6 0 head v2 2
arc b1 curve b tail v1 0 head v2 3
arc b2 curve b tail v2 1 head v3 2
arc b3 curve b tail v3 0 head v4 2
arc b4 curve b tail v4 0 head v5 3
arc b5 curve b tail v5 1 head v1 2
arc g1 curve g tail v1 3 head v4 1
arc g2 curve g tail v4 3 head v6 3
arc g3 curve g tail v6 1 head v3 1
arc g4 curve g tail v3 3 head v1 1
region R1 chi 1
cycle a1+ b5+ g4- b2-
corners v5:1 v1:1 v3:2 v2:0
region R2 chi 1
cycle a1- b1- g1+ b4+
corners v2:3 v1:3 v4:0 v5:2
region R3 chi 1
cycle a2+ g3+ b3+ g1- b5-
corners v6:1 v3:0 v4:1 v1:2 v5:0
region R4 chi 1
cycle a2- b4- g2+
corners v5:3 v4:3 v6:2
region R5 chi 1
cycle a3+ b2+ g3-
corners v2:1 v3:1 v6:0
region R6 chi 1
cycle a3- g2- b3- g4+ b1+
corners v6:3 v4:2 v3:3 v1:0 v2:2
)";

// Genus-2 triple diagram with two curves per family: a copy of
// torus_triple on each handle. The two six-sided regions merge through
// the connecting neck into one annular region carrying the basepoint,
// so every basepoint-free region is a triangle and the diagram is nice.
// Index-zero domains here decompose into two disjoint triangles.
const char* stabilized_triple = R"(heegaard-diagram v1
genus 2
families 3
curves-per-family 2
curve a1 family 1
curve a2 family 1
curve b1 family 2
curve b2 family 2
curve g1 family 3
curve g2 family 3
vertex x1 pair 1 2
vertex y1 pair 2 3
vertex z1 pair 1 3
vertex x2 pair 1 2
vertex y2 pair 2 3
vertex z2 pair 1 3
arc a1a curve a1 tail z1 0 head x1 2
arc a1b curve a1 tail x1 0 head z1 2
arc b1a curve b1 tail x1 1 head y1 2
arc b1b curve b1 tail y1 0 head x1 3
arc g1a curve g1 tail z1 1 head y1 1
arc g1b curve g1 tail y1 3 head z1 3
arc a2a curve a2 tail z2 0 head x2 2
arc a2b curve a2 tail x2 0 head z2 2
arc b2a curve b2 tail x2 1 head y2 2
arc b2b curve b2 tail y2 0 head x2 3
arc g2a curve g2 tail z2 1 head y2 1
arc g2b curve g2 tail y2 3 head z2 3
region T1a chi 1
cycle a1a+ b1a+ g1a-
corners x1:1 y1:1 z1:0
region T2a chi 1
cycle g1b+ a1b- b1b-
corners z1:2 x1:3 y1:3
region T1b chi 1
cycle a2a+ b2a+ g2a-
corners x2:1 y2:1 z2:0
region T2b chi 1
cycle g2b+ a2b- b2b-
corners z2:2 x2:3 y2:3
region HH chi 0
cycle a1b+ g1a+ b1b+ a1a- g1b- b1a-
cycle a2b+ g2a+ b2b+ a2a- g2b- b2a-
corners z1:1 y1:0 x1:2 z1:3 y1:2 x1:0 z2:1 y2:0 x2:2 z2:3 y2:2 x2:0
basepoint w HH
)";

// Genus-1 diagram with four curve families (slopes 0, infinity, 1, -1):
// four-sided Whitney polygon configurations live here, and erasing two
// families leaves crossings strictly inside sub-diagram regions.
const char* quad_grid = R"(heegaard-diagram v1
genus 1
families 4
curves-per-family 1
curve a family 1
curve b family 2
curve g family 3
curve d family 4
vertex v1 pair 1 4
vertex v2 pair 2 3
vertex v3 pair 2 4
vertex v4 pair 1 2
vertex v5 pair 3 4
vertex v6 pair 1 3
vertex v7 pair 3 4
arc a1 curve a tail v1 0 head v4 2
arc a2 curve a tail v4 0 head v6 2
arc a3 curve a tail v6 0 head v1 2
arc b1 curve b tail v2 0 head v3 2
arc b2 curve b tail v3 0 head v4 3
arc b3 curve b tail v4 1 head v2 2
arc g1 curve g tail v2 3 head v5 2
arc g2 curve g tail v5 0 head v6 3
arc g3 curve g tail v6 1 head v7 2
arc g4 curve g tail v7 0 head v2 1
arc d1 curve d tail v1 3 head v3 1
arc d2 curve d tail v3 3 head v5 1
arc d3 curve d tail v5 3 head v7 1
arc d4 curve d tail v7 3 head v1 1
region R1 chi 1
cycle a1+ b3+ g4- d4+
corners v4:1 v2:1 v7:3 v1:0
region R2 chi 1
cycle a1- d1+ b2+
corners v1:3 v3:0 v4:2
region R3 chi 1
cycle a2+ g3+ d3- g1- b3-
corners v6:1 v7:1 v5:2 v2:2 v4:0
region R4 chi 1
cycle a2- b2- d2+ g2+
corners v4:3 v3:3 v5:0 v6:2
region R5 chi 1
cycle a3+ d4- g3-
corners v1:1 v7:2 v6:0
region R6 chi 1
cycle a3- g2- d3+ g4+ b1+ d1-
corners v6:3 v5:3 v7:0 v2:0 v3:1 v1:2
region R7 chi 1
cycle b1- g1+ d2-
corners v2:3 v5:1 v3:2
)";

// Genus-1 two-family diagram whose curves cross twice with algebraic
// intersection two: the two crossings are joined by no 2-chain, so one
// of the four generator configurations is infeasible.
const char* lens_double = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 1
curve b family 1
curve g family 2
vertex y pair 1 2
vertex yy pair 1 2
arc B12 curve b tail y 0 head yy 2
arc B3 curve b tail yy 0 head y 2
arc G12 curve g tail y 1 head yy 3
arc G3 curve g tail yy 1 head y 3
region Q chi 1
cycle B12+ G3+ B3- G12-
corners yy:1 y:2 yy:3 y:0
region P chi 1
cycle B3+ G12+ B12- G3-
corners y:1 yy:2 y:3 yy:0
basepoint w P
)";

}  // namespace

const std::map<std::string, std::string>& bundled_fixtures() {
  static const std::map<std::string, std::string> fixtures = {
      {"s3_genus1", s3_genus1},
      {"torus_triple", torus_triple},
      {"nice_double", nice_double},
      {"parallel_triple", parallel_triple},
      {"lens_double", lens_double},
      {"torus_dense", torus_dense},
      {"stabilized_triple", stabilized_triple},
      {"quad_grid", quad_grid},
      {"iso_move1_pre", torus_triple},
      {"iso_move1_post", iso_move1_post},
      {"iso_move2_pre", iso_move2_pre},
      {"iso_move2_post", iso_move2_post},
  };
  return fixtures;
}

}  // namespace hd
