#include <doctest.h>

#include <set>

#include "test_helpers.hpp"

using namespace hd;
using hdt::fixture;

TEST_CASE("every bundled fixture validates") {
  for (const auto& [name, text] : bundled_fixtures()) {
    CAPTURE(name);
    HeegaardDiagram dg = parse_diagram(text);
    CHECK(dg.validated);
  }
}

TEST_CASE("fixture shapes match their construction") {
  HeegaardDiagram s3 = fixture("s3_genus1");
  CHECK(s3.vertices.size() == 1);
  CHECK(s3.arcs.size() == 2);
  CHECK(s3.regions.size() == 1);
  CHECK(region_sides(s3, 0) == 4);

  HeegaardDiagram tt = fixture("torus_triple");
  CHECK(tt.vertices.size() == 3);
  CHECK(tt.arcs.size() == 6);
  CHECK(tt.regions.size() == 3);
  CHECK(region_sides(tt, tt.region_index("T1")) == 3);
  CHECK(region_sides(tt, tt.region_index("T2")) == 3);
  CHECK(region_sides(tt, tt.region_index("H")) == 6);

  HeegaardDiagram nd = fixture("nice_double");
  CHECK(nd.vertices.size() == 6);
  CHECK(nd.arcs.size() == 12);
  CHECK(nd.regions.size() == 6);
  CHECK(region_sides(nd, nd.region_index("Btip")) == 2);
  CHECK(region_sides(nd, nd.region_index("Rsq")) == 2);
  CHECK(region_sides(nd, nd.region_index("Rmid")) == 4);
  CHECK(region_sides(nd, nd.region_index("W2")) == 4);
  CHECK(region_sides(nd, nd.region_index("W1")) == 6);
  CHECK(region_sides(nd, nd.region_index("Rbig")) == 6);
}

TEST_CASE("empty diagram with positive genus is rejected") {
  HeegaardDiagram dg;
  dg.genus = 1;
  dg.family_count = 2;
  dg.curves_per_family = 1;
  dg.curves.push_back({"a", 1});
  dg.curve_by_id["a"] = 0;
  dg.curves.push_back({"b", 2});
  dg.curve_by_id["b"] = 1;
  ValidationReport rep = validate(dg);
  CHECK(!rep.ok());
  bool euler_or_empty = false;
  for (const auto& i : rep.issues)
    if (i.code == "euler-mismatch" || i.code == "empty-curve") euler_or_empty = true;
  CHECK(euler_or_empty);
}

TEST_CASE("validator reports the offending element") {
  // arc referencing a missing vertex
  std::string broken = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 1
curve a family 1
curve b family 2
vertex x pair 1 2
arc a1 curve a tail x 0 head q 2
)";
  CHECK_THROWS_WITH_AS(parse_diagram(broken),
                       doctest::Contains("unknown vertex 'q'"), ParseError);

  // same-family crossing
  std::string samefam = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 1
curve a family 1
curve b family 2
vertex x pair 1 1
arc a1 curve a tail x 0 head x 2
arc b1 curve b tail x 1 head x 3
region R chi 1
cycle a1+ b1+ a1- b1-
corners x:1 x:2 x:3 x:0
)";
  try {
    parse_diagram(samefam);
    FAIL("expected validation failure");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("same-family-intersection") != std::string::npos);
  }

  // unclaimed quadrant: drop one corner claim and one cycle step
  std::string unclaimed = R"(heegaard-diagram v1
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
corners x:1 x:2 x:3
)";
  try {
    parse_diagram(unclaimed);
    FAIL("expected validation failure");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("corner-mismatch") != std::string::npos);
  }
}

TEST_CASE("quadrant tables of the triple fixture") {
  HeegaardDiagram tt = fixture("torus_triple");
  int T1 = tt.region_index("T1"), T2 = tt.region_index("T2"), H = tt.region_index("H");
  CHECK(quadrant_regions(tt, tt.vertex_index("x")) == std::array<int, 4>{H, T1, H, T2});
  CHECK(quadrant_regions(tt, tt.vertex_index("y")) == std::array<int, 4>{H, T1, H, T2});
  CHECK(quadrant_regions(tt, tt.vertex_index("z")) == std::array<int, 4>{T1, H, T2, H});

  HeegaardDiagram s3 = fixture("s3_genus1");
  auto q = quadrant_regions(s3, 0);
  for (int i = 0; i < 4; ++i) CHECK(q[i] == 0);
}

TEST_CASE("corner counts sum to 4V") {
  for (const auto& [name, text] : bundled_fixtures()) {
    CAPTURE(name);
    HeegaardDiagram dg = parse_diagram(text);
    size_t corners = 0;
    for (const auto& r : dg.regions) corners += r.corners.size();
    CHECK(corners == 4 * dg.vertices.size());
  }
}

TEST_CASE("emit/parse round trip is the identity on ids and structure") {
  for (const auto& [name, text] : bundled_fixtures()) {
    CAPTURE(name);
    HeegaardDiagram a = parse_diagram(text);
    HeegaardDiagram b = parse_diagram(emit_diagram(a));
    CHECK(emit_diagram(a) == emit_diagram(b));
    CHECK(a.vertices.size() == b.vertices.size());
    CHECK(a.arcs.size() == b.arcs.size());
    for (size_t i = 0; i < a.regions.size(); ++i) {
      CHECK(a.regions[i].id == b.regions[i].id);
      CHECK(a.regions[i].cycles == b.regions[i].cycles);
    }
  }
}

TEST_CASE("flipping any curve orientation keeps the diagram valid") {
  for (const auto& [name, text] : bundled_fixtures()) {
    CAPTURE(name);
    HeegaardDiagram dg = parse_diagram(text);
    for (int c = 0; c < (int)dg.curves.size(); ++c) {
      HeegaardDiagram flipped = flip_curve(dg, c);
      CHECK(flipped.validated);
      // quadrant structure is orientation independent
      for (size_t v = 0; v < dg.vertices.size(); ++v)
        CHECK(flipped.vertices[v].quadrant_region == dg.vertices[v].quadrant_region);
      // arc sides swap
      for (size_t a = 0; a < dg.arcs.size(); ++a) {
        if (dg.arcs[a].curve == c) {
          CHECK(flipped.arcs[a].left_region == dg.arcs[a].right_region);
          CHECK(flipped.arcs[a].right_region == dg.arcs[a].left_region);
        } else {
          CHECK(flipped.arcs[a].left_region == dg.arcs[a].left_region);
        }
      }
    }
  }
}

TEST_CASE("region_sides flags non-disk regions") {
  // genus-1 region: the square fixture with chi lowered is invalid, so
  // build an annulus directly: two boundary cycles, chi 0. A torus with
  // one inessential... simplest honest case: two parallel curves of the
  // same family are not allowed, so use two families crossing nowhere is
  // unrepresentable; instead check the accessor on a synthetic region.
  HeegaardDiagram dg = fixture("s3_genus1");
  Region annulus;
  annulus.chi = 0;
  annulus.cycles.resize(2);
  dg.regions.push_back(annulus);
  CHECK(region_sides(dg, 1) == std::nullopt);
}
