#include <doctest.h>

#include "test_helpers.hpp"

using namespace hd;

TEST_CASE("parse errors carry a line locus") {
  CHECK_THROWS_WITH_AS(parse_diagram("not a diagram\n"),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("heegaard-diagram v1\ngenus\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram("heegaard-diagram v2\n"),
                       doctest::Contains("heegaard-diagram v1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_diagram(""), doctest::Contains("empty"), ParseError);
}

TEST_CASE("reference errors name the offending element") {
  std::string text = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 1
curve a family 1
curve b family 2
vertex x pair 1 2
arc a1 curve missing tail x 0 head x 2
)";
  CHECK_THROWS_WITH_AS(parse_diagram(text), doctest::Contains("unknown curve 'missing'"), ParseError);

  std::string badcycle = R"(heegaard-diagram v1
genus 1
families 2
curves-per-family 1
curve a family 1
curve b family 2
vertex x pair 1 2
arc a1 curve a tail x 0 head x 2
arc b1 curve b tail x 1 head x 3
region R chi 1
cycle a1+ b9+ a1- b1-
corners x:1 x:2 x:3 x:0
)";
  CHECK_THROWS_WITH_AS(parse_diagram(badcycle), doctest::Contains("unknown arc 'b9'"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  std::string text = std::string("# a comment\n\n") + bundled_fixtures().at("s3_genus1");
  text += "\n# trailing comment\n";
  HeegaardDiagram dg = parse_diagram(text);
  CHECK(dg.validated);
}

TEST_CASE("emit is stable under reparse") {
  for (const auto& [name, text] : bundled_fixtures()) {
    CAPTURE(name);
    std::string once = emit_diagram(parse_diagram(text));
    std::string twice = emit_diagram(parse_diagram(once));
    CHECK(once == twice);
  }
}
