#include <doctest.h>

#include "hd/quarter.hpp"

using hd::Quarter;
using hd::Twelfth;

TEST_CASE("quarter arithmetic and printing") {
  Quarter a = Quarter::from_quarters(-1);
  Quarter b = Quarter::from_quarters(2);
  CHECK((a + b).str() == "1/4");
  CHECK((a - b).str() == "-3/4");
  CHECK((b * 2).str() == "1");
  CHECK(a.str() == "-1/4");
  CHECK(b.str() == "1/2");
  CHECK(Quarter{}.str() == "0");
  CHECK(Quarter::from_integer(-3).str() == "-3");
  CHECK((-a).str() == "1/4");
}

TEST_CASE("integer conversion is exact") {
  CHECK(Quarter::from_integer(7).is_integer());
  CHECK(Quarter::from_integer(7).to_integer() == 7);
  CHECK(!Quarter::from_quarters(6).is_integer());
  CHECK_THROWS_AS((void)Quarter::from_quarters(1).to_integer(), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Quarter::from_quarters(-1) < Quarter{});
  CHECK(Quarter::from_quarters(3) >= Quarter::from_quarters(3));
  CHECK(Quarter::from_quarters(3) > Quarter::from_quarters(2));
}

TEST_CASE("twelfth intermediates convert back only when divisible") {
  Twelfth t = Twelfth::from_quarter(Quarter::from_quarters(5));  // 15 twelfths
  CHECK(t.to_quarter() == Quarter::from_quarters(5));
  Twelfth third = Twelfth::from_quarters_over_three(2);  // 2/12
  CHECK_THROWS_AS((void)third.to_quarter(), std::domain_error);
  CHECK((third * 3).to_quarter() == Quarter::from_quarters(2));
  CHECK((t + third - third).to_quarter() == Quarter::from_quarters(5));
}
