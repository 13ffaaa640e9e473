#include <doctest.h>

#include "fairdiv/rational.hpp"

using namespace fairdiv;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parses the wire grammar") {
  CHECK(*parse_rational("0") == Rational(0));
  CHECK(*parse_rational("7") == Rational(7));
  CHECK(*parse_rational("1/3") == Rational(1, 3));
  CHECK(*parse_rational("123456789012345678901234567890") ==
        Rational(BigInt("123456789012345678901234567890")));
  // Values reduce even when the text is not in lowest terms.
  CHECK(*parse_rational("2/4") == Rational(1, 2));
}

TEST_CASE("rejects everything outside the grammar") {
  for (const char* bad : {"", "-1", "-1/2", "01", "1/0", "0/5", "1/02", "1.5", "1/", "/3",
                          "1/3/4", " 1", "1 ", "+1", "a"}) {
    CAPTURE(bad);
    CHECK(!parse_rational(bad).has_value());
  }
}

TEST_CASE("formats in lowest terms") {
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(2, 6)) == "1/3");
  CHECK(format_rational(Rational(1, 3) + Rational(2, 3)) == "1");
}

TEST_CASE("parse and format are inverse on canonical strings") {
  for (const char* text : {"0", "1", "17/19", "1000000007", "3/1000"}) {
    CHECK(format_rational(*parse_rational(text)) == text);
  }
}

TEST_SUITE_END();
