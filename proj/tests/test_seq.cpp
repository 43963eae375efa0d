#include "doctest.h"

#include <random>

#include "support.hpp"
#include "zerosum/seq.hpp"

using namespace zerosum;
using testsupport::S;
using testsupport::random_seq;

TEST_CASE("parse reads the term grammar") {
  const Seq a = S(3, "3^2,-2^3");
  CHECK(a.mult(3) == 2);
  CHECK(a.mult(-2) == 3);
  CHECK(a.length() == 5);
  CHECK(a.sum() == 0);

  const Seq empty = S(1, "");
  CHECK(empty.empty());
  CHECK(empty.length() == 0);

  const Seq b = S(2, "2,-1^2");
  CHECK(b.mult(2) == 1);
  CHECK(b.mult(-1) == 2);

  // repeated mentions accumulate; separators may mix
  const Seq c = S(2, "1, 1\t-2^2 1");
  CHECK(c.mult(1) == 3);
  CHECK(c.mult(-2) == 2);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(S(3, "oops"), ParseError);
  CHECK_THROWS_AS(S(3, "3^"), ParseError);
  CHECK_THROWS_AS(S(3, "^2"), ParseError);
  CHECK_THROWS_AS(S(3, "3^^2"), ParseError);
  CHECK_THROWS_AS(S(3, "3^-1"), ParseError);
  CHECK_THROWS_AS(S(3, "4"), ParseError);
  CHECK_THROWS_AS(S(3, "-4"), ParseError);
  CHECK_THROWS_AS(S(3, "2^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(S(3, "1^4294967297"), ParseError);
  CHECK_THROWS_AS(S(0, "1"), std::invalid_argument);
  CHECK_THROWS_AS(S(65, "1"), std::invalid_argument);
}

TEST_CASE("format lists values in descending order") {
  CHECK(S(3, "-2^3,3^2").str() == "3^2,-2^3");
  CHECK(S(2, "-1,2,-1").str() == "2,-1^2");
  CHECK(S(1, "").str() == "");
  CHECK(S(3, "0^2").str() == "0^2");
}

TEST_CASE("negate mirrors multiplicities") {
  CHECK(negate(S(3, "3^2,-2^3")) == S(3, "-3^2,2^3"));
  CHECK(negate(S(1, "")) == S(1, ""));
  CHECK(negate(S(1, "1,-1")) == S(1, "1,-1"));
}

TEST_CASE("concat, remove and power") {
  CHECK(concat(S(1, "1"), S(1, "-1")) == S(1, "1,-1"));
  CHECK(remove(S(3, "3^2,-2^3"), S(3, "3,-2")) == S(3, "3,-2^2"));
  CHECK(power(S(3, "2^3,-3^2"), 2) == S(3, "2^6,-3^4"));
  CHECK(power(S(3, "2^3,-3^2"), 0) == S(3, ""));

  CHECK_THROWS_AS(remove(S(2, "2"), S(2, "1")), std::invalid_argument);
  CHECK_THROWS_AS(concat(S(2, "1"), S(3, "1")), std::invalid_argument);
}

TEST_CASE("sign canonicalization follows the examples") {
  CHECK(canonicalize_sign(S(3, "-3^2,2^3")) == S(3, "3^2,-2^3"));
  CHECK(canonicalize_sign(S(1, "1,-1")) == S(1, "1,-1"));
  CHECK(canonicalize_sign(S(2, "2,-1^2")) == S(2, "2,-1^2"));
}

TEST_CASE("sequence properties on random input") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const Seq a = random_seq(rng, k, 20);
    const Seq b = random_seq(rng, k, 20);

    // format round-trip
    CHECK(Seq::parse(a.str(), k) == a);

    // negate is an involution and preserves length
    CHECK(negate(negate(a)) == a);
    CHECK(negate(a).length() == a.length());
    CHECK(negate(a).sum() == -a.sum());

    // concat adds lengths and sums
    const Seq ab = concat(a, b);
    CHECK(ab.length() == a.length() + b.length());
    CHECK(ab.sum() == a.sum() + b.sum());
    CHECK(remove(ab, b) == a);

    // canonical representative is shared, idempotent, and one of the pair
    const Seq canon = canonicalize_sign(a);
    CHECK(canonicalize_sign(negate(a)) == canon);
    CHECK(canonicalize_sign(canon) == canon);
    CHECK((canon == a || canon == negate(a)));
  }
}
