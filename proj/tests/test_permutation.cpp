#include <doctest.h>

#include "fixtures.hpp"
#include "psub/errors.hpp"
#include "psub/permutation.hpp"

using namespace psub;

TEST_CASE("cycle parsing") {
  const auto p = parse_permutation("(1 2 3)(4 5)", 5);
  // 1-based view [2,3,1,5,4]
  CHECK(p.images() == std::vector<std::uint32_t>{1, 2, 0, 4, 3});

  const auto id = parse_permutation("()", 4);
  CHECK(id.is_identity());
  CHECK(id.degree() == 4);

  CHECK_THROWS_AS(parse_permutation("(1 2 7)", 5), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 2", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("", 4), parse_error);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 4), parse_error);

  // commas are accepted as separators
  CHECK(parse_permutation("(1,2,3)", 3) == parse_permutation("(1 2 3)", 3));
}

TEST_CASE("formatting is canonical and round-trips") {
  CHECK(format_cycles(parse_permutation("(4 5)(1 2 3)", 5)) == "(1 2 3)(4 5)");
  CHECK(format_cycles(Permutation(6)) == "()");
  CHECK(format_cycles(parse_permutation("(2 1)", 3)) == "(1 2)");

  fixtures::rng64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto deg = 1 + static_cast<unsigned>(rng.below(12));
    const auto p = fixtures::random_permutation(deg, rng);
    CHECK(parse_permutation(format_cycles(p), deg) == p);
  }
}

TEST_CASE("composition, inverse, order") {
  fixtures::rng64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto deg = 1 + static_cast<unsigned>(rng.below(10));
    const auto p = fixtures::random_permutation(deg, rng);
    const auto q = fixtures::random_permutation(deg, rng);
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(p.inverse().then(p).is_identity());
    // (p q)^-1 = q^-1 p^-1
    CHECK(p.then(q).inverse() == q.inverse().then(p.inverse()));
  }

  CHECK(parse_permutation("(1 2 3)(4 5)", 5).order() == 6);
  CHECK(parse_permutation("(1 2)", 4).order() == 2);
  CHECK(Permutation(3).order() == 1);

  // right-action convention: apply left operand first
  const auto a = parse_permutation("(1 2)", 3);
  const auto b = parse_permutation("(2 3)", 3);
  const auto ab = a.then(b);
  CHECK(ab(0) == 2);  // 1 -> 2 -> 3

  CHECK_THROWS_AS(Permutation({0, 0, 1}), invalid_permutation);
  CHECK_THROWS_AS(a.then(parse_permutation("(1 2)", 4)), invalid_permutation);
}
