#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psub/errors.hpp"
#include "psub/group.hpp"

using namespace psub;

TEST_CASE("orders of small groups") {
  CHECK(fixtures::s3().order() == 6);
  CHECK(fixtures::s4().order() == 24);
  CHECK(fixtures::a4().order() == 12);
  CHECK(fixtures::q8().order() == 8);
  CHECK(fixtures::cyclic(12).order() == 12);

  // order 60 frozen from the brute-force closure oracle
  const auto a5 = fixtures::a5();
  const auto oracle =
      oracles::closure(5, {parse_permutation("(1 2 3 4 5)", 5),
                           parse_permutation("(1 2 3)", 5)});
  CHECK(oracle.size() == 60);
  CHECK(a5.order() == oracle.size());
}

TEST_CASE("membership") {
  const auto a4 = fixtures::a4();
  CHECK_FALSE(a4.contains(parse_permutation("(1 2)", 4)));
  CHECK(a4.contains(parse_permutation("(1 2)(3 4)", 4)));
  CHECK(a4.contains(Permutation(4)));
  CHECK_THROWS_AS(a4.index_of(parse_permutation("(1 2)", 5)),
                  invalid_permutation);
}

TEST_CASE("element table is deterministic BFS from the identity") {
  const auto g1 = fixtures::s4();
  const auto g2 = fixtures::s4();
  REQUIRE(g1.order() == g2.order());
  CHECK(g1.element(0).is_identity());
  for (std::uint32_t i = 0; i < g1.order(); ++i)
    CHECK(g1.element(i) == g2.element(i));

  // provenance reconstructs each element from its BFS parent
  for (std::uint32_t i = 1; i < g1.order(); ++i) {
    const auto [prev, gen] = g1.provenance()[i];
    CHECK(g1.element(prev).then(g1.generators()[gen]) == g1.element(i));
  }
}

TEST_CASE("element cap") {
  std::vector<Permutation> gens{parse_permutation("(1 2 3 4 5)", 5),
                                parse_permutation("(1 2 3)", 5)};
  FiniteGroup capped(5, gens, "a5", 59);
  CHECK_THROWS_AS(capped.order(), cap_exceeded);
  FiniteGroup exact(5, gens, "a5", 60);
  CHECK(exact.order() == 60);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(FiniteGroup(3, {}), invalid_parameter);
  CHECK_THROWS_AS(FiniteGroup(0, {Permutation(1)}), invalid_parameter);
  CHECK_THROWS_AS(FiniteGroup(3, {Permutation(4)}), invalid_permutation);
}

TEST_CASE("multiplication helpers agree with permutation arithmetic") {
  const auto g = fixtures::a4();
  fixtures::rng64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto i = static_cast<std::uint32_t>(rng.below(g.order()));
    const auto j = static_cast<std::uint32_t>(rng.below(g.order()));
    CHECK(g.element(g.mul(i, j)) == g.element(i).then(g.element(j)));
    CHECK(g.right_mult_by(j)[i] == g.mul(i, j));
    CHECK(g.mul(i, g.inverse_of(i)) == 0);
    CHECK(g.element_order(i) == g.element(i).order());
  }
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const auto& table = g.conj_by_generator(k);
    const auto& pg = g.generators()[k];
    for (std::uint32_t i = 0; i < g.order(); ++i)
      CHECK(g.element(table[i]) == pg.inverse().then(g.element(i)).then(pg));
  }
}
