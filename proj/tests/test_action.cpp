#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psub/action.hpp"
#include "psub/errors.hpp"

using namespace psub;

namespace {

SubgroupHandle sub_of(const FiniteGroup& g,
                      std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* s : gens) ps.push_back(parse_permutation(s, g.degree()));
  return subgroup_generated_by(g, ps);
}

}  // namespace

TEST_CASE("coset action of A5 on A4 cosets") {
  const auto a5 = fixtures::a5();
  const auto a4 = sub_of(a5, {"(1 2 3)", "(2 3 4)"});
  REQUIRE(a4.order() == 12);
  const auto act = coset_action(a5, a4);
  CHECK(act.image.degree() == 5);
  CHECK(act.image.order() == 60);
  CHECK(act.kernel.order() == 1);  // A5 simple, faithful degree-5 action
}

TEST_CASE("coset action of G on itself is trivial") {
  const auto s3 = fixtures::s3();
  const auto act = coset_action(s3, full_subgroup(s3));
  CHECK(act.image.degree() == 1);
  CHECK(act.image.order() == 1);
  CHECK(act.kernel.order() == 6);
}

TEST_CASE("coset action of S4 on a point stabilizer") {
  const auto s4 = fixtures::s4();
  const auto stab = sub_of(s4, {"(2 3)", "(2 3 4)"});  // fixes point 1
  REQUIRE(stab.order() == 6);
  const auto act = coset_action(s4, stab);
  CHECK(act.image.degree() == 4);
  CHECK(act.image.order() == 24);
  CHECK(act.kernel.order() == 1);
  CHECK(act.image.order() * act.kernel.order() == s4.order());
}

TEST_CASE("core via coset action kernel matches the brute-force core") {
  const auto a5 = fixtures::a5();
  const auto a4 = sub_of(a5, {"(1 2 3)", "(2 3 4)"});
  CHECK(core_of(a5, a4).order() == 1);

  const auto s4 = fixtures::s4();
  const auto d8 = sub_of(s4, {"(1 2 3 4)", "(1 3)"});
  const auto core = core_of(s4, d8);
  oracles::PermSet gset, hset;
  for (std::uint32_t i = 0; i < s4.order(); ++i) gset.insert(s4.element(i));
  d8.members.for_each_set([&](std::size_t i) {
    hset.insert(s4.element(static_cast<std::uint32_t>(i)));
  });
  const auto ocore = oracles::core(4, gset, hset);
  CHECK(core.order() == ocore.size());
  core.members.for_each_set([&](std::size_t i) {
    CHECK(ocore.count(s4.element(static_cast<std::uint32_t>(i))) == 1);
  });

  // core of a normal subgroup is the subgroup itself
  const auto a4_in_s4 = sub_of(s4, {"(1 2 3)", "(2 3 4)"});
  CHECK(core_of(s4, a4_in_s4).members == a4_in_s4.members);
}

TEST_CASE("quotient") {
  const auto s4 = fixtures::s4();
  const auto v4 = sub_of(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto q = quotient(s4, v4);
  CHECK(q.order() == 6);
  CHECK(q.degree() == 6);

  CHECK_THROWS_AS(quotient(s4, sub_of(s4, {"(1 2 3 4)"})), not_normal);

  // trivial kernel returns the group itself
  const auto same = quotient(s4, trivial_subgroup(s4));
  CHECK(same.same_group(s4));
}

TEST_CASE("element image map is a homomorphism with the right kernel") {
  const auto s4 = fixtures::s4();
  const auto v4 = sub_of(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto act = quotient_action(s4, v4);
  const auto img = element_image_map(s4, act);

  fixtures::rng64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const auto i = static_cast<std::uint32_t>(rng.below(s4.order()));
    const auto j = static_cast<std::uint32_t>(rng.below(s4.order()));
    CHECK(img[s4.mul(i, j)] == act.image.mul(img[i], img[j]));
  }
  for (std::uint32_t i = 0; i < s4.order(); ++i)
    CHECK((img[i] == 0) == v4.members.test(i));

  // pullback of the full image is the full group; of the trivial image, V4
  dense_bitset full(act.image.order());
  for (std::uint32_t i = 0; i < act.image.order(); ++i) full.set(i);
  CHECK(preimage_members(s4, img, full).count() == 24);
  dense_bitset triv(act.image.order());
  triv.set(0);
  CHECK(preimage_members(s4, img, triv) == v4.members);
}
