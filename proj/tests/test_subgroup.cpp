#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psub/errors.hpp"
#include "psub/subgroup.hpp"

using namespace psub;

namespace {

SubgroupHandle sub_of(const FiniteGroup& g,
                      std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* s : gens) ps.push_back(parse_permutation(s, g.degree()));
  return subgroup_generated_by(g, ps);
}

oracles::PermSet to_permset(const SubgroupHandle& h) {
  oracles::PermSet out;
  h.members.for_each_set([&](std::size_t i) {
    out.insert(h.ambient.element(static_cast<std::uint32_t>(i)));
  });
  return out;
}

}  // namespace

TEST_CASE("generated subgroups and Lagrange") {
  const auto s4 = fixtures::s4();
  const auto h = sub_of(s4, {"(1 2 3 4)"});
  CHECK(h.order() == 4);
  CHECK(s4.order() % h.order() == 0);
  CHECK(h.members.test(0));

  const auto full = full_subgroup(s4);
  CHECK(full.order() == 24);
  CHECK(trivial_subgroup(s4).order() == 1);

  CHECK_THROWS_AS(
      subgroup_generated_by(s4, {parse_permutation("(1 2 3 4 5)", 5)}),
      invalid_permutation);
  const auto a4 = fixtures::a4();
  CHECK_THROWS_AS(subgroup_generated_by(a4, {parse_permutation("(1 2)", 4)}),
                  not_a_subgroup);
}

TEST_CASE("subgroup_from_members derives generators") {
  const auto a4 = fixtures::a4();
  const auto v4 = sub_of(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto rebuilt = subgroup_from_members(a4, v4.members);
  CHECK(rebuilt.members == v4.members);
  CHECK(closure_indices(a4, rebuilt.generators) == v4.members);
}

TEST_CASE("normalizer of a 4-cycle in S4 is of order 8") {
  const auto s4 = fixtures::s4();
  const auto z4 = sub_of(s4, {"(1 2 3 4)"});
  const auto n = normalizer(s4, z4);
  // frozen from the elementwise oracle scan below
  CHECK(n.order() == 8);
  // oracle: count elements x with x^-1 Z4 x = Z4
  const auto gset = to_permset(full_subgroup(s4));
  const auto hset = to_permset(z4);
  std::size_t count = 0;
  for (const auto& x : gset)
    if (oracles::conjugate(hset, x) == hset) ++count;
  CHECK(n.order() == count);
}

TEST_CASE("normal closure and normality") {
  const auto a4 = fixtures::a4();
  const auto three_cycle = a4.index_of(parse_permutation("(1 2 3)", 4));
  std::vector<std::uint32_t> seed{three_cycle};
  const auto nc = normal_closure(a4, seed);
  CHECK(nc.order() == 12);  // conjugates of a 3-cycle generate A4

  const auto v4 = sub_of(a4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(is_normal(a4, v4));
  const auto z3 = sub_of(a4, {"(1 2 3)"});
  CHECK_FALSE(is_normal(a4, z3));
}

TEST_CASE("subnormality by descending normal closures") {
  const auto a4 = fixtures::a4();
  CHECK(is_subnormal(a4, sub_of(a4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  CHECK_FALSE(is_subnormal(a4, sub_of(a4, {"(1 2 3)"})));
  CHECK(is_subnormal(a4, full_subgroup(a4)));
  // subnormal but not normal: Z2 < V4 < A4
  const auto z2 = sub_of(a4, {"(1 2)(3 4)"});
  CHECK_FALSE(is_normal(a4, z2));
  CHECK(is_subnormal(a4, z2));
  // oracle agreement on all cyclic subgroups of S4
  const auto s4 = fixtures::s4();
  const auto gset = to_permset(full_subgroup(s4));
  for (std::uint32_t e = 0; e < s4.order(); ++e) {
    std::vector<std::uint32_t> gens{e};
    const auto h = subgroup_generated_by_indices(s4, gens);
    CHECK(is_subnormal(s4, h) ==
          oracles::is_subnormal(4, gset, to_permset(h)));
  }
}

TEST_CASE("derived series and solvability") {
  const auto a4 = fixtures::a4();
  const auto series = derived_series(a4);
  REQUIRE(series.size() == 3);
  CHECK(series[0].order() == 12);
  CHECK(series[1].order() == 4);
  CHECK(series[2].order() == 1);
  CHECK(derived_length(a4) == 2);

  const auto a5 = fixtures::a5();
  CHECK(derived_series(a5).size() == 1);  // perfect
  CHECK_FALSE(derived_length(a5).has_value());
  CHECK_FALSE(is_solvable(a5));
  CHECK(is_solvable(fixtures::s4()));

  // oracle agreement on A4
  const auto oseries = oracles::derived_series(4, to_permset(full_subgroup(a4)));
  REQUIRE(oseries.size() == series.size());
  for (std::size_t i = 0; i < series.size(); ++i)
    CHECK(to_permset(series[i]) == oseries[i]);
}

TEST_CASE("center") {
  CHECK(center(fixtures::q8()).order() == 2);
  CHECK(center(fixtures::s4()).order() == 1);
  CHECK(center(fixtures::cyclic(12)).order() == 12);
  // oracle agreement
  const auto q8 = fixtures::q8();
  CHECK(to_permset(center(q8)) ==
        oracles::center(to_permset(full_subgroup(q8))));
}

TEST_CASE("o_p and fitting") {
  const auto a4 = fixtures::a4();
  CHECK(o_p(a4, 2).order() == 4);
  CHECK(o_p(a4, 3).order() == 1);
  CHECK(o_p(a4, 5).order() == 1);  // p not dividing |G|
  const auto q8 = fixtures::q8();
  CHECK(o_p(q8, 2).order() == 8);  // p-group

  const auto s4 = fixtures::s4();
  const auto fit = fitting(s4);
  CHECK(fit.order() == 4);
  CHECK(is_normal(s4, fit));
  CHECK(fit.members == o_p(s4, 2).members);

  // oracle agreement on S4
  CHECK(to_permset(o_p(s4, 2)) ==
        oracles::o_p(4, to_permset(full_subgroup(s4)), 2));
  CHECK(to_permset(o_p(s4, 3)) ==
        oracles::o_p(4, to_permset(full_subgroup(s4)), 3));
}

TEST_CASE("intersection, join, conjugation") {
  const auto s4 = fixtures::s4();
  const auto d8 = sub_of(s4, {"(1 2 3 4)", "(1 3)"});
  const auto s3 = sub_of(s4, {"(1 2)", "(1 2 3)"});
  CHECK(d8.order() == 8);
  CHECK(s3.order() == 6);
  const auto meet = intersection(d8, s3);
  CHECK(meet.order() == 2);
  const auto joined = join(d8, s3);
  CHECK(joined.order() == 24);

  fixtures::rng64 rng(19);
  for (int t = 0; t < 20; ++t) {
    const auto x = static_cast<std::uint32_t>(rng.below(s4.order()));
    const auto conj = conjugate_subgroup(d8, x);
    CHECK(conj.order() == d8.order());
    CHECK(closure_indices(s4, conj.generators) == conj.members);
  }
}

TEST_CASE("centralizer") {
  const auto s4 = fixtures::s4();
  const auto z = sub_of(s4, {"(1 2)"});
  const auto c = centralizer(s4, z);
  CHECK(c.order() == 4);  // <(1 2)> x <(3 4)>
  CHECK(z.members.is_subset_of(c.members));
}

TEST_CASE("right transversal covers the group") {
  const auto s4 = fixtures::s4();
  const auto s3 = sub_of(s4, {"(1 2)", "(1 2 3)"});
  const auto reps = right_transversal(s4, s3.members);
  CHECK(reps.size() == 4);
  CHECK(reps[0] == 0);
  dense_bitset seen(s4.order());
  for (auto r : reps) {
    s3.members.for_each_set([&](std::size_t h) {
      seen.set(s4.mul(static_cast<std::uint32_t>(h), r));
    });
  }
  CHECK(seen.count() == s4.order());
}
