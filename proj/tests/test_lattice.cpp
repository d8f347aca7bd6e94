#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "psub/action.hpp"
#include "psub/errors.hpp"
#include "psub/lattice.hpp"
#include "psub/numbers.hpp"

using namespace psub;

namespace {

SubgroupHandle sub_of(const FiniteGroup& g,
                      std::initializer_list<const char*> gens) {
  std::vector<Permutation> ps;
  for (const char* s : gens) ps.push_back(parse_permutation(s, g.degree()));
  return subgroup_generated_by(g, ps);
}

oracles::PermSet to_permset(const FiniteGroup& g, const dense_bitset& bits) {
  oracles::PermSet out;
  bits.for_each_set([&](std::size_t i) {
    out.insert(g.element(static_cast<std::uint32_t>(i)));
  });
  return out;
}

// node set == independently enumerated subgroup set
void check_against_oracle(const FiniteGroup& g) {
  const auto lat = build_lattice(g);
  oracles::PermSet elements;
  for (std::uint32_t i = 0; i < g.order(); ++i) elements.insert(g.element(i));
  const auto subs = oracles::all_subgroups(g.degree(), elements);
  REQUIRE(lat.size() == subs.size());
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    CHECK(subs.count(to_permset(g, lat.node(i).members)) == 1);
}

}  // namespace

TEST_CASE("full lattice node counts match the enumeration oracle") {
  const auto a4 = fixtures::a4();
  CHECK(build_lattice(a4).size() == 10);
  CHECK(build_lattice(fixtures::s3()).size() == 6);

  check_against_oracle(fixtures::s3());
  check_against_oracle(fixtures::a4());
  check_against_oracle(fixtures::s4());
  check_against_oracle(fixtures::q8());
  check_against_oracle(fixtures::cyclic(12));
  check_against_oracle(fixtures::a5());
}

TEST_CASE("node numbering extends containment; bottom and top") {
  const auto lat = build_lattice(fixtures::s4());
  CHECK(lat.node(lat.bottom()).order == 1);
  CHECK(lat.node(lat.top()).order == 24);
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    for (std::uint32_t j = i + 1; j < lat.size(); ++j)
      CHECK_FALSE(lat.node(j).members.is_subset_of(lat.node(i).members));
}

TEST_CASE("covers are minimal strict containments; prime index forces cover") {
  const auto lat = build_lattice(fixtures::s4());
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    for (auto j : lat.upper_covers(i)) {
      CHECK(lat.node(i).members.is_subset_of(lat.node(j).members));
      // nothing strictly between
      for (std::uint32_t k = 0; k < lat.size(); ++k) {
        if (k == i || k == j) continue;
        const bool between =
            lat.node(i).members.is_subset_of(lat.node(k).members) &&
            lat.node(k).members.is_subset_of(lat.node(j).members);
        CHECK_FALSE(between);
      }
      // symmetry of the two cover directions
      const auto& lows = lat.lower_covers(j);
      CHECK(std::find(lows.begin(), lows.end(), i) != lows.end());
    }
  }
  // every prime-index containment is a cover
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    for (std::uint32_t j = 0; j < lat.size(); ++j) {
      if (lat.node(j).order <= lat.node(i).order) continue;
      if (lat.node(j).order % lat.node(i).order) continue;
      if (!is_prime(lat.node(j).order / lat.node(i).order)) continue;
      if (!lat.node(i).members.is_subset_of(lat.node(j).members)) continue;
      const auto& ups = lat.upper_covers(i);
      CHECK(std::find(ups.begin(), ups.end(), j) != ups.end());
      CHECK(lat.prime_edge(i, j));
    }
}

TEST_CASE("maximal subgroups of A4, S4 and a prime cycle") {
  const auto a4 = fixtures::a4();
  auto maxs = maximal_subgroups(a4);
  std::map<std::uint64_t, int> by_order;
  for (const auto& m : maxs) by_order[m.order()]++;
  CHECK(by_order == std::map<std::uint64_t, int>{{3, 4}, {4, 1}});

  const auto s4 = fixtures::s4();
  maxs = maximal_subgroups(s4);
  by_order.clear();
  for (const auto& m : maxs) by_order[m.order()]++;
  CHECK(by_order == std::map<std::uint64_t, int>{{6, 4}, {8, 3}, {12, 1}});

  maxs = maximal_subgroups(fixtures::cyclic(7));
  REQUIRE(maxs.size() == 1);
  CHECK(maxs[0].order() == 1);
}

TEST_CASE("frattini subgroups") {
  CHECK(frattini(fixtures::a4()).order() == 1);
  CHECK(frattini(fixtures::cyclic(4)).order() == 2);
  const auto q8 = fixtures::q8();
  const auto f = frattini(q8);
  CHECK(f.order() == 2);
  CHECK(f.members == center(q8).members);
}

TEST_CASE("conjugacy classes of subgroups") {
  const auto lat = build_lattice(fixtures::a4());
  // 1, three Z2 (one class), four Z3 (one class), V4, A4
  REQUIRE(lat.conjugacy_classes().size() == 5);
  std::map<std::size_t, int> class_sizes;
  for (const auto& c : lat.conjugacy_classes()) class_sizes[c.size()]++;
  CHECK(class_sizes == std::map<std::size_t, int>{{1, 3}, {3, 1}, {4, 1}});
}

TEST_CASE("interval lattice [V4, S4] is the lattice of S4/V4") {
  const auto s4 = fixtures::s4();
  const auto v4 = sub_of(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto interval = build_lattice(s4, v4);
  for (std::uint32_t i = 0; i < interval.size(); ++i)
    CHECK(v4.members.is_subset_of(interval.node(i).members));
  const auto q = quotient(s4, v4);
  const auto qlat = build_lattice(q);
  REQUIRE(interval.size() == qlat.size());  // order-isomorphic posets
  // orders correspond via |K| = |K/V4| * |V4|
  std::multiset<std::uint64_t> io, qo;
  for (std::uint32_t i = 0; i < interval.size(); ++i)
    io.insert(interval.node(i).order);
  for (std::uint32_t i = 0; i < qlat.size(); ++i)
    qo.insert(qlat.node(i).order * v4.order());
  CHECK(io == qo);
}

TEST_CASE("interval lattice with a non-normal base") {
  const auto s4 = fixtures::s4();
  const auto z4 = sub_of(s4, {"(1 2 3 4)"});
  const auto interval = build_lattice(s4, z4);
  // overgroups of a 4-cycle: Z4, D8, S4
  REQUIRE(interval.size() == 3);
  CHECK(interval.node(0).order == 4);
  CHECK(interval.node(1).order == 8);
  CHECK(interval.node(2).order == 24);
  CHECK(interval.prime_edge(0, 1));
  CHECK(interval.prime_edge(1, 2));
}

TEST_CASE("node cap") {
  CHECK_THROWS_AS(build_lattice(fixtures::s4(), {}, 5), cap_exceeded);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(fixtures::a5(), 5).order() == 5);
  const auto s4 = fixtures::s4();
  const auto syl = sylow_subgroup(s4, 2);
  CHECK(syl.order() == 8);
  // dihedral shape: exactly two elements of order 4
  int order4 = 0;
  syl.members.for_each_set([&](std::size_t i) {
    if (s4.element_order(static_cast<std::uint32_t>(i)) == 4) ++order4;
  });
  CHECK(order4 == 2);
  CHECK(sylow_subgroup(fixtures::q8(), 2).order() == 8);
  CHECK_THROWS_AS(sylow_subgroup(s4, 5), no_such_prime);
  CHECK_THROWS_AS(sylow_subgroup(s4, 6), no_such_prime);
}

TEST_CASE("chief series") {
  const auto s4 = fixtures::s4();
  const auto cs = chief_series(s4);
  REQUIRE(cs.factor_orders == std::vector<std::uint64_t>{4, 3, 2});
  REQUIRE(cs.series.size() == 4);
  CHECK(cs.series[0].order() == 1);
  CHECK(cs.series[1].order() == 4);
  CHECK(cs.series[2].order() == 12);
  CHECK(cs.series[3].order() == 24);
  for (const auto& h : cs.series) CHECK(is_normal(s4, h));

  const auto z6 = fixtures::cyclic(6);
  const auto cs6 = chief_series(z6);
  std::multiset<std::uint64_t> fo(cs6.factor_orders.begin(),
                                  cs6.factor_orders.end());
  CHECK(fo == std::multiset<std::uint64_t>{2, 3});

  // series through a prescribed normal subgroup
  const auto a4n = sub_of(s4, {"(1 2 3)", "(2 3 4)"});
  const auto through = chief_series(s4, a4n);
  REQUIRE(through.through_split.has_value());
  CHECK(*through.through_split == 2);
  CHECK(through.series[2].members == a4n.members);

  CHECK_THROWS_AS(chief_series(s4, sub_of(s4, {"(1 2)"})), not_normal);
}

TEST_CASE("cyclic primary subgroup class representatives") {
  const auto reps_a4 = cyclic_primary_subgroup_reps(fixtures::a4());
  REQUIRE(reps_a4.size() == 2);
  std::multiset<std::uint64_t> orders;
  for (const auto& r : reps_a4) orders.insert(r.order());
  CHECK(orders == std::multiset<std::uint64_t>{2, 3});

  const auto reps_z4 = cyclic_primary_subgroup_reps(fixtures::cyclic(4));
  REQUIRE(reps_z4.size() == 2);
  orders.clear();
  for (const auto& r : reps_z4) orders.insert(r.order());
  CHECK(orders == std::multiset<std::uint64_t>{2, 4});

  const auto s4 = fixtures::s4();
  const auto reps_s4 = cyclic_primary_subgroup_reps(s4);
  REQUIRE(reps_s4.size() == 4);
  orders.clear();
  for (const auto& r : reps_s4) orders.insert(r.order());
  CHECK(orders == std::multiset<std::uint64_t>{2, 2, 3, 4});

  // every rep is cyclic of prime-power order, generated by its generator
  for (const auto& r : reps_s4) {
    CHECK(is_prime_power(r.order()));
    REQUIRE(r.generators.size() == 1);
    CHECK(closure_indices(r.ambient, r.generators) == r.members);
  }
}

TEST_CASE("max chain length") {
  CHECK(build_lattice(fixtures::s4()).max_chain_length() == 5);
  CHECK(build_lattice(fixtures::cyclic(8)).max_chain_length() == 4);
  CHECK(build_lattice(fixtures::a5()).max_chain_length() == 5);
}
