#include <doctest.h>

#include "psub/suites.hpp"

using namespace psub;

namespace {

std::vector<GroupAnalysis> analyzed_fixture_corpus() {
  CorpusSpec spec;
  spec.seed = 0xC0FFEE;
  spec.descriptors = {
      "builtin:a4",     "builtin:a5",      "builtin:s4",
      "builtin:q8",     "builtin:e25_z3",  "builtin:e49_s3",
      "cyclic:12",      "dihedral:12",     "elem_abelian:3,2",
      "direct:cyclic:2;cyclic:3",
  };
  spec.random.max_degree = 5;
  spec.random.count_per_degree = 1;
  return analyze_corpus(corpus(spec));
}

const CheckResult& find_check(const SuiteReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  REQUIRE(false);
  static CheckResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("lemma suites pass on the fixture corpus") {
  const auto analyses = analyzed_fixture_corpus();
  const auto rep = verify_lemmas(analyses, 0xC0FFEE);
  for (const auto& c : rep.checks) {
    // The X \ wU strictness witness needs an order-400 group, which this
    // reduced corpus deliberately omits; the full corpus supplies it.
    if (c.name == "lemma13_strictness_witnesses") continue;
    INFO(c.name, ": ", c.first_counterexample);
    CHECK(c.violations == 0);
  }
  // the big checks actually ran
  CHECK(find_check(rep, "lemma1_prime_index_core_quotient_supersolvable")
            .checked > 0);
  CHECK(find_check(rep, "lemma3_1_intersection_with_normal").checked > 0);
  CHECK(find_check(rep, "lemma3_4_conjugation").checked > 0);
  CHECK(find_check(rep, "lemma4_1_intersection_with_any_subgroup").checked >
        0);
  CHECK(find_check(rep, "lemma5_subnormal_in_solvable_is_psubnormal").checked >
        0);
  CHECK(find_check(rep, "lemma6_psubgroup_subnormal_iff_in_op").checked > 0);
  CHECK(find_check(rep, "lemma8_largest_prime_psubnormal_subnormal").checked >
        0);
  CHECK(find_check(rep, "corollary_wsupersolvable_has_tower").checked > 0);
  CHECK(find_check(rep, "lemma12_cyclic_p_inherit_to_normal_and_quotient")
            .checked > 0);
  CHECK(find_check(rep, "lemma15_frattini_of_normal_sylow").checked > 0);
  CHECK(find_check(rep, "example1_intersection_obstruction_in_a5").checked ==
        1);
  // strictness witnesses: e49_s3 in wU\U, e25_z3 in D\X
  const auto& strict = find_check(rep, "lemma13_strictness_witnesses");
  CHECK(strict.checked == 3);
  // no order-400 group in this reduced corpus, so X\wU has no witness
  CHECK(strict.violations == 1);
}

TEST_CASE("theorem suites pass on the fixture corpus") {
  const auto analyses = analyzed_fixture_corpus();
  const auto rep = verify_theorems(analyses, 0xC0FFEE);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.first_counterexample);
    CHECK(c.violations == 0);
  }
  CHECK(find_check(rep, "theorem1_wsupersolvable_biconditional").checked ==
        analyses.size());
  CHECK(find_check(rep, "theorem3_class_x_biconditional").checked ==
        analyses.size());
  CHECK(find_check(rep, "theorem4_minimal_non_x_shape").checked > 0);
  CHECK(find_check(rep, "theorem2_subgroup_closure").checked > 0);
  CHECK(find_check(rep, "theorem2_quotient_closure").checked > 0);
}

TEST_CASE("structure suites pass on the fixture corpus") {
  const auto analyses = analyzed_fixture_corpus();
  const auto rep = verify_structure(analyses, 0xC0FFEE);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.first_counterexample);
    CHECK(c.violations == 0);
  }
  // a4 and e25_z3 are Schmidt; e49_s3 and the Schmidt groups are minimal
  // non-supersolvable
  CHECK(find_check(rep, "lemma9_schmidt_six_checks").checked >= 2);
  CHECK(find_check(rep, "lemma10_minimal_non_supersolvable_checks").checked >=
        3);
  CHECK(find_check(rep, "lemma14_minimal_non_u_biconditional").checked >= 3);
}

TEST_CASE("suite results are deterministic and jobs-independent") {
  CorpusSpec spec;
  spec.descriptors = {"builtin:a4", "builtin:s4", "cyclic:12"};
  spec.random.max_degree = 4;
  spec.random.count_per_degree = 1;
  const auto c = corpus(spec);
  const auto a1 = analyze_corpus(c, Limits{}, 1);
  const auto a2 = analyze_corpus(c, Limits{}, 2);
  const auto r1 = verify_lemmas(a1, 7);
  const auto r2 = verify_lemmas(a2, 7);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].name == r2.checks[i].name);
    CHECK(r1.checks[i].checked == r2.checks[i].checked);
    CHECK(r1.checks[i].violations == r2.checks[i].violations);
    CHECK(r1.checks[i].first_counterexample ==
          r2.checks[i].first_counterexample);
  }
}

TEST_CASE("cap-exceeded groups are recorded as skipped, never silently") {
  CorpusSpec spec;
  spec.descriptors = {"builtin:a4", "sym:6"};
  spec.random.max_degree = 0;  // no random entries
  Limits tiny;
  tiny.max_lattice_nodes = 20;  // S6 has far more subgroups
  const auto c = corpus(spec, tiny);
  REQUIRE(c.groups.size() == 2);
  const auto analyses = analyze_corpus(c, tiny);
  CHECK(analyses[1].skipped);
  const auto rep = verify_lemmas(analyses, 1, tiny);
  REQUIRE(rep.skipped.size() == 1);
  CHECK(rep.skipped[0].find("sym:6") == 0);
}
