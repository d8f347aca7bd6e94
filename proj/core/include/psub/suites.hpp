#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psub/catalog.hpp"

namespace psub {

struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;  // instances evaluated
  std::uint64_t violations = 0;
  std::string first_counterexample;
  bool pass() const { return violations == 0; }
};

// One corpus group with the heavyweight artifacts computed once: the full
// lattice and the classification report. Groups that hit a cap carry the
// reason instead.
struct GroupAnalysis {
  std::string label;
  FiniteGroup group;
  bool skipped = false;
  std::string skip_reason;
  std::optional<Lattice> lattice;
  std::optional<ClassMembershipReport> report;
};

GroupAnalysis analyze_group(const std::string& label, const FiniteGroup& g,
                            const Limits& limits = {});

// Builds the corpus and analyzes each entry; `jobs` parallelizes per-group
// analysis (results are independent of the thread count).
std::vector<GroupAnalysis> analyze_corpus(const Corpus& corpus,
                                          const Limits& limits = {},
                                          unsigned jobs = 1);

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> skipped;  // labels of skipped groups with reasons
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass()) return false;
    return true;
  }
};

// Lemma property suites: 1, 3(1-4), 4(1-2), 5, 6, 7, 8, the corollary
// (wU => tower), 11(3), 12, 13 (containments with strictness witnesses), 15,
// the external biprimary property, and the Example 1 scenario. Subgroup
// instances are sampled deterministically from the recorded seed.
SuiteReport verify_lemmas(const std::vector<GroupAnalysis>& corpus,
                          std::uint64_t seed, const Limits& limits = {});

// Theorem biconditionals (parts 1 and 3, both directions computed
// independently), part 4, and the part-2 closure tests (subgroup, quotient,
// subdirect, Frattini saturation).
SuiteReport verify_theorems(const std::vector<GroupAnalysis>& corpus,
                            std::uint64_t seed, const Limits& limits = {});

// Structure-report suites: Lemma 9 checks on every recognized Schmidt group,
// Lemma 10 checks on every minimal non-U group, Lemma 14's biconditional,
// and the Theorem part 4 shape on every minimal non-X group.
SuiteReport verify_structure(const std::vector<GroupAnalysis>& corpus,
                             std::uint64_t seed, const Limits& limits = {});

}  // namespace psub
