#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "psub/subgroup.hpp"

namespace psub {

// Ascending chain H = chain[0] < ... < chain.back() = G with prime index at
// every step; indices lists those primes (empty iff H = G).
struct PChainWitness {
  std::vector<SubgroupHandle> chain;
  std::vector<std::uint64_t> indices;
};

// Re-validates strict containments and exact prime indices independently of
// how the chain was produced.
bool validate_chain(const PChainWitness& w);

struct PSubnormalObstruction {
  // Every subgroup reachable from H by prime-index ascents (H included);
  // none of them is G.
  std::vector<SubgroupHandle> reachable;
};

struct PSubnormalResult {
  bool ok = false;
  std::optional<PChainWitness> witness;
  std::optional<PSubnormalObstruction> obstruction;
};

// Normal series 1 = series[0] < ... < series.back() = G whose factors are
// Sylow subgroups for the primes in strictly descending order.
struct SylowTowerWitness {
  std::vector<SubgroupHandle> series;
  std::vector<std::uint64_t> primes;         // descending
  std::vector<std::uint64_t> factor_orders;  // p_i^{a_i}
};

struct TowerResult {
  bool ok = false;
  std::optional<SylowTowerWitness> witness;
  std::optional<std::uint64_t> failed_prime;
};

struct StructuralFlags {
  bool solvable = false;
  bool nilpotent = false;
  bool biprimary = false;
  bool perfect = false;
};

struct SupersolvableCertificate {
  bool value = false;
  // indices of all maximal subgroups on success
  std::vector<std::uint64_t> maximal_indices;
  std::optional<SubgroupHandle> offending_maximal;
};

struct SylowChainEntry {
  std::uint64_t prime = 0;
  SubgroupHandle sylow;
  PSubnormalResult result;
};

struct WSupersolvableReport {
  bool value = false;
  std::vector<SylowChainEntry> sylow_chains;
};

struct PrimaryCyclicEntry {
  SubgroupHandle rep;
  PSubnormalResult result;
};

struct ClassXReport {
  bool value = false;
  std::vector<PrimaryCyclicEntry> entries;
};

// Structure report for a Schmidt group S = [P]<y>; checks[i] records the
// outcome of structural property i+1 (see is_schmidt).
struct SchmidtReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned m = 0;  // multiplicative order of p mod q
  SubgroupHandle normal_sylow;
  std::uint32_t y = 0;  // generator of the cyclic Sylow q-subgroup
  std::array<bool, 6> checks{};
  bool all_checks() const {
    for (bool c : checks)
      if (!c) return false;
    return true;
  }
};

struct MinimalNonUReport {
  std::uint64_t p = 0;  // prime of the unique normal Sylow subgroup
  bool solvable_and_pi_le_3 = false;
  bool tower_if_not_schmidt = false;
  bool unique_normal_sylow_is_residual = false;
  bool frattini_quotient_minimal_normal = false;  // |P/Phi(P)| > p included
  bool frattini_supersolvably_embedded = false;
  bool complement_structure = false;
  bool nonprime_maximals_conjugate = false;
  bool all() const {
    return solvable_and_pi_le_3 && tower_if_not_schmidt &&
           unique_normal_sylow_is_residual &&
           frattini_quotient_minimal_normal &&
           frattini_supersolvably_embedded && complement_structure &&
           nonprime_maximals_conjugate;
  }
};

struct MinimalNonClassResult {
  bool value = false;
  std::optional<SubgroupHandle> failing_maximal;  // first maximal outside
  std::optional<MinimalNonUReport> u_report;      // class U, when value
  // class X, when value: biprimary minimal non-U with cyclic non-normal Sylow
  std::optional<bool> x_shape_holds;
};

struct TheoremReport {
  bool part1_lhs = false, part1_rhs = false, part1_agree = false;
  std::optional<SubgroupHandle> part1_witness;
  bool part3_lhs = false, part3_rhs = false, part3_agree = false;
  std::optional<SubgroupHandle> part3_witness;
  bool part4_applicable = false, part4_holds = false;
  bool agree() const {
    return part1_agree && part3_agree && (!part4_applicable || part4_holds);
  }
};

struct LatticeStats {
  std::size_t nodes = 0;
  std::size_t classes = 0;
  unsigned max_chain = 0;
};

struct ClassMembershipReport {
  bool supersolvable = false;     // U
  bool w_supersolvable = false;   // wU
  bool class_x = false;           // X
  bool sylow_tower = false;       // D
  bool solvable = false;
  bool nilpotent = false;
  StructuralFlags structure;
  SupersolvableCertificate u_certificate;
  WSupersolvableReport wu;
  ClassXReport x;
  TowerResult tower;
  LatticeStats lattice_stats;
};

}  // namespace psub
