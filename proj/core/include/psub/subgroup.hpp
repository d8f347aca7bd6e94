#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "psub/bitset.hpp"
#include "psub/group.hpp"

namespace psub {

// A subgroup of a fixed ambient group: membership bitset over the ambient
// element table plus a generating set of element indices.
struct SubgroupHandle {
  FiniteGroup ambient;
  dense_bitset members;
  std::vector<std::uint32_t> generators;

  std::size_t order() const { return members.count(); }
  bool contains_index(std::uint32_t i) const { return members.test(i); }
  bool is_trivial() const { return order() == 1; }
  bool is_full() const { return order() == ambient.order(); }

  std::vector<Permutation> generator_perms() const;

  bool same_subgroup_as(const SubgroupHandle& o) const {
    return ambient.same_group(o.ambient) && members == o.members;
  }
};

SubgroupHandle trivial_subgroup(const FiniteGroup& g);
SubgroupHandle full_subgroup(const FiniteGroup& g);

// Closure of the given element indices under multiplication (BFS from the
// identity over right-multiplication tables).
dense_bitset closure_indices(const FiniteGroup& g,
                             std::span<const std::uint32_t> gens);

// As closure_indices, but gives up (returns nullopt) once more than
// max_size elements have been discovered.
std::optional<dense_bitset> closure_indices_bounded(
    const FiniteGroup& g, std::span<const std::uint32_t> gens,
    std::size_t max_size);

SubgroupHandle subgroup_generated_by_indices(
    const FiniteGroup& g, std::span<const std::uint32_t> gens);

// Throws not_a_subgroup if some permutation is not a member of g.
SubgroupHandle subgroup_generated_by(const FiniteGroup& g,
                                     const std::vector<Permutation>& gens);

// members must be closed under the group operation; derives a small
// generating set deterministically (greedy over ascending indices).
SubgroupHandle subgroup_from_members(const FiniteGroup& g,
                                     dense_bitset members);

// Standalone group on the same points, generated by the handle's generators.
FiniteGroup as_group(const SubgroupHandle& h);

// Membership mask of `sub` (a subgroup of `ambient_of_sub`) over the element
// table of `host`, where host's elements are permutations of the same degree.
// Every element of host must decide membership by permutation identity.
dense_bitset restrict_members(const FiniteGroup& host,
                              const SubgroupHandle& sub);

// Inverse direction: mask over `host` of the members of `sub`, all of which
// must be members of host (e.g. host ambient, sub inside a standalone copy
// of one of host's subgroups).
dense_bitset lift_members(const FiniteGroup& host, const SubgroupHandle& sub);

bool handle_contains(const SubgroupHandle& outer, const SubgroupHandle& inner);

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b);
SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b);

// x^-1 H x for the ambient element with index x.
SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, std::uint32_t x);
dense_bitset conjugate_members(const FiniteGroup& g, const dense_bitset& bits,
                               std::uint32_t x);

SubgroupHandle normalizer(const FiniteGroup& g, const SubgroupHandle& h);
SubgroupHandle centralizer(const FiniteGroup& g, const SubgroupHandle& h);

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h);
// H normal in K; requires H <= K.
bool is_normal_in(const SubgroupHandle& k, const SubgroupHandle& h);

// Smallest normal subgroup of g containing the given elements.
SubgroupHandle normal_closure(const FiniteGroup& g,
                              std::span<const std::uint32_t> seed);
// Smallest subgroup normal in K containing H; requires H <= K.
SubgroupHandle normal_closure_in(const SubgroupHandle& k,
                                 const SubgroupHandle& h);

// Descending normal closures: K0 = G, K_{i+1} = <H^{K_i}>; true iff the
// sequence stabilizes at H.
bool is_subnormal(const FiniteGroup& g, const SubgroupHandle& h);

SubgroupHandle center(const FiniteGroup& g);
SubgroupHandle center_of(const SubgroupHandle& h);

SubgroupHandle derived_of(const SubgroupHandle& h);
// G >= G' >= G'' >= ... until stabilization (last entry repeated once the
// series stops moving, i.e. the returned list has pairwise distinct entries).
std::vector<SubgroupHandle> derived_series(const FiniteGroup& g);
// Number of steps to reach the trivial subgroup, or nullopt if the series
// stabilizes above it (non-solvable).
std::optional<unsigned> derived_length(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

// Largest normal p-subgroup; the trivial subgroup when p does not divide |G|.
SubgroupHandle o_p(const FiniteGroup& g, std::uint64_t p);
// Join of o_p over the primes dividing |G| (largest normal nilpotent).
SubgroupHandle fitting(const FiniteGroup& g);

// Right-coset representatives of H in G; rep 0 is the identity, order is the
// BFS discovery order over generators.
std::vector<std::uint32_t> right_transversal(const FiniteGroup& g,
                                             const dense_bitset& members);

// Throws not_a_subgroup unless h belongs to g.
void ensure_subgroup_of(const FiniteGroup& g, const SubgroupHandle& h);

}  // namespace psub
