#pragma once

// Brute-force reference implementations used to freeze expected values and
// to cross-check the library on small groups. Everything here works on
// plain std::set<Permutation> with naive multiplication: no element tables,
// no bitsets, no shared code with the implementation paths under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "psub/permutation.hpp"

namespace oracles {

struct perm_less {
  bool operator()(const psub::Permutation& a,
                  const psub::Permutation& b) const {
    return a.images() < b.images();
  }
};

using PermSet = std::set<psub::Permutation, perm_less>;

struct permset_less {
  bool operator()(const PermSet& a, const PermSet& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        perm_less{});
  }
};

using SubgroupSet = std::set<PermSet, permset_less>;

PermSet closure(unsigned degree, const std::vector<psub::Permutation>& gens);

// All subgroups: cyclic subgroups closed under pairwise join, iterated to a
// fixpoint (complete: every subgroup is the join of its cyclic subgroups).
SubgroupSet all_subgroups(unsigned degree, const PermSet& elements);

// H is P-subnormal in G iff some chain of subgroups from H to G has prime
// index at every step; decided by enumerating all chains over the full
// subgroup set.
bool p_subnormal(unsigned degree, const PermSet& g, const PermSet& h);

PermSet conjugate(const PermSet& h, const psub::Permutation& x);
PermSet core(unsigned degree, const PermSet& g, const PermSet& h);
PermSet center(const PermSet& g);
std::vector<PermSet> derived_series(unsigned degree, const PermSet& g);
bool is_subnormal(unsigned degree, const PermSet& g, const PermSet& h);
PermSet o_p(unsigned degree, const PermSet& g, std::uint64_t p);

}  // namespace oracles
