#pragma once

#include <cstdint>
#include <vector>

#include "psub/subgroup.hpp"

namespace psub {

// Action of G on the right cosets of H. image is a transitive group of
// degree |G : H|; kernel equals Core_G(H).
struct CosetAction {
  FiniteGroup image;
  SubgroupHandle kernel;
  std::vector<std::uint32_t> coset_reps;  // element indices; rep 0 = identity
  std::vector<std::uint32_t> coset_of;    // element index -> coset id
};

CosetAction coset_action(const FiniteGroup& g, const SubgroupHandle& h);

// m[i] = index, in the image's element table, of the coset permutation
// induced by element i. The pullback map for quotient subgroups.
std::vector<std::uint32_t> element_image_map(const FiniteGroup& g,
                                             const CosetAction& action);

// Preimage in G of a subgroup of the image, given the image map.
dense_bitset preimage_members(const FiniteGroup& g,
                              const std::vector<std::uint32_t>& image_map,
                              const dense_bitset& image_members);

// Largest normal subgroup of G inside H (kernel of the coset action).
SubgroupHandle core_of(const FiniteGroup& g, const SubgroupHandle& h);

// Faithful permutation representation of G/N on the cosets of N; returns G
// itself when N is trivial. Throws not_normal when N is not normal.
FiniteGroup quotient(const FiniteGroup& g, const SubgroupHandle& n);

// As quotient(), but also exposes the action (for pullbacks); requires N
// nontrivial and normal.
CosetAction quotient_action(const FiniteGroup& g, const SubgroupHandle& n);

}  // namespace psub
