#include "psub/action.hpp"

#include <cassert>

#include "psub/errors.hpp"

namespace psub {

CosetAction coset_action(const FiniteGroup& g, const SubgroupHandle& h) {
  ensure_subgroup_of(g, h);
  const auto n = g.order();
  const auto reps = right_transversal(g, h.members);
  std::vector<std::uint32_t> coset_of(n, ElementTable::npos);
  for (std::uint32_t c = 0; c < reps.size(); ++c) {
    const Permutation& pr = g.element(reps[c]);
    h.members.for_each_set([&](std::size_t x) {
      coset_of[g.index_of(g.element(static_cast<std::uint32_t>(x)).then(pr))] =
          c;
    });
  }

  const auto ncosets = static_cast<unsigned>(reps.size());
  std::vector<Permutation> image_gens;
  image_gens.reserve(g.generators().size());
  for (const auto& pg : g.generators()) {
    std::vector<std::uint32_t> images(ncosets);
    for (std::uint32_t c = 0; c < ncosets; ++c)
      images[c] = coset_of[g.index_of(g.element(reps[c]).then(pg))];
    image_gens.emplace_back(std::move(images));
  }
  FiniteGroup image(ncosets, std::move(image_gens),
                    g.name().empty() ? std::string{}
                                     : g.name() + "/coset-action",
                    g.element_cap());

  // Kernel = intersection of the conjugates of H over the transversal.
  dense_bitset kernel_bits = h.members;
  for (auto r : reps) {
    if (r == 0) continue;
    kernel_bits &= conjugate_members(g, h.members, r);
  }
  SubgroupHandle kernel = subgroup_from_members(g, std::move(kernel_bits));
  assert(image.order() * kernel.order() == g.order());

  return CosetAction{std::move(image), std::move(kernel), reps,
                     std::move(coset_of)};
}

std::vector<std::uint32_t> element_image_map(const FiniteGroup& g,
                                             const CosetAction& action) {
  const auto ncosets = action.coset_reps.size();
  std::vector<std::uint32_t> out(g.order());
  std::vector<std::uint32_t> images(ncosets);
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const Permutation& pi = g.element(i);
    for (std::uint32_t c = 0; c < ncosets; ++c)
      images[c] =
          action.coset_of[g.index_of(g.element(action.coset_reps[c]).then(pi))];
    out[i] = action.image.index_of(
        Permutation(std::vector<std::uint32_t>(images)));
    assert(out[i] != ElementTable::npos);
  }
  return out;
}

dense_bitset preimage_members(const FiniteGroup& g,
                              const std::vector<std::uint32_t>& image_map,
                              const dense_bitset& image_members) {
  dense_bitset bits(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i)
    if (image_members.test(image_map[i])) bits.set(i);
  return bits;
}

SubgroupHandle core_of(const FiniteGroup& g, const SubgroupHandle& h) {
  ensure_subgroup_of(g, h);
  dense_bitset bits = h.members;
  for (auto r : right_transversal(g, h.members)) {
    if (r == 0) continue;
    bits &= conjugate_members(g, h.members, r);
  }
  return subgroup_from_members(g, std::move(bits));
}

FiniteGroup quotient(const FiniteGroup& g, const SubgroupHandle& n) {
  ensure_subgroup_of(g, n);
  if (!is_normal(g, n)) throw not_normal("quotient by a non-normal subgroup");
  if (n.is_trivial()) return g;
  return coset_action(g, n).image;
}

CosetAction quotient_action(const FiniteGroup& g, const SubgroupHandle& n) {
  ensure_subgroup_of(g, n);
  if (!is_normal(g, n)) throw not_normal("quotient by a non-normal subgroup");
  assert(!n.is_trivial());
  return coset_action(g, n);
}

}  // namespace psub
