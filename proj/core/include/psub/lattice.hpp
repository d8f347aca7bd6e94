#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "psub/subgroup.hpp"

namespace psub {

// The subgroups of an ambient group (or of an interval [base, G]) with
// containment structure. Nodes are numbered by lexicographic bitset order,
// which linearly extends containment: node 0 is the bottom (base or trivial
// subgroup), the last node is G. Cover edges are computed per node on first
// use; results are deterministic functions of the node set.
class Lattice {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  struct Node {
    dense_bitset members;
    std::vector<std::uint32_t> generators;
    std::uint64_t order = 0;
    std::uint32_t class_id = npos;
  };

  const FiniteGroup& ambient() const { return ambient_; }
  const std::optional<SubgroupHandle>& base() const { return base_; }

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::uint32_t i) const { return nodes_[i]; }
  std::uint32_t bottom() const { return 0; }
  std::uint32_t top() const { return static_cast<std::uint32_t>(size() - 1); }

  std::uint32_t find(const dense_bitset& members) const;
  SubgroupHandle handle(std::uint32_t i) const;

  // Conjugacy classes of nodes under the ambient group, ordered by their
  // smallest node index; each class lists node ids ascending.
  const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const {
    return classes_;
  }
  std::uint32_t class_of(std::uint32_t i) const { return nodes_[i].class_id; }

  // Minimal strict overgroups / maximal strict subgroups within the node
  // set, ascending node ids. Memoized per node.
  const std::vector<std::uint32_t>& upper_covers(std::uint32_t i) const;
  const std::vector<std::uint32_t>& lower_covers(std::uint32_t i) const;

  std::uint64_t index_between(std::uint32_t lo, std::uint32_t hi) const {
    return nodes_[hi].order / nodes_[lo].order;
  }
  bool prime_edge(std::uint32_t lo, std::uint32_t hi) const;

  // Longest chain of strict containments from bottom to top (node count).
  unsigned max_chain_length() const;

 private:
  friend Lattice build_lattice(const FiniteGroup&,
                               const std::optional<SubgroupHandle>&,
                               std::size_t);

  struct LazyState {
    std::mutex mutex;
    std::vector<std::optional<std::vector<std::uint32_t>>> upper;
    std::vector<std::optional<std::vector<std::uint32_t>>> lower;
    std::optional<unsigned> max_chain;
  };

  FiniteGroup ambient_;
  std::optional<SubgroupHandle> base_;
  std::vector<Node> nodes_;
  std::unordered_map<dense_bitset, std::uint32_t, dense_bitset_hash> index_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::unique_ptr<LazyState> lazy_;
};

// Full subgroup lattice (base absent): join-closure of all cyclic subgroups.
// Interval lattice [base, G]: exactly the subgroups between base and G.
// Throws cap_exceeded beyond node_cap.
Lattice build_lattice(const FiniteGroup& g,
                      const std::optional<SubgroupHandle>& base = {},
                      std::size_t node_cap = Limits{}.max_lattice_nodes);

// Coatoms of the full lattice, ascending node order (all conjugates).
std::vector<SubgroupHandle> maximal_subgroups(const Lattice& full);
std::vector<SubgroupHandle> maximal_subgroups(
    const FiniteGroup& g, std::size_t node_cap = Limits{}.max_lattice_nodes);

// Intersection of all maximal subgroups.
SubgroupHandle frattini(const Lattice& full);
SubgroupHandle frattini(const FiniteGroup& g,
                        std::size_t node_cap = Limits{}.max_lattice_nodes);

// Sylow p-subgroup by iterated normalizer extension (no lattice needed).
// Throws no_such_prime if p does not divide |G|.
SubgroupHandle sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

// Normal series from the trivial subgroup to G whose factors are minimal
// normal subgroups of the successive quotients.
struct ChiefSeries {
  std::vector<SubgroupHandle> series;  // trivial first, G last
  std::vector<std::uint64_t> factor_orders;
  // Number of factors below `through` when one was requested.
  std::optional<std::size_t> through_split;
};

ChiefSeries chief_series(const FiniteGroup& g,
                         const std::optional<SubgroupHandle>& through = {});

// One representative per conjugacy class of nontrivial cyclic subgroups of
// prime-power order, in lexicographic bitset order of the representative.
std::vector<SubgroupHandle> cyclic_primary_subgroup_reps(const FiniteGroup& g);

}  // namespace psub
