#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "psub/permutation.hpp"

namespace psub {

struct Limits {
  std::size_t max_elements = 20000;
  std::size_t max_lattice_nodes = 200000;
};

// Indexed element list with reverse lookup. Position 0 is the identity;
// positions follow breadth-first closure from the identity, multiplying by
// generators in their given order, so indices (and every bitset built over
// them) are reproducible across runs and thread counts.
class ElementTable {
 public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  std::size_t size() const { return elems_.size(); }
  const Permutation& at(std::uint32_t i) const { return elems_[i]; }

  std::uint32_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? npos : it->second;
  }

 private:
  friend class FiniteGroup;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, permutation_hash> index_;
};

// A finite permutation group given by generators. Cheap to copy (shared,
// immutable representation); lazy caches are computed once and are safe for
// concurrent readers.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(unsigned degree, std::vector<Permutation> generators,
              std::string name = {},
              std::size_t element_cap = Limits{}.max_elements);

  unsigned degree() const;
  const std::vector<Permutation>& generators() const;
  const std::string& name() const;
  std::size_t element_cap() const;

  // Forces the element table; throws cap_exceeded beyond the element cap.
  const ElementTable& elements() const;
  std::size_t order() const { return elements().size(); }

  bool contains(const Permutation& p) const;
  std::uint32_t index_of(const Permutation& p) const;
  const Permutation& element(std::uint32_t i) const;

  // Index of generators()[k] in the element table.
  std::uint32_t generator_index(std::size_t k) const;

  std::uint32_t inverse_of(std::uint32_t i) const;
  std::uint64_t element_order(std::uint32_t i) const;

  //(previous element, generator position) pair for each element, from the
  // closure BFS; the identity has {npos, npos}.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& provenance()
      const;

  // r[i] = index of element(i) * element(j). Built on first use, kept for
  // the lifetime of the group; the workhorse of subgroup closures.
  const std::vector<std::uint32_t>& right_mult_by(std::uint32_t j) const;

  // t[i] = index of g^-1 * element(i) * g for generator position k.
  const std::vector<std::uint32_t>& conj_by_generator(std::size_t k) const;

  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;

  bool same_group(const FiniteGroup& o) const { return rep_ == o.rep_; }
  bool valid() const { return rep_ != nullptr; }

 private:
  struct Rep;
  std::shared_ptr<Rep> rep_;
};

}  // namespace psub
