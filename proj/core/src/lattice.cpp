#include "psub/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "psub/errors.hpp"
#include "psub/numbers.hpp"

namespace psub {

namespace {

// Member bitset of the cyclic subgroup generated by element e.
dense_bitset cyclic_bits(const FiniteGroup& g, std::uint32_t e) {
  dense_bitset bits(g.order());
  bits.set(0);
  std::uint32_t cur = e;
  while (cur != 0) {
    bits.set(cur);
    cur = g.mul(cur, e);
  }
  return bits;
}

dense_bitset conj_bits_by_generator(const FiniteGroup& g,
                                    const dense_bitset& bits, std::size_t k) {
  const auto& table = g.conj_by_generator(k);
  dense_bitset out(bits.size());
  bits.for_each_set([&](std::size_t i) { out.set(table[i]); });
  return out;
}

struct Builder {
  const FiniteGroup& g;
  std::size_t node_cap;
  std::unordered_map<dense_bitset, std::uint32_t, dense_bitset_hash> index;
  std::vector<Lattice::Node> nodes;

  bool contains(const dense_bitset& b) const { return index.contains(b); }

  std::uint32_t insert(dense_bitset bits, std::vector<std::uint32_t> gens) {
    auto it = index.find(bits);
    if (it != index.end()) return it->second;
    if (nodes.size() >= node_cap)
      throw cap_exceeded("subgroup lattice exceeds node cap of " +
                         std::to_string(node_cap));
    const auto id = static_cast<std::uint32_t>(nodes.size());
    index.emplace(bits, id);
    Lattice::Node n;
    n.order = bits.count();
    n.members = std::move(bits);
    n.generators = std::move(gens);
    nodes.push_back(std::move(n));
    return id;
  }

  // Inserts the whole conjugation orbit of a new subgroup and returns the id
  // of its lexicographically least member (the class representative).
  std::uint32_t orbit_insert(dense_bitset bits,
                             std::vector<std::uint32_t> gens) {
    std::vector<std::uint32_t> orbit;
    orbit.push_back(insert(std::move(bits), std::move(gens)));
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      const auto id = orbit[qi];
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        dense_bitset nb = conj_bits_by_generator(g, nodes[id].members, k);
        if (contains(nb)) continue;
        const auto& table = g.conj_by_generator(k);
        std::vector<std::uint32_t> ngens;
        ngens.reserve(nodes[id].generators.size());
        for (auto x : nodes[id].generators) ngens.push_back(table[x]);
        orbit.push_back(insert(std::move(nb), std::move(ngens)));
      }
    }
    std::uint32_t rep = orbit[0];
    for (auto id : orbit)
      if (nodes[id].members.lex_less(nodes[rep].members)) rep = id;
    return rep;
  }
};

}  // namespace

Lattice build_lattice(const FiniteGroup& g,
                      const std::optional<SubgroupHandle>& base,
                      std::size_t node_cap) {
  const auto n = g.order();
  Builder b{g, node_cap, {}, {}};

  struct Atom {
    dense_bitset bits;
    std::uint32_t extension;  // element extending the joined side
  };
  std::vector<Atom> atoms;
  std::vector<std::uint32_t> worklist;
  bool use_orbits = true;

  if (!base) {
    b.insert([&] {
      dense_bitset t(n);
      t.set(0);
      return t;
    }(), {});
    std::unordered_map<dense_bitset, char, dense_bitset_hash> seen;
    for (std::uint32_t e = 1; e < n; ++e) {
      dense_bitset bits = cyclic_bits(g, e);
      if (!seen.emplace(bits, 1).second) continue;
      atoms.push_back(Atom{std::move(bits), e});
    }
    for (const auto& a : atoms) {
      if (b.contains(a.bits)) continue;
      worklist.push_back(b.orbit_insert(a.bits, {a.extension}));
    }
  } else {
    ensure_subgroup_of(g, *base);
    use_orbits = is_normal(g, *base);
    const auto bottom_id = b.insert(base->members, base->generators);
    if (!use_orbits) worklist.push_back(bottom_id);
    std::unordered_map<dense_bitset, char, dense_bitset_hash> seen;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (base->members.test(e)) continue;
      std::vector<std::uint32_t> gens = base->generators;
      gens.push_back(e);
      dense_bitset bits = closure_indices(g, gens);
      if (!seen.emplace(bits, 1).second) continue;
      atoms.push_back(Atom{std::move(bits), e});
    }
    for (const auto& a : atoms) {
      if (b.contains(a.bits)) continue;
      std::vector<std::uint32_t> gens = base->generators;
      gens.push_back(a.extension);
      const auto id = use_orbits ? b.orbit_insert(a.bits, std::move(gens))
                                 : b.insert(a.bits, std::move(gens));
      worklist.push_back(id);
    }
  }

  for (std::size_t wi = 0; wi < worklist.size(); ++wi) {
    const auto id = worklist[wi];
    for (const auto& a : atoms) {
      if (a.bits.is_subset_of(b.nodes[id].members)) continue;
      std::vector<std::uint32_t> gens = b.nodes[id].generators;
      gens.push_back(a.extension);
      dense_bitset jbits = closure_indices(g, gens);
      if (b.contains(jbits)) continue;
      const auto jid = use_orbits ? b.orbit_insert(std::move(jbits), std::move(gens))
                                  : b.insert(std::move(jbits), std::move(gens));
      worklist.push_back(jid);
    }
  }

  // Canonical numbering: lexicographic bitset order (extends containment).
  std::vector<std::uint32_t> order(b.nodes.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return b.nodes[x].members.lex_less(b.nodes[y].members);
  });

  Lattice lat;
  lat.ambient_ = g;
  lat.base_ = base;
  lat.nodes_.reserve(b.nodes.size());
  for (auto old : order) lat.nodes_.push_back(std::move(b.nodes[old]));
  for (std::uint32_t i = 0; i < lat.nodes_.size(); ++i)
    lat.index_.emplace(lat.nodes_[i].members, i);

  // Conjugacy classes by orbit of bitsets under generator conjugation. For
  // interval lattices with a non-normal base an orbit may pass through
  // bitsets that are not nodes; those are traversed but not collected.
  for (std::uint32_t i = 0; i < lat.nodes_.size(); ++i) {
    if (lat.nodes_[i].class_id != Lattice::npos) continue;
    const auto cid = static_cast<std::uint32_t>(lat.classes_.size());
    std::unordered_map<dense_bitset, char, dense_bitset_hash> visited;
    std::deque<dense_bitset> queue;
    visited.emplace(lat.nodes_[i].members, 1);
    queue.push_back(lat.nodes_[i].members);
    std::vector<std::uint32_t> members;
    while (!queue.empty()) {
      dense_bitset cur = std::move(queue.front());
      queue.pop_front();
      auto it = lat.index_.find(cur);
      if (it != lat.index_.end()) {
        lat.nodes_[it->second].class_id = cid;
        members.push_back(it->second);
      }
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        dense_bitset nb = conj_bits_by_generator(g, cur, k);
        if (visited.emplace(nb, 1).second) queue.push_back(std::move(nb));
      }
    }
    std::sort(members.begin(), members.end());
    lat.classes_.push_back(std::move(members));
  }

  lat.lazy_ = std::make_unique<Lattice::LazyState>();
  lat.lazy_->upper.resize(lat.nodes_.size());
  lat.lazy_->lower.resize(lat.nodes_.size());
  return lat;
}

std::uint32_t Lattice::find(const dense_bitset& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? npos : it->second;
}

SubgroupHandle Lattice::handle(std::uint32_t i) const {
  return SubgroupHandle{ambient_, nodes_[i].members, nodes_[i].generators};
}

const std::vector<std::uint32_t>& Lattice::lower_covers(std::uint32_t i) const {
  std::lock_guard<std::mutex> lock(lazy_->mutex);
  if (lazy_->lower[i]) return *lazy_->lower[i];
  const auto& bi = nodes_[i].members;
  const auto oi = nodes_[i].order;
  std::vector<std::uint32_t> cand;
  for (std::uint32_t j = 0; j < i; ++j) {
    if (nodes_[j].order >= oi || oi % nodes_[j].order != 0) continue;
    if (nodes_[j].members.is_subset_of(bi)) cand.push_back(j);
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [&](std::uint32_t x, std::uint32_t y) {
                     return nodes_[x].order > nodes_[y].order;
                   });
  std::vector<std::uint32_t> accepted;
  for (auto j : cand) {
    bool covered = false;
    for (auto a : accepted)
      if (nodes_[j].members.is_subset_of(nodes_[a].members)) {
        covered = true;
        break;
      }
    if (!covered) accepted.push_back(j);
  }
  std::sort(accepted.begin(), accepted.end());
  lazy_->lower[i] = std::move(accepted);
  return *lazy_->lower[i];
}

const std::vector<std::uint32_t>& Lattice::upper_covers(std::uint32_t i) const {
  std::lock_guard<std::mutex> lock(lazy_->mutex);
  if (lazy_->upper[i]) return *lazy_->upper[i];
  const auto& bi = nodes_[i].members;
  const auto oi = nodes_[i].order;
  std::vector<std::uint32_t> cand;
  for (std::uint32_t j = i + 1; j < nodes_.size(); ++j) {
    if (nodes_[j].order <= oi || nodes_[j].order % oi != 0) continue;
    if (bi.is_subset_of(nodes_[j].members)) cand.push_back(j);
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [&](std::uint32_t x, std::uint32_t y) {
                     return nodes_[x].order < nodes_[y].order;
                   });
  std::vector<std::uint32_t> accepted;
  for (auto j : cand) {
    bool covered = false;
    for (auto a : accepted)
      if (nodes_[a].members.is_subset_of(nodes_[j].members)) {
        covered = true;
        break;
      }
    if (!covered) accepted.push_back(j);
  }
  std::sort(accepted.begin(), accepted.end());
  lazy_->upper[i] = std::move(accepted);
  return *lazy_->upper[i];
}

bool Lattice::prime_edge(std::uint32_t lo, std::uint32_t hi) const {
  return is_prime(index_between(lo, hi));
}

unsigned Lattice::max_chain_length() const {
  std::lock_guard<std::mutex> lock(lazy_->mutex);
  if (lazy_->max_chain) return *lazy_->max_chain;
  // Longest chain is conjugation-invariant, so one DP value per class,
  // evaluated at the class's least node; lex order guarantees every strict
  // subgroup has a smaller node id.
  std::vector<unsigned> len(classes_.size(), 0);
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const auto cid = nodes_[i].class_id;
    if (classes_[cid][0] != i) continue;
    unsigned best = 0;
    for (std::uint32_t j = 0; j < i; ++j) {
      if (nodes_[j].order >= nodes_[i].order) continue;
      if (nodes_[i].order % nodes_[j].order != 0) continue;
      if (!nodes_[j].members.is_subset_of(nodes_[i].members)) continue;
      best = std::max(best, len[nodes_[j].class_id]);
    }
    len[cid] = best + 1;
  }
  lazy_->max_chain = len[nodes_.back().class_id];
  return *lazy_->max_chain;
}

std::vector<SubgroupHandle> maximal_subgroups(const Lattice& full) {
  std::vector<SubgroupHandle> out;
  for (auto i : full.lower_covers(full.top())) out.push_back(full.handle(i));
  return out;
}

std::vector<SubgroupHandle> maximal_subgroups(const FiniteGroup& g,
                                              std::size_t node_cap) {
  return maximal_subgroups(build_lattice(g, {}, node_cap));
}

SubgroupHandle frattini(const Lattice& full) {
  const auto& covers = full.lower_covers(full.top());
  dense_bitset bits = full.node(full.top()).members;
  for (auto i : covers) bits &= full.node(i).members;
  return subgroup_from_members(full.ambient(), std::move(bits));
}

SubgroupHandle frattini(const FiniteGroup& g, std::size_t node_cap) {
  return frattini(build_lattice(g, {}, node_cap));
}

SubgroupHandle sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw no_such_prime("p must be a prime dividing the group order");
  const std::uint64_t target = p_part(g.order(), p);

  auto is_p_element = [&](std::uint32_t x) {
    const auto o = g.element_order(x);
    return o > 1 && p_part(o, p) == o;
  };

  std::uint32_t seed = ElementTable::npos;
  for (std::uint32_t x = 1; x < g.order(); ++x)
    if (is_p_element(x)) {
      seed = x;
      break;
    }
  assert(seed != ElementTable::npos);

  std::vector<std::uint32_t> gens{seed};
  SubgroupHandle h = subgroup_generated_by_indices(g, gens);
  while (h.order() < target) {
    const SubgroupHandle norm = normalizer(g, h);
    // A p-element of N_G(H) outside H extends H to a larger p-group.
    std::uint32_t ext = ElementTable::npos;
    for (auto x = norm.members.find_first(); x != dense_bitset::npos;
         x = norm.members.find_next(x)) {
      const auto xi = static_cast<std::uint32_t>(x);
      if (!h.members.test(xi) && is_p_element(xi)) {
        ext = xi;
        break;
      }
    }
    assert(ext != ElementTable::npos);
    gens.push_back(ext);
    h = subgroup_generated_by_indices(g, gens);
  }
  return h;
}

namespace {

// Smallest normal subgroup of g containing the seed generators, abandoning
// the computation once it would exceed max_size elements.
std::optional<SubgroupHandle> normal_closure_bounded(
    const FiniteGroup& g, std::vector<std::uint32_t> gens,
    std::size_t max_size) {
  std::erase(gens, 0u);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  auto bits = closure_indices_bounded(g, gens, max_size);
  if (!bits) return std::nullopt;
  std::vector<std::pair<Permutation, Permutation>> conj;
  for (const auto& pg : g.generators()) conj.emplace_back(pg, pg.inverse());
  for (std::size_t wi = 0; wi < gens.size(); ++wi) {
    const Permutation ph = g.element(gens[wi]);
    for (const auto& [px, pxi] : conj) {
      const auto y = g.index_of(pxi.then(ph).then(px));
      if (!bits->test(y)) {
        gens.push_back(y);
        bits = closure_indices_bounded(g, gens, max_size);
        if (!bits) return std::nullopt;
      }
    }
  }
  return SubgroupHandle{g, std::move(*bits), std::move(gens)};
}

}  // namespace

ChiefSeries chief_series(const FiniteGroup& g,
                         const std::optional<SubgroupHandle>& through) {
  if (through) {
    ensure_subgroup_of(g, *through);
    if (!is_normal(g, *through))
      throw not_normal("chief series can only pass through a normal subgroup");
  }

  ChiefSeries out;
  out.series.push_back(trivial_subgroup(g));

  std::vector<dense_bitset> targets;
  if (through && !through->is_trivial() && !through->is_full())
    targets.push_back(through->members);
  targets.push_back(full_subgroup(g).members);

  for (std::size_t phase = 0; phase < targets.size(); ++phase) {
    const auto& target = targets[phase];
    while (!(out.series.back().members == target)) {
      const auto& cur = out.series.back();
      std::optional<SubgroupHandle> best;
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (cur.members.test(x) || !target.test(x)) continue;
        std::vector<std::uint32_t> seed = cur.generators;
        seed.push_back(x);
        const std::size_t bound = best ? best->order() : g.order();
        auto cand = normal_closure_bounded(g, std::move(seed), bound);
        if (!cand) continue;
        if (!best || cand->order() < best->order() ||
            (cand->order() == best->order() &&
             cand->members.lex_less(best->members)))
          best = std::move(cand);
      }
      assert(best && "a minimal normal overgroup always exists");
      out.factor_orders.push_back(best->order() / cur.order());
      out.series.push_back(std::move(*best));
    }
    if (through && phase == 0 && targets.size() == 2)
      out.through_split = out.factor_orders.size();
  }
  if (through && !out.through_split) {
    // `through` was trivial or the whole group.
    out.through_split = through->is_full() ? out.factor_orders.size() : 0;
  }
  return out;
}

std::vector<SubgroupHandle> cyclic_primary_subgroup_reps(
    const FiniteGroup& g) {
  struct Entry {
    dense_bitset bits;
    std::uint32_t generator;
  };
  std::unordered_map<dense_bitset, std::uint32_t, dense_bitset_hash> seen;
  std::vector<Entry> entries;
  for (std::uint32_t e = 1; e < g.order(); ++e) {
    if (!is_prime_power(g.element_order(e))) continue;
    dense_bitset bits = cyclic_bits(g, e);
    if (seen.contains(bits)) continue;
    seen.emplace(bits, static_cast<std::uint32_t>(entries.size()));
    entries.push_back(Entry{std::move(bits), e});
  }

  std::vector<std::uint32_t> order(entries.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return entries[a].bits.lex_less(entries[b].bits);
  });

  std::vector<char> taken(entries.size(), 0);
  std::vector<SubgroupHandle> reps;
  for (auto ei : order) {
    if (taken[ei]) continue;
    // Orbit of the bitset under generator conjugation.
    std::vector<std::uint32_t> orbit{ei};
    taken[ei] = 1;
    dense_bitset rep_bits = entries[ei].bits;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (std::size_t k = 0; k < g.generators().size(); ++k) {
        dense_bitset nb =
            conj_bits_by_generator(g, entries[orbit[qi]].bits, k);
        const auto it = seen.find(nb);
        assert(it != seen.end());
        if (!taken[it->second]) {
          taken[it->second] = 1;
          orbit.push_back(it->second);
          if (nb.lex_less(rep_bits)) rep_bits = std::move(nb);
        }
      }
    }
    const auto cyc_order = rep_bits.count();
    std::uint32_t gen = ElementTable::npos;
    for (auto x = rep_bits.find_first(); x != dense_bitset::npos;
         x = rep_bits.find_next(x)) {
      if (g.element_order(static_cast<std::uint32_t>(x)) == cyc_order) {
        gen = static_cast<std::uint32_t>(x);
        break;
      }
    }
    assert(gen != ElementTable::npos);
    reps.push_back(SubgroupHandle{g, std::move(rep_bits), {gen}});
  }
  std::sort(reps.begin(), reps.end(),
            [](const SubgroupHandle& a, const SubgroupHandle& b) {
              return a.members.lex_less(b.members);
            });
  return reps;
}

}  // namespace psub
