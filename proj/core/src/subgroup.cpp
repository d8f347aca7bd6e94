#include "psub/subgroup.hpp"

#include <algorithm>
#include <cassert>

#include "psub/errors.hpp"
#include "psub/lattice.hpp"
#include "psub/numbers.hpp"

namespace psub {

std::vector<Permutation> SubgroupHandle::generator_perms() const {
  std::vector<Permutation> out;
  out.reserve(generators.size());
  for (auto i : generators) out.push_back(ambient.element(i));
  return out;
}

void ensure_subgroup_of(const FiniteGroup& g, const SubgroupHandle& h) {
  if (!h.ambient.same_group(g))
    throw not_a_subgroup("handle belongs to a different ambient group");
}

SubgroupHandle trivial_subgroup(const FiniteGroup& g) {
  dense_bitset bits(g.order());
  bits.set(0);
  return SubgroupHandle{g, std::move(bits), {}};
}

SubgroupHandle full_subgroup(const FiniteGroup& g) {
  dense_bitset bits(g.order());
  std::vector<std::uint32_t> gens;
  for (std::uint32_t i = 0; i < g.order(); ++i) bits.set(i);
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    gens.push_back(g.generator_index(k));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase(gens, 0u);
  return SubgroupHandle{g, std::move(bits), std::move(gens)};
}

dense_bitset closure_indices(const FiniteGroup& g,
                             std::span<const std::uint32_t> gens) {
  dense_bitset vis(g.order());
  vis.set(0);
  std::vector<std::uint32_t> queue{0};
  queue.reserve(64);
  std::vector<const std::vector<std::uint32_t>*> tables;
  for (auto j : gens)
    if (j != 0) tables.push_back(&g.right_mult_by(j));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto x = queue[qi];
    for (const auto* t : tables) {
      const auto y = (*t)[x];
      if (!vis.test(y)) {
        vis.set(y);
        queue.push_back(y);
      }
    }
  }
  return vis;
}

std::optional<dense_bitset> closure_indices_bounded(
    const FiniteGroup& g, std::span<const std::uint32_t> gens,
    std::size_t max_size) {
  dense_bitset vis(g.order());
  vis.set(0);
  std::size_t found = 1;
  if (found > max_size) return std::nullopt;
  std::vector<std::uint32_t> queue{0};
  std::vector<const std::vector<std::uint32_t>*> tables;
  for (auto j : gens)
    if (j != 0) tables.push_back(&g.right_mult_by(j));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto x = queue[qi];
    for (const auto* t : tables) {
      const auto y = (*t)[x];
      if (!vis.test(y)) {
        if (++found > max_size) return std::nullopt;
        vis.set(y);
        queue.push_back(y);
      }
    }
  }
  return vis;
}

namespace {

std::vector<std::uint32_t> clean_generators(
    std::span<const std::uint32_t> gens) {
  std::vector<std::uint32_t> out(gens.begin(), gens.end());
  std::erase(out, 0u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SubgroupHandle subgroup_generated_by_indices(
    const FiniteGroup& g, std::span<const std::uint32_t> gens) {
  auto cleaned = clean_generators(gens);
  return SubgroupHandle{g, closure_indices(g, cleaned), std::move(cleaned)};
}

SubgroupHandle subgroup_generated_by(const FiniteGroup& g,
                                     const std::vector<Permutation>& gens) {
  std::vector<std::uint32_t> idx;
  idx.reserve(gens.size());
  for (const auto& p : gens) {
    const auto i = g.index_of(p);
    if (i == ElementTable::npos)
      throw not_a_subgroup("generator is not a member of the ambient group");
    idx.push_back(i);
  }
  return subgroup_generated_by_indices(g, idx);
}

SubgroupHandle subgroup_from_members(const FiniteGroup& g,
                                     dense_bitset members) {
  std::vector<std::uint32_t> gens;
  dense_bitset closed(g.order());
  closed.set(0);
  for (auto i = members.find_first(); i != dense_bitset::npos;
       i = members.find_next(i)) {
    if (closed.test(i)) continue;
    gens.push_back(static_cast<std::uint32_t>(i));
    closed = closure_indices(g, gens);
  }
  assert(closed == members && "member set must be closed");
  return SubgroupHandle{g, std::move(members), std::move(gens)};
}

FiniteGroup as_group(const SubgroupHandle& h) {
  std::vector<Permutation> gens = h.generator_perms();
  if (gens.empty()) gens.push_back(Permutation(h.ambient.degree()));
  return FiniteGroup(h.ambient.degree(), std::move(gens), {},
                     h.ambient.element_cap());
}

dense_bitset restrict_members(const FiniteGroup& host,
                              const SubgroupHandle& sub) {
  dense_bitset bits(host.order());
  const auto& amb = sub.ambient;
  for (std::uint32_t i = 0; i < host.order(); ++i) {
    const auto j = amb.index_of(host.element(i));
    if (j != ElementTable::npos && sub.members.test(j)) bits.set(i);
  }
  return bits;
}

dense_bitset lift_members(const FiniteGroup& host, const SubgroupHandle& sub) {
  dense_bitset bits(host.order());
  const auto& amb = sub.ambient;
  sub.members.for_each_set([&](std::size_t i) {
    const auto j = host.index_of(amb.element(static_cast<std::uint32_t>(i)));
    assert(j != ElementTable::npos);
    bits.set(j);
  });
  return bits;
}

bool handle_contains(const SubgroupHandle& outer, const SubgroupHandle& inner) {
  return inner.members.is_subset_of(outer.members);
}

SubgroupHandle intersection(const SubgroupHandle& a, const SubgroupHandle& b) {
  ensure_subgroup_of(a.ambient, b);
  return subgroup_from_members(a.ambient, a.members & b.members);
}

SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b) {
  ensure_subgroup_of(a.ambient, b);
  std::vector<std::uint32_t> gens(a.generators);
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return subgroup_generated_by_indices(a.ambient, gens);
}

dense_bitset conjugate_members(const FiniteGroup& g, const dense_bitset& bits,
                               std::uint32_t x) {
  dense_bitset out(g.order());
  const Permutation& px = g.element(x);
  const Permutation pxi = px.inverse();
  bits.for_each_set([&](std::size_t i) {
    out.set(g.index_of(pxi.then(g.element(static_cast<std::uint32_t>(i)))
                           .then(px)));
  });
  return out;
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, std::uint32_t x) {
  const auto& g = h.ambient;
  const Permutation& px = g.element(x);
  const Permutation pxi = px.inverse();
  std::vector<std::uint32_t> gens;
  gens.reserve(h.generators.size());
  for (auto i : h.generators)
    gens.push_back(g.index_of(pxi.then(g.element(i)).then(px)));
  return SubgroupHandle{g, conjugate_members(g, h.members, x),
                        std::move(gens)};
}

SubgroupHandle normalizer(const FiniteGroup& g, const SubgroupHandle& h) {
  ensure_subgroup_of(g, h);
  dense_bitset bits(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Permutation& px = g.element(x);
    const Permutation pxi = px.inverse();
    bool ok = true;
    for (auto i : h.generators) {
      const auto y = g.index_of(pxi.then(g.element(i)).then(px));
      if (!h.members.test(y)) {
        ok = false;
        break;
      }
    }
    if (ok) bits.set(x);
  }
  return subgroup_from_members(g, std::move(bits));
}

SubgroupHandle centralizer(const FiniteGroup& g, const SubgroupHandle& h) {
  ensure_subgroup_of(g, h);
  dense_bitset bits(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Permutation& px = g.element(x);
    bool ok = true;
    for (auto i : h.generators) {
      if (!(px.then(g.element(i)) == g.element(i).then(px))) {
        ok = false;
        break;
      }
    }
    if (ok) bits.set(x);
  }
  return subgroup_from_members(g, std::move(bits));
}

bool is_normal(const FiniteGroup& g, const SubgroupHandle& h) {
  ensure_subgroup_of(g, h);
  for (const auto& pg : g.generators()) {
    const Permutation pgi = pg.inverse();
    for (auto i : h.generators) {
      const auto y = g.index_of(pgi.then(g.element(i)).then(pg));
      if (!h.members.test(y)) return false;
    }
  }
  return true;
}

bool is_normal_in(const SubgroupHandle& k, const SubgroupHandle& h) {
  assert(handle_contains(k, h));
  const auto& g = k.ambient;
  for (auto x : k.generators) {
    const Permutation& px = g.element(x);
    const Permutation pxi = px.inverse();
    for (auto i : h.generators) {
      const auto y = g.index_of(pxi.then(g.element(i)).then(px));
      if (!h.members.test(y)) return false;
    }
  }
  return true;
}

namespace {

// Closure of `seed` under conjugation by the given conjugator elements, as a
// subgroup generating process: grows the generator list until the subgroup
// is conjugation-stable.
SubgroupHandle normal_closure_impl(const FiniteGroup& g,
                                   std::span<const std::uint32_t> seed,
                                   std::span<const std::uint32_t> conjugators) {
  std::vector<std::uint32_t> gens = clean_generators(seed);
  dense_bitset bits = closure_indices(g, gens);
  std::vector<std::pair<Permutation, Permutation>> conj;  // (x, x^-1)
  conj.reserve(conjugators.size());
  for (auto x : conjugators) {
    const Permutation& px = g.element(x);
    conj.emplace_back(px, px.inverse());
  }
  for (std::size_t wi = 0; wi < gens.size(); ++wi) {
    const Permutation ph = g.element(gens[wi]);
    for (const auto& [px, pxi] : conj) {
      const auto y = g.index_of(pxi.then(ph).then(px));
      if (!bits.test(y)) {
        gens.push_back(y);
        bits = closure_indices(g, gens);
      }
    }
  }
  return SubgroupHandle{g, std::move(bits), std::move(gens)};
}

}  // namespace

SubgroupHandle normal_closure(const FiniteGroup& g,
                              std::span<const std::uint32_t> seed) {
  std::vector<std::uint32_t> conjugators;
  for (std::size_t k = 0; k < g.generators().size(); ++k)
    conjugators.push_back(g.generator_index(k));
  return normal_closure_impl(g, seed, conjugators);
}

SubgroupHandle normal_closure_in(const SubgroupHandle& k,
                                 const SubgroupHandle& h) {
  assert(handle_contains(k, h));
  return normal_closure_impl(k.ambient, h.generators, k.generators);
}

bool is_subnormal(const FiniteGroup& g, const SubgroupHandle& h) {
  ensure_subgroup_of(g, h);
  SubgroupHandle k = full_subgroup(g);
  while (true) {
    if (k.members == h.members) return true;
    SubgroupHandle next = normal_closure_in(k, h);
    if (next.members == k.members) return false;
    k = std::move(next);
  }
}

SubgroupHandle center(const FiniteGroup& g) {
  dense_bitset bits(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const Permutation& px = g.element(x);
    bool ok = true;
    for (const auto& pg : g.generators()) {
      if (!(px.then(pg) == pg.then(px))) {
        ok = false;
        break;
      }
    }
    if (ok) bits.set(x);
  }
  return subgroup_from_members(g, std::move(bits));
}

SubgroupHandle center_of(const SubgroupHandle& h) {
  const auto& g = h.ambient;
  dense_bitset bits(g.order());
  h.members.for_each_set([&](std::size_t x) {
    const Permutation& px = g.element(static_cast<std::uint32_t>(x));
    for (auto i : h.generators)
      if (!(px.then(g.element(i)) == g.element(i).then(px))) return;
    bits.set(x);
  });
  return subgroup_from_members(g, std::move(bits));
}

SubgroupHandle derived_of(const SubgroupHandle& h) {
  const auto& g = h.ambient;
  std::vector<std::uint32_t> seed;
  for (auto a : h.generators) {
    const Permutation& pa = g.element(a);
    const Permutation pai = pa.inverse();
    for (auto b : h.generators) {
      const Permutation& pb = g.element(b);
      const auto c = g.index_of(pai.then(pb.inverse()).then(pa).then(pb));
      if (c != 0) seed.push_back(c);
    }
  }
  return normal_closure_impl(g, seed, h.generators);
}

std::vector<SubgroupHandle> derived_series(const FiniteGroup& g) {
  std::vector<SubgroupHandle> series{full_subgroup(g)};
  while (true) {
    SubgroupHandle next = derived_of(series.back());
    if (next.members == series.back().members) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<unsigned> derived_length(const FiniteGroup& g) {
  const auto series = derived_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

bool is_solvable(const FiniteGroup& g) { return derived_length(g).has_value(); }

SubgroupHandle o_p(const FiniteGroup& g, std::uint64_t p) {
  if (g.order() % p != 0) return trivial_subgroup(g);
  const SubgroupHandle syl = sylow_subgroup(g, p);
  // Intersection of all conjugates of one Sylow p-subgroup.
  dense_bitset bits = syl.members;
  for (auto r : right_transversal(g, syl.members)) {
    if (r == 0) continue;
    bits &= conjugate_members(g, syl.members, r);
  }
  return subgroup_from_members(g, std::move(bits));
}

SubgroupHandle fitting(const FiniteGroup& g) {
  std::vector<std::uint32_t> gens;
  for (auto p : prime_divisors(g.order())) {
    const auto part = o_p(g, p);
    gens.insert(gens.end(), part.generators.begin(), part.generators.end());
  }
  return subgroup_generated_by_indices(g, gens);
}

std::vector<std::uint32_t> right_transversal(const FiniteGroup& g,
                                             const dense_bitset& members) {
  const auto n = g.order();
  std::vector<std::uint32_t> coset_of(n, ElementTable::npos);
  std::vector<std::uint32_t> reps;
  auto open_coset = [&](std::uint32_t rep) {
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(rep);
    const Permutation& pr = g.element(rep);
    members.for_each_set([&](std::size_t h) {
      coset_of[g.index_of(
          g.element(static_cast<std::uint32_t>(h)).then(pr))] = id;
    });
  };
  open_coset(0);
  for (std::size_t ri = 0; ri < reps.size(); ++ri) {
    const Permutation pr = g.element(reps[ri]);
    for (const auto& pg : g.generators()) {
      const auto t = g.index_of(pr.then(pg));
      if (coset_of[t] == ElementTable::npos) open_coset(t);
    }
  }
  return reps;
}

}  // namespace psub
