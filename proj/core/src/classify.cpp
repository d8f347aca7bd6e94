#include "psub/classify.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "psub/action.hpp"
#include "psub/errors.hpp"
#include "psub/numbers.hpp"

namespace psub {

bool validate_chain(const PChainWitness& w) {
  if (w.chain.empty()) return false;
  if (w.indices.size() + 1 != w.chain.size()) return false;
  for (std::size_t i = 0; i + 1 < w.chain.size(); ++i) {
    const auto& lo = w.chain[i];
    const auto& hi = w.chain[i + 1];
    if (!lo.ambient.same_group(hi.ambient)) return false;
    if (!lo.members.is_subset_of(hi.members)) return false;
    if (lo.members == hi.members) return false;
    if (hi.order() % lo.order() != 0) return false;
    const auto idx = hi.order() / lo.order();
    if (idx != w.indices[i] || !is_prime(idx)) return false;
  }
  return true;
}

namespace {

// Reachability over prime-index ascents, nodes materialized on the fly:
// neighbors of K are the subgroups <K, r> of prime index over K, with r
// ranging over coset representatives and the closure abandoned beyond
// max-prime * |K| elements.
PSubnormalResult prime_ascent_search(const FiniteGroup& g,
                                     const SubgroupHandle& h,
                                     const Limits& limits) {
  struct SearchNode {
    dense_bitset bits;
    std::vector<std::uint32_t> gens;
    std::uint64_t order;
    std::uint32_t parent;
    std::uint64_t step_index;
  };
  const std::uint64_t group_order = g.order();
  std::unordered_map<dense_bitset, std::uint32_t, dense_bitset_hash> seen;
  std::vector<SearchNode> nodes;
  nodes.push_back(
      SearchNode{h.members, h.generators, h.order(), Lattice::npos, 0});
  seen.emplace(h.members, 0u);
  std::uint32_t goal = Lattice::npos;

  for (std::uint32_t qi = 0; qi < nodes.size() && goal == Lattice::npos;
       ++qi) {
    const dense_bitset bits = nodes[qi].bits;
    const std::vector<std::uint32_t> gens = nodes[qi].gens;
    const std::uint64_t order = nodes[qi].order;
    if (order == group_order) {
      goal = qi;
      break;
    }
    const auto index_primes = prime_divisors(group_order / order);
    const std::uint64_t bound = order * index_primes.back();

    for (auto r : right_transversal(g, bits)) {
      if (r == 0) continue;
      std::vector<std::uint32_t> next_gens = gens;
      next_gens.push_back(r);
      auto next_bits = closure_indices_bounded(g, next_gens, bound);
      if (!next_bits) continue;
      const auto next_order = next_bits->count();
      if (!is_prime(next_order / order)) continue;
      if (seen.contains(*next_bits)) continue;
      if (nodes.size() >= limits.max_lattice_nodes)
        throw cap_exceeded("p-subnormality search exceeds lattice node cap");
      const auto id = static_cast<std::uint32_t>(nodes.size());
      seen.emplace(*next_bits, id);
      nodes.push_back(SearchNode{std::move(*next_bits), std::move(next_gens),
                                 next_order, qi, next_order / order});
      if (next_order == group_order) {
        goal = id;
        break;
      }
    }
  }

  PSubnormalResult result;
  if (goal != Lattice::npos) {
    std::vector<std::uint32_t> path;
    for (auto cur = goal; cur != Lattice::npos; cur = nodes[cur].parent)
      path.push_back(cur);
    std::reverse(path.begin(), path.end());
    PChainWitness w;
    for (auto id : path)
      w.chain.push_back(SubgroupHandle{g, nodes[id].bits, nodes[id].gens});
    for (std::size_t i = 1; i < path.size(); ++i)
      w.indices.push_back(nodes[path[i]].step_index);
    assert(validate_chain(w));
    result.ok = true;
    result.witness = std::move(w);
  } else {
    PSubnormalObstruction obs;
    for (const auto& n : nodes)
      obs.reachable.push_back(SubgroupHandle{g, n.bits, n.gens});
    result.ok = false;
    result.obstruction = std::move(obs);
  }
  return result;
}

SubgroupHandle pull_back(const FiniteGroup& g,
                         const std::vector<std::uint32_t>& image_map,
                         const SubgroupHandle& image_sub) {
  return subgroup_from_members(
      g, preimage_members(g, image_map, image_sub.members));
}

}  // namespace

PSubnormalResult p_subnormal(const FiniteGroup& g, const SubgroupHandle& h,
                             const Limits& limits) {
  ensure_subgroup_of(g, h);
  if (h.is_full()) {
    PSubnormalResult r;
    r.ok = true;
    r.witness = PChainWitness{{h}, {}};
    return r;
  }
  if (!h.is_trivial() && is_normal(g, h)) {
    // Chains above a normal H biject with chains above 1 in G/H.
    const auto act = coset_action(g, h);
    const auto image_map = element_image_map(g, act);
    const auto inner =
        p_subnormal(act.image, trivial_subgroup(act.image), limits);
    PSubnormalResult r;
    r.ok = inner.ok;
    if (inner.witness) {
      PChainWitness w;
      for (const auto& step : inner.witness->chain)
        w.chain.push_back(pull_back(g, image_map, step));
      w.indices = inner.witness->indices;
      assert(validate_chain(w));
      r.witness = std::move(w);
    }
    if (inner.obstruction) {
      PSubnormalObstruction obs;
      for (const auto& node : inner.obstruction->reachable)
        obs.reachable.push_back(pull_back(g, image_map, node));
      r.obstruction = std::move(obs);
    }
    return r;
  }
  return prime_ascent_search(g, h, limits);
}

SupersolvableCertificate is_supersolvable(const Lattice& full) {
  SupersolvableCertificate cert;
  cert.value = true;
  const auto top = full.top();
  for (auto m : full.lower_covers(top)) {
    const auto idx = full.index_between(m, top);
    if (!is_prime(idx)) {
      cert.value = false;
      cert.offending_maximal = full.handle(m);
      cert.maximal_indices.clear();
      break;
    }
    cert.maximal_indices.push_back(idx);
  }
#ifndef NDEBUG
  {
    // Cross-check against "every chief factor has prime order".
    bool chief_ok = true;
    for (auto f : chief_series(full.ambient()).factor_orders)
      if (!is_prime(f)) chief_ok = false;
    assert(chief_ok == cert.value);
  }
#endif
  return cert;
}

SupersolvableCertificate is_supersolvable(const FiniteGroup& g,
                                          const Limits& limits) {
  return is_supersolvable(build_lattice(g, {}, limits.max_lattice_nodes));
}

bool node_supersolvable(const Lattice& full, std::uint32_t node) {
  for (auto m : full.lower_covers(node))
    if (!is_prime(full.index_between(m, node))) return false;
  return true;
}

bool members_nilpotent(const FiniteGroup& g, const dense_bitset& members) {
  const auto order = members.count();
  for (auto p : prime_divisors(order)) {
    const auto part = p_part(order, p);
    std::uint64_t count = 0;
    members.for_each_set([&](std::size_t i) {
      const auto o = g.element_order(static_cast<std::uint32_t>(i));
      if (p_part(o, p) == o) ++count;  // p-element (identity counts)
    });
    if (count != part) return false;
  }
  return true;
}

bool is_nilpotent(const FiniteGroup& g) {
  return members_nilpotent(g, full_subgroup(g).members);
}

StructuralFlags structural_flags(const FiniteGroup& g) {
  StructuralFlags f;
  f.solvable = is_solvable(g);
  f.nilpotent = is_nilpotent(g);
  f.biprimary = prime_divisors(g.order()).size() == 2;
  f.perfect = derived_of(full_subgroup(g)).order() == g.order();
  return f;
}

TowerResult sylow_tower_supersolvable(const FiniteGroup& g) {
  TowerResult result;
  SylowTowerWitness w;
  SubgroupHandle reached = trivial_subgroup(g);
  w.series.push_back(reached);
  while (!reached.is_full()) {
    // Work in G / reached.
    FiniteGroup q = g;
    std::vector<std::uint32_t> image_map;
    if (!reached.is_trivial()) {
      const auto act = quotient_action(g, reached);
      image_map = element_image_map(g, act);
      q = act.image;
    }
    const auto primes = prime_divisors(q.order());
    const auto p = primes.back();  // largest prime of the current quotient
    const auto syl = sylow_subgroup(q, p);
    if (!is_normal(q, syl)) {
      result.ok = false;
      result.failed_prime = p;
      return result;
    }
    SubgroupHandle next =
        image_map.empty()
            ? syl
            : subgroup_from_members(
                  g, preimage_members(g, image_map, syl.members));
    assert(is_normal(g, next));
    w.primes.push_back(p);
    w.factor_orders.push_back(syl.order());
    w.series.push_back(next);
    reached = std::move(next);
  }
  result.ok = true;
  result.witness = std::move(w);
  return result;
}

WSupersolvableReport is_w_supersolvable(const FiniteGroup& g,
                                        const Limits& limits) {
  WSupersolvableReport r;
  r.value = true;
  for (auto p : prime_divisors(g.order())) {
    SylowChainEntry entry;
    entry.prime = p;
    entry.sylow = sylow_subgroup(g, p);
    entry.result = p_subnormal(g, entry.sylow, limits);
    if (!entry.result.ok) r.value = false;
    r.sylow_chains.push_back(std::move(entry));
  }
  return r;
}

ClassXReport is_in_class_x(const FiniteGroup& g, const Limits& limits) {
  ClassXReport r;
  r.value = true;
  for (const auto& rep : cyclic_primary_subgroup_reps(g)) {
    PrimaryCyclicEntry entry;
    entry.rep = rep;
    entry.result = p_subnormal(g, rep, limits);
    if (!entry.result.ok) r.value = false;
    r.entries.push_back(std::move(entry));
  }
  return r;
}

namespace {

bool handle_abelian(const SubgroupHandle& h) {
  const auto& g = h.ambient;
  for (auto a : h.generators)
    for (auto b : h.generators)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool handle_cyclic(const SubgroupHandle& h) {
  const auto target = h.order();
  bool found = false;
  h.members.for_each_set([&](std::size_t i) {
    if (h.ambient.element_order(static_cast<std::uint32_t>(i)) == target)
      found = true;
  });
  return found;
}

// Frattini subgroup of a subgroup, as a member mask over the ambient table.
dense_bitset frattini_of_handle(const SubgroupHandle& h) {
  const auto k = as_group(h);
  const auto phi = frattini(k);
  return lift_members(h.ambient, phi);
}

bool minimal_normal_in(const FiniteGroup& g, const SubgroupHandle& n) {
  if (n.is_trivial()) return false;
  bool ok = true;
  n.members.for_each_set([&](std::size_t x) {
    if (x == 0 || !ok) return;
    std::vector<std::uint32_t> seed{static_cast<std::uint32_t>(x)};
    if (!(normal_closure(g, seed).members == n.members)) ok = false;
  });
  return ok;
}

std::vector<std::uint32_t> normal_nodes(const Lattice& full) {
  std::vector<std::uint32_t> out;
  for (const auto& cls : full.conjugacy_classes())
    if (cls.size() == 1) out.push_back(cls[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<SchmidtReport> is_schmidt(const FiniteGroup& g,
                                        const Lattice& full) {
  if (is_nilpotent(g)) return std::nullopt;
  for (auto m : full.lower_covers(full.top()))
    if (!members_nilpotent(g, full.node(m).members)) return std::nullopt;

  SchmidtReport rep;
  const auto primes = prime_divisors(g.order());

  std::vector<std::pair<std::uint64_t, SubgroupHandle>> normal_syl;
  std::vector<std::pair<std::uint64_t, SubgroupHandle>> other_syl;
  for (auto p : primes) {
    auto syl = sylow_subgroup(g, p);
    if (is_normal(g, syl))
      normal_syl.emplace_back(p, std::move(syl));
    else
      other_syl.emplace_back(p, std::move(syl));
  }

  if (primes.size() != 2 || normal_syl.size() != 1) {
    // Shape [P]<y> cannot be identified; every structural check fails.
    rep.checks.fill(false);
    return rep;
  }
  rep.p = normal_syl[0].first;
  rep.q = other_syl[0].first;
  rep.normal_sylow = normal_syl[0].second;
  const auto& P = rep.normal_sylow;
  const auto& Q = other_syl[0].second;

  // 1) S = [P]<y>, <y> cyclic non-normal Sylow q, y^q central
  const bool q_cyclic = handle_cyclic(Q);
  std::uint32_t y = ElementTable::npos;
  if (q_cyclic) {
    for (auto x = Q.members.find_first(); x != dense_bitset::npos;
         x = Q.members.find_next(x))
      if (g.element_order(static_cast<std::uint32_t>(x)) == Q.order()) {
        y = static_cast<std::uint32_t>(x);
        break;
      }
  }
  const auto zs = center(g);
  std::uint32_t ypow = 0;
  if (y != ElementTable::npos) {
    rep.y = y;
    ypow = y;
    for (std::uint64_t i = 1; i < rep.q; ++i) ypow = g.mul(ypow, y);
  }
  rep.checks[0] = q_cyclic && y != ElementTable::npos &&
                  zs.members.test(ypow) &&
                  (P.members & Q.members).count() == 1 &&
                  P.order() * Q.order() == g.order();

  // 2) |P/P'| = p^m with m the order of p mod q
  rep.m = multiplicative_order(rep.p % rep.q, rep.q);
  const auto p_derived = derived_of(P);
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < rep.m; ++i) pm *= rep.p;
  rep.checks[1] = P.order() / p_derived.order() == pm;

  const bool p_abelian = handle_abelian(P);
  const auto phi_p = frattini_of_handle(P);

  // 3) abelian P: elementary abelian of order p^m, minimal normal in S
  if (p_abelian) {
    bool elem = true;
    P.members.for_each_set([&](std::size_t i) {
      if (i == 0) return;
      if (g.element_order(static_cast<std::uint32_t>(i)) != rep.p)
        elem = false;
    });
    rep.checks[2] = elem && P.order() == pm && minimal_normal_in(g, P);
  } else {
    rep.checks[2] = true;
  }

  // 4) non-abelian P: Z(P) = P' = Phi(P) and |P/Z(P)| = p^m
  if (!p_abelian) {
    const auto zp = center_of(P);
    rep.checks[3] = zp.members == p_derived.members && zp.members == phi_p &&
                    P.order() / zp.order() == pm;
  } else {
    rep.checks[3] = true;
  }

  const auto phi_s = frattini(full);

  // 5) Z(S) = Phi(S) = Phi(P) x <y^q>; S' = P; P' = Phi(P)
  {
    const auto phi_p_handle = subgroup_from_members(g, phi_p);
    std::vector<std::uint32_t> prod_gens = phi_p_handle.generators;
    if (ypow != 0) prod_gens.push_back(ypow);
    const auto prod = subgroup_generated_by_indices(g, prod_gens);
    const auto ypow_cyc =
        subgroup_generated_by_indices(g, std::vector<std::uint32_t>{ypow});
    const bool direct =
        (phi_p & ypow_cyc.members).count() == 1 &&
        prod.order() == phi_p_handle.order() * ypow_cyc.order();
    const auto s_derived = derived_of(full_subgroup(g));
    rep.checks[4] = zs.members == phi_s.members &&
                    phi_s.members == prod.members && direct &&
                    s_derived.members == P.members &&
                    p_derived.members == phi_p;
  }

  // 6) proper normal N: <y> not inside N, and P <= N or N <= Phi(S)
  {
    bool ok = true;
    for (auto nid : normal_nodes(full)) {
      const auto& nb = full.node(nid).members;
      if (nb.count() == g.order()) continue;
      if (Q.members.is_subset_of(nb) ||
          (!P.members.is_subset_of(nb) && !nb.is_subset_of(phi_s.members))) {
        ok = false;
        break;
      }
    }
    rep.checks[5] = ok;
  }

  return rep;
}

MinimalNonClassResult minimal_non_supersolvable(const FiniteGroup& g,
                                                const Lattice& full,
                                                const Limits& limits) {
  MinimalNonClassResult res;
  if (is_supersolvable(full).value) return res;
  const auto maximals = full.lower_covers(full.top());
  std::vector<char> class_ok(full.conjugacy_classes().size(), -1);
  for (auto m : maximals) {
    auto& memo = class_ok[full.class_of(m)];
    if (memo == -1) memo = node_supersolvable(full, m) ? 1 : 0;
    if (!memo) {
      res.failing_maximal = full.handle(m);
      return res;
    }
  }
  res.value = true;

  MinimalNonUReport u;
  const auto primes = prime_divisors(g.order());

  // 1) solvable, |pi(G)| <= 3
  u.solvable_and_pi_le_3 = is_solvable(g) && primes.size() <= 3;

  // 2) not Schmidt => ordered Sylow tower
  const auto schmidt = is_schmidt(g, full);
  u.tower_if_not_schmidt =
      schmidt.has_value() || sylow_tower_supersolvable(g).ok;

  // 3) unique normal Sylow P equal to the supersolvable residual
  std::vector<std::pair<std::uint64_t, SubgroupHandle>> normal_syl;
  for (auto p : primes) {
    auto syl = sylow_subgroup(g, p);
    if (is_normal(g, syl)) normal_syl.emplace_back(p, std::move(syl));
  }
  if (normal_syl.size() != 1) {
    res.u_report = std::move(u);
    return res;
  }
  u.p = normal_syl[0].first;
  const auto& P = normal_syl[0].second;
  {
    auto nodes = normal_nodes(full);
    std::sort(nodes.begin(), nodes.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                if (full.node(a).order != full.node(b).order)
                  return full.node(a).order < full.node(b).order;
                return a < b;
              });
    std::optional<dense_bitset> residual;
    for (auto nid : nodes) {
      const auto n = full.handle(nid);
      const bool ss = n.is_trivial()
                          ? is_supersolvable(full).value
                          : is_supersolvable(quotient(g, n), limits).value;
      if (ss) {
        residual = n.members;
        break;
      }
    }
    u.unique_normal_sylow_is_residual = residual && *residual == P.members;
  }

  // 4) |P/Phi(P)| > p and P/Phi(P) minimal normal in G/Phi(G)
  const auto phi_g = frattini(full);
  const auto phi_p = frattini_of_handle(P);
  {
    const bool big_quotient = P.order() / phi_p.count() > u.p;
    bool minimal = false;
    if (phi_g.is_trivial()) {
      minimal = minimal_normal_in(g, P);
    } else {
      const auto act = quotient_action(g, phi_g);
      const auto image_map = element_image_map(g, act);
      dense_bitset img(act.image.order());
      P.members.for_each_set([&](std::size_t i) { img.set(image_map[i]); });
      minimal = minimal_normal_in(act.image,
                                  subgroup_from_members(act.image, img));
    }
    u.frattini_quotient_minimal_normal = big_quotient && minimal;
  }

  // 5) Phi(P) supersolvably embedded: G-chief factors below it are prime
  if (phi_p.count() == 1) {
    u.frattini_supersolvably_embedded = true;
  } else {
    const auto cs = chief_series(g, subgroup_from_members(g, phi_p));
    bool ok = cs.through_split.has_value();
    if (ok)
      for (std::size_t i = 0; i < *cs.through_split; ++i)
        if (!is_prime(cs.factor_orders[i])) ok = false;
    u.frattini_supersolvably_embedded = ok;
  }

  // 6) complement Q: Q/(Q ^ Phi(G)) minimal non-abelian or cyclic of
  //    prime-power order
  std::optional<SubgroupHandle> complement;
  {
    const auto comp_order = g.order() / P.order();
    for (std::uint32_t i = 0; i < full.size(); ++i) {
      if (full.node(i).order != comp_order) continue;
      if ((full.node(i).members & P.members).count() != 1) continue;
      complement = full.handle(i);
      break;
    }
  }
  if (complement) {
    const auto t_bits = complement->members & phi_g.members;
    const auto k = as_group(*complement);
    FiniteGroup qbar = k;
    if (t_bits.count() > 1) {
      const auto t_in_k = subgroup_from_members(
          k, restrict_members(k, subgroup_from_members(g, t_bits)));
      qbar = quotient(k, t_in_k);
    }
    const bool cyclic_pp = qbar.order() > 1 && is_prime_power(qbar.order()) &&
                           handle_cyclic(full_subgroup(qbar));
    bool min_nonab = false;
    if (!handle_abelian(full_subgroup(qbar))) {
      min_nonab = true;
      for (const auto& m : maximal_subgroups(qbar, limits.max_lattice_nodes))
        if (!handle_abelian(m)) min_nonab = false;
    }
    u.complement_structure = cyclic_pp || min_nonab;

    // 7) all non-prime-index maximals conjugate, and conjugate to Phi(P)Q
    std::vector<std::uint32_t> nonprime;
    for (auto m : maximals)
      if (!is_prime(full.index_between(m, full.top()))) nonprime.push_back(m);
    bool conj_ok = !nonprime.empty();
    for (auto m : nonprime)
      if (full.class_of(m) != full.class_of(nonprime[0])) conj_ok = false;
    if (conj_ok) {
      const auto phi_p_q = join(subgroup_from_members(g, phi_p), *complement);
      const auto node = full.find(phi_p_q.members);
      conj_ok = node != Lattice::npos &&
                full.class_of(node) == full.class_of(nonprime[0]);
    }
    u.nonprime_maximals_conjugate = conj_ok;
  }
  res.u_report = std::move(u);
  return res;
}

MinimalNonClassResult minimal_non_class_x(const FiniteGroup& g,
                                          const Lattice& full,
                                          const ClassXReport& x,
                                          const Limits& limits) {
  MinimalNonClassResult res;
  if (x.value) return res;
  // Heredity of X makes checking maximal subgroups sufficient.
  std::vector<char> class_ok(full.conjugacy_classes().size(), -1);
  for (auto m : full.lower_covers(full.top())) {
    auto& memo = class_ok[full.class_of(m)];
    if (memo == -1)
      memo = is_in_class_x(as_group(full.handle(m)), limits).value ? 1 : 0;
    if (!memo) {
      res.failing_maximal = full.handle(m);
      return res;
    }
  }
  res.value = true;

  // Theorem part 4 shape: biprimary minimal non-supersolvable whose
  // non-normal Sylow subgroup is cyclic.
  bool shape = prime_divisors(g.order()).size() == 2 &&
               minimal_non_supersolvable(g, full, limits).value;
  if (shape) {
    shape = false;
    for (auto p : prime_divisors(g.order())) {
      const auto syl = sylow_subgroup(g, p);
      if (!is_normal(g, syl)) {
        shape = handle_cyclic(syl);
        break;
      }
    }
  }
  res.x_shape_holds = shape;
  return res;
}

TheoremReport verify_theorem(const FiniteGroup& g, const Lattice& full,
                             const WSupersolvableReport& wu,
                             const ClassXReport& x, const TowerResult& tower,
                             const Limits& limits) {
  TheoremReport rep;
  rep.part1_lhs = wu.value;
  rep.part3_lhs = x.value;

  // Both right-hand sides scan one node per conjugacy class (the scanned
  // properties are conjugation-invariant).
  bool all_biprimary_ss = true;
  std::optional<SubgroupHandle> witness1;
  bool all_biprimary_cyclic_syl_ss = true;
  std::optional<SubgroupHandle> witness3;
  for (const auto& cls : full.conjugacy_classes()) {
    const auto node = cls[0];
    const auto order = full.node(node).order;
    const auto node_primes = prime_divisors(order);
    if (node_primes.size() != 2) continue;
    if (node_supersolvable(full, node)) continue;
    if (all_biprimary_ss) {
      all_biprimary_ss = false;
      witness1 = full.handle(node);
    }
    if (all_biprimary_cyclic_syl_ss) {
      // a cyclic Sylow subgroup exists iff some member realizes a p-part
      bool cyclic_sylow = false;
      for (auto p : node_primes) {
        const auto part = p_part(order, p);
        full.node(node).members.for_each_set([&](std::size_t i) {
          if (g.element_order(static_cast<std::uint32_t>(i)) == part)
            cyclic_sylow = true;
        });
        if (cyclic_sylow) break;
      }
      if (cyclic_sylow) {
        all_biprimary_cyclic_syl_ss = false;
        witness3 = full.handle(node);
      }
    }
  }

  rep.part1_rhs = tower.ok && all_biprimary_ss;
  rep.part1_agree = rep.part1_lhs == rep.part1_rhs;
  if (!rep.part1_agree) rep.part1_witness = witness1;

  rep.part3_rhs = tower.ok && all_biprimary_cyclic_syl_ss;
  rep.part3_agree = rep.part3_lhs == rep.part3_rhs;
  if (!rep.part3_agree) rep.part3_witness = witness3;

  const auto mnx = minimal_non_class_x(g, full, x, limits);
  rep.part4_applicable = mnx.value;
  rep.part4_holds = !mnx.value || (mnx.x_shape_holds && *mnx.x_shape_holds);
  return rep;
}

ClassMembershipReport classify_group(const FiniteGroup& g,
                                     const Lattice& lattice,
                                     const Limits& limits) {
  ClassMembershipReport r;
  r.structure = structural_flags(g);
  r.solvable = r.structure.solvable;
  r.nilpotent = r.structure.nilpotent;
  r.tower = sylow_tower_supersolvable(g);
  r.sylow_tower = r.tower.ok;

  r.u_certificate = is_supersolvable(lattice);
  r.supersolvable = r.u_certificate.value;
  r.wu = is_w_supersolvable(g, limits);
  r.w_supersolvable = r.wu.value;
  r.x = is_in_class_x(g, limits);
  r.class_x = r.x.value;
  r.lattice_stats = LatticeStats{lattice.size(),
                                 lattice.conjugacy_classes().size(),
                                 lattice.max_chain_length()};

  const bool implications_hold =
      (!r.supersolvable || r.w_supersolvable) &&
      (!r.w_supersolvable || r.class_x) && (!r.class_x || r.sylow_tower) &&
      (!r.sylow_tower || r.solvable) && (!r.nilpotent || r.supersolvable);
  if (!implications_hold)
    throw std::logic_error(
        "class membership implications U => wU => X => D => solvable "
        "violated");
  return r;
}

ClassMembershipReport classify_group(const FiniteGroup& g,
                                     const Limits& limits) {
  return classify_group(g, build_lattice(g, {}, limits.max_lattice_nodes),
                        limits);
}

}  // namespace psub
