#include "psub/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <sstream>
#include <thread>

#include "psub/action.hpp"
#include "psub/errors.hpp"
#include "psub/numbers.hpp"

namespace psub {

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

std::string describe(const SubgroupHandle& h) {
  std::ostringstream os;
  os << "order-" << h.order() << " <";
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    if (i) os << ",";
    os << format_cycles(h.ambient.element(h.generators[i]));
  }
  os << ">";
  return os.str();
}

// Fixed-order check registry so reports have a canonical layout.
class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::vector<std::string> names) {
    for (auto& n : names) {
      index_.emplace(n, checks_.size());
      checks_.push_back(CheckResult{std::move(n), 0, 0, {}});
    }
  }

  void instance(const std::string& check, const std::string& group_label,
                bool ok, const std::string& detail = {}) {
    auto& c = checks_[index_.at(check)];
    ++c.checked;
    if (!ok) {
      ++c.violations;
      if (c.first_counterexample.empty())
        c.first_counterexample =
            detail.empty() ? group_label : group_label + ": " + detail;
    }
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
  std::map<std::string, std::size_t> index_;
};

// Per-group sampling and memoization shared by the suite checks.
struct GroupContext {
  const FiniteGroup& g;
  const Lattice& lat;
  const ClassMembershipReport& report;
  const Limits& limits;
  SplitMix rng;

  std::unordered_map<dense_bitset, bool, dense_bitset_hash> psubn_memo;
  std::unordered_map<dense_bitset, bool, dense_bitset_hash> subnormal_memo;
  std::map<std::uint64_t, SubgroupHandle> op_memo;
  std::optional<SubgroupHandle> frattini_memo;

  bool psubn(const SubgroupHandle& h) {
    auto it = psubn_memo.find(h.members);
    if (it != psubn_memo.end()) return it->second;
    const bool ok = p_subnormal(g, h, limits).ok;
    psubn_memo.emplace(h.members, ok);
    return ok;
  }

  bool subnormal(const SubgroupHandle& h) {
    auto it = subnormal_memo.find(h.members);
    if (it != subnormal_memo.end()) return it->second;
    const bool ok = is_subnormal(g, h);
    subnormal_memo.emplace(h.members, ok);
    return ok;
  }

  const SubgroupHandle& o_part(std::uint64_t p) {
    auto it = op_memo.find(p);
    if (it == op_memo.end()) it = op_memo.emplace(p, o_p(g, p)).first;
    return it->second;
  }

  const SubgroupHandle& frattini_of_group() {
    if (!frattini_memo) frattini_memo = frattini(lat);
    return *frattini_memo;
  }

  std::vector<std::uint32_t> sample_nodes(std::size_t k) {
    std::vector<std::uint32_t> out;
    if (lat.size() <= k) {
      out.resize(lat.size());
      for (std::uint32_t i = 0; i < lat.size(); ++i) out[i] = i;
      return out;
    }
    std::vector<char> taken(lat.size(), 0);
    while (out.size() < k) {
      const auto i = static_cast<std::uint32_t>(rng.next() % lat.size());
      if (!taken[i]) {
        taken[i] = 1;
        out.push_back(i);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint32_t> normal_node_ids() const {
    std::vector<std::uint32_t> out;
    for (const auto& cls : lat.conjugacy_classes())
      if (cls.size() == 1) out.push_back(cls[0]);
    std::sort(out.begin(), out.end());
    return out;
  }

  template <typename Pred>
  std::vector<std::uint32_t> sample_filter(const std::vector<std::uint32_t>& pool,
                                           Pred pred, std::size_t k) {
    std::vector<std::uint32_t> matching;
    for (auto i : pool)
      if (pred(i)) matching.push_back(i);
    if (matching.size() <= k) return matching;
    std::vector<std::uint32_t> out;
    std::vector<char> taken(matching.size(), 0);
    while (out.size() < k) {
      const auto i = rng.next() % matching.size();
      if (!taken[i]) {
        taken[i] = 1;
        out.push_back(matching[i]);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Representatives of the cyclic primary subgroups of a standalone copy of a
// subgroup, as handles of that copy.
std::vector<SubgroupHandle> primary_reps_of(const FiniteGroup& k) {
  return cyclic_primary_subgroup_reps(k);
}

}  // namespace

GroupAnalysis analyze_group(const std::string& label, const FiniteGroup& g,
                            const Limits& limits) {
  GroupAnalysis a;
  a.label = label;
  a.group = g;
  try {
    auto lattice = build_lattice(g, {}, limits.max_lattice_nodes);
    a.report = classify_group(g, lattice, limits);
    a.lattice = std::move(lattice);
  } catch (const cap_exceeded& e) {
    a.skipped = true;
    a.skip_reason = e.what();
  }
  return a;
}

std::vector<GroupAnalysis> analyze_corpus(const Corpus& corpus,
                                          const Limits& limits,
                                          unsigned jobs) {
  std::vector<GroupAnalysis> out(corpus.groups.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < corpus.groups.size(); ++i)
      out[i] = analyze_group(corpus.groups[i].label, corpus.groups[i].group,
                             limits);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const auto i = next.fetch_add(1);
      if (i >= corpus.groups.size()) return;
      out[i] = analyze_group(corpus.groups[i].label, corpus.groups[i].group,
                             limits);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

SuiteReport verify_lemmas(const std::vector<GroupAnalysis>& corpus,
                          std::uint64_t seed, const Limits& limits) {
  SuiteBuilder b({
      "lemma1_prime_index_core_quotient_supersolvable",
      "lemma3_1_intersection_with_normal",
      "lemma3_1_image_in_quotient",
      "lemma3_2_lift_from_quotient",
      "lemma3_3_transitivity",
      "lemma3_4_conjugation",
      "lemma4_1_intersection_with_any_subgroup",
      "lemma4_2_intersection_of_two_psubnormal",
      "lemma5_subnormal_in_solvable_is_psubnormal",
      "lemma6_psubgroup_subnormal_iff_in_op",
      "lemma7_normalizer_p_power_index_subnormal",
      "lemma8_largest_prime_psubnormal_subnormal",
      "corollary_wsupersolvable_has_tower",
      "lemma11_3_derived_length_of_frattini_quotient",
      "lemma12_cyclic_p_inherit_to_normal_and_quotient",
      "lemma13_containment_implications",
      "lemma13_strictness_witnesses",
      "lemma15_frattini_of_normal_sylow",
      "external_biprimary_psubnormal_sylows_supersolvable",
      "example1_intersection_obstruction_in_a5",
  });
  SuiteReport rep;
  rep.suite = "lemmas";
  rep.seed = seed;

  bool saw_wu_not_u = false, saw_x_not_wu = false, saw_d_not_x = false;
  std::string wu_not_u_label, x_not_wu_label, d_not_x_label;

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& a = corpus[gi];
    if (a.skipped) {
      rep.skipped.push_back(a.label + ": " + a.skip_reason);
      continue;
    }
    const auto& g = a.group;
    const auto& lat = *a.lattice;
    const auto& report = *a.report;
    GroupContext ctx{g, lat, report, limits,
                     SplitMix{seed ^ (0x51ab5ULL + gi * 0x9e3779b9ULL)}};

    try {
      const auto primes = prime_divisors(g.order());
      const auto normals = ctx.normal_node_ids();

      // pools: sampled nodes, P-subnormal handles, primary handles
      const auto sampled = ctx.sample_nodes(8);
      std::vector<SubgroupHandle> psubn_pool;
      for (auto i : sampled) {
        const auto h = lat.handle(i);
        if (ctx.psubn(h)) psubn_pool.push_back(h);
      }
      for (const auto& e : report.wu.sylow_chains)
        if (e.result.ok) psubn_pool.push_back(e.sylow);
      for (const auto& e : report.x.entries)
        if (e.result.ok) psubn_pool.push_back(e.rep);
      if (psubn_pool.size() > 6) psubn_pool.resize(6);

      std::vector<SubgroupHandle> primary_pool;
      for (const auto& e : report.x.entries) primary_pool.push_back(e.rep);
      for (const auto& e : report.wu.sylow_chains)
        primary_pool.push_back(e.sylow);
      for (auto i : ctx.sample_filter(
               sampled,
               [&](std::uint32_t n) {
                 return lat.node(n).order > 1 &&
                        is_prime_power(lat.node(n).order);
               },
               4))
        primary_pool.push_back(lat.handle(i));

      const auto sampled_normals = ctx.sample_filter(
          normals, [](std::uint32_t) { return true; }, 5);

      // Lemma 1: solvable G, prime-index H => G/Core_G(H) supersolvable
      if (report.solvable) {
        std::vector<char> done(lat.conjugacy_classes().size(), 0);
        for (auto m : lat.lower_covers(lat.top())) {
          if (!is_prime(lat.index_between(m, lat.top()))) continue;
          if (done[lat.class_of(m)]) continue;
          done[lat.class_of(m)] = 1;
          const auto h = lat.handle(m);
          const auto core = core_of(g, h);
          const bool ok =
              core.is_trivial()
                  ? report.supersolvable
                  : is_supersolvable(quotient(g, core), limits).value;
          b.instance("lemma1_prime_index_core_quotient_supersolvable",
                     a.label, ok, "H=" + describe(h));
        }
      }

      // quotient actions for the sampled normal subgroups, built on demand
      std::map<std::uint32_t,
               std::pair<CosetAction, std::vector<std::uint32_t>>>
          quotients;
      auto quotient_of = [&](std::uint32_t nid)
          -> std::pair<CosetAction, std::vector<std::uint32_t>>& {
        auto it = quotients.find(nid);
        if (it == quotients.end()) {
          auto act = quotient_action(g, lat.handle(nid));
          auto map = element_image_map(g, act);
          it = quotients
                   .emplace(nid, std::make_pair(std::move(act),
                                                std::move(map)))
                   .first;
        }
        return it->second;
      };
      auto image_handle = [&](const CosetAction& act,
                              const std::vector<std::uint32_t>& map,
                              const dense_bitset& members) {
        dense_bitset img(act.image.order());
        members.for_each_set([&](std::size_t i) { img.set(map[i]); });
        return subgroup_from_members(act.image, img);
      };

      // Lemma 3(1)
      for (const auto& h : psubn_pool) {
        for (auto nid : sampled_normals) {
          const auto n = lat.handle(nid);
          const auto k = as_group(n);
          const auto meet_bits = h.members & n.members;
          const auto meet_in_k = subgroup_from_members(
              k, restrict_members(k, SubgroupHandle{g, meet_bits, {}}));
          b.instance("lemma3_1_intersection_with_normal", a.label,
                     p_subnormal(k, meet_in_k, limits).ok,
                     "H=" + describe(h) + " N=" + describe(n));
          if (n.is_trivial() || n.is_full()) continue;
          auto& [act, map] = quotient_of(nid);
          const auto img = image_handle(act, map, h.members);
          b.instance("lemma3_1_image_in_quotient", a.label,
                     p_subnormal(act.image, img, limits).ok,
                     "H=" + describe(h) + " N=" + describe(n));
        }
      }

      // Lemma 3(2): N <= H with H/N psubnormal in G/N => H psubnormal
      for (auto nid : sampled_normals) {
        const auto n = lat.handle(nid);
        if (n.is_trivial() || n.is_full()) continue;
        auto& [act, map] = quotient_of(nid);
        const auto overgroups = ctx.sample_filter(
            [&] {
              std::vector<std::uint32_t> all(lat.size());
              for (std::uint32_t i = 0; i < lat.size(); ++i) all[i] = i;
              return all;
            }(),
            [&](std::uint32_t i) {
              return n.members.is_subset_of(lat.node(i).members);
            },
            4);
        for (auto hid : overgroups) {
          const auto h = lat.handle(hid);
          const auto img = image_handle(act, map, h.members);
          if (!p_subnormal(act.image, img, limits).ok) continue;
          b.instance("lemma3_2_lift_from_quotient", a.label, ctx.psubn(h),
                     "H=" + describe(h) + " N=" + describe(n));
        }
      }

      // Lemma 3(3): transitivity through intermediate psubnormal subgroups
      for (const auto& kh : psubn_pool) {
        if (kh.is_trivial() || kh.is_full()) continue;
        const auto k = as_group(kh);
        const auto subs = ctx.sample_filter(
            [&] {
              std::vector<std::uint32_t> all(lat.size());
              for (std::uint32_t i = 0; i < lat.size(); ++i) all[i] = i;
              return all;
            }(),
            [&](std::uint32_t i) {
              return lat.node(i).members.is_subset_of(kh.members);
            },
            3);
        for (auto hid : subs) {
          const auto h = lat.handle(hid);
          const auto h_in_k =
              subgroup_from_members(k, restrict_members(k, h));
          if (!p_subnormal(k, h_in_k, limits).ok) continue;
          b.instance("lemma3_3_transitivity", a.label, ctx.psubn(h),
                     "H=" + describe(h) + " K=" + describe(kh));
        }
      }

      // Lemma 3(4): conjugates of psubnormal subgroups are psubnormal
      for (const auto& h : psubn_pool) {
        for (int t = 0; t < 3; ++t) {
          const auto x =
              static_cast<std::uint32_t>(ctx.rng.next() % g.order());
          b.instance("lemma3_4_conjugation", a.label,
                     ctx.psubn(conjugate_subgroup(h, x)),
                     "H=" + describe(h) + " g=" +
                         format_cycles(g.element(x)));
        }
      }

      if (report.solvable) {
        // Lemma 4(1)
        for (const auto& h : psubn_pool) {
          for (auto kid : ctx.sample_nodes(4)) {
            const auto kh = lat.handle(kid);
            if (kh.is_trivial()) continue;
            const auto k = as_group(kh);
            const auto meet_bits = h.members & kh.members;
            const auto meet_in_k = subgroup_from_members(
                k, restrict_members(k, SubgroupHandle{g, meet_bits, {}}));
            b.instance("lemma4_1_intersection_with_any_subgroup", a.label,
                       p_subnormal(k, meet_in_k, limits).ok,
                       "H=" + describe(h) + " K=" + describe(kh));
          }
        }
        // Lemma 4(2)
        for (std::size_t i = 0; i < psubn_pool.size(); ++i)
          for (std::size_t j = i + 1; j < psubn_pool.size(); ++j) {
            const auto meet = subgroup_from_members(
                g, psubn_pool[i].members & psubn_pool[j].members);
            b.instance("lemma4_2_intersection_of_two_psubnormal", a.label,
                       ctx.psubn(meet),
                       "H1=" + describe(psubn_pool[i]) +
                           " H2=" + describe(psubn_pool[j]));
          }
        // Lemma 5
        for (auto i : sampled) {
          const auto h = lat.handle(i);
          if (!ctx.subnormal(h)) continue;
          b.instance("lemma5_subnormal_in_solvable_is_psubnormal", a.label,
                     ctx.psubn(h), "H=" + describe(h));
        }
      }

      // Lemmas 6, 7, 8 over the primary pool
      const auto largest = primes.empty() ? 0 : primes.back();
      for (const auto& h : primary_pool) {
        if (h.is_trivial()) continue;
        if (!is_prime_power(h.order())) continue;
        const auto p = prime_divisors(h.order())[0];
        const bool subn = ctx.subnormal(h);
        b.instance("lemma6_psubgroup_subnormal_iff_in_op", a.label,
                   subn == h.members.is_subset_of(ctx.o_part(p).members),
                   "A=" + describe(h));
        const auto norm = normalizer(g, h);
        const auto idx = g.order() / norm.order();
        if (p_part(idx, p) == idx)
          b.instance("lemma7_normalizer_p_power_index_subnormal", a.label,
                     subn, "A=" + describe(h));
        if (p == largest && ctx.psubn(h))
          b.instance("lemma8_largest_prime_psubnormal_subnormal", a.label,
                     subn, "A=" + describe(h));
      }

      // Corollary: wU => ordered Sylow tower
      if (report.w_supersolvable)
        b.instance("corollary_wsupersolvable_has_tower", a.label,
                   report.sylow_tower);

      // Lemma 11(3)
      if (report.w_supersolvable) {
        const auto& phi = ctx.frattini_of_group();
        const auto q = phi.is_trivial() ? g : quotient(g, phi);
        const auto dl = derived_length(q);
        b.instance("lemma11_3_derived_length_of_frattini_quotient", a.label,
                   dl.has_value() && *dl <= primes.size(),
                   "derived length bound |pi(G)|=" +
                       std::to_string(primes.size()));
      }

      // Lemma 12, per prime with all-cyclic-p-psubnormal hypothesis
      for (auto p : primes) {
        bool hypothesis = true;
        for (const auto& e : report.x.entries)
          if (e.rep.order() % p == 0 && !e.result.ok) hypothesis = false;
        if (!hypothesis) continue;
        for (auto nid : sampled_normals) {
          const auto n = lat.handle(nid);
          if (n.is_trivial() || n.is_full()) continue;
          const auto k = as_group(n);
          for (const auto& r : primary_reps_of(k)) {
            if (r.order() % p != 0) continue;
            b.instance("lemma12_cyclic_p_inherit_to_normal_and_quotient",
                       a.label, p_subnormal(k, r, limits).ok,
                       "N=" + describe(n) + " p=" + std::to_string(p));
          }
          auto& [act, map] = quotient_of(nid);
          for (const auto& r : primary_reps_of(act.image)) {
            if (r.order() % p != 0) continue;
            b.instance("lemma12_cyclic_p_inherit_to_normal_and_quotient",
                       a.label, p_subnormal(act.image, r, limits).ok,
                       "G/N for N=" + describe(n) + " p=" + std::to_string(p));
          }
        }
      }

      // Lemma 13 containment implications
      b.instance("lemma13_containment_implications", a.label,
                 (!report.supersolvable || report.w_supersolvable) &&
                     (!report.w_supersolvable || report.class_x) &&
                     (!report.class_x || report.sylow_tower));
      if (report.w_supersolvable && !report.supersolvable && !saw_wu_not_u) {
        saw_wu_not_u = true;
        wu_not_u_label = a.label;
      }
      if (report.class_x && !report.w_supersolvable && !saw_x_not_wu) {
        saw_x_not_wu = true;
        x_not_wu_label = a.label;
      }
      if (report.sylow_tower && !report.class_x && !saw_d_not_x) {
        saw_d_not_x = true;
        d_not_x_label = a.label;
      }

      // Lemma 15: Phi(P) = Phi(G) ^ P for every normal Sylow subgroup
      for (const auto& e : report.wu.sylow_chains) {
        if (!is_normal(g, e.sylow)) continue;
        const auto phi_p = lift_members(g, frattini(as_group(e.sylow)));
        const auto meet = ctx.frattini_of_group().members & e.sylow.members;
        b.instance("lemma15_frattini_of_normal_sylow", a.label,
                   phi_p == meet, "P=" + describe(e.sylow));
      }

      // External property: biprimary with both Sylows psubnormal =>
      // supersolvable
      if (report.structure.biprimary) {
        bool both = true;
        for (const auto& e : report.wu.sylow_chains)
          if (!e.result.ok) both = false;
        if (both)
          b.instance("external_biprimary_psubnormal_sylows_supersolvable",
                     a.label, report.supersolvable);
      }

      // Example 1 scenario
      if (a.label == "builtin:a5") {
        std::optional<SubgroupHandle> a4;
        for (std::uint32_t i = 0; i < lat.size(); ++i)
          if (lat.node(i).order == 12) {
            a4 = lat.handle(i);
            break;
          }
        bool ok = false;
        if (a4 && ctx.psubn(*a4)) {
          for (std::uint32_t x = 0; x < g.order(); ++x) {
            const auto conj = conjugate_subgroup(*a4, x);
            const auto meet = subgroup_from_members(
                g, a4->members & conj.members);
            if (meet.order() != 3) continue;
            ok = ctx.psubn(conj) && !ctx.psubn(meet);
            break;
          }
        }
        b.instance("example1_intersection_obstruction_in_a5", a.label, ok);
      }
    } catch (const cap_exceeded& e) {
      rep.skipped.push_back(a.label + ": " + e.what());
    }
  }

  b.instance("lemma13_strictness_witnesses", wu_not_u_label, saw_wu_not_u,
             "no corpus group in wU \\ U");
  b.instance("lemma13_strictness_witnesses", x_not_wu_label, saw_x_not_wu,
             "no corpus group in X \\ wU");
  b.instance("lemma13_strictness_witnesses", d_not_x_label, saw_d_not_x,
             "no corpus group in D \\ X");

  rep.checks = b.take();
  return rep;
}

SuiteReport verify_theorems(const std::vector<GroupAnalysis>& corpus,
                            std::uint64_t seed, const Limits& limits) {
  SuiteBuilder b({
      "theorem1_wsupersolvable_biconditional",
      "theorem3_class_x_biconditional",
      "theorem4_minimal_non_x_shape",
      "theorem2_subgroup_closure",
      "theorem2_quotient_closure",
      "theorem2_subdirect_closure",
      "theorem2_frattini_saturation",
  });
  SuiteReport rep;
  rep.suite = "theorems";
  rep.seed = seed;

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& a = corpus[gi];
    if (a.skipped) {
      rep.skipped.push_back(a.label + ": " + a.skip_reason);
      continue;
    }
    const auto& g = a.group;
    const auto& lat = *a.lattice;
    const auto& report = *a.report;
    GroupContext ctx{g, lat, report, limits,
                     SplitMix{seed ^ (0x7e0ULL + gi * 0x9e3779b9ULL)}};

    try {
      const auto thm =
          verify_theorem(g, lat, report.wu, report.x, report.tower, limits);
      b.instance("theorem1_wsupersolvable_biconditional", a.label,
                 thm.part1_agree,
                 thm.part1_witness ? "witness " + describe(*thm.part1_witness)
                                   : std::string{});
      b.instance("theorem3_class_x_biconditional", a.label, thm.part3_agree,
                 thm.part3_witness ? "witness " + describe(*thm.part3_witness)
                                   : std::string{});
      if (thm.part4_applicable)
        b.instance("theorem4_minimal_non_x_shape", a.label, thm.part4_holds);

      const auto normals = ctx.normal_node_ids();
      if (report.class_x) {
        // (S) hereditary
        for (auto i : ctx.sample_nodes(4)) {
          const auto h = lat.handle(i);
          if (h.is_trivial() || h.is_full()) continue;
          b.instance("theorem2_subgroup_closure", a.label,
                     is_in_class_x(as_group(h), limits).value,
                     "H=" + describe(h));
        }
        // (Q) quotient-closed
        for (auto nid : ctx.sample_filter(
                 normals, [&](std::uint32_t i) {
                   return lat.node(i).order > 1 &&
                          lat.node(i).order < g.order();
                 },
                 3)) {
          const auto n = lat.handle(nid);
          b.instance("theorem2_quotient_closure", a.label,
                     is_in_class_x(quotient(g, n), limits).value,
                     "N=" + describe(n));
        }
      } else {
        // (R0) subdirect: G/N1, G/N2 in X with N1^N2 = 1 would force G in X
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < normals.size() && pairs < 6; ++i) {
          for (std::size_t j = i + 1; j < normals.size() && pairs < 6; ++j) {
            const auto& n1 = lat.node(normals[i]);
            const auto& n2 = lat.node(normals[j]);
            if (n1.order == 1 || n2.order == 1) continue;
            if ((n1.members & n2.members).count() != 1) continue;
            ++pairs;
            const bool q1x =
                is_in_class_x(quotient(g, lat.handle(normals[i])), limits)
                    .value;
            const bool q2x =
                q1x && is_in_class_x(quotient(g, lat.handle(normals[j])),
                                     limits)
                           .value;
            b.instance("theorem2_subdirect_closure", a.label, !(q1x && q2x),
                       "N1=" + describe(lat.handle(normals[i])) +
                           " N2=" + describe(lat.handle(normals[j])));
          }
        }
        // saturation: G/Phi(G) in X would force G in X
        const auto& phi = ctx.frattini_of_group();
        if (!phi.is_trivial() && !phi.is_full())
          b.instance("theorem2_frattini_saturation", a.label,
                     !is_in_class_x(quotient(g, phi), limits).value,
                     "Phi(G)=" + describe(phi));
      }
    } catch (const cap_exceeded& e) {
      rep.skipped.push_back(a.label + ": " + e.what());
    }
  }

  rep.checks = b.take();
  return rep;
}

SuiteReport verify_structure(const std::vector<GroupAnalysis>& corpus,
                             std::uint64_t seed, const Limits& limits) {
  SuiteBuilder b({
      "lemma9_schmidt_six_checks",
      "lemma10_minimal_non_supersolvable_checks",
      "lemma14_minimal_non_u_biconditional",
  });
  SuiteReport rep;
  rep.suite = "structure";
  rep.seed = seed;

  for (const auto& a : corpus) {
    if (a.skipped) {
      rep.skipped.push_back(a.label + ": " + a.skip_reason);
      continue;
    }
    const auto& g = a.group;
    const auto& lat = *a.lattice;
    const auto& report = *a.report;
    try {
      const auto schmidt = is_schmidt(g, lat);
      if (schmidt) {
        std::string failing;
        for (std::size_t i = 0; i < schmidt->checks.size(); ++i)
          if (!schmidt->checks[i])
            failing += " check" + std::to_string(i + 1);
        b.instance("lemma9_schmidt_six_checks", a.label,
                   schmidt->all_checks(),
                   failing.empty() ? std::string{} : "failing:" + failing);
      }

      const auto mnu = minimal_non_supersolvable(g, lat, limits);
      if (mnu.value) {
        const auto& u = *mnu.u_report;
        std::string failing;
        if (!u.solvable_and_pi_le_3) failing += " item1";
        if (!u.tower_if_not_schmidt) failing += " item2";
        if (!u.unique_normal_sylow_is_residual) failing += " item3";
        if (!u.frattini_quotient_minimal_normal) failing += " item4";
        if (!u.frattini_supersolvably_embedded) failing += " item5";
        if (!u.complement_structure) failing += " item6";
        if (!u.nonprime_maximals_conjugate) failing += " item7";
        b.instance("lemma10_minimal_non_supersolvable_checks", a.label,
                   u.all(),
                   failing.empty() ? std::string{} : "failing:" + failing);

        // Lemma 14: for minimal non-U groups, (not in X) iff biprimary with
        // cyclic non-normal Sylow subgroup
        bool rhs = prime_divisors(g.order()).size() == 2;
        if (rhs) {
          rhs = false;
          for (auto p : prime_divisors(g.order())) {
            const auto syl = sylow_subgroup(g, p);
            if (!is_normal(g, syl)) {
              const auto target = syl.order();
              bool cyc = false;
              syl.members.for_each_set([&](std::size_t i) {
                if (g.element_order(static_cast<std::uint32_t>(i)) == target)
                  cyc = true;
              });
              rhs = cyc;
              break;
            }
          }
        }
        b.instance("lemma14_minimal_non_u_biconditional", a.label,
                   (!report.class_x) == rhs);
      }
    } catch (const cap_exceeded& e) {
      rep.skipped.push_back(a.label + ": " + e.what());
    }
  }

  rep.checks = b.take();
  return rep;
}

}  // namespace psub
