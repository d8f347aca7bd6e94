#include "psub/report.hpp"

#include <sstream>

#include <json.hpp>

#include "psub/version.hpp"

namespace psub {

namespace {

using json = nlohmann::json;

constexpr std::size_t kMaxListedReachable = 12;

json subgroup_json(const SubgroupHandle& h) {
  json j;
  j["order"] = h.order();
  j["generators"] = json::array();
  for (auto i : h.generators)
    j["generators"].push_back(format_cycles(h.ambient.element(i)));
  return j;
}

json chain_json(const PChainWitness& w) {
  json j;
  j["indices"] = w.indices;
  j["subgroups"] = json::array();
  for (const auto& h : w.chain) j["subgroups"].push_back(subgroup_json(h));
  return j;
}

json psubnormal_json(const PSubnormalResult& r) {
  json j;
  j["ok"] = r.ok;
  if (r.witness) j["chain"] = chain_json(*r.witness);
  if (r.obstruction) {
    json o;
    o["reachable_count"] = r.obstruction->reachable.size();
    o["reachable"] = json::array();
    for (std::size_t i = 0;
         i < r.obstruction->reachable.size() && i < kMaxListedReachable; ++i)
      o["reachable"].push_back(subgroup_json(r.obstruction->reachable[i]));
    j["obstruction"] = std::move(o);
  }
  return j;
}

json tower_json(const TowerResult& t) {
  json j;
  j["ok"] = t.ok;
  if (t.witness) {
    j["primes"] = t.witness->primes;
    j["factor_orders"] = t.witness->factor_orders;
    j["series"] = json::array();
    for (const auto& h : t.witness->series)
      j["series"].push_back(subgroup_json(h));
  }
  if (t.failed_prime) j["failed_prime"] = *t.failed_prime;
  return j;
}

json report_json(const ClassMembershipReport& r) {
  json j;
  j["flags"] = {{"U", r.supersolvable},   {"wU", r.w_supersolvable},
                {"X", r.class_x},         {"D", r.sylow_tower},
                {"solvable", r.solvable}, {"nilpotent", r.nilpotent}};
  j["structure"] = {{"biprimary", r.structure.biprimary},
                    {"perfect", r.structure.perfect}};
  j["lattice"] = {{"nodes", r.lattice_stats.nodes},
                  {"classes", r.lattice_stats.classes},
                  {"max_chain", r.lattice_stats.max_chain}};

  json witnesses;
  witnesses["tower"] = tower_json(r.tower);
  witnesses["sylow_chains"] = json::array();
  for (const auto& e : r.wu.sylow_chains) {
    json s = psubnormal_json(e.result);
    s["prime"] = e.prime;
    s["sylow"] = subgroup_json(e.sylow);
    witnesses["sylow_chains"].push_back(std::move(s));
  }
  witnesses["primary_cyclic_chains"] = json::array();
  for (const auto& e : r.x.entries) {
    json s = psubnormal_json(e.result);
    s["rep"] = subgroup_json(e.rep);
    witnesses["primary_cyclic_chains"].push_back(std::move(s));
  }
  j["witnesses"] = std::move(witnesses);

  json cx = json::object();
  if (!r.supersolvable && r.u_certificate.offending_maximal)
    cx["U"] = subgroup_json(*r.u_certificate.offending_maximal);
  if (!r.w_supersolvable)
    for (const auto& e : r.wu.sylow_chains)
      if (!e.result.ok) {
        cx["wU"] = {{"prime", e.prime}, {"sylow", subgroup_json(e.sylow)}};
        break;
      }
  if (!r.class_x)
    for (const auto& e : r.x.entries)
      if (!e.result.ok) {
        cx["X"] = {{"rep", subgroup_json(e.rep)}};
        break;
      }
  if (!r.sylow_tower && r.tower.failed_prime)
    cx["D"] = {{"prime", *r.tower.failed_prime}};
  j["counterexamples"] = std::move(cx);
  return j;
}

json group_entry_json(const GroupEntry& e) {
  json j;
  j["label"] = e.label;
  j["skipped"] = e.skipped;
  if (e.skipped) j["reason"] = e.skip_reason;
  if (e.order) j["order"] = *e.order;
  if (e.degree) j["degree"] = *e.degree;
  if (e.report) j.update(report_json(*e.report));
  return j;
}

json suite_json(const SuiteReport& s) {
  json j;
  j["suite"] = s.suite;
  j["seed"] = s.seed;
  j["pass"] = s.all_pass();
  j["checks"] = json::array();
  for (const auto& c : s.checks) {
    json cj;
    cj["name"] = c.name;
    cj["checked"] = c.checked;
    cj["violations"] = c.violations;
    if (!c.first_counterexample.empty())
      cj["first_counterexample"] = c.first_counterexample;
    j["checks"].push_back(std::move(cj));
  }
  j["skipped"] = s.skipped;
  return j;
}

json fingerprint_json(const Fingerprint& f) {
  json j;
  j["order"] = f.order;
  j["element_orders"] = json::array();
  for (const auto& [o, c] : f.element_orders)
    j["element_orders"].push_back({{"order", o}, {"count", c}});
  j["conjugacy_class_sizes"] = f.conjugacy_class_sizes;
  if (f.subgroup_orders) {
    j["subgroup_orders"] = json::array();
    for (const auto& [o, c] : *f.subgroup_orders)
      j["subgroup_orders"].push_back({{"order", o}, {"count", c}});
  }
  j["center_order"] = f.center_order;
  j["derived_series_orders"] = f.derived_series_orders;
  return j;
}

std::string flag(bool b) { return b ? "1" : "0"; }

std::string describe_subgroup(const SubgroupHandle& h) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    if (i) os << ", ";
    os << format_cycles(h.ambient.element(h.generators[i]));
  }
  os << "> (order " << h.order() << ")";
  return os.str();
}

void render_chain_text(std::ostream& os, const PSubnormalResult& r,
                       const std::string& indent) {
  if (r.ok) {
    const auto& w = *r.witness;
    for (std::size_t i = 0; i < w.chain.size(); ++i) {
      os << indent << (i ? "< " : "  ") << describe_subgroup(w.chain[i]);
      if (i) os << "  [index " << w.indices[i - 1] << "]";
      os << "\n";
    }
  } else if (r.obstruction) {
    os << indent << "not P-subnormal; " << r.obstruction->reachable.size()
       << " subgroup(s) reachable by prime-index ascents, none equal to G\n";
  }
}

void render_group_text(std::ostream& os, const GroupEntry& e) {
  os << "group " << e.label;
  if (e.order) os << "  order " << *e.order;
  if (e.degree) os << "  degree " << *e.degree;
  os << "\n";
  if (e.skipped) {
    os << "  skipped: " << e.skip_reason << "\n";
    return;
  }
  if (!e.report) return;  // chain/tower queries carry no classification
  const auto& r = *e.report;
  os << "  U=" << flag(r.supersolvable) << " wU=" << flag(r.w_supersolvable)
     << " X=" << flag(r.class_x) << " D=" << flag(r.sylow_tower)
     << " solvable=" << flag(r.solvable) << " nilpotent=" << flag(r.nilpotent)
     << "\n";
  os << "  lattice: " << r.lattice_stats.nodes << " subgroups, "
     << r.lattice_stats.classes << " classes, max chain "
     << r.lattice_stats.max_chain << "\n";
  if (r.tower.ok) {
    os << "  tower: primes";
    for (auto p : r.tower.witness->primes) os << " " << p;
    os << "\n";
    for (const auto& h : r.tower.witness->series)
      os << "    " << describe_subgroup(h) << "\n";
  } else if (r.tower.failed_prime) {
    os << "  tower: fails at prime " << *r.tower.failed_prime << "\n";
  }
  for (const auto& s : r.wu.sylow_chains) {
    os << "  sylow " << s.prime << ": " << describe_subgroup(s.sylow) << " "
       << (s.result.ok ? "P-subnormal" : "NOT P-subnormal") << "\n";
    render_chain_text(os, s.result, "    ");
  }
  for (const auto& p : r.x.entries) {
    os << "  primary cyclic " << describe_subgroup(p.rep) << " "
       << (p.result.ok ? "P-subnormal" : "NOT P-subnormal") << "\n";
    render_chain_text(os, p.result, "    ");
  }
}

}  // namespace

GroupEntry entry_from_analysis(const GroupAnalysis& a) {
  GroupEntry e;
  e.label = a.label;
  e.skipped = a.skipped;
  e.skip_reason = a.skip_reason;
  if (!a.skipped) {
    e.order = a.group.order();
    e.degree = a.group.degree();
    e.report = a.report;
  }
  return e;
}

std::string render(const ReportBundle& bundle, RenderFormat format) {
  if (format == RenderFormat::json) {
    json j;
    j["command"] = bundle.command;
    j["config"] = {{"cap_elements", bundle.config.limits.max_elements},
                   {"cap_lattice", bundle.config.limits.max_lattice_nodes},
                   {"seed", bundle.config.seed}};
    j["groups"] = json::array();
    for (const auto& e : bundle.groups)
      j["groups"].push_back(group_entry_json(e));
    if (bundle.chain) {
      json c;
      c["group"] = bundle.chain->group_label;
      c["subgroup"] = bundle.chain->subgroup_description;
      c["subgroup_order"] = bundle.chain->subgroup_order;
      c.update(psubnormal_json(bundle.chain->result));
      j["chain"] = std::move(c);
    }
    if (bundle.tower) j["tower"] = tower_json(*bundle.tower);
    if (!bundle.suites.empty()) {
      j["suites"] = json::array();
      for (const auto& s : bundle.suites) j["suites"].push_back(suite_json(s));
    }
    if (bundle.order400) {
      json o;
      o["fingerprint_classes"] = bundle.order400->fingerprint_classes;
      o["members"] = json::array();
      for (const auto& m : bundle.order400->members) {
        json mj;
        mj["descriptor"] = m.group.name();
        mj["fingerprint"] = fingerprint_json(m.fingerprint);
        mj["report"] = report_json(m.report);
        mj["sylow2_element_orders"] = json::array();
        for (const auto& [o2, c2] : m.sylow2_element_orders)
          mj["sylow2_element_orders"].push_back(
              {{"order", o2}, {"count", c2}});
        o["members"].push_back(std::move(mj));
      }
      j["order400"] = std::move(o);
    }
    if (bundle.config.include_timings) {
      j["timings"] = json::array();
      for (const auto& t : bundle.timings)
        j["timings"].push_back({{"name", t.name}, {"seconds", t.seconds}});
    }
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    return j.dump(2) + "\n";
  }

  if (format == RenderFormat::tsv) {
    std::ostringstream os;
    os << "group\torder\tU\twU\tX\tD\tsolvable\tnilpotent\n";
    for (const auto& e : bundle.groups) {
      os << e.label << "\t";
      if (e.order)
        os << *e.order;
      else
        os << "-";
      if (e.report) {
        const auto& r = *e.report;
        os << "\t" << flag(r.supersolvable) << "\t"
           << flag(r.w_supersolvable) << "\t" << flag(r.class_x) << "\t"
           << flag(r.sylow_tower) << "\t" << flag(r.solvable) << "\t"
           << flag(r.nilpotent);
      } else {
        os << "\t-\t-\t-\t-\t-\t-";
      }
      os << "\n";
    }
    return os.str();
  }

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << "  command=" << bundle.command
     << " seed=" << bundle.config.seed << "\n";
  for (const auto& e : bundle.groups) render_group_text(os, e);
  if (bundle.chain) {
    os << "chain query in " << bundle.chain->group_label << " for "
       << bundle.chain->subgroup_description << " (order "
       << bundle.chain->subgroup_order << ")\n";
    os << (bundle.chain->result.ok ? "  P-subnormal\n"
                                   : "  NOT P-subnormal\n");
    render_chain_text(os, bundle.chain->result, "  ");
  }
  if (bundle.tower) {
    if (bundle.tower->ok) {
      os << "ordered Sylow tower of supersolvable type:\n";
      for (const auto& h : bundle.tower->witness->series)
        os << "  " << describe_subgroup(h) << "\n";
      os << "  primes";
      for (auto p : bundle.tower->witness->primes) os << " " << p;
      os << "\n";
    } else {
      os << "no ordered Sylow tower: fails at prime "
         << *bundle.tower->failed_prime << "\n";
    }
  }
  for (const auto& s : bundle.suites) {
    os << "suite " << s.suite << " (seed " << s.seed << "): "
       << (s.all_pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : s.checks) {
      os << "  " << (c.pass() ? "pass" : "FAIL") << "  " << c.name << "  ("
         << c.checked << " checked, " << c.violations << " violations)";
      if (!c.first_counterexample.empty())
        os << "  first: " << c.first_counterexample;
      os << "\n";
    }
    for (const auto& sk : s.skipped) os << "  skipped " << sk << "\n";
  }
  if (bundle.order400) {
    os << "order-400 family: " << bundle.order400->members.size()
       << " minimal non-supersolvable group(s), "
       << bundle.order400->fingerprint_classes << " fingerprint class(es)\n";
    for (const auto& m : bundle.order400->members) {
      os << "  " << m.group.name() << "  U=" << flag(m.report.supersolvable)
         << " wU=" << flag(m.report.w_supersolvable)
         << " X=" << flag(m.report.class_x)
         << " D=" << flag(m.report.sylow_tower) << "  sylow2 orders:";
      for (const auto& [o2, c2] : m.sylow2_element_orders)
        os << " " << o2 << "x" << c2;
      os << "\n";
    }
  }
  if (bundle.config.include_timings)
    for (const auto& t : bundle.timings)
      os << "timing " << t.name << " " << t.seconds << "s\n";
  return os.str();
}

}  // namespace psub
