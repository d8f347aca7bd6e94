#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psub/suites.hpp"

namespace psub {

enum class RenderFormat { json, tsv, text };

// Echoed into every report; jobs is deliberately not part of the echo so
// that outputs are byte-identical across --jobs values.
struct ReportConfig {
  Limits limits;
  std::uint64_t seed = 0xC0FFEE;
  bool include_timings = false;
};

struct TimingEntry {
  std::string name;
  double seconds = 0;
};

struct GroupEntry {
  std::string label;
  bool skipped = false;
  std::string skip_reason;
  std::optional<std::uint64_t> order;
  std::optional<unsigned> degree;
  std::optional<ClassMembershipReport> report;
};

struct ChainQueryResult {
  std::string group_label;
  std::string subgroup_description;
  std::uint64_t subgroup_order = 0;
  PSubnormalResult result;
};

struct ReportBundle {
  std::string command;
  ReportConfig config;
  std::vector<GroupEntry> groups;
  std::optional<ChainQueryResult> chain;
  std::optional<TowerResult> tower;  // for the tower command
  std::vector<SuiteReport> suites;
  std::optional<Order400Result> order400;
  std::vector<TimingEntry> timings;  // serialized only when configured

  bool suite_failure() const {
    for (const auto& s : suites)
      if (!s.all_pass()) return true;
    return false;
  }
};

// json: canonical schema with stable key order; tsv: one row per group with
// the flag columns; text: human-readable witnesses with subgroups printed
// as generator lists in cycle notation.
std::string render(const ReportBundle& bundle, RenderFormat format);

GroupEntry entry_from_analysis(const GroupAnalysis& a);

}  // namespace psub
