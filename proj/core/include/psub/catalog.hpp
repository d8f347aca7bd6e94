#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psub/classify.hpp"

namespace psub {

// Descriptor grammar (also the CLI syntax):
//   builtin:<a4|a5|s4|q8|d8|e25_z3|e49_s3>
//   sym:N  alt:N  cyclic:N  dihedral:N(order)  elem_abelian:P,K
//   affine:P,K:<matrix JSON>   one matrix [[r0],[r1],...] or a list of them,
//                              row-major over F_P
//   sl2:P  psl2:P
//   direct:<d1>;<d2>[;...]
//   gens:<degree>:<cycles>,<cycles>,...
//   file:<path>
//   family:order400   (expands to the classified order-400 family)
struct GroupDescriptor {
  enum class Kind { builtin, parametric, explicit_generators, file, family };
  Kind kind = Kind::parametric;
  std::string text;  // original descriptor string

  std::string head;  // "sym", "cyclic", "affine", fixture name, ...
  std::vector<std::int64_t> params;
  std::vector<std::vector<std::int64_t>> matrices;  // row-major, affine only
  unsigned degree = 0;
  std::vector<std::string> generator_strings;
  std::string path;
  std::vector<std::string> factors;  // direct products
};

GroupDescriptor parse_descriptor(const std::string& text);

// Builds a single group; family descriptors are rejected here (they expand
// to several groups and are handled by corpus()).
FiniteGroup build_group(const GroupDescriptor& d, const Limits& limits = {});
FiniteGroup build_group(const std::string& descriptor,
                        const Limits& limits = {});

// UTF-8 JSON: {"degree": N, "generators": ["(1 2)", ...], "name"?: "..."};
// unknown fields rejected. save_group emits the canonical form (sorted keys,
// no extra whitespace, trailing newline), so save(load(f)) is byte-identical
// for canonical files.
FiniteGroup group_from_json(const std::string& json_text,
                            const Limits& limits = {});
std::string group_to_json(const FiniteGroup& g);
FiniteGroup load_group(const std::string& path, const Limits& limits = {});
void save_group(const FiniteGroup& g, const std::string& path);

// Isomorphism-invariant vector. Equal fingerprints are a heuristic "same
// class" signal (documented as such); unequal fingerprints certify
// non-isomorphism.
struct Fingerprint {
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders;
  std::vector<std::uint64_t> conjugacy_class_sizes;
  std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>>
      subgroup_orders;  // absent when the lattice cap was exceeded
  std::uint64_t center_order = 0;
  std::vector<std::uint64_t> derived_series_orders;

  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;  // canonical, used for sorting and counting
};

Fingerprint fingerprint(const FiniteGroup& g, const Limits& limits = {});

struct Order400Member {
  FiniteGroup group;
  Fingerprint fingerprint;
  ClassMembershipReport report;
  // informational: element-order histogram of a Sylow 2-subgroup
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sylow2_element_orders;
};

struct Order400Result {
  std::vector<Order400Member> members;  // canonical order (by fingerprint)
  std::size_t fingerprint_classes = 0;
};

// Example-3 search: subgroups of GL(2,5) of order 16 generated by two
// order-4 elements, deduplicated under GL(2,5)-conjugacy; builds the affine
// groups E25.T of order 400 and keeps the minimal non-supersolvable ones.
Order400Result search_order400_family(const Limits& limits = {});

struct RandomSubgroupParams {
  unsigned max_degree = 8;      // subgroups of sym(n), 4 <= n <= max_degree
  unsigned max_generators = 3;  // 2 or 3 random generators
  unsigned count_per_degree = 2;
};

struct CorpusSpec {
  std::uint64_t seed = 0xC0FFEE;
  std::vector<std::string> descriptors;
  RandomSubgroupParams random;
};

CorpusSpec default_corpus_spec();
// JSON {"seed": N, "descriptors": [...], "random"?: {...}}.
CorpusSpec load_corpus_spec(const std::string& path);

struct CorpusEntry {
  std::string label;
  FiniteGroup group;
};

struct Corpus {
  std::vector<CorpusEntry> groups;
  std::vector<std::string> skipped;  // "label: reason"
};

// Deterministic: the same spec yields the identical group list (labels,
// generators, element tables) and the identical skip list.
Corpus corpus(const CorpusSpec& spec, const Limits& limits = {});

}  // namespace psub
