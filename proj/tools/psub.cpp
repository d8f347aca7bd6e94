// psub: classify finite permutation groups into U / wU / X / D, print
// P-subnormal chain and Sylow-tower witnesses, and machine-verify the
// property suites over a reproducible corpus.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psub/action.hpp"
#include "psub/catalog.hpp"
#include "psub/classify.hpp"
#include "psub/errors.hpp"
#include "psub/report.hpp"
#include "psub/suites.hpp"
#include "psub/version.hpp"

namespace {

using namespace psub;

struct Options {
  Limits limits;
  std::uint64_t seed = 0xC0FFEE;
  RenderFormat format = RenderFormat::json;
  bool skip_oversize = false;
  unsigned jobs = 1;
  bool timings = false;
  std::string corpus_path;
};

class Stopwatch {
 public:
  explicit Stopwatch(std::vector<TimingEntry>& sink, std::string name)
      : sink_(sink), name_(std::move(name)),
        start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    sink_.push_back(TimingEntry{name_, elapsed});
  }

 private:
  std::vector<TimingEntry>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

ReportBundle make_bundle(const std::string& command, const Options& opt) {
  ReportBundle b;
  b.command = command;
  b.config.limits = opt.limits;
  b.config.seed = opt.seed;
  b.config.include_timings = opt.timings;
  return b;
}

GroupEntry skipped_entry(const std::string& labeled_reason) {
  GroupEntry e;
  const auto pos = labeled_reason.find(": ");
  if (pos == std::string::npos) {
    e.label = labeled_reason;
  } else {
    e.label = labeled_reason.substr(0, pos);
    e.skip_reason = labeled_reason.substr(pos + 2);
  }
  e.skipped = true;
  return e;
}

int finish(const ReportBundle& bundle, const Options& opt) {
  std::cout << render(bundle, opt.format);
  if (bundle.suite_failure()) return 1;
  if (!opt.skip_oversize) {
    for (const auto& e : bundle.groups)
      if (e.skipped) return 3;
    for (const auto& s : bundle.suites)
      if (!s.skipped.empty()) return 3;
  }
  return 0;
}

int run_classify(const std::string& descriptor, const Options& opt) {
  auto bundle = make_bundle("classify", opt);
  {
    Stopwatch t(bundle.timings, "classify");
    const auto g = build_group(descriptor, opt.limits);
    bundle.groups.push_back(
        entry_from_analysis(analyze_group(descriptor, g, opt.limits)));
  }
  return finish(bundle, opt);
}

int run_chain(const std::string& descriptor, const std::string& subgroup,
              const Options& opt) {
  auto bundle = make_bundle("chain", opt);
  {
    Stopwatch t(bundle.timings, "chain");
    const auto g = build_group(descriptor, opt.limits);
    std::vector<Permutation> gens;
    std::string current;
    int depth = 0;
    for (const char c : subgroup) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        gens.push_back(parse_permutation(current, g.degree()));
        current.clear();
        continue;
      }
      current += c;
    }
    if (!current.empty())
      gens.push_back(parse_permutation(current, g.degree()));
    const auto h = subgroup_generated_by(g, gens);

    ChainQueryResult q;
    q.group_label = descriptor;
    q.subgroup_description = subgroup;
    q.subgroup_order = h.order();
    q.result = p_subnormal(g, h, opt.limits);
    bundle.chain = std::move(q);

    GroupEntry e;
    e.label = descriptor;
    e.order = g.order();
    e.degree = g.degree();
    bundle.groups.push_back(std::move(e));
  }
  return finish(bundle, opt);
}

int run_tower(const std::string& descriptor, const Options& opt) {
  auto bundle = make_bundle("tower", opt);
  {
    Stopwatch t(bundle.timings, "tower");
    const auto g = build_group(descriptor, opt.limits);
    bundle.tower = sylow_tower_supersolvable(g);
    GroupEntry e;
    e.label = descriptor;
    e.order = g.order();
    e.degree = g.degree();
    bundle.groups.push_back(std::move(e));
  }
  return finish(bundle, opt);
}

std::vector<GroupAnalysis> analyzed_corpus(ReportBundle& bundle,
                                           const Options& opt) {
  const auto spec = opt.corpus_path.empty()
                        ? default_corpus_spec()
                        : load_corpus_spec(opt.corpus_path);
  auto effective = spec;
  if (opt.corpus_path.empty()) effective.seed = opt.seed;
  Corpus c;
  {
    Stopwatch t(bundle.timings, "corpus");
    c = corpus(effective, opt.limits);
  }
  std::vector<GroupAnalysis> analyses;
  {
    Stopwatch t(bundle.timings, "analyze");
    analyses = analyze_corpus(c, opt.limits, opt.jobs);
  }
  for (const auto& a : analyses)
    bundle.groups.push_back(entry_from_analysis(a));
  for (const auto& s : c.skipped)
    bundle.groups.push_back(skipped_entry(s));
  return analyses;
}

int run_survey(const Options& opt) {
  auto bundle = make_bundle("survey", opt);
  analyzed_corpus(bundle, opt);
  return finish(bundle, opt);
}

int run_verify(const Options& opt) {
  auto bundle = make_bundle("verify", opt);
  const auto analyses = analyzed_corpus(bundle, opt);
  {
    Stopwatch t(bundle.timings, "lemmas");
    bundle.suites.push_back(verify_lemmas(analyses, opt.seed, opt.limits));
  }
  {
    Stopwatch t(bundle.timings, "theorems");
    bundle.suites.push_back(verify_theorems(analyses, opt.seed, opt.limits));
  }
  {
    Stopwatch t(bundle.timings, "structure");
    bundle.suites.push_back(verify_structure(analyses, opt.seed, opt.limits));
  }
  return finish(bundle, opt);
}

int run_search400(const Options& opt) {
  auto bundle = make_bundle("search400", opt);
  {
    Stopwatch t(bundle.timings, "search400");
    bundle.order400 = search_order400_family(opt.limits);
  }
  return finish(bundle, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group P-subnormality and supersolvability toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--cap-elements", opt.limits.max_elements,
                 "element cap for group enumeration")
      ->capture_default_str();
  app.add_option("--cap-lattice", opt.limits.max_lattice_nodes,
                 "node cap for subgroup lattices")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for deterministic sampling")
      ->capture_default_str();
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();
  app.add_flag("--skip-oversize", opt.skip_oversize,
               "do not fail when cap-exceeded groups are skipped");
  app.add_option("--jobs", opt.jobs, "worker threads (result-invariant)")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  app.add_flag("--timings", opt.timings, "include timings in the output");

  std::string descriptor, subgroup;

  auto* classify =
      app.add_subcommand("classify", "full class membership report");
  classify->add_option("descriptor", descriptor, "group descriptor")
      ->required();

  auto* chain = app.add_subcommand(
      "chain", "P-subnormal chain witness for a subgroup");
  chain->add_option("descriptor", descriptor, "group descriptor")->required();
  chain
      ->add_option("--subgroup", subgroup,
                   "comma-separated generator list in cycle notation")
      ->required();

  auto* tower =
      app.add_subcommand("tower", "ordered Sylow tower of supersolvable type");
  tower->add_option("descriptor", descriptor, "group descriptor")->required();

  auto* survey =
      app.add_subcommand("survey", "classify every group of the corpus");
  survey->add_option("--corpus", opt.corpus_path, "corpus spec JSON file");

  auto* verify = app.add_subcommand(
      "verify", "run the lemma/theorem/structure suites over the corpus");
  verify->add_option("--corpus", opt.corpus_path, "corpus spec JSON file");

  app.add_subcommand("search400",
                     "search the minimal non-supersolvable groups of order "
                     "400 and classify them");

  // global flags may appear after the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.format = format == "tsv"    ? RenderFormat::tsv
               : format == "text" ? RenderFormat::text
                                  : RenderFormat::json;

  try {
    if (app.got_subcommand("classify")) return run_classify(descriptor, opt);
    if (app.got_subcommand("chain")) return run_chain(descriptor, subgroup, opt);
    if (app.got_subcommand("tower")) return run_tower(descriptor, opt);
    if (app.got_subcommand("survey")) return run_survey(opt);
    if (app.got_subcommand("verify")) return run_verify(opt);
    if (app.got_subcommand("search400")) return run_search400(opt);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
