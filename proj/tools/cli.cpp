#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topobelief/document.hpp"
#include "topobelief/error.hpp"
#include "topobelief/formula.hpp"
#include "topobelief/relational.hpp"
#include "topobelief/semantics.hpp"
#include "topobelief/suites.hpp"
#include "topobelief/topology.hpp"

namespace topobelief::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string model;
  std::string formula;
  std::string scenario;
  std::string semantics = "strong";
  std::optional<std::string> scenario_class;
  int exhaustive = 3;
  int max_n = 0;
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 1;
  int models = 0;
  std::vector<int> sizes{4, 5, 6};
  std::string name;
  bool json = false;
  std::string out_path;
};

/// Rejected with a usage error naming the flag.
class UsageError : public Error {
 public:
  using Error::Error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DocumentError("cannot write '" + path + "'");
  f << text;
  if (!f) throw DocumentError("failed writing '" + path + "'");
}

SubsetModel load_subset(const std::string& path) {
  ModelDocument doc = load_document_file(path);
  if (auto* m = std::get_if<SubsetModel>(&doc)) return std::move(*m);
  throw ArgumentError("--model: '" + path + "' is a relational model; run 'convert' first");
}

RelationalModel load_relational(const std::string& path) {
  ModelDocument doc = load_document_file(path);
  if (auto* m = std::get_if<RelationalModel>(&doc)) return std::move(*m);
  throw ArgumentError("--model: '" + path + "' is not a relational model");
}

ScenarioClass resolve_class(const Options& o, Semantics k) {
  if (!o.scenario_class) return ScenarioClass::All;
  const ScenarioClass c = parse_scenario_class(*o.scenario_class);
  if (k == Semantics::Strong && c != ScenarioClass::All) {
    throw UsageError("--class " + *o.scenario_class + " conflicts with --semantics strong");
  }
  return c;
}

void print_trace(std::ostream& out, const std::vector<std::pair<Formula, bool>>& trace) {
  for (const auto& [f, value] : trace) out << "  " << (value ? "true " : "false") << "  " << to_text(f) << "\n";
}

int do_eval(const Options& o, std::ostream& out) {
  const Semantics k = parse_semantics(o.semantics);
  const SubsetModel m = load_subset(o.model);
  const Formula f = parse(o.formula);
  const Scenario s = parse_scenario(o.scenario);
  if (k == Semantics::Strong && s.v) {
    throw UsageError("--scenario gives V=, which conflicts with --semantics strong");
  }
  if (k != Semantics::Strong && !s.v) {
    throw UsageError("--scenario needs V= for --semantics " + o.semantics);
  }
  if (!is_valid_scenario(m.topology, s)) {
    throw ArgumentError("--scenario " + o.scenario + " is not a scenario of the model");
  }
  const bool value = eval(m, s, f, k);
  out << (value ? "true" : "false") << "\n";
  return value ? kExitHolds : kExitFails;
}

int do_valid(const Options& o, std::ostream& out) {
  const Semantics k = parse_semantics(o.semantics);
  const ScenarioClass c = resolve_class(o, k);
  const SubsetModel m = load_subset(o.model);
  const Formula f = parse(o.formula);
  const Verdict v = valid_in_model(m, f, k, c);
  if (o.json) {
    json doc{{"formula", to_text(f)},
             {"semantics", std::string(to_string(k))},
             {"class", std::string(to_string(c))},
             {"valid", v.valid}};
    if (v.witness) {
      json trace = json::array();
      for (const auto& [sub, value] : v.witness->trace) trace.push_back({{"formula", to_text(sub)}, {"value", value}});
      doc["witness"] = json{{"scenario", format_scenario(v.witness->scenario)}, {"trace", trace}};
    }
    out << doc.dump(2) << "\n";
  } else if (v.valid) {
    out << "valid\n";
  } else {
    out << "invalid at " << format_scenario(v.witness->scenario) << "\n";
    print_trace(out, v.witness->trace);
  }
  return v.valid ? kExitHolds : kExitFails;
}

int do_countermodel(const Options& o, std::ostream& out) {
  const Semantics k = parse_semantics(o.semantics);
  const ScenarioClass c = resolve_class(o, k);
  const Formula f = parse(o.formula);
  CountermodelOptions opts;
  opts.exhaustive_n = o.exhaustive;
  opts.random_max_n = o.max_n;
  opts.random_models = o.max_n > 0 ? (o.models > 0 ? o.models : 200) : 0;
  opts.seed = o.seed;
  opts.budget = o.budget;
  const CountermodelResult r = find_countermodel(f, k, c, opts);
  switch (r.status) {
    case CountermodelResult::Status::Found: {
      const std::string doc = dump_document(*r.model);
      if (!o.out_path.empty()) write_file(o.out_path, doc);
      if (o.json) {
        json j{{"status", "found"},
               {"formula", to_text(f)},
               {"scenario", format_scenario(*r.scenario)},
               {"model", json::parse(doc)},
               {"evaluations", r.evaluations}};
        out << j.dump(2) << "\n";
      } else {
        out << "countermodel with " << r.model->size() << " worlds\n";
        out << "scenario " << format_scenario(*r.scenario) << "\n";
        out << doc;
      }
      return kExitFails;
    }
    case CountermodelResult::Status::NotFound:
      if (o.json) {
        out << json{{"status", "not found"}, {"formula", to_text(f)},
                    {"exhaustive_clear_up_to", r.exhaustive_clear_up_to},
                    {"evaluations", r.evaluations}}
                   .dump(2)
            << "\n";
      } else {
        out << "no countermodel; exhaustive search clear up to n=" << r.exhaustive_clear_up_to << "\n";
      }
      return kExitHolds;
    case CountermodelResult::Status::BudgetExhausted:
      throw BudgetError("--budget " + std::to_string(o.budget) + " exhausted after " +
                        std::to_string(r.evaluations) + " evaluations without a verdict");
  }
  return kExitUsage;
}

int do_suite(const Options& o, std::ostream& out, bool semantics_given) {
  LogicSuite suite = get_suite(o.name);
  if (semantics_given) suite.semantics = parse_semantics(o.semantics);
  if (o.scenario_class) suite.scenario_class = parse_scenario_class(*o.scenario_class);
  if (suite.semantics == Semantics::Strong && suite.scenario_class != ScenarioClass::All) {
    throw UsageError("--class " + std::string(to_string(suite.scenario_class)) +
                     " conflicts with strong semantics");
  }
  if (o.exhaustive > kMaxEnumerationWorlds) {
    throw UsageError("--exhaustive is limited to " + std::to_string(kMaxEnumerationWorlds));
  }
  Batch batch;
  batch.exhaustive_n = o.exhaustive;
  batch.random_models = o.models;
  batch.random_sizes = o.sizes;
  batch.seed = o.seed;
  const SuiteReport report = run_suite(suite, batch);
  const std::string text = o.json ? report_json(report) : report_table(report);
  if (!o.out_path.empty()) write_file(o.out_path, report_json(report));
  out << text;
  return report.clean() ? kExitHolds : kExitFails;
}

int do_convert(const Options& o, std::ostream& out) {
  const ModelDocument doc = load_document_file(o.model);
  std::string text;
  if (const auto* rel = std::get_if<RelationalModel>(&doc)) text = dump_document(to_subset_model(*rel));
  else text = dump_document(doc);
  if (o.out_path.empty()) out << text;
  else write_file(o.out_path, text);
  return kExitHolds;
}

int do_decompose(const Options& o, std::ostream& out) {
  const RelationalModel m = load_relational(o.model);
  const FrameFlags flags = classify(m);
  const BrushDecomposition d = decompose(m);
  if (o.json) {
    json comps = json::array();
    for (const BrushComponent& c : d.components) {
      comps.push_back({{"cell", c.cell.members()}, {"final_cluster", c.final_cluster.members()}});
    }
    json j{{"serial", flags.serial},     {"transitive", flags.transitive},
           {"euclidean", flags.euclidean}, {"belief_frame", flags.belief_frame},
           {"brush", flags.brush},       {"pin", flags.pin},
           {"components", comps}};
    out << j.dump(2) << "\n";
  } else {
    out << "belief frame" << (flags.brush ? ", brush" : "") << (flags.pin ? ", pin" : "") << "\n";
    for (const BrushComponent& c : d.components) {
      out << "cell " << c.cell.to_string() << "  final cluster " << c.final_cluster.to_string() << "\n";
    }
  }
  return kExitHolds;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_n > kMaxEnumerationWorlds) {
    throw UsageError("--max-n must lie in 1.." + std::to_string(kMaxEnumerationWorlds));
  }
  json counts = json::object();
  for (int n = 1; n <= o.max_n; ++n) {
    const std::size_t count = enumerate_topologies(n).size();
    if (o.json) counts[std::to_string(n)] = count;
    else out << "n=" << n << "  topologies " << count << "\n";
  }
  if (o.json) out << counts.dump(2) << "\n";
  return kExitHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model checker for knowledge, knowability and belief on topological subset spaces",
               "topobelief"};
  app.require_subcommand(1);
  Options o;

  const auto add_model = [&](CLI::App* c) {
    return c->add_option("--model", o.model, "Model document (JSON)")->required();
  };
  const auto add_formula = [&](CLI::App* c) {
    return c->add_option("--formula", o.formula, "Formula in ASCII syntax")->required();
  };
  const auto add_semantics = [&](CLI::App* c) {
    return c->add_option("--semantics", o.semantics, "strong | ed | ae");
  };
  const auto add_class = [&](CLI::App* c) {
    return c->add_option("--class", o.scenario_class, "all | consistent | dense | total");
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a formula at one scenario");
  add_model(eval_cmd);
  add_formula(eval_cmd);
  eval_cmd->add_option("--scenario", o.scenario, "\"x=<w>;U=<list>[;V=<list>]\"")->required();
  add_semantics(eval_cmd);

  CLI::App* valid_cmd = app.add_subcommand("valid", "Check validity on one model");
  add_model(valid_cmd);
  add_formula(valid_cmd);
  add_semantics(valid_cmd);
  add_class(valid_cmd);
  valid_cmd->add_flag("--json", o.json, "Machine-readable output");

  CLI::App* cm_cmd = app.add_subcommand("countermodel", "Search for a countermodel");
  add_formula(cm_cmd);
  add_semantics(cm_cmd);
  add_class(cm_cmd);
  cm_cmd->add_option("--exhaustive", o.exhaustive, "Exhaustive sweep up to this many worlds (<= 4)")
      ->check(CLI::Range(0, kMaxEnumerationWorlds));
  cm_cmd->add_option("--max-n", o.max_n, "Largest random model (0 disables the random phase)")
      ->check(CLI::Range(0, kMaxWorlds));
  cm_cmd->add_option("--models", o.models, "Random models to try (default 200 when --max-n is set)")
      ->check(CLI::NonNegativeNumber);
  cm_cmd->add_option("--budget", o.budget, "Upper bound on scenario evaluations");
  cm_cmd->add_option("--seed", o.seed, "Base seed of the random phase");
  cm_cmd->add_option("--out", o.out_path, "Write the witness model document here");
  cm_cmd->add_flag("--json", o.json, "Machine-readable output");

  CLI::App* suite_cmd = app.add_subcommand("suite", "Run an axiom suite over a model batch");
  suite_cmd->add_option("--name", o.name, "EL_KBOX | SEL | EL_KBOXB | EL_KBOXB_D | EL_KBOXB_WF | EL_KBOXB_CB | KD45_B")
      ->required();
  CLI::Option* suite_semantics = add_semantics(suite_cmd);
  add_class(suite_cmd);
  suite_cmd->add_option("--exhaustive", o.exhaustive, "Exhaustive batch up to this many worlds")
      ->check(CLI::Range(0, kMaxEnumerationWorlds));
  suite_cmd->add_option("--models", o.models, "Seeded random models appended to the batch")
      ->check(CLI::NonNegativeNumber);
  suite_cmd->add_option("--sizes", o.sizes, "Random model sizes, cycled")
      ->delimiter(',')
      ->check(CLI::Range(1, kMaxWorlds));
  suite_cmd->add_option("--seed", o.seed, "Base seed of the random models");
  suite_cmd->add_option("--out", o.out_path, "Also write the JSON report here");
  suite_cmd->add_flag("--json", o.json, "Machine-readable report");

  CLI::App* convert_cmd = app.add_subcommand("convert", "Relational model to subset model (canonical dump)");
  add_model(convert_cmd);
  convert_cmd->add_option("--out", o.out_path, "Output path (default: standard output)");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Split a belief frame into brushes");
  add_model(decompose_cmd);
  decompose_cmd->add_flag("--json", o.json, "Machine-readable output");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Count the topologies on 1..N points");
  enumerate_cmd->add_option("--max-n", o.max_n, "Largest carrier (<= 4)")->required();
  enumerate_cmd->add_flag("--json", o.json, "Machine-readable output");

  std::vector<const char*> argv{"topobelief"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return do_eval(o, out);
    if (valid_cmd->parsed()) return do_valid(o, out);
    if (cm_cmd->parsed()) return do_countermodel(o, out);
    if (suite_cmd->parsed()) return do_suite(o, out, suite_semantics->count() > 0);
    if (convert_cmd->parsed()) return do_convert(o, out);
    if (decompose_cmd->parsed()) return do_decompose(o, out);
    if (enumerate_cmd->parsed()) return do_enumerate(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace topobelief::cli
