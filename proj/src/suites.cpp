#include "topobelief/suites.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "topobelief/document.hpp"
#include "topobelief/error.hpp"

namespace topobelief {

using nlohmann::json;

namespace {

const std::vector<std::string> kBase{"CPL", "K_K", "T_K", "4_K", "5_K", "K_box", "T_box", "4_box", "KI"};

std::vector<std::string> base_plus(std::initializer_list<const char*> extra) {
  std::vector<std::string> out = kBase;
  for (const char* s : extra) out.emplace_back(s);
  return out;
}

std::vector<Rule> base_rules() { return {necessitation(Op::K), necessitation(Op::Box)}; }

std::string upper(std::string_view s) {
  std::string out;
  for (char c : s) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"EL_KBOX", "SEL", "EL_KBOXB", "EL_KBOXB_D", "EL_KBOXB_WF", "EL_KBOXB_CB", "KD45_B"};
}

LogicSuite get_suite(std::string_view name) {
  const std::string key = upper(name);
  if (key == "EL_KBOX") return {key, kBase, base_rules(), Semantics::Strong, ScenarioClass::All};
  if (key == "SEL") {
    return {key, base_plus({"K_B", "sPI", "KB", "RB", "wF", "CB"}), base_rules(), Semantics::Strong,
            ScenarioClass::All};
  }
  if (key == "EL_KBOXB") {
    return {key, base_plus({"K_B", "sPI", "KB", "RB"}), base_rules(), Semantics::Ed, ScenarioClass::All};
  }
  if (key == "EL_KBOXB_D") {
    return {key, base_plus({"K_B", "sPI", "KB", "RB", "D_B"}), base_rules(), Semantics::Ed,
            ScenarioClass::Consistent};
  }
  if (key == "EL_KBOXB_WF") {
    return {key, base_plus({"K_B", "sPI", "KB", "RB", "wF"}), base_rules(), Semantics::Ed,
            ScenarioClass::Dense};
  }
  if (key == "EL_KBOXB_CB") {
    return {key, base_plus({"K_B", "sPI", "KB", "RB", "CB"}), base_rules(), Semantics::Ae,
            ScenarioClass::All};
  }
  if (key == "KD45_B") {
    return {key, {"K_B", "D_B", "4_B", "5_B"}, {necessitation(Op::Bel)}, Semantics::Strong,
            ScenarioClass::All};
  }
  throw ArgumentError("unknown suite '" + std::string(name) + "'");
}

std::vector<Formula> default_instantiation_formulas() {
  std::vector<Formula> out;
  for (const char* text : {"p", "q", "p & q", "!p", "K p", "box p", "B p", "dia q"}) {
    out.push_back(parse(text));
  }
  return out;
}

std::vector<std::map<std::string, Formula>> default_substitutions() {
  const std::vector<Formula> base = default_instantiation_formulas();
  std::vector<std::map<std::string, Formula>> out;
  for (const Formula& phi : base) {
    for (const Formula& psi : base) {
      out.push_back({{std::string(kPhi), phi}, {std::string(kPsi), psi}});
    }
  }
  return out;
}

std::size_t Batch::model_count() const {
  std::size_t total = static_cast<std::size_t>(std::max(random_models, 0));
  for (int n = 1; n <= exhaustive_n; ++n) {
    total += enumerate_topologies(n).size() << (static_cast<std::size_t>(n) * atoms);
  }
  return total;
}

void for_each_batch_model(const Batch& batch,
                          const std::function<bool(const SubsetModel&, const std::string&)>& visit) {
  if (batch.random_models > 0 && batch.random_sizes.empty()) {
    throw ArgumentError("random batch needs at least one model size");
  }
  const std::vector<std::string> atoms = default_atoms(batch.atoms);
  for (int n = 1; n <= batch.exhaustive_n; ++n) {
    std::size_t index = 0;
    const bool finished = for_each_exhaustive_model(n, atoms, [&](const SubsetModel& m) {
      return visit(m, "exhaustive n=" + std::to_string(n) + " #" + std::to_string(index++));
    });
    if (!finished) return;
  }
  for (int i = 0; i < batch.random_models; ++i) {
    const int n = batch.random_sizes[static_cast<std::size_t>(i) % batch.random_sizes.size()];
    const std::uint64_t seed = batch.seed + static_cast<std::uint64_t>(i);
    const SubsetModel m = random_model(seed, n, batch.atoms, batch.density);
    if (!visit(m, "random seed=" + std::to_string(seed) + " n=" + std::to_string(n))) return;
  }
}

std::size_t SuiteReport::countermodels() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const InstanceResult& r) { return !r.valid; }));
}

SuiteReport run_suite(const LogicSuite& suite, const Batch& batch,
                      const std::vector<std::map<std::string, Formula>>& substitutions,
                      const std::vector<Formula>& premises) {
  if (suite.semantics == Semantics::Strong && suite.scenario_class != ScenarioClass::All) {
    throw ArgumentError("strong semantics ranges over epistemic scenarios; class must be 'all'");
  }
  SuiteReport report;
  report.suite = suite.name;
  report.semantics = suite.semantics;
  report.scenario_class = suite.scenario_class;
  report.batch = batch;

  FormulaDag dag;
  std::vector<int> roots;
  std::vector<int> premise_slot;  // per result: index into roots of the premise, or -1
  for (const std::string& name : suite.schemes) {
    const Scheme s = scheme(name);
    std::set<Formula> seen;
    for (const auto& subst : substitutions) {
      Formula f = instantiate(s, subst);
      if (!seen.insert(f).second) continue;
      roots.push_back(dag.add(f));
      premise_slot.push_back(-1);
      report.results.push_back(InstanceResult{.scheme = name, .instance = std::move(f)});
    }
  }
  for (const Rule& rule : suite.rules) {
    for (const Formula& phi : premises) {
      Formula conclusion = Formula::modal(rule.modality, phi);
      roots.push_back(dag.add(phi));
      premise_slot.push_back(static_cast<int>(roots.size()) - 1);
      roots.push_back(dag.add(conclusion));
      report.results.push_back(
          InstanceResult{.scheme = rule.name, .instance = std::move(conclusion), .premise = phi});
    }
  }
  // Map each result to its conclusion root slot.
  std::vector<std::size_t> slot(report.results.size());
  for (std::size_t i = 0, r = 0; i < report.results.size(); ++i) {
    if (premise_slot[i] >= 0) ++r;
    slot[i] = r++;
  }

  std::size_t open_results = report.results.size();
  for_each_batch_model(batch, [&](const SubsetModel& m, const std::string& label) {
    ++report.models_checked;
    if (open_results == 0) return true;
    const auto failures = first_failures(dag, roots, m, suite.semantics, suite.scenario_class);
    for (std::size_t i = 0; i < report.results.size(); ++i) {
      InstanceResult& res = report.results[i];
      if (!res.valid) continue;
      const auto& failure = failures[slot[i]];
      if (!failure) continue;
      if (premise_slot[i] >= 0 && failures[premise_slot[i]]) continue;
      res.valid = false;
      res.model = m;
      res.scenario = failure;
      res.model_label = label;
      --open_results;
    }
    return true;
  });
  return report;
}

namespace {

json batch_json(const Batch& b) {
  return json{{"atoms", default_atoms(b.atoms)},
              {"density", b.density},
              {"exhaustive_n", b.exhaustive_n},
              {"random_models", b.random_models},
              {"random_sizes", b.random_sizes},
              {"seed", b.seed}};
}

}  // namespace

std::string report_json(const SuiteReport& r) {
  json results = json::array();
  for (const InstanceResult& res : r.results) {
    json entry{{"scheme", res.scheme},
               {"instance", to_text(res.instance)},
               {"status", res.valid ? "valid" : "countermodel"}};
    if (res.premise) entry["premise"] = to_text(*res.premise);
    if (!res.valid) {
      entry["witness"] = json{{"model", json::parse(dump_document(*res.model))},
                              {"model_label", res.model_label},
                              {"scenario", format_scenario(*res.scenario)}};
    }
    results.push_back(std::move(entry));
  }
  json doc{{"suite", r.suite},
           {"semantics", std::string(to_string(r.semantics))},
           {"class", std::string(to_string(r.scenario_class))},
           {"batch", batch_json(r.batch)},
           {"models_checked", r.models_checked},
           {"countermodels", r.countermodels()},
           {"results", std::move(results)}};
  return doc.dump(2) + "\n";
}

std::string report_table(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << "  semantics " << to_string(r.semantics) << "  class "
      << to_string(r.scenario_class) << "  models " << r.models_checked << "\n";
  // Per-scheme summary in first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // instances, failures
  for (const InstanceResult& res : r.results) {
    if (!tally.count(res.scheme)) order.push_back(res.scheme);
    auto& [count, failed] = tally[res.scheme];
    ++count;
    if (!res.valid) ++failed;
  }
  out << "  scheme        instances  countermodels\n";
  for (const std::string& name : order) {
    const auto [count, failed] = tally[name];
    std::string padded = name;
    padded.resize(std::max<std::size_t>(padded.size(), 12), ' ');
    out << "  " << padded << "  " << count << "  " << failed << "\n";
  }
  for (const InstanceResult& res : r.results) {
    if (res.valid) continue;
    out << "  FAIL " << res.scheme << ": " << to_text(res.instance);
    if (res.premise) out << "  (premise " << to_text(*res.premise) << ")";
    out << "  at " << res.model_label << "  " << format_scenario(*res.scenario) << "\n";
  }
  if (r.clean()) out << "all schemes valid\n";
  else out << r.countermodels() << " countermodel(s)\n";
  return out.str();
}

std::vector<ExpectedFailure> expected_failures() {
  const Topology chain3 = Topology::from_opens(3, {WorldSet{}, WorldSet{0}, WorldSet::full(3)});
  const Topology sierpinski = Topology::from_opens(2, {WorldSet{}, WorldSet{0}, WorldSet::full(2)});
  const Topology point = Topology::discrete(1);
  const Topology discrete2 = Topology::discrete(2);
  const Topology split3 = Topology::from_opens(
      3, {WorldSet{}, WorldSet{0}, WorldSet{1}, WorldSet{0, 1}, WorldSet::full(3)});
  const auto p_is = [](WorldSet s) { return Valuation{{"p", s}}; };

  return {
      {"5_box", parse("!box p -> box !box p"), Semantics::Strong, ScenarioClass::All, 3,
       SubsetModel(chain3, p_is({0, 1})), Scenario{1, WorldSet::full(3), std::nullopt}},
      {"sNI for box", parse("box p | box !box p"), Semantics::Strong, ScenarioClass::All, 3,
       SubsetModel(chain3, p_is({0, 1})), Scenario{1, WorldSet::full(3), std::nullopt}},
      {"T_B", parse("B p -> p"), Semantics::Strong, ScenarioClass::All, 2,
       SubsetModel(sierpinski, p_is({0})), Scenario{1, WorldSet::full(2), std::nullopt}},
      {"p -> K p", parse("p -> K p"), Semantics::Strong, ScenarioClass::All, 2,
       SubsetModel(sierpinski, p_is({0})), Scenario{0, WorldSet::full(2), std::nullopt}},
      {"D_B", parse("B p -> !B !p"), Semantics::Ed, ScenarioClass::All, 1,
       SubsetModel(point, p_is({})), Scenario{0, WorldSet{0}, WorldSet{}}},
      {"wF", parse("B p -> dia p"), Semantics::Ed, ScenarioClass::Consistent, 2,
       SubsetModel(discrete2, p_is({1})), Scenario{0, WorldSet::full(2), WorldSet{1}}},
      {"CB", parse("B (box p | box !box p)"), Semantics::Ed, ScenarioClass::Dense, 3,
       SubsetModel(split3, p_is({0, 2})), Scenario{0, WorldSet::full(3), WorldSet::full(3)}},
  };
}

}  // namespace topobelief
