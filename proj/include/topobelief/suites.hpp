#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topobelief/formula.hpp"
#include "topobelief/model.hpp"
#include "topobelief/scheme.hpp"
#include "topobelief/semantics.hpp"

namespace topobelief {

/// A named axiom system paired with the semantics and scenario class it is sound for.
/// Copy a suite and change `semantics` / `scenario_class` to probe it elsewhere.
struct LogicSuite {
  std::string name;
  std::vector<std::string> schemes;
  std::vector<Rule> rules;
  Semantics semantics = Semantics::Strong;
  ScenarioClass scenario_class = ScenarioClass::All;
};

/// EL_KBOX, SEL, EL_KBOXB, EL_KBOXB_D, EL_KBOXB_WF, EL_KBOXB_CB, KD45_B (case-insensitive).
/// Throws ArgumentError for other names.
LogicSuite get_suite(std::string_view name);
std::vector<std::string> suite_names();

/// The fixed formulas substituted for phi and psi: p, q, p & q, !p, K p, box p, B p, dia q.
std::vector<Formula> default_instantiation_formulas();
/// Every (phi, psi) assignment over default_instantiation_formulas(), phi varying slowest.
std::vector<std::map<std::string, Formula>> default_substitutions();

/// Model batch: every topology on 1..exhaustive_n points crossed with every valuation
/// of the atoms, followed by `random_models` seeded models. Random model i uses seed
/// `seed + i` and size random_sizes[i % random_sizes.size()].
struct Batch {
  int exhaustive_n = 3;
  int random_models = 200;
  std::vector<int> random_sizes{4, 5, 6};
  std::uint64_t seed = 1;
  double density = 0.3;
  int atoms = 2;

  std::size_t model_count() const;
};

/// Visits batch models in order with a stable label ("exhaustive n=3 #17", "random seed=5 n=4").
/// Stops early when `visit` returns false.
void for_each_batch_model(const Batch& batch,
                          const std::function<bool(const SubsetModel&, const std::string&)>& visit);

struct InstanceResult {
  /// Scheme or rule name.
  std::string scheme;
  /// The checked formula; for a rule, the conclusion M phi.
  Formula instance;
  /// For a rule, the premise phi; absent for schemes.
  std::optional<Formula> premise;
  bool valid = true;
  std::optional<SubsetModel> model;
  std::optional<Scenario> scenario;
  std::string model_label;
};

struct SuiteReport {
  std::string suite;
  Semantics semantics = Semantics::Strong;
  ScenarioClass scenario_class = ScenarioClass::All;
  Batch batch;
  std::size_t models_checked = 0;
  std::vector<InstanceResult> results;

  std::size_t countermodels() const;
  bool clean() const { return countermodels() == 0; }
};

/// Instantiates every scheme under every substitution (deduplicated per scheme), checks
/// each instance on every batch model, and checks each rule per model: whenever a
/// premise from `premises` is valid on a model, its necessitation must be valid there
/// too. Witnesses are the first failing model in batch order and the canonically first
/// scenario on it.
SuiteReport run_suite(const LogicSuite& suite, const Batch& batch,
                      const std::vector<std::map<std::string, Formula>>& substitutions =
                          default_substitutions(),
                      const std::vector<Formula>& premises = default_instantiation_formulas());

/// Machine-readable report with sorted keys and a trailing newline; byte-stable.
std::string report_json(const SuiteReport& r);
/// Human-readable table, one line per instance that failed plus a per-scheme summary.
std::string report_table(const SuiteReport& r);

/// A formula that must fail under the given semantics and class, together with a stored
/// witness and the size within which exhaustive search must find a countermodel.
struct ExpectedFailure {
  std::string label;
  Formula formula;
  Semantics semantics;
  ScenarioClass scenario_class;
  int max_size;
  SubsetModel witness;
  Scenario scenario;
};

std::vector<ExpectedFailure> expected_failures();

}  // namespace topobelief
