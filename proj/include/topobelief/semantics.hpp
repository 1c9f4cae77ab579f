#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topobelief/formula.hpp"
#include "topobelief/model.hpp"

namespace topobelief {

/// The three satisfaction relations.
///
///  - Strong: scenarios (x, U). K is truth throughout U, box is the interior of the
///    extension, and B phi holds iff U ⊆ cl(int([[phi]]^U)).
///  - Ed: scenarios (x, U, V). K and box as above; B phi holds iff V ⊆ [[phi]]^{U,V}.
///  - Ae: as Ed, except B phi holds iff V ⊆* [[phi]]^{U,V} (V minus the extension is
///    nowhere dense).
enum class Semantics { Strong, Ed, Ae };

std::string_view to_string(Semantics k);
/// Accepts strong|ed|ae (case-insensitive). Throws ArgumentError otherwise.
Semantics parse_semantics(std::string_view s);

/// Hash-consed DAG of formulas. Nodes are appended children-first, so evaluating node ids
/// in increasing order always sees operands before the nodes that use them.
class FormulaDag {
 public:
  struct Node {
    Op op;
    int lhs = -1;
    int rhs = -1;
    std::string atom;
  };

  /// Interns f and all its subformulas; returns the id of f.
  int add(const Formula& f);
  std::size_t size() const { return nodes_.size(); }
  const Node& node(int id) const { return nodes_[id]; }
  const Formula& formula(int id) const { return formulas_[id]; }

 private:
  std::vector<Node> nodes_;
  std::vector<Formula> formulas_;
  std::unordered_map<Formula, int, FormulaHash> ids_;
};

/// Extensions of DAG nodes [from, dag.size()) under fixed ranges, appended to `out`
/// (which must already hold the extensions of nodes [0, from)).
void extend_extensions(const FormulaDag& dag, const SubsetModel& m, Semantics k, WorldSet u,
                       std::optional<WorldSet> v, std::vector<WorldSet>& out);

/// Model-bound evaluator. Extensions are memoized per (subformula, U, V).
class Evaluator {
 public:
  Evaluator(const SubsetModel& m, Semantics k);

  /// {x ∈ U : (x, U[, V]) satisfies f}. Throws ArgumentError when the ranges do not fit
  /// the semantics (V given for Strong, missing for Ed/Ae, not open, V ⊄ U).
  WorldSet extension(const Formula& f, WorldSet u, std::optional<WorldSet> v = std::nullopt);
  /// Throws ArgumentError for scenarios that are invalid or do not fit the semantics.
  bool eval(const Scenario& s, const Formula& f);

  const SubsetModel& model() const { return *model_; }
  Semantics semantics() const { return kind_; }

 private:
  void check_ranges(WorldSet u, std::optional<WorldSet> v) const;

  const SubsetModel* model_;
  Semantics kind_;
  FormulaDag dag_;
  std::unordered_map<std::uint64_t, std::vector<WorldSet>> cache_;
};

WorldSet extension(const SubsetModel& m, WorldSet u, std::optional<WorldSet> v, const Formula& f,
                   Semantics k);
bool eval(const SubsetModel& m, const Scenario& s, const Formula& f, Semantics k);

/// Failing scenario together with the truth value of every subformula there.
struct Witness {
  Scenario scenario;
  std::vector<std::pair<Formula, bool>> trace;
};

struct Verdict {
  bool valid = true;
  std::optional<Witness> witness;
};

/// (U, V) pairs admissible for the semantics and class, in canonical order. Strong
/// yields V-less pairs and accepts only ScenarioClass::All. U is never empty.
struct RangePair {
  WorldSet u;
  std::optional<WorldSet> v;
};
std::vector<RangePair> range_pairs(const Topology& t, Semantics k, ScenarioClass c,
                                   std::uint64_t budget = kDefaultScenarioBudget);

/// For each root, the canonically first scenario (x, then U, then V) where it is false,
/// or nullopt when it holds at every scenario of the class.
std::vector<std::optional<Scenario>> first_failures(const FormulaDag& dag, std::span<const int> roots,
                                                    const SubsetModel& m, Semantics k,
                                                    ScenarioClass c,
                                                    std::uint64_t budget = kDefaultScenarioBudget);

/// Subformula truth values at a scenario, children first.
std::vector<std::pair<Formula, bool>> trace_at(const SubsetModel& m, const Scenario& s,
                                               const Formula& f, Semantics k);

/// Validity over every scenario of the class; the witness is the canonically first failure.
Verdict valid_in_model(const SubsetModel& m, const Formula& f, Semantics k,
                       ScenarioClass c = ScenarioClass::All,
                       std::uint64_t budget = kDefaultScenarioBudget);

struct CountermodelOptions {
  /// Exhaustive phase covers every topology on 1..exhaustive_n points (at most 4) crossed
  /// with every valuation of the formula's atoms. 0 skips the phase.
  int exhaustive_n = 3;
  /// Seeded random phase: `random_models` models with sizes cycling through
  /// 1..random_max_n (at most 16). Either 0 skips the phase.
  int random_max_n = 0;
  int random_models = 0;
  std::uint64_t seed = 1;
  double density = 0.3;
  /// Upper bound on scenario evaluations across both phases.
  std::uint64_t budget = 50'000'000;
  std::uint64_t scenario_budget = kDefaultScenarioBudget;
};

struct CountermodelResult {
  enum class Status {
    Found,
    /// Both phases ran to completion without a countermodel. Only the exhaustive phase
    /// supports a "none exists up to this size" claim.
    NotFound,
    /// The evaluation budget ran out first.
    BudgetExhausted,
  };
  Status status = Status::NotFound;
  std::optional<SubsetModel> model;
  std::optional<Scenario> scenario;
  std::uint64_t evaluations = 0;
  /// Largest n whose exhaustive sweep finished without a countermodel (0 if none).
  int exhaustive_clear_up_to = 0;
};

/// Deterministic countermodel search: exhaustive small models first, then random ones.
CountermodelResult find_countermodel(const Formula& f, Semantics k, ScenarioClass c,
                                     const CountermodelOptions& options = {});

/// Every subset model on n points over the given atoms: all topologies crossed with all
/// valuations, valuation index fastest. Requires n <= 4.
std::vector<SubsetModel> exhaustive_models(int n, const std::vector<std::string>& atoms);

/// Streaming form of exhaustive_models; stops early when `visit` returns false.
/// Returns false iff it was stopped.
bool for_each_exhaustive_model(int n, const std::vector<std::string>& atoms,
                               const std::function<bool(const SubsetModel&)>& visit);

}  // namespace topobelief
