#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topobelief/topology.hpp"
#include "topobelief/world_set.hpp"

namespace topobelief {

/// Atom name -> extension. Atoms not listed are false everywhere.
using Valuation = std::map<std::string, WorldSet>;

/// A topological subset model (X, T, v).
struct SubsetModel {
  Topology topology;
  Valuation valuation;

  /// Throws RangeError when a valuation set leaves the carrier.
  SubsetModel(Topology t, Valuation v);

  int size() const { return topology.size(); }
  WorldSet value(const std::string& atom) const;
  bool operator==(const SubsetModel&) const = default;
};

/// (x, U) or (x, U, V). x ∈ U, U open; V open and V ⊆ U when present. x ∈ V is not required.
struct Scenario {
  int x = 0;
  WorldSet u;
  std::optional<WorldSet> v;

  bool operator==(const Scenario&) const = default;
};

enum class ScenarioClass { All, Consistent, Dense, Total };

std::string_view to_string(ScenarioClass c);
/// Accepts all|consistent|dense|total (case-insensitive). Throws ArgumentError otherwise.
ScenarioClass parse_scenario_class(std::string_view s);

/// Scenario invariants (membership, openness, inclusion).
bool is_valid_scenario(const Topology& t, const Scenario& s);
/// Class predicate on a valid e-d scenario. Scenarios without V only belong to ALL.
bool in_class(const Topology& t, const Scenario& s, ScenarioClass c);

/// Default limit on |opens|^2 * n for anything that walks all e-d scenarios.
inline constexpr std::uint64_t kDefaultScenarioBudget = 1'000'000;

/// Throws BudgetError when the model's e-d scenario space exceeds `budget`.
void check_scenario_budget(const Topology& t, std::uint64_t budget = kDefaultScenarioBudget);

/// Lazy cursor over scenarios in canonical order: x ascending, then U, then V in the
/// topology's canonical open order.
class ScenarioStream {
 public:
  /// Epistemic scenarios (V absent).
  static ScenarioStream epistemic(const Topology& t);
  /// E-d scenarios of the given class.
  static ScenarioStream doxastic(const Topology& t, ScenarioClass c);

  std::optional<Scenario> next();
  std::vector<Scenario> collect();

 private:
  ScenarioStream(const Topology& t, bool with_v, ScenarioClass c);
  bool advance();

  const Topology* topology_;
  bool with_v_;
  ScenarioClass class_;
  int x_ = 0;
  std::size_t u_ = 0;
  std::size_t v_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Scenario> epistemic_scenarios(const SubsetModel& m);
std::vector<Scenario> ed_scenarios(const SubsetModel& m, ScenarioClass c);

/// Atom names used by generators: p, q, r, s, t, then a5, a6, ...
std::vector<std::string> default_atoms(int count);

/// Deterministic random model: a random subbasis (each nonempty proper subset drawn with
/// probability `density`, at most n members), the generated topology, and uniform valuations.
SubsetModel random_model(std::uint64_t seed, int n, int atoms, double density);

/// Small deterministic PRNG (splitmix64) so generated batches are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

/// "x=<world>;U=<comma-list>;V=<comma-list>", V optional and possibly empty.
Scenario parse_scenario(std::string_view text);
std::string format_scenario(const Scenario& s);

}  // namespace topobelief
