#include "topobelief/semantics.hpp"

#include <cctype>

#include "topobelief/error.hpp"

namespace topobelief {

std::string_view to_string(Semantics k) {
  switch (k) {
    case Semantics::Strong: return "strong";
    case Semantics::Ed: return "ed";
    case Semantics::Ae: return "ae";
  }
  return "strong";
}

Semantics parse_semantics(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "strong") return Semantics::Strong;
  if (lower == "ed") return Semantics::Ed;
  if (lower == "ae") return Semantics::Ae;
  throw ArgumentError("unknown semantics '" + std::string(s) + "'");
}

int FormulaDag::add(const Formula& f) {
  if (auto it = ids_.find(f); it != ids_.end()) return it->second;
  Node node;
  node.op = f.op();
  if (f.op() == Op::Atom) node.atom = f.name();
  if (!f.children().empty()) node.lhs = add(f.lhs());
  if (f.children().size() == 2) node.rhs = add(f.rhs());
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  formulas_.push_back(f);
  ids_.emplace(f, id);
  return id;
}

void extend_extensions(const FormulaDag& dag, const SubsetModel& m, Semantics k, WorldSet u,
                       std::optional<WorldSet> v, std::vector<WorldSet>& out) {
  const Topology& t = m.topology;
  const WorldSet none;
  out.reserve(dag.size());
  for (std::size_t id = out.size(); id < dag.size(); ++id) {
    const FormulaDag::Node& nd = dag.node(static_cast<int>(id));
    const WorldSet a = nd.lhs >= 0 ? out[nd.lhs] : none;
    const WorldSet b = nd.rhs >= 0 ? out[nd.rhs] : none;
    WorldSet r;
    switch (nd.op) {
      case Op::Atom: r = m.value(nd.atom) & u; break;
      case Op::Top: r = u; break;
      case Op::Bot: r = none; break;
      case Op::Not: r = u - a; break;
      case Op::And: r = a & b; break;
      case Op::Or: r = a | b; break;
      case Op::Implies: r = (u - a) | b; break;
      case Op::Iff: r = u - (a ^ b); break;
      case Op::K: r = a == u ? u : none; break;
      case Op::Box: r = t.interior(a); break;
      case Op::Bel: {
        bool holds = false;
        switch (k) {
          case Semantics::Strong: holds = u.subset_of(t.closure(t.interior(a))); break;
          case Semantics::Ed: holds = v->subset_of(a); break;
          case Semantics::Ae: holds = t.almost_subset(*v, a); break;
        }
        r = holds ? u : none;
        break;
      }
    }
    out.push_back(r);
  }
}

Evaluator::Evaluator(const SubsetModel& m, Semantics k) : model_(&m), kind_(k) {}

void Evaluator::check_ranges(WorldSet u, std::optional<WorldSet> v) const {
  if (kind_ == Semantics::Strong && v) {
    throw ArgumentError("strong semantics takes epistemic scenarios without a doxastic range");
  }
  if (kind_ != Semantics::Strong && !v) {
    throw ArgumentError(std::string(to_string(kind_)) + " semantics needs a doxastic range V");
  }
  const Topology& t = model_->topology;
  if (!t.is_open(u)) throw ArgumentError("epistemic range " + u.to_string() + " is not open");
  if (v && !t.is_open(*v)) throw ArgumentError("doxastic range " + v->to_string() + " is not open");
  if (v && !v->subset_of(u)) throw ArgumentError("doxastic range is not inside the epistemic range");
}

WorldSet Evaluator::extension(const Formula& f, WorldSet u, std::optional<WorldSet> v) {
  check_ranges(u, v);
  const int id = dag_.add(f);
  const std::uint64_t key = std::uint64_t{u.bits()} | (std::uint64_t{v ? v->bits() : 0u} << 20) |
                            (std::uint64_t{v ? 1u : 0u} << 40);
  std::vector<WorldSet>& values = cache_[key];
  if (values.size() < dag_.size()) extend_extensions(dag_, *model_, kind_, u, v, values);
  return values[id];
}

bool Evaluator::eval(const Scenario& s, const Formula& f) {
  if (!is_valid_scenario(model_->topology, s)) {
    throw ArgumentError("invalid scenario " + format_scenario(s));
  }
  return extension(f, s.u, s.v).contains(s.x);
}

WorldSet extension(const SubsetModel& m, WorldSet u, std::optional<WorldSet> v, const Formula& f,
                   Semantics k) {
  return Evaluator(m, k).extension(f, u, v);
}

bool eval(const SubsetModel& m, const Scenario& s, const Formula& f, Semantics k) {
  return Evaluator(m, k).eval(s, f);
}

std::vector<RangePair> range_pairs(const Topology& t, Semantics k, ScenarioClass c,
                                   std::uint64_t budget) {
  std::vector<RangePair> out;
  if (k == Semantics::Strong) {
    if (c != ScenarioClass::All) {
      throw ArgumentError("strong semantics ranges over epistemic scenarios; class must be 'all'");
    }
    for (WorldSet u : t.opens()) {
      if (!u.empty()) out.push_back({u, std::nullopt});
    }
    return out;
  }
  check_scenario_budget(t, budget);
  for (WorldSet u : t.opens()) {
    if (u.empty()) continue;
    for (WorldSet v : t.opens()) {
      if (!v.subset_of(u)) continue;
      Scenario probe{u.min(), u, v};
      if (in_class(t, probe, c)) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::optional<Scenario>> first_failures(const FormulaDag& dag, std::span<const int> roots,
                                                    const SubsetModel& m, Semantics k,
                                                    ScenarioClass c, std::uint64_t budget) {
  std::vector<std::optional<Scenario>> best(roots.size());
  std::vector<WorldSet> values;
  for (const RangePair& p : range_pairs(m.topology, k, c, budget)) {
    values.clear();
    extend_extensions(dag, m, k, p.u, p.v, values);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const WorldSet failing = p.u - values[roots[i]];
      if (failing.empty()) continue;
      const int x = failing.min();
      // Pairs arrive in canonical (U, V) order, so only a smaller x can improve.
      if (!best[i] || x < best[i]->x) best[i] = Scenario{x, p.u, p.v};
    }
  }
  return best;
}

std::vector<std::pair<Formula, bool>> trace_at(const SubsetModel& m, const Scenario& s,
                                               const Formula& f, Semantics k) {
  Evaluator ev(m, k);
  std::vector<std::pair<Formula, bool>> out;
  for (const Formula& sub : subformulas(f)) out.emplace_back(sub, ev.eval(s, sub));
  return out;
}

Verdict valid_in_model(const SubsetModel& m, const Formula& f, Semantics k, ScenarioClass c,
                       std::uint64_t budget) {
  FormulaDag dag;
  const int root = dag.add(f);
  const auto failure = first_failures(dag, std::span<const int>(&root, 1), m, k, c, budget)[0];
  if (!failure) return Verdict{};
  return Verdict{false, Witness{*failure, trace_at(m, *failure, f, k)}};
}

bool for_each_exhaustive_model(int n, const std::vector<std::string>& atoms,
                               const std::function<bool(const SubsetModel&)>& visit) {
  const std::size_t bits = static_cast<std::size_t>(n) * atoms.size();
  if (bits > 24) throw BudgetError("too many valuations for exhaustive enumeration");
  const std::uint32_t mask = WorldSet::full(n).bits();
  for (const Topology& t : enumerate_topologies(n)) {
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << bits); ++index) {
      Valuation v;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        v[atoms[i]] = WorldSet(static_cast<std::uint32_t>(index >> (i * n)) & mask);
      }
      if (!visit(SubsetModel(t, std::move(v)))) return false;
    }
  }
  return true;
}

std::vector<SubsetModel> exhaustive_models(int n, const std::vector<std::string>& atoms) {
  std::vector<SubsetModel> out;
  for_each_exhaustive_model(n, atoms, [&](const SubsetModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

CountermodelResult find_countermodel(const Formula& f, Semantics k, ScenarioClass c,
                                     const CountermodelOptions& options) {
  if (options.exhaustive_n > kMaxEnumerationWorlds) {
    throw BudgetError("exhaustive countermodel search is limited to n <= " +
                      std::to_string(kMaxEnumerationWorlds));
  }
  if (options.random_max_n > kMaxWorlds) {
    throw RangeError("random countermodel search is limited to n <= " + std::to_string(kMaxWorlds));
  }
  if (k == Semantics::Strong && c != ScenarioClass::All) {
    throw ArgumentError("strong semantics ranges over epistemic scenarios; class must be 'all'");
  }
  const std::set<std::string> atom_set = f.atoms();
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  FormulaDag dag;
  const int root = dag.add(f);

  CountermodelResult result;
  bool out_of_budget = false;
  std::vector<WorldSet> values;
  // Returns true when the model refutes f.
  auto refutes = [&](const SubsetModel& m) {
    if (result.evaluations >= options.budget) {
      out_of_budget = true;
      return false;
    }
    std::vector<RangePair> pairs;
    try {
      pairs = range_pairs(m.topology, k, c, options.scenario_budget);
    } catch (const BudgetError&) {
      return false;
    }
    for (const RangePair& p : pairs) result.evaluations += static_cast<std::uint64_t>(p.u.size());
    const auto failure = first_failures(dag, std::span<const int>(&root, 1), m, k, c,
                                        options.scenario_budget)[0];
    if (!failure) return false;
    result.status = CountermodelResult::Status::Found;
    result.model = m;
    result.scenario = failure;
    return true;
  };

  for (int n = 1; n <= options.exhaustive_n; ++n) {
    for_each_exhaustive_model(n, atoms, [&](const SubsetModel& m) {
      return !refutes(m) && !out_of_budget;
    });
    if (result.model) return result;
    if (out_of_budget) {
      result.status = CountermodelResult::Status::BudgetExhausted;
      return result;
    }
    result.exhaustive_clear_up_to = n;
  }

  if (options.random_max_n > 0) {
    for (int i = 0; i < options.random_models; ++i) {
      const int n = 1 + i % options.random_max_n;
      const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
      Topology t = random_model(seed, n, 0, options.density).topology;
      SplitMix64 rng(seed ^ 0x5bd1e995u);
      Valuation v;
      for (const std::string& a : atoms) {
        v[a] = WorldSet(static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n)));
      }
      if (refutes(SubsetModel(std::move(t), std::move(v)))) return result;
      if (out_of_budget) {
        result.status = CountermodelResult::Status::BudgetExhausted;
        return result;
      }
    }
  }
  result.status = CountermodelResult::Status::NotFound;
  return result;
}

}  // namespace topobelief
