#include "topobelief/relational.hpp"

#include "topobelief/error.hpp"
#include "topobelief/semantics.hpp"

namespace topobelief {

RelationalModel::RelationalModel(std::vector<WorldSet> successors, Valuation valuation, bool)
    : succ_(std::move(successors)), valuation_(std::move(valuation)) {
  const int n = static_cast<int>(succ_.size());
  if (n < 1 || n > kMaxWorlds) throw RangeError("relational model needs 1.." + std::to_string(kMaxWorlds) + " worlds");
  const WorldSet full = WorldSet::full(n);
  for (WorldSet s : succ_) {
    if (!s.subset_of(full)) throw RangeError("relation successor " + s.to_string() + " out of range");
  }
  for (const auto& [atom, set] : valuation_) {
    if (!set.subset_of(full)) {
      throw RangeError("valuation of '" + atom + "' " + set.to_string() + " outside the carrier");
    }
  }
}

RelationalModel::RelationalModel(int n, const std::vector<std::pair<int, int>>& rel, Valuation valuation)
    : RelationalModel(
          [&] {
            if (n < 1 || n > kMaxWorlds) throw RangeError("relational model needs 1.." + std::to_string(kMaxWorlds) + " worlds");
            std::vector<WorldSet> succ(n);
            for (auto [from, to] : rel) {
              if (from < 0 || from >= n || to < 0 || to >= n) {
                throw RangeError("pair (" + std::to_string(from) + "," + std::to_string(to) +
                                 ") out of range");
              }
              succ[from] |= WorldSet::singleton(to);
            }
            return succ;
          }(),
          std::move(valuation), true) {}

RelationalModel RelationalModel::from_successors(std::vector<WorldSet> successors, Valuation valuation) {
  return RelationalModel(std::move(successors), std::move(valuation), true);
}

std::vector<std::pair<int, int>> RelationalModel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x) succ_[x].for_each([&](int y) { out.emplace_back(x, y); });
  return out;
}

WorldSet RelationalModel::value(const std::string& atom) const {
  auto it = valuation_.find(atom);
  return it == valuation_.end() ? WorldSet{} : it->second;
}

FrameFlags classify(const RelationalModel& m) {
  FrameFlags f;
  const int n = m.size();
  f.serial = f.transitive = f.euclidean = true;
  for (int x = 0; x < n; ++x) {
    const WorldSet sx = m.successors(x);
    if (sx.empty()) f.serial = false;
    sx.for_each([&](int y) {
      const WorldSet sy = m.successors(y);
      if (!sy.subset_of(sx)) f.transitive = false;
      if (!sx.subset_of(sy)) f.euclidean = false;
    });
  }
  f.belief_frame = f.serial && f.transitive && f.euclidean;
  const WorldSet c = m.successors(0);
  bool uniform = !c.empty();
  for (int x = 1; x < n && uniform; ++x) uniform = m.successors(x) == c;
  if (uniform) {
    f.brush = true;
    f.final_cluster = c;
    f.pin = n - c.size() == 1;
  }
  return f;
}

WorldSet BrushDecomposition::cell_of(int x) const {
  for (const BrushComponent& c : components) {
    if (c.cell.contains(x)) return c.cell;
  }
  throw RangeError("world " + std::to_string(x) + " is in no cell");
}

std::vector<WorldSet> BrushDecomposition::reconstruct(int n) const {
  std::vector<WorldSet> succ(n);
  for (const BrushComponent& c : components) {
    c.cell.for_each([&](int x) { succ[x] |= c.final_cluster; });
  }
  return succ;
}

BrushDecomposition decompose(const RelationalModel& m) {
  if (!classify(m).belief_frame) throw ArgumentError("decompose: not a belief frame");
  BrushDecomposition d;
  WorldSet assigned;
  for (int x = 0; x < m.size(); ++x) {
    if (assigned.contains(x)) continue;
    WorldSet cell, cluster;
    for (int y = 0; y < m.size(); ++y) {
      if (m.successors(x).intersects(m.successors(y))) cell |= WorldSet::singleton(y);
    }
    cell.for_each([&](int y) {
      if (m.related(y, y)) cluster |= WorldSet::singleton(y);
    });
    assigned |= cell;
    d.components.push_back({cell, cluster});
  }
  return d;
}

SubsetModel to_subset_model(const RelationalModel& m) {
  if (!classify(m).transitive) throw ArgumentError("to_subset_model: relation is not transitive");
  std::vector<WorldSet> up(m.size());
  for (int x = 0; x < m.size(); ++x) up[x] = m.successors(x) | WorldSet::singleton(x);
  return SubsetModel(topology_from_preorder(m.size(), up), m.valuation());
}

WorldSet relational_extension(const RelationalModel& m, const Formula& f) {
  const WorldSet all = WorldSet::full(m.size());
  switch (f.op()) {
    case Op::Atom: return m.value(f.name());
    case Op::Top: return all;
    case Op::Bot: return {};
    case Op::Not: return all - relational_extension(m, f.arg());
    case Op::And: return relational_extension(m, f.lhs()) & relational_extension(m, f.rhs());
    case Op::Or: return relational_extension(m, f.lhs()) | relational_extension(m, f.rhs());
    case Op::Implies:
      return (all - relational_extension(m, f.lhs())) | relational_extension(m, f.rhs());
    case Op::Iff:
      return all - (relational_extension(m, f.lhs()) ^ relational_extension(m, f.rhs()));
    case Op::Bel: {
      const WorldSet inner = relational_extension(m, f.arg());
      WorldSet out;
      for (int x = 0; x < m.size(); ++x) {
        if (m.successors(x).subset_of(inner)) out |= WorldSet::singleton(x);
      }
      return out;
    }
    case Op::K:
    case Op::Box:
      throw ArgumentError("relational semantics covers belief-only formulas: " + to_text(f));
  }
  return {};
}

bool eval_relational(const RelationalModel& m, int x, const Formula& f) {
  if (x < 0 || x >= m.size()) throw RangeError("world " + std::to_string(x) + " out of range");
  return relational_extension(m, f).contains(x);
}

std::optional<int> find_bridge_disagreement(const RelationalModel& m, const Formula& f) {
  const BrushDecomposition d = decompose(m);
  const WorldSet kripke = relational_extension(m, f);
  const SubsetModel xm = to_subset_model(m);
  Evaluator ev(xm, Semantics::Strong);
  for (const BrushComponent& c : d.components) {
    const WorldSet topo = ev.extension(f, c.cell);
    const WorldSet diff = (kripke & c.cell) ^ topo;
    if (!diff.empty()) return diff.min();
  }
  return std::nullopt;
}

RelationalModel random_belief_frame(std::uint64_t seed, int n, int atoms) {
  if (n < 1 || n > kMaxWorlds) throw RangeError("belief frame size out of range");
  SplitMix64 rng(seed);
  std::vector<WorldSet> cells;
  for (int x = 0; x < n; ++x) {
    const std::size_t label = rng.below(cells.size() + 1);
    if (label == cells.size()) cells.emplace_back();
    cells[label] |= WorldSet::singleton(x);
  }
  std::vector<WorldSet> succ(n);
  for (WorldSet cell : cells) {
    const std::vector<int> members = cell.members();
    const std::uint64_t pick = 1 + rng.below((std::uint64_t{1} << members.size()) - 1);
    WorldSet cluster;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((pick >> i) & 1u) cluster |= WorldSet::singleton(members[i]);
    }
    cell.for_each([&](int x) { succ[x] = cluster; });
  }
  Valuation v;
  for (const std::string& a : default_atoms(atoms)) {
    v[a] = WorldSet(static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << n)));
  }
  return RelationalModel::from_successors(std::move(succ), std::move(v));
}

}  // namespace topobelief
