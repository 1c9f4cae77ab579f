#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "topobelief/formula.hpp"
#include "topobelief/model.hpp"
#include "topobelief/world_set.hpp"

namespace topobelief {

/// Kripke model (X, R, v) for the belief-only fragment.
class RelationalModel {
 public:
  /// Throws RangeError for out-of-range pairs or valuation sets.
  RelationalModel(int n, const std::vector<std::pair<int, int>>& rel, Valuation valuation = {});
  static RelationalModel from_successors(std::vector<WorldSet> successors, Valuation valuation = {});

  int size() const { return static_cast<int>(succ_.size()); }
  WorldSet successors(int x) const { return succ_[x]; }
  bool related(int x, int y) const { return succ_[x].contains(y); }
  /// Sorted (from, to) pairs.
  std::vector<std::pair<int, int>> pairs() const;
  const Valuation& valuation() const { return valuation_; }
  WorldSet value(const std::string& atom) const;

  bool operator==(const RelationalModel&) const = default;

 private:
  RelationalModel(std::vector<WorldSet> successors, Valuation valuation, bool);
  std::vector<WorldSet> succ_;
  Valuation valuation_;
};

struct FrameFlags {
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
  bool belief_frame = false;
  bool brush = false;
  bool pin = false;
  /// Set when the frame is a brush.
  std::optional<WorldSet> final_cluster;
};

FrameFlags classify(const RelationalModel& m);

struct BrushComponent {
  WorldSet cell;
  WorldSet final_cluster;
  bool operator==(const BrushComponent&) const = default;
};

/// A belief frame as a disjoint union of brushes, cells sorted by minimum element.
struct BrushDecomposition {
  std::vector<BrushComponent> components;

  /// The cell containing x.
  WorldSet cell_of(int x) const;
  /// Union of cell x final_cluster over all components, as successor sets.
  std::vector<WorldSet> reconstruct(int n) const;
};

/// Cells are the classes of x ~ y iff x and y share a successor; the final cluster of a
/// cell is its set of reflexive points. Throws ArgumentError for non-belief frames.
BrushDecomposition decompose(const RelationalModel& m);

/// Subset model over the topology whose minimal neighbourhoods are the reflexive-closure
/// successor sets R+(x). Throws ArgumentError unless R is transitive.
SubsetModel to_subset_model(const RelationalModel& m);

/// Kripke truth of a belief-only formula at x. Throws ArgumentError if f contains K or box.
bool eval_relational(const RelationalModel& m, int x, const Formula& f);

/// Extension of a belief-only formula over all worlds.
WorldSet relational_extension(const RelationalModel& m, const Formula& f);

/// Compares Kripke truth at x with strong-semantics truth at (x, [x]) in the generated
/// subset model for every world. Returns the first world where they differ.
/// Throws ArgumentError for non-belief frames.
std::optional<int> find_bridge_disagreement(const RelationalModel& m, const Formula& f);

/// Seeded random belief frame: random partition into cells, a nonempty random final
/// cluster per cell, R = union of cell x cluster. Valuations uniform over `atoms` atoms.
RelationalModel random_belief_frame(std::uint64_t seed, int n, int atoms);

}  // namespace topobelief
