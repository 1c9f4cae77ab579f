#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topobelief/world_set.hpp"

namespace topobelief {

/// First reason an open-set family fails to be a topology.
struct TopologyViolation {
  enum class Kind { OutOfRange, MissingEmpty, MissingCarrier, MissingUnion, MissingIntersection };
  Kind kind;
  WorldSet a;
  WorldSet b;

  std::string describe() const;
};

/// Checks ∅ and X membership, then pairwise unions and intersections, in the family's
/// canonical order. Returns nullopt when `opens` is a topology on n points.
std::optional<TopologyViolation> verify_topology(int n, std::span<const WorldSet> opens);

/// A finite topological space on worlds 0..n-1. Immutable once built.
///
/// The open family is stored explicitly in canonical order (cardinality, then bit value).
/// Each world's minimal open neighbourhood is computed eagerly at construction; interior
/// and closure are answered from it.
class Topology {
 public:
  /// Validates and canonicalizes an explicit family. Throws TopologyError / RangeError.
  static Topology from_opens(int n, std::vector<WorldSet> opens);
  /// Smallest topology containing the subbasis (∅ and X always included).
  static Topology generate_from_subbasis(int n, std::span<const WorldSet> subbasis);
  static Topology discrete(int n);
  static Topology indiscrete(int n);

  int size() const { return n_; }
  WorldSet carrier() const { return WorldSet::full(n_); }
  const std::vector<WorldSet>& opens() const { return opens_; }
  bool is_open(WorldSet a) const;
  /// Position of an open set in canonical order, or -1.
  int open_index(WorldSet a) const;
  /// Smallest open set containing x.
  WorldSet neighborhood(int x) const { return neighborhoods_[x]; }

  WorldSet interior(WorldSet a) const;
  WorldSet closure(WorldSet a) const;
  /// u ⊆ cl(a).
  bool is_dense_in(WorldSet a, WorldSet u) const;
  /// int(cl(a)) = ∅.
  bool is_nowhere_dense(WorldSet a) const;
  /// a ⊆* b: a ∖ b is nowhere dense.
  bool almost_subset(WorldSet a, WorldSet b) const;

  /// Throws RangeError unless a ⊆ carrier.
  void check_subset(WorldSet a) const;

  bool operator==(const Topology& o) const { return n_ == o.n_ && opens_ == o.opens_; }

 private:
  friend std::vector<Topology> enumerate_topologies(int n);
  friend Topology topology_from_preorder(int n, std::span<const WorldSet> up);

  Topology(int n, std::vector<WorldSet> canonical_opens);
  int n_ = 0;
  std::vector<WorldSet> opens_;
  std::vector<WorldSet> neighborhoods_;
};

/// Specialization preorder of the up-set topology: rel[x] is the set of y with x ≤ y.
/// Requires a reflexive transitive relation.
Topology topology_from_preorder(int n, std::span<const WorldSet> up);

/// Every labeled topology on n ≤ 4 points, each exactly once, in a fixed order.
/// Produced from the reflexive transitive relations via their up-set families.
/// Throws BudgetError for n > 4 and RangeError for n < 1.
std::vector<Topology> enumerate_topologies(int n);

inline constexpr int kMaxEnumerationWorlds = 4;

}  // namespace topobelief
