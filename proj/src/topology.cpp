#include "topobelief/topology.hpp"

#include <algorithm>

#include "topobelief/error.hpp"

namespace topobelief {
namespace {

void sort_canonical(std::vector<WorldSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

void check_carrier_size(int n) {
  if (n < 1 || n > kMaxWorlds) {
    throw RangeError("carrier size " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxWorlds));
  }
}

// All sets closed upward under "y ∈ up[x]", i.e. unions of the given neighbourhoods.
std::vector<WorldSet> up_sets(int n, std::span<const WorldSet> up) {
  std::vector<WorldSet> opens;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    const WorldSet a(bits);
    bool closed = true;
    for (std::uint32_t b = bits; b != 0 && closed; b &= b - 1) {
      closed = up[std::countr_zero(b)].subset_of(a);
    }
    if (closed) opens.push_back(a);
  }
  sort_canonical(opens);
  return opens;
}

}  // namespace

std::string TopologyViolation::describe() const {
  switch (kind) {
    case Kind::OutOfRange: return "subset " + a.to_string() + " is outside the carrier";
    case Kind::MissingEmpty: return "empty set missing";
    case Kind::MissingCarrier: return "carrier " + a.to_string() + " missing";
    case Kind::MissingUnion:
      return "union " + a.to_string() + " | " + b.to_string() + " = " + (a | b).to_string() +
             " missing";
    case Kind::MissingIntersection:
      return "intersection " + a.to_string() + " & " + b.to_string() + " = " +
             (a & b).to_string() + " missing";
  }
  return "unknown violation";
}

std::optional<TopologyViolation> verify_topology(int n, std::span<const WorldSet> opens) {
  using Kind = TopologyViolation::Kind;
  const WorldSet full = WorldSet::full(n);
  for (WorldSet a : opens) {
    if (!a.subset_of(full)) return TopologyViolation{Kind::OutOfRange, a, {}};
  }
  std::vector<WorldSet> family(opens.begin(), opens.end());
  sort_canonical(family);
  auto has = [&](WorldSet s) {
    return std::binary_search(family.begin(), family.end(), s, CanonicalLess{});
  };
  if (!has(WorldSet{})) return TopologyViolation{Kind::MissingEmpty, {}, {}};
  if (!has(full)) return TopologyViolation{Kind::MissingCarrier, full, {}};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!has(family[i] | family[j])) {
        return TopologyViolation{Kind::MissingUnion, family[i], family[j]};
      }
      if (!has(family[i] & family[j])) {
        return TopologyViolation{Kind::MissingIntersection, family[i], family[j]};
      }
    }
  }
  return std::nullopt;
}

Topology::Topology(int n, std::vector<WorldSet> canonical_opens)
    : n_(n), opens_(std::move(canonical_opens)), neighborhoods_(n, WorldSet::full(n)) {
  for (WorldSet o : opens_) {
    o.for_each([&](int x) { neighborhoods_[x] &= o; });
  }
}

Topology Topology::from_opens(int n, std::vector<WorldSet> opens) {
  check_carrier_size(n);
  if (auto v = verify_topology(n, opens)) {
    if (v->kind == TopologyViolation::Kind::OutOfRange) throw RangeError(v->describe());
    throw TopologyError("not a topology: " + v->describe());
  }
  sort_canonical(opens);
  return Topology(n, std::move(opens));
}

Topology Topology::generate_from_subbasis(int n, std::span<const WorldSet> subbasis) {
  check_carrier_size(n);
  const WorldSet full = WorldSet::full(n);
  std::vector<WorldSet> up(n, full);
  for (WorldSet s : subbasis) {
    if (!s.subset_of(full)) throw RangeError("subbasis member " + s.to_string() + " outside the carrier");
    s.for_each([&](int x) { up[x] &= s; });
  }
  return Topology(n, up_sets(n, up));
}

Topology Topology::discrete(int n) {
  check_carrier_size(n);
  std::vector<WorldSet> up;
  for (int x = 0; x < n; ++x) up.push_back(WorldSet::singleton(x));
  return Topology(n, up_sets(n, up));
}

Topology Topology::indiscrete(int n) {
  check_carrier_size(n);
  return Topology(n, {WorldSet{}, WorldSet::full(n)});
}

bool Topology::is_open(WorldSet a) const { return open_index(a) >= 0; }

int Topology::open_index(WorldSet a) const {
  auto it = std::lower_bound(opens_.begin(), opens_.end(), a, CanonicalLess{});
  if (it == opens_.end() || *it != a) return -1;
  return static_cast<int>(it - opens_.begin());
}

void Topology::check_subset(WorldSet a) const {
  if (!a.subset_of(carrier())) {
    throw RangeError("subset " + a.to_string() + " outside carrier of size " + std::to_string(n_));
  }
}

WorldSet Topology::interior(WorldSet a) const {
  check_subset(a);
  WorldSet out;
  for (int x = 0; x < n_; ++x) {
    if (neighborhoods_[x].subset_of(a)) out |= WorldSet::singleton(x);
  }
  return out;
}

WorldSet Topology::closure(WorldSet a) const {
  check_subset(a);
  WorldSet out;
  for (int x = 0; x < n_; ++x) {
    if (neighborhoods_[x].intersects(a)) out |= WorldSet::singleton(x);
  }
  return out;
}

bool Topology::is_dense_in(WorldSet a, WorldSet u) const {
  check_subset(u);
  return u.subset_of(closure(a));
}

bool Topology::is_nowhere_dense(WorldSet a) const { return interior(closure(a)).empty(); }

bool Topology::almost_subset(WorldSet a, WorldSet b) const {
  check_subset(b);
  return is_nowhere_dense(a - b);
}

Topology topology_from_preorder(int n, std::span<const WorldSet> up) {
  check_carrier_size(n);
  if (static_cast<int>(up.size()) != n) throw RangeError("preorder needs one up-set per world");
  for (int x = 0; x < n; ++x) {
    if (!up[x].contains(x)) throw ArgumentError("preorder is not reflexive");
    up[x].for_each([&](int y) {
      if (y >= n) throw RangeError("preorder successor out of range");
      if (!up[y].subset_of(up[x])) throw ArgumentError("preorder is not transitive");
    });
  }
  return Topology::from_opens(n, up_sets(n, up));
}

std::vector<Topology> enumerate_topologies(int n) {
  if (n > kMaxEnumerationWorlds) {
    throw BudgetError("topology enumeration is limited to n <= " +
                      std::to_string(kMaxEnumerationWorlds));
  }
  check_carrier_size(n);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) pairs.emplace_back(x, y);
    }
  }
  std::vector<Topology> out;
  std::vector<WorldSet> up(n);
  const std::uint32_t limit = std::uint32_t{1} << pairs.size();
  for (std::uint32_t rel = 0; rel < limit; ++rel) {
    for (int x = 0; x < n; ++x) up[x] = WorldSet::singleton(x);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((rel >> i) & 1u) up[pairs[i].first] |= WorldSet::singleton(pairs[i].second);
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      up[x].for_each([&](int y) { transitive = transitive && up[y].subset_of(up[x]); });
    }
    if (transitive) out.push_back(Topology(n, up_sets(n, up)));
  }
  return out;
}

}  // namespace topobelief
