#include "topobelief/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "topobelief/error.hpp"

namespace topobelief {

SubsetModel::SubsetModel(Topology t, Valuation v) : topology(std::move(t)), valuation(std::move(v)) {
  for (const auto& [atom, set] : valuation) {
    if (!set.subset_of(topology.carrier())) {
      throw RangeError("valuation of '" + atom + "' " + set.to_string() + " outside the carrier");
    }
  }
}

WorldSet SubsetModel::value(const std::string& atom) const {
  auto it = valuation.find(atom);
  return it == valuation.end() ? WorldSet{} : it->second;
}

std::string_view to_string(ScenarioClass c) {
  switch (c) {
    case ScenarioClass::All: return "all";
    case ScenarioClass::Consistent: return "consistent";
    case ScenarioClass::Dense: return "dense";
    case ScenarioClass::Total: return "total";
  }
  return "all";
}

ScenarioClass parse_scenario_class(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "all") return ScenarioClass::All;
  if (lower == "consistent") return ScenarioClass::Consistent;
  if (lower == "dense") return ScenarioClass::Dense;
  if (lower == "total") return ScenarioClass::Total;
  throw ArgumentError("unknown scenario class '" + std::string(s) + "'");
}

bool is_valid_scenario(const Topology& t, const Scenario& s) {
  if (s.x < 0 || s.x >= t.size()) return false;
  if (!s.u.contains(s.x) || !t.is_open(s.u)) return false;
  if (s.v && (!t.is_open(*s.v) || !s.v->subset_of(s.u))) return false;
  return true;
}

bool in_class(const Topology& t, const Scenario& s, ScenarioClass c) {
  if (!s.v) return c == ScenarioClass::All;
  switch (c) {
    case ScenarioClass::All: return true;
    case ScenarioClass::Consistent: return !s.v->empty();
    case ScenarioClass::Dense: return s.u.subset_of(t.closure(*s.v));
    case ScenarioClass::Total: return *s.v == s.u;
  }
  return false;
}

void check_scenario_budget(const Topology& t, std::uint64_t budget) {
  const std::uint64_t m = t.opens().size();
  const std::uint64_t cost = m * m * static_cast<std::uint64_t>(t.size());
  if (cost > budget) {
    throw BudgetError("scenario space " + std::to_string(cost) + " exceeds budget " +
                      std::to_string(budget));
  }
}

ScenarioStream::ScenarioStream(const Topology& t, bool with_v, ScenarioClass c)
    : topology_(&t), with_v_(with_v), class_(c) {}

ScenarioStream ScenarioStream::epistemic(const Topology& t) {
  return ScenarioStream(t, false, ScenarioClass::All);
}

ScenarioStream ScenarioStream::doxastic(const Topology& t, ScenarioClass c) {
  return ScenarioStream(t, true, c);
}

bool ScenarioStream::advance() {
  const std::size_t m = topology_->opens().size();
  if (with_v_ && ++v_ < m) return true;
  v_ = 0;
  if (++u_ < m) return true;
  u_ = 0;
  return ++x_ < topology_->size();
}

std::optional<Scenario> ScenarioStream::next() {
  const auto& opens = topology_->opens();
  while (!done_) {
    if (started_ && !advance()) {
      done_ = true;
      break;
    }
    started_ = true;
    Scenario s{x_, opens[u_], std::nullopt};
    if (with_v_) s.v = opens[v_];
    if (is_valid_scenario(*topology_, s) && in_class(*topology_, s, class_)) return s;
  }
  return std::nullopt;
}

std::vector<Scenario> ScenarioStream::collect() {
  std::vector<Scenario> out;
  while (auto s = next()) out.push_back(*s);
  return out;
}

std::vector<Scenario> epistemic_scenarios(const SubsetModel& m) {
  return ScenarioStream::epistemic(m.topology).collect();
}

std::vector<Scenario> ed_scenarios(const SubsetModel& m, ScenarioClass c) {
  check_scenario_budget(m.topology);
  return ScenarioStream::doxastic(m.topology, c).collect();
}

std::vector<std::string> default_atoms(int count) {
  static const char* kNames[] = {"p", "q", "r", "s", "t"};
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(i < 5 ? std::string(kNames[i]) : "a" + std::to_string(i));
  }
  return out;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

SubsetModel random_model(std::uint64_t seed, int n, int atoms, double density) {
  if (n < 1 || n > kMaxWorlds) {
    throw RangeError("random model size " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxWorlds));
  }
  SplitMix64 rng(seed);
  const std::uint32_t full = WorldSet::full(n).bits();
  std::vector<WorldSet> picked;
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    if (rng.unit() < density) picked.emplace_back(bits);
  }
  const std::size_t cap = static_cast<std::size_t>(n);
  if (picked.size() > cap) {
    for (std::size_t i = 0; i < cap; ++i) {
      std::swap(picked[i], picked[i + rng.below(picked.size() - i)]);
    }
    picked.resize(cap);
  }
  Topology t = Topology::generate_from_subbasis(n, picked);
  Valuation v;
  for (const std::string& a : default_atoms(atoms)) {
    v[a] = WorldSet(static_cast<std::uint32_t>(rng.below(std::uint64_t{full} + 1)));
  }
  return SubsetModel(std::move(t), std::move(v));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_index(std::string_view s) {
  const std::string t = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || value < 0 ||
      value >= kMaxWorlds) {
    throw DocumentError("bad world index '" + t + "' in scenario");
  }
  return value;
}

WorldSet parse_list(std::string_view s) {
  WorldSet out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out |= WorldSet::singleton(parse_index(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(WorldSet s) {
  std::string out;
  s.for_each([&](int x) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  });
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  std::optional<int> x;
  std::optional<WorldSet> u, v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view part = text.substr(start, semi - start);
    start = semi == std::string_view::npos ? text.size() + 1 : semi + 1;
    if (trim(part).empty()) continue;
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw DocumentError("scenario component '" + trim(part) + "' lacks '='");
    }
    const std::string key = trim(part.substr(0, eq));
    const std::string_view value = part.substr(eq + 1);
    if (key == "x") x = parse_index(value);
    else if (key == "U") u = parse_list(value);
    else if (key == "V") v = parse_list(value);
    else throw DocumentError("unknown scenario key '" + key + "'");
  }
  if (!x || !u) throw DocumentError("scenario needs both x= and U=");
  return Scenario{*x, *u, v};
}

std::string format_scenario(const Scenario& s) {
  std::string out = "x=" + std::to_string(s.x) + ";U=" + join(s.u);
  if (s.v) out += ";V=" + join(*s.v);
  return out;
}

}  // namespace topobelief
