#include <gtest/gtest.h>

#include "topobelief/corpus.hpp"
#include "topobelief/document.hpp"
#include "topobelief/error.hpp"
#include "topobelief/relational.hpp"
#include "topobelief/semantics.hpp"

using namespace topobelief;

namespace {

RelationalModel pin(Valuation v = {{"p", WorldSet{1}}}) {
  return RelationalModel(2, {{0, 1}, {1, 1}}, std::move(v));
}

// Every relation on n worlds, as successor sets.
std::vector<RelationalModel> all_relations(int n) {
  std::vector<RelationalModel> out;
  const int bits = n * n;
  for (std::uint32_t r = 0; r < (std::uint32_t{1} << bits); ++r) {
    std::vector<WorldSet> succ(n);
    for (int i = 0; i < bits; ++i) {
      if ((r >> i) & 1u) succ[i / n] |= WorldSet::singleton(i % n);
    }
    out.push_back(RelationalModel::from_successors(std::move(succ)));
  }
  return out;
}

// Kripke evaluation written independently of relational_extension.
bool kripke(const RelationalModel& m, int x, const Formula& f) {
  switch (f.op()) {
    case Op::Atom: return m.value(f.name()).contains(x);
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !kripke(m, x, f.arg());
    case Op::And: return kripke(m, x, f.lhs()) && kripke(m, x, f.rhs());
    case Op::Or: return kripke(m, x, f.lhs()) || kripke(m, x, f.rhs());
    case Op::Implies: return !kripke(m, x, f.lhs()) || kripke(m, x, f.rhs());
    case Op::Iff: return kripke(m, x, f.lhs()) == kripke(m, x, f.rhs());
    case Op::Bel:
      for (int y = 0; y < m.size(); ++y) {
        if (m.related(x, y) && !kripke(m, y, f.arg())) return false;
      }
      return true;
    default: ADD_FAILURE() << "unexpected operator"; return false;
  }
}

}  // namespace

TEST(Classify, Examples) {
  const FrameFlags a = classify(pin());
  EXPECT_TRUE(a.serial && a.transitive && a.euclidean && a.belief_frame && a.brush && a.pin);
  EXPECT_EQ(a.final_cluster, WorldSet{1});

  const FrameFlags b = classify(RelationalModel(2, {{0, 0}, {1, 1}}, {}));
  EXPECT_TRUE(b.belief_frame);
  EXPECT_FALSE(b.brush);

  const FrameFlags c = classify(RelationalModel(1, {}, {}));
  EXPECT_FALSE(c.serial);
  EXPECT_FALSE(c.belief_frame);
}

TEST(Classify, RejectsOutOfRangePairs) {
  EXPECT_THROW(RelationalModel(2, {{0, 2}}, {}), RangeError);
  EXPECT_THROW(RelationalModel(2, {}, {{"p", WorldSet{3}}}), RangeError);
  EXPECT_THROW(RelationalModel(0, {}, {}), RangeError);
}

TEST(Classify, BrushesAndBeliefFramesExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    for (const RelationalModel& m : all_relations(n)) {
      const FrameFlags f = classify(m);
      if (f.brush) EXPECT_TRUE(f.belief_frame);
      if (f.belief_frame && decompose(m).components.size() == 1) EXPECT_TRUE(f.brush);
      // Reference check of the brush definition: some nonempty C with R = X × C.
      bool is_brush = false;
      for (std::uint32_t c = 1; c < (std::uint32_t{1} << n); ++c) {
        bool all = true;
        for (int x = 0; x < n; ++x) all = all && m.successors(x) == WorldSet(c);
        is_brush = is_brush || all;
      }
      EXPECT_EQ(f.brush, is_brush);
    }
  }
}

TEST(Decompose, Examples) {
  const auto d = decompose(pin());
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0], (BrushComponent{WorldSet{0, 1}, WorldSet{1}}));

  const RelationalModel two_pins(4, {{0, 1}, {1, 1}, {2, 3}, {3, 3}}, {});
  const auto d2 = decompose(two_pins);
  ASSERT_EQ(d2.components.size(), 2u);
  EXPECT_EQ(d2.components[1], (BrushComponent{WorldSet{2, 3}, WorldSet{3}}));
  EXPECT_EQ(d2.cell_of(3), (WorldSet{2, 3}));

  std::vector<std::pair<int, int>> total;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) total.emplace_back(x, y);
  }
  const auto d3 = decompose(RelationalModel(3, total, {}));
  ASSERT_EQ(d3.components.size(), 1u);
  EXPECT_EQ(d3.components[0].cell, WorldSet::full(3));
  EXPECT_EQ(d3.components[0].final_cluster, WorldSet::full(3));

  EXPECT_THROW(decompose(RelationalModel(1, {}, {})), ArgumentError);
}

TEST(Decompose, ReconstructionIsExactForAllSmallBeliefFrames) {
  for (int n = 1; n <= 3; ++n) {
    for (const RelationalModel& m : all_relations(n)) {
      if (!classify(m).belief_frame) continue;
      const auto d = decompose(m);
      std::vector<WorldSet> succ(n);
      for (int x = 0; x < n; ++x) succ[x] = m.successors(x);
      EXPECT_EQ(d.reconstruct(n), succ);
      WorldSet covered;
      for (const BrushComponent& c : d.components) {
        EXPECT_FALSE(c.final_cluster.empty());
        EXPECT_TRUE(c.final_cluster.subset_of(c.cell));
        EXPECT_FALSE(covered.intersects(c.cell));
        covered |= c.cell;
      }
      EXPECT_EQ(covered, WorldSet::full(n));
    }
  }
}

TEST(ToSubsetModel, Examples) {
  EXPECT_EQ(to_subset_model(pin()).topology.opens(),
            (std::vector<WorldSet>{WorldSet{}, WorldSet{1}, WorldSet{0, 1}}));
  EXPECT_EQ(to_subset_model(RelationalModel(2, {{0, 0}, {1, 1}}, {})).topology, Topology::discrete(2));
  EXPECT_EQ(to_subset_model(RelationalModel(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {})).topology,
            Topology::indiscrete(2));
  EXPECT_THROW(to_subset_model(RelationalModel(3, {{0, 1}, {1, 2}}, {})), ArgumentError);
}

TEST(ToSubsetModel, NeighborhoodsAreReflexiveSuccessorSets) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const RelationalModel m = random_belief_frame(seed, 1 + static_cast<int>(seed % 6), 2);
    const SubsetModel s = to_subset_model(m);
    for (int x = 0; x < m.size(); ++x) {
      EXPECT_EQ(s.topology.neighborhood(x), m.successors(x) | WorldSet::singleton(x));
    }
    EXPECT_EQ(s.valuation, m.valuation());
  }
}

TEST(ToSubsetModel, FinalClusterLemmaEquivalences) {
  // In the up-set topology of a belief frame: cells and final clusters are open,
  // int(A) meets C_x iff A contains C_x, and cl(A) contains [x] iff A meets C_x.
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const RelationalModel m = random_belief_frame(seed * 31 + n, n, 0);
      const Topology t = to_subset_model(m).topology;
      for (const BrushComponent& c : decompose(m).components) {
        EXPECT_TRUE(t.is_open(c.cell));
        EXPECT_TRUE(t.is_open(c.final_cluster));
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
          const WorldSet a(bits);
          EXPECT_EQ(t.interior(a).intersects(c.final_cluster), c.final_cluster.subset_of(a));
          EXPECT_EQ(c.cell.subset_of(t.closure(a)), a.intersects(c.final_cluster));
        }
      }
    }
  }
}

TEST(EvalRelational, Examples) {
  const RelationalModel m = pin();
  EXPECT_TRUE(eval_relational(m, 0, parse("B p")));
  EXPECT_FALSE(eval_relational(m, 0, parse("p")));
  EXPECT_TRUE(eval_relational(m, 0, parse("B p & !p")));
  const RelationalModel empty(1, {}, {});
  EXPECT_TRUE(eval_relational(empty, 0, parse("B false")));
  EXPECT_THROW(eval_relational(m, 0, parse("K p")), ArgumentError);
  EXPECT_THROW(eval_relational(m, 0, parse("box p")), ArgumentError);
  EXPECT_THROW(eval_relational(m, 5, parse("p")), RangeError);
}

TEST(EvalRelational, AgreesWithIndependentKripkeEvaluator) {
  CorpusOptions opts;
  opts.modalities = {Op::Bel};
  const auto corpus = formula_corpus(opts);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RelationalModel m = random_belief_frame(seed, 4, 2);
    for (const Formula& f : corpus) {
      for (int x = 0; x < m.size(); ++x) EXPECT_EQ(eval_relational(m, x, f), kripke(m, x, f));
    }
  }
}

TEST(Bridge, Examples) {
  EXPECT_FALSE(find_bridge_disagreement(pin(), parse("B p")));
  const RelationalModel brush(3, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}, {{"p", WorldSet{1}}});
  EXPECT_FALSE(find_bridge_disagreement(brush, parse("hatB p")));
  EXPECT_FALSE(find_bridge_disagreement(brush, parse("true")));
  EXPECT_THROW(find_bridge_disagreement(RelationalModel(1, {}, {}), parse("p")), ArgumentError);
}

TEST(Bridge, HoldsOnSeededBeliefFrames) {
  CorpusOptions opts;
  opts.modalities = {Op::Bel};
  const auto corpus = formula_corpus(opts);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const RelationalModel m = random_belief_frame(seed, 1 + static_cast<int>(seed % 6), 2);
    for (const Formula& f : corpus) {
      EXPECT_FALSE(find_bridge_disagreement(m, f)) << to_text(f) << " seed " << seed;
    }
  }
}

TEST(RandomBeliefFrame, DeterministicAndAlwaysABeliefFrame) {
  EXPECT_EQ(random_belief_frame(9, 5, 2), random_belief_frame(9, 5, 2));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    EXPECT_TRUE(classify(random_belief_frame(seed, 1 + static_cast<int>(seed % 6), 1)).belief_frame);
  }
  EXPECT_THROW(random_belief_frame(1, 0, 1), RangeError);
}

TEST(RelationalDocument, RoundTrip) {
  const std::string text = dump_document(pin());
  const ModelDocument back = load_document(text);
  EXPECT_EQ(std::get<RelationalModel>(back), pin());
  EXPECT_EQ(dump_document(back), text);
}
