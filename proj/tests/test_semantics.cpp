#include <gtest/gtest.h>

#include "oracle.hpp"
#include "topobelief/corpus.hpp"
#include "topobelief/error.hpp"
#include "topobelief/scheme.hpp"
#include "topobelief/semantics.hpp"

using namespace topobelief;

namespace {

const WorldSet kX2 = WorldSet::full(2);
const WorldSet kX3 = WorldSet::full(3);

SubsetModel sierpinski(WorldSet p) {
  return SubsetModel(Topology::from_opens(2, {WorldSet{}, WorldSet{0}, kX2}), {{"p", p}});
}

const std::vector<Formula>& corpus() {
  static const std::vector<Formula> c = formula_corpus();
  return c;
}

// A spread of models on at most three worlds: all of n <= 2, every 5th of n = 3.
std::vector<SubsetModel> sample_models() {
  std::vector<SubsetModel> out;
  for (int n = 1; n <= 2; ++n) {
    for (SubsetModel& m : exhaustive_models(n, {"p", "q"})) out.push_back(std::move(m));
  }
  std::size_t i = 0;
  for_each_exhaustive_model(3, {"p", "q"}, [&](const SubsetModel& m) {
    if (i++ % 5 == 0) out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Scenario> scenarios_for(const SubsetModel& m, Semantics k, ScenarioClass c = ScenarioClass::All) {
  return k == Semantics::Strong ? epistemic_scenarios(m) : ed_scenarios(m, c);
}

}  // namespace

TEST(SemanticsNames, RoundTrip) {
  for (Semantics k : {Semantics::Strong, Semantics::Ed, Semantics::Ae}) {
    EXPECT_EQ(parse_semantics(to_string(k)), k);
  }
  EXPECT_EQ(parse_semantics("AE"), Semantics::Ae);
  EXPECT_THROW(parse_semantics("weak"), ArgumentError);
}

TEST(Extension, Examples) {
  const SubsetModel m = sierpinski(WorldSet{0});
  EXPECT_EQ(extension(m, kX2, std::nullopt, Formula::top(), Semantics::Strong), kX2);
  EXPECT_EQ(extension(m, WorldSet{0}, std::nullopt, Formula::top(), Semantics::Strong), WorldSet{0});
  EXPECT_EQ(extension(m, kX2, std::nullopt, parse("dia p"), Semantics::Strong), kX2);
  EXPECT_EQ(extension(m, kX2, std::nullopt, parse("box p"), Semantics::Strong), WorldSet{0});
}

TEST(Extension, RangeMismatchesAreRejected) {
  const SubsetModel m = sierpinski(WorldSet{0});
  EXPECT_THROW(extension(m, kX2, kX2, parse("p"), Semantics::Strong), ArgumentError);
  EXPECT_THROW(extension(m, kX2, std::nullopt, parse("p"), Semantics::Ed), ArgumentError);
  EXPECT_THROW(extension(m, WorldSet{1}, std::nullopt, parse("p"), Semantics::Strong), ArgumentError);
  EXPECT_THROW(extension(m, WorldSet{0}, kX2, parse("p"), Semantics::Ed), ArgumentError);
  EXPECT_THROW(eval(m, Scenario{1, WorldSet{0}, std::nullopt}, parse("p"), Semantics::Strong), ArgumentError);
}

TEST(Eval, FalseBeliefUnderStrong) {
  const SubsetModel m = sierpinski(WorldSet{0});
  const Scenario s{1, kX2, std::nullopt};
  EXPECT_TRUE(eval(m, s, parse("B p"), Semantics::Strong));
  EXPECT_FALSE(eval(m, s, parse("K p"), Semantics::Strong));
  EXPECT_FALSE(eval(m, s, parse("p"), Semantics::Strong));
  EXPECT_TRUE(eval(m, s, parse("B p -> dia p"), Semantics::Strong));
}

TEST(Eval, WeakFactivityFailsForConsistentEdScenario) {
  const SubsetModel m(Topology::discrete(2), {{"p", WorldSet{1}}});
  const Scenario s{0, kX2, WorldSet{1}};
  EXPECT_TRUE(eval(m, s, parse("B p"), Semantics::Ed));
  EXPECT_FALSE(eval(m, s, parse("dia p"), Semantics::Ed));
}

TEST(Eval, CautiousBeliefFailsForDenseEdScenario) {
  const SubsetModel m(
      Topology::from_opens(3, {WorldSet{}, WorldSet{0}, WorldSet{1}, WorldSet{0, 1}, kX3}),
      {{"p", WorldSet{0, 2}}});
  const Scenario s{0, kX3, kX3};
  EXPECT_TRUE(in_class(m.topology, s, ScenarioClass::Dense));
  EXPECT_FALSE(eval(m, s, parse("B (box p | box !box p)"), Semantics::Ed));
}

TEST(ValidInModel, Examples) {
  for (const SubsetModel& m : exhaustive_models(2, {"p"})) {
    EXPECT_TRUE(valid_in_model(m, parse("K p -> p"), Semantics::Strong).valid);
  }
  const Verdict v = valid_in_model(sierpinski(WorldSet{1}), parse("p -> box p"), Semantics::Strong);
  ASSERT_FALSE(v.valid);
  EXPECT_EQ(v.witness->scenario, (Scenario{1, kX2, std::nullopt}));
  // The trace ends with the formula itself, false at the witness.
  EXPECT_EQ(v.witness->trace.back().first, parse("p -> box p"));
  EXPECT_FALSE(v.witness->trace.back().second);
}

TEST(ValidInModel, EquivalenceSchemeHoldsOnAllSmallModels) {
  const Formula eq = instantiate(scheme("EQ"), {{"phi", parse("p")}});
  for (int n = 1; n <= 3; ++n) {
    for_each_exhaustive_model(n, {"p"}, [&](const SubsetModel& m) {
      EXPECT_TRUE(valid_in_model(m, eq, Semantics::Strong).valid);
      return true;
    });
  }
}

TEST(ValidInModel, WitnessIsCanonicallyFirstAndReplays) {
  // Compare with a plain scan of the scenario stream in canonical order.
  const std::vector<Formula> probes{parse("B p -> p"), parse("p -> K p"), parse("B p -> !B !p"),
                                    parse("box p | box !box p"), parse("B q -> dia q")};
  for (const SubsetModel& m : sample_models()) {
    for (Semantics k : {Semantics::Strong, Semantics::Ed, Semantics::Ae}) {
      for (const Formula& f : probes) {
        std::optional<Scenario> first;
        for (const Scenario& s : scenarios_for(m, k)) {
          if (!oracle::sat(m, k, s.x, s.u, s.v, f)) {
            first = s;
            break;
          }
        }
        const Verdict v = valid_in_model(m, f, k);
        EXPECT_EQ(v.valid, !first.has_value());
        if (first) {
          EXPECT_EQ(v.witness->scenario, *first);
          EXPECT_FALSE(eval(m, v.witness->scenario, f, k));
        }
      }
    }
  }
}

TEST(ValidInModel, StrongRejectsRestrictedClasses) {
  EXPECT_THROW(valid_in_model(sierpinski(WorldSet{0}), parse("p"), Semantics::Strong, ScenarioClass::Dense),
               ArgumentError);
}

TEST(Oracle, EvaluatorAgreesWithPointwiseClauses) {
  for (const SubsetModel& m : sample_models()) {
    for (Semantics k : {Semantics::Strong, Semantics::Ed, Semantics::Ae}) {
      Evaluator ev(m, k);
      const auto scenarios = scenarios_for(m, k);
      for (std::size_t i = 0; i < corpus().size(); i += 3) {
        const Formula& f = corpus()[i];
        for (const Scenario& s : scenarios) {
          ASSERT_EQ(ev.eval(s, f), oracle::sat(m, k, s.x, s.u, s.v, f))
              << to_text(f) << " at " << format_scenario(s) << " under " << to_string(k);
        }
      }
    }
  }
}

TEST(Properties, ExtensionCoherence) {
  for (const SubsetModel& m : sample_models()) {
    Evaluator ev(m, Semantics::Ed);
    for (const Scenario& s : ed_scenarios(m, ScenarioClass::All)) {
      for (std::size_t i = 0; i < corpus().size(); i += 7) {
        const Formula& f = corpus()[i];
        const WorldSet ext = ev.extension(f, s.u, s.v);
        EXPECT_TRUE(ext.subset_of(s.u));
        EXPECT_EQ(ev.eval(s, f), ext.contains(s.x));
      }
    }
  }
}

TEST(Properties, DiamondIsClosureWithinRange) {
  for (const SubsetModel& m : sample_models()) {
    for (WorldSet u : m.topology.opens()) {
      if (u.empty()) continue;
      for (std::size_t i = 0; i < corpus().size(); i += 11) {
        const Formula& f = corpus()[i];
        const WorldSet inner = extension(m, u, std::nullopt, f, Semantics::Strong);
        EXPECT_EQ(extension(m, u, std::nullopt, Formula::dia(f), Semantics::Strong),
                  m.topology.closure(inner) & u);
      }
    }
  }
}

TEST(Properties, BottomMatchesContradiction) {
  for (const SubsetModel& m : exhaustive_models(2, {"p"})) {
    for (const Scenario& s : epistemic_scenarios(m)) {
      EXPECT_EQ(eval(m, s, Formula::bot(), Semantics::Strong), eval(m, s, parse("p & !p"), Semantics::Strong));
      EXPECT_EQ(eval(m, s, parse("B false"), Semantics::Strong), eval(m, s, parse("B (p & !p)"), Semantics::Strong));
    }
  }
}

TEST(Properties, EdBeliefIgnoresTheWorld) {
  for (const SubsetModel& m : sample_models()) {
    Evaluator ev(m, Semantics::Ed);
    for (const Scenario& s : ed_scenarios(m, ScenarioClass::All)) {
      for (std::size_t i = 0; i < corpus().size(); i += 13) {
        const WorldSet ext = ev.extension(Formula::bel(corpus()[i]), s.u, s.v);
        EXPECT_TRUE(ext == s.u || ext.empty());
      }
    }
  }
}

TEST(Properties, TotalAeMatchesStrong) {
  for (const SubsetModel& m : sample_models()) {
    Evaluator ae(m, Semantics::Ae), strong(m, Semantics::Strong);
    for (const Scenario& s : epistemic_scenarios(m)) {
      const Scenario total{s.x, s.u, s.u};
      for (std::size_t i = 0; i < corpus().size(); i += 3) {
        EXPECT_EQ(ae.eval(total, corpus()[i]), strong.eval(s, corpus()[i])) << to_text(corpus()[i]);
      }
    }
  }
}

TEST(Properties, ClassMonotonicity) {
  const std::vector<Formula> probes{parse("B p -> !B !p"), parse("B p -> dia p"), parse("B (box p | box !box p)"),
                                    parse("K p -> B p"), parse("B p -> p")};
  for (const SubsetModel& m : sample_models()) {
    for (Semantics k : {Semantics::Ed, Semantics::Ae}) {
      for (const Formula& f : probes) {
        if (!valid_in_model(m, f, k, ScenarioClass::All).valid) continue;
        for (ScenarioClass c : {ScenarioClass::Consistent, ScenarioClass::Dense, ScenarioClass::Total}) {
          EXPECT_TRUE(valid_in_model(m, f, k, c).valid);
        }
      }
    }
  }
}

TEST(FirstFailures, SeveralRootsInOnePass) {
  FormulaDag dag;
  const std::vector<int> roots{dag.add(parse("B p -> p")), dag.add(parse("K p -> p")),
                               dag.add(parse("p -> K p"))};
  const SubsetModel m = sierpinski(WorldSet{0});
  const auto failures = first_failures(dag, roots, m, Semantics::Strong, ScenarioClass::All);
  ASSERT_EQ(failures.size(), 3u);
  EXPECT_EQ(failures[0], (Scenario{1, kX2, std::nullopt}));
  EXPECT_FALSE(failures[1]);
  EXPECT_EQ(failures[2], (Scenario{0, kX2, std::nullopt}));
  // Shared subformulas are interned once.
  EXPECT_EQ(dag.add(parse("p")), dag.add(Formula::atom("p")));
}

TEST(Countermodel, Examples) {
  const auto five = find_countermodel(parse("!box p -> box !box p"), Semantics::Strong, ScenarioClass::All);
  ASSERT_EQ(five.status, CountermodelResult::Status::Found);
  EXPECT_LE(five.model->size(), 3);
  EXPECT_FALSE(eval(*five.model, *five.scenario, parse("!box p -> box !box p"), Semantics::Strong));

  const auto d = find_countermodel(parse("B p -> !B !p"), Semantics::Ed, ScenarioClass::All);
  ASSERT_EQ(d.status, CountermodelResult::Status::Found);
  EXPECT_EQ(d.scenario->v, WorldSet{});

  const auto t = find_countermodel(parse("K p -> p"), Semantics::Strong, ScenarioClass::All);
  EXPECT_EQ(t.status, CountermodelResult::Status::NotFound);
  EXPECT_EQ(t.exhaustive_clear_up_to, 3);
}

TEST(Countermodel, RandomPhaseAndBudget) {
  CountermodelOptions opts;
  opts.exhaustive_n = 0;
  opts.random_max_n = 6;
  opts.random_models = 50;
  const auto r = find_countermodel(parse("B p -> p"), Semantics::Strong, ScenarioClass::All, opts);
  ASSERT_EQ(r.status, CountermodelResult::Status::Found);
  EXPECT_FALSE(eval(*r.model, *r.scenario, parse("B p -> p"), Semantics::Strong));
  // Same seed, same answer.
  const auto again = find_countermodel(parse("B p -> p"), Semantics::Strong, ScenarioClass::All, opts);
  EXPECT_EQ(again.model, r.model);
  EXPECT_EQ(again.scenario, r.scenario);

  CountermodelOptions tiny;
  tiny.budget = 1;
  EXPECT_EQ(find_countermodel(parse("K p -> p"), Semantics::Strong, ScenarioClass::All, tiny).status,
            CountermodelResult::Status::BudgetExhausted);

  CountermodelOptions too_big;
  too_big.exhaustive_n = 5;
  EXPECT_THROW(find_countermodel(parse("p"), Semantics::Strong, ScenarioClass::All, too_big), BudgetError);
}

TEST(Countermodel, LargerBudgetKeepsWitness) {
  const Formula f = parse("B (box p | box !box p)");
  std::optional<SubsetModel> previous;
  for (std::uint64_t budget : {100u, 1000u, 10000u, 100000u, 1000000u}) {
    CountermodelOptions opts;
    opts.budget = budget;
    const auto r = find_countermodel(f, Semantics::Ed, ScenarioClass::Dense, opts);
    if (previous) {
      ASSERT_EQ(r.status, CountermodelResult::Status::Found);
      EXPECT_EQ(r.model, previous);
    }
    if (r.status == CountermodelResult::Status::Found) previous = r.model;
  }
  EXPECT_TRUE(previous);
}

TEST(Exhaustive, ModelCounts) {
  EXPECT_EQ(exhaustive_models(1, {"p"}).size(), 2u);
  EXPECT_EQ(exhaustive_models(2, {"p", "q"}).size(), 4u * 16u);
  EXPECT_EQ(exhaustive_models(3, {}).size(), 29u);
}
