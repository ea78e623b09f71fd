#include "tracegames/automaton.hpp"

#include <gtest/gtest.h>

#include <deque>

#include "oracles.hpp"

namespace tracegames {
namespace {

// One process, states q0,q1, a single a: q0 -> q1.
AsyncAutomaton one_step() {
  auto alphabet = std::make_shared<DependencyAlphabet>();
  alphabet->add_letter("a", {"p"});
  auto table = std::make_shared<TableRules>(alphabet);
  table->add_state(0, "q0");
  table->add_state(0, "q1");
  table->set_final(0, "q1");
  table->add_transition(0, {"q0"}, {"q1"});
  return {alphabet, {0}, table};
}

// Two processes; a shared on both, b local to process 2.
struct TwoProc {
  AsyncAutomaton aut;
  LetterId a, b;
};

TwoProc two_proc() {
  auto alphabet = std::make_shared<DependencyAlphabet>();
  LetterId a = alphabet->add_letter("a", {"1", "2"});
  LetterId b = alphabet->add_letter("b", {"2"});
  auto table = std::make_shared<TableRules>(alphabet);
  for (ProcessId p : {0u, 1u}) {
    table->add_state(p, "s0");
    table->add_state(p, "s1");
  }
  table->add_transition(a, {"s0", "s0"}, {"s1", "s1"});
  table->add_transition(b, {"s0"}, {"s1"});
  table->add_transition(b, {"s1"}, {"s0"});
  return {{alphabet, {0, 0}, table}, a, b};
}

TEST(Automaton, StepExamples) {
  AsyncAutomaton aut = one_step();
  GlobalState q0{{0}};
  auto next = step(aut, q0, 0);
  ASSERT_TRUE(next);
  EXPECT_EQ(next->locals[0], 1u);
  EXPECT_FALSE(step(aut, *next, 0));  // no transition out of q1
  EXPECT_THROW(step(aut, q0, 5), std::invalid_argument);
}

TEST(Automaton, StepFrameCondition) {
  auto [aut, a, b] = two_proc();
  GlobalState g{{0, 0}};
  auto next = step(aut, g, b);
  ASSERT_TRUE(next);
  EXPECT_EQ(next->locals[0], 0u);  // process 1 untouched
  EXPECT_EQ(next->locals[1], 1u);
}

TEST(Automaton, RunEmptyIsInitial) {
  auto [aut, a, b] = two_proc();
  auto g = run(aut, Trace::empty(aut.alphabet));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->locals, (std::vector<LocalState>{0, 0}));
  EXPECT_TRUE(is_play(aut, Trace::empty(aut.alphabet)));
}

TEST(Automaton, RunUndefinedLetterIsNotPlay) {
  AsyncAutomaton aut = one_step();
  Trace aa = Trace::normalize(aut.alphabet, {0, 0});
  EXPECT_FALSE(is_play(aut, aa));
}

TEST(Automaton, TableRejectsNondeterminism) {
  auto alphabet = std::make_shared<DependencyAlphabet>();
  alphabet->add_letter("a", {"p"});
  TableRules table(alphabet);
  table.add_state(0, "q0");
  table.add_state(0, "q1");
  table.add_transition(0, {"q0"}, {"q0"});
  EXPECT_THROW(table.add_transition(0, {"q0"}, {"q1"}), std::invalid_argument);
}

// run is invariant across linearizations, plays are prefix-closed, and
// run composes over concatenation — checked on every play of length <= 6.
TEST(AutomatonProperty, RunIsLinearizationInvariant) {
  auto [aut, a, b] = two_proc();
  std::deque<Trace> frontier{Trace::empty(aut.alphabet)};
  std::set<Word> seen{{}};
  std::size_t plays = 0;
  while (!frontier.empty()) {
    Trace u = frontier.front();
    frontier.pop_front();
    auto g = run(aut, u);
    ASSERT_TRUE(g);
    ++plays;

    for (const Word& lin :
         oracle::commutation_closure(*aut.alphabet, u.canonical())) {
      GlobalState cur{aut.initial};
      bool ok = true;
      for (LetterId letter : lin) {
        auto next = step(aut, cur, letter);
        ASSERT_TRUE(next);  // prefix closure along any linearization
        cur = *next;
        (void)ok;
      }
      EXPECT_EQ(cur, *g);
    }

    // Composition: run(u·v) folds run(v)'s steps from run(u).
    for (LetterId letter = 0; letter < aut.alphabet->letter_count(); ++letter) {
      auto next = step(aut, *g, letter);
      Trace extended = concat(u, Trace::normalize(aut.alphabet, {letter}));
      auto direct = run(aut, extended);
      EXPECT_EQ(direct.has_value(), next.has_value());
      if (next && direct) {
        EXPECT_EQ(*direct, *next);
      }
      if (next && extended.size() <= 6 &&
          seen.insert(extended.canonical()).second)
        frontier.push_back(extended);
    }
  }
  EXPECT_GT(plays, 10u);
}

}  // namespace
}  // namespace tracegames
