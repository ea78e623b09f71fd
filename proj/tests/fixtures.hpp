#pragma once

// Shared corpus: the paper-derived fixtures (Fig. 1 trace, Fig. 3 coloring,
// the two toy constraints), the PCP corpus, the small satisfiable-constraint
// corpus for the game equivalence, and the adversarial strategies for the six
// losing conditions.

#include <functional>
#include <memory>

#include "tracegames/documents.hpp"
#include "tracegames/pcp.hpp"
#include "tracegames/reduction_game.hpp"

namespace tracegames::fixtures {

// Fig. 1: letters identified with their process domains, processes 1..7.
struct Fig1 {
  AlphabetRef alphabet;
  Word lin_a;  // {2}{3}{4,5}{2,3}{4}{1,2}{3,4}
  Word lin_b;  // {4,5}{4}{2}{3}{2,3}{3,4}{1,2}
  LetterId l12, l34;
};
Fig1 fig1();

// Fig. 3: n=4, m=2, f(0,0)=G, f(3,1)=B, the rest R; constraint
// C_i={G,R}, C_f={B}, S=UT=LT={(B,G),(G,B)}.
ColoringConstraint fig3_constraint();
Coloring fig3_coloring();

// Toy constraint 1: C={0,+}, C_i={0}, C_f=C, UT={(+,0),(0,0)}, LT={(0,+)}.
ColoringConstraint toy1_constraint();

// Toy constraint 2 over {0,-,+}; final colors all, or just {0}.
ColoringConstraint toy2_constraint(bool final_zero_only);
Coloring sign_coloring(const ColoringConstraint& toy2, std::size_t n,
                       std::size_t m);

// PCP corpus of the round-trip criterion.
std::vector<PcpInstance> pcp_corpus();

// Satisfiable constraints with chosen witnesses at n,m <= 2 and |C| <= 2.
struct GameCase {
  std::string name;
  ColoringConstraint constraint;
  Coloring coloring;
};
std::vector<GameCase> game_corpus();

// Budgeted rule strategy with a custom answer: plays n rounds (top) and m
// rounds (bottom) of increments then END, answers answer(l, x, y) after a
// check of pair l at round indices (x, y), always allows WIN.
std::shared_ptr<const Strategy> answer_rule_strategy(
    std::shared_ptr<const ColoringGame> cg, std::size_t n, std::size_t m,
    std::function<ColorId(int l, std::size_t x, std::size_t y)> answer);

// One adversarial fixture per losing condition: the constraint isolates the
// clause (no other clause can ever fire) and the strategy triggers it.
struct LosingFixture {
  std::string name;
  LoseClause clause;
  std::shared_ptr<const ColoringGame> game;
  std::shared_ptr<const Strategy> strategy;
};
std::vector<LosingFixture> losing_fixtures();

}  // namespace tracegames::fixtures
