#pragma once

#include <array>
#include <memory>
#include <optional>

#include "tracegames/coloring.hpp"
#include "tracegames/game.hpp"

namespace tracegames {

/// The two pools of the six-process game built from a coloring constraint.
enum class Pool : std::uint8_t { Top = 0, Bottom = 1 };

enum class Phase : std::uint8_t { Playing, Ended, Checked, Answered, Won, Lost };

enum class ActionKind : std::uint8_t { None, Increment, End, Check, Answer };

/// Local state of one process X_l. Won and Lost are absorbing.
struct ProcessLocalState {
  Phase phase = Phase::Playing;
  ActionKind last_action = ActionKind::None;
  bool turn_flag = false;       // may synchronize on its own increment I_{X,l}
  std::uint8_t inc_mod4 = 0;    // increments played, modulo 4
  bool inc_is_one = false;      // exactly one increment so far
  bool round_complete = false;  // at least one increment and an even count
  bool played_end = false;      // END was played, surviving later checks
  ColorId answer = 0;           // the pair's answer, when phase == Answered

  bool has_incremented() const { return inc_mod4 != 0 || round_complete; }
  /// Round-index parity derived from the modulo-4 counter (needs >= 1
  /// increment): counts 1,2 mean an even round index, 3,0 an odd one.
  bool round_parity() const { return inc_mod4 == 3 || inc_mod4 == 0; }

  LocalState pack() const;
  static ProcessLocalState unpack(LocalState s);

  bool operator==(const ProcessLocalState&) const = default;
};

/// Process ids are T0,T1,T2,B0,B1,B2 in that order.
inline ProcessId process_id(Pool pool, int l) {
  return static_cast<ProcessId>(3 * static_cast<int>(pool) + l);
}
inline Pool pool_of(ProcessId p) { return static_cast<Pool>(p / 3); }
inline int index_of(ProcessId p) { return static_cast<int>(p % 3); }

/// Letter ids of the action catalog: 6 increments, 6 ENDs, 3 checks,
/// 3·|C| answers, WIN and LOSE.
struct GameActions {
  LetterId increment[2][3];               // [pool][l], dom {X_l, next(X_l)}
  LetterId end[2][3];                     // [pool][l], local
  LetterId check[3];                      // dom {T_l, B_l}, environment
  std::vector<std::array<LetterId, 3>> answers;  // [color][l]
  LetterId win = 0;                       // global, controllable
  LetterId lose = 0;                      // global, environment

  std::size_t total() const { return 17 + 3 * answers.size(); }
};

enum class LoseClause { A, B, C, D, E, F };

struct LoseCause {
  LoseClause clause;
  int pair;        // l of the pair whose answer is c
  int pair_ahead;  // l' < l for clauses (c)-(f); -1 for (a) and (b)

  bool operator==(const LoseCause&) const = default;
};

/// A coloring constraint turned into a six-process distributed game, plus
/// the catalog needed to address its actions.
struct ColoringGame {
  DistributedGame game;
  ColoringConstraint constraint;
  GameActions actions;
};

/// floor((h-1)/2) for a process that has played h > 0 increments.
std::size_t round_index(std::size_t h);

std::shared_ptr<const ColoringGame> build_game(const ColoringConstraint& k);

/// All LOSE clauses enabled in a global state, in clause order then pair
/// order. LOSE has a defined transition exactly when this is nonempty and no
/// process is mid-check or already absorbed.
std::vector<LoseCause> lose_causes(const ColoringGame& cg,
                                   const GlobalState& g);

/// The canonical strategy of the converse direction: play the round budgets
/// of f, END, answer f at the checked round indices, always allow WIN.
/// Requires satisfies(f, constraint).
std::shared_ptr<const Strategy> strategy_from_coloring(
    std::shared_ptr<const ColoringGame> cg, Coloring f);

/// Same rule without the satisfaction precondition, for adversarial tests.
std::shared_ptr<const Strategy> coloring_rule_strategy(
    std::shared_ptr<const ColoringGame> cg, Coloring f);

/// Keeps only the least allowed answer after each check, leaving every other
/// decision unchanged.
std::shared_ptr<const Strategy> single_answer_form(
    std::shared_ptr<const ColoringGame> cg,
    std::shared_ptr<const Strategy> sigma);

/// The answer of pair 1 after the probe play u_{x,y}·CHECK_1: x rounds plus
/// two increments in the top pool, y rounds plus two in the bottom pool.
/// Throws when the probe is not a sigma-play or the answer is not unique.
ColorId probe(const ColoringGame& cg, const Strategy& sigma, std::size_t x,
              std::size_t y);

/// Direct direction of the equivalence: round budgets read off the maximal
/// uninterrupted sigma-play, cells filled by probing. Absent when the
/// strategy does not verify Winning within the bound.
std::optional<Coloring> coloring_from_strategy(
    std::shared_ptr<const ColoringGame> cg,
    std::shared_ptr<const Strategy> sigma, std::size_t max_len);

/// Structural assertions evaluated on every explored play: fixed increment
/// order per pool, CHECK guard vs state agreement, WIN/LOSE absorption,
/// parity-based round comparison matching true round indices, environment
/// letters never blocked. Throws std::logic_error on violation.
ExplorationMonitor structural_monitor(std::shared_ptr<const ColoringGame> cg);

}  // namespace tracegames
