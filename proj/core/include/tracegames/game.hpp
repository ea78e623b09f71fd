#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tracegames/automaton.hpp"

namespace tracegames {

/// An asynchronous automaton whose alphabet is split into controllable and
/// environment letters.
struct DistributedGame {
  AsyncAutomaton automaton;
  std::vector<bool> controllable;  // by LetterId; the complement is A_e

  bool is_controllable(LetterId a) const { return controllable[a]; }
  bool is_environment(LetterId a) const { return !controllable[a]; }
};

using LetterSet = std::vector<bool>;  // by LetterId

/// Per-process decision rule. The engine hands the rule the causal view of
/// the process, never the full play, and always unions the environment
/// letters into the returned set, so view-dependence and "all environment
/// actions are allowed" hold by construction.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual LetterSet allowed(ProcessId p, const Trace& view) const = 0;
};

/// Finite-table strategy keyed by canonical view. A view absent from the
/// table blocks all controllables.
class TableStrategy final : public Strategy {
 public:
  explicit TableStrategy(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

  void set(ProcessId p, const Word& canonical_view,
           const std::vector<LetterId>& allow);

  LetterSet allowed(ProcessId p, const Trace& view) const override;

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::map<std::pair<ProcessId, Word>, std::vector<LetterId>>& table()
      const {
    return table_;
  }

 private:
  AlphabetRef alphabet_;
  std::map<std::pair<ProcessId, Word>, std::vector<LetterId>> table_;
};

/// Strategy allowing no controllable action anywhere.
class BlockAllStrategy final : public Strategy {
 public:
  explicit BlockAllStrategy(std::size_t letter_count)
      : letter_count_(letter_count) {}
  LetterSet allowed(ProcessId, const Trace&) const override {
    return LetterSet(letter_count_, false);
  }

 private:
  std::size_t letter_count_;
};

/// Letters extending the play u under strategy sigma: the transition is
/// defined and every process in the letter's domain allows the letter (an
/// environment letter is allowed whenever its transition is defined).
/// Precondition: u is a play.
LetterSet allowed_letters(const DistributedGame& game, const Strategy& sigma,
                          const Trace& u);

/// Observes every explored play. `allowed` is the extension set computed for
/// the play; hooks may throw to signal a structural violation.
using ExplorationMonitor = std::function<void(
    const Trace& play, const GlobalState& state, const LetterSet& allowed)>;

struct SigmaPlays {
  std::vector<Trace> plays;  // canonical, deduplicated, BFS order
  bool complete = false;     // no frontier play at max_len extends further
};

/// Breadth-first closure of the empty play under allowed letters,
/// deduplicated by canonical form.
SigmaPlays enumerate_sigma_plays(const DistributedGame& game,
                                 const Strategy& sigma, std::size_t max_len,
                                 const ExplorationMonitor& monitor = nullptr);

struct VerificationVerdict {
  enum class Kind { Winning, Losing, Unknown };
  enum class Reason { DeadlockNonFinal, LoseState };

  Kind kind = Kind::Unknown;
  std::optional<Trace> witness;  // maximal sigma-play, for Losing
  Reason reason = Reason::DeadlockNonFinal;
  std::size_t depth = 0;  // exploration bound that was applied

  bool winning() const { return kind == Kind::Winning; }
};

/// Winning iff enumeration completes within the bound and every maximal
/// sigma-play ends with all processes final; Losing with a witness otherwise;
/// Unknown when the bound was hit without finding a losing witness.
VerificationVerdict verify_winning(const DistributedGame& game,
                                   const Strategy& sigma, std::size_t max_len,
                                   const ExplorationMonitor& monitor = nullptr);

/// First strategy of the family (in order) that verifies Winning.
std::shared_ptr<const Strategy> search_strategy(
    const DistributedGame& game,
    const std::vector<std::shared_ptr<const Strategy>>& candidates,
    std::size_t max_len);

}  // namespace tracegames
