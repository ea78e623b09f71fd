#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracegames/trace.hpp"

namespace tracegames {

using LocalState = std::uint32_t;

/// A global state: one local state per process, indexed by ProcessId.
struct GlobalState {
  std::vector<LocalState> locals;

  bool operator==(const GlobalState&) const = default;
};

/// Deterministic transition semantics of an asynchronous automaton. The
/// local states handed to apply() are those of dom(a), ascending by
/// ProcessId; the result replaces exactly those components. Implementations
/// must be pure: same inputs, same answer, no side effects.
class AutomatonRules {
 public:
  virtual ~AutomatonRules() = default;

  virtual std::optional<std::vector<LocalState>> apply(
      LetterId a, std::span<const LocalState> states) const = 0;

  virtual bool is_final(ProcessId p, LocalState s) const = 0;

  /// Absorbing defeat states, when the automaton has them. Used to label
  /// losing witnesses; default games have none.
  virtual bool is_losing_sink(ProcessId, LocalState) const { return false; }
};

struct AsyncAutomaton {
  AlphabetRef alphabet;
  std::vector<LocalState> initial;  // by ProcessId
  std::shared_ptr<const AutomatonRules> rules;

  std::size_t process_count() const { return initial.size(); }
};

/// One synchronized transition; states of processes outside dom(a) do not
/// change. Absent when the rules define no transition.
std::optional<GlobalState> step(const AsyncAutomaton& aut, const GlobalState& g,
                                LetterId a);

/// Folds step over a linearization of u; the result is
/// linearization-invariant. Absent iff u is not a play.
std::optional<GlobalState> run(const AsyncAutomaton& aut, const Trace& u);

bool is_play(const AsyncAutomaton& aut, const Trace& u);

bool all_final(const AsyncAutomaton& aut, const GlobalState& g);

/// Explicit-table rules for hand-built automata. States are named per
/// process; transitions are keyed by letter and the dom(a)-tuple of states.
class TableRules final : public AutomatonRules {
 public:
  explicit TableRules(AlphabetRef alphabet);

  LocalState add_state(ProcessId p, const std::string& name);
  void set_final(ProcessId p, const std::string& name, bool final = true);
  /// from/to follow dom(a) order (ascending ProcessId).
  void add_transition(LetterId a, const std::vector<std::string>& from,
                      const std::vector<std::string>& to);

  std::optional<std::vector<LocalState>> apply(
      LetterId a, std::span<const LocalState> states) const override;
  bool is_final(ProcessId p, LocalState s) const override;

  std::size_t state_count(ProcessId p) const { return names_[p].size(); }
  const std::string& state_name(ProcessId p, LocalState s) const {
    return names_[p][s];
  }
  LocalState state(ProcessId p, const std::string& name) const;
  bool final_flag(ProcessId p, LocalState s) const { return finals_[p][s]; }
  const std::map<std::pair<LetterId, std::vector<LocalState>>,
                 std::vector<LocalState>>&
  transitions() const {
    return table_;
  }

 private:
  AlphabetRef alphabet_;
  std::vector<std::vector<std::string>> names_;   // per process
  std::vector<std::vector<bool>> finals_;         // per process
  std::vector<std::map<std::string, LocalState>> index_;
  std::map<std::pair<LetterId, std::vector<LocalState>>,
           std::vector<LocalState>>
      table_;
};

}  // namespace tracegames
