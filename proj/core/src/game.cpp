#include "tracegames/game.hpp"

#include <cassert>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tracegames {

void TableStrategy::set(ProcessId p, const Word& canonical_view,
                        const std::vector<LetterId>& allow) {
  table_[{p, canonical_view}] = allow;
}

LetterSet TableStrategy::allowed(ProcessId p, const Trace& view) const {
  LetterSet out(alphabet_->letter_count(), false);
  auto it = table_.find({p, view.canonical()});
  if (it == table_.end()) return out;  // unknown view: block all controllables
  for (LetterId a : it->second) out[a] = true;
  return out;
}

namespace {

// sigma_p(view) with the environment letters unioned in, per the definition
// of a distributed strategy.
LetterSet strategy_allowance(const DistributedGame& game, const Strategy& sigma,
                             ProcessId p, const Trace& view) {
  LetterSet out = sigma.allowed(p, view);
  out.resize(game.controllable.size(), false);
  for (LetterId a = 0; a < out.size(); ++a)
    if (game.is_environment(a)) out[a] = true;
  for (LetterId a = 0; a < out.size(); ++a)
    if (game.is_environment(a) && !out[a])
      throw std::logic_error("environment letter missing from allowance");
  return out;
}

LetterSet allowed_from(const DistributedGame& game, const Strategy& sigma,
                       const GlobalState& state,
                       const std::vector<Trace>& views) {
  const auto& aut = game.automaton;
  const auto& alphabet = *aut.alphabet;
  LetterSet out(alphabet.letter_count(), false);
  // The per-process allowance is shared between the letters probing it.
  std::vector<std::optional<LetterSet>> allowance(aut.process_count());
  for (LetterId a = 0; a < alphabet.letter_count(); ++a) {
    if (!step(aut, state, a)) continue;
    bool ok = true;
    for (ProcessId p : alphabet.domain(a)) {
      if (!allowance[p])
        allowance[p] = strategy_allowance(game, sigma, p, views[p]);
      if (!(*allowance[p])[a]) {
        ok = false;
        break;
      }
    }
    out[a] = ok;
  }
  return out;
}

std::vector<Trace> all_views(const AsyncAutomaton& aut, const Trace& u) {
  std::vector<Trace> views;
  views.reserve(aut.process_count());
  for (ProcessId p = 0; p < aut.process_count(); ++p)
    views.push_back(view(u, p));
  return views;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (LetterId a : w) {
      h ^= a + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

LetterSet allowed_letters(const DistributedGame& game, const Strategy& sigma,
                          const Trace& u) {
  auto state = run(game.automaton, u);
  if (!state) throw std::invalid_argument("allowed_letters: u is not a play");
  return allowed_from(game, sigma, *state, all_views(game.automaton, u));
}

SigmaPlays enumerate_sigma_plays(const DistributedGame& game,
                                 const Strategy& sigma, std::size_t max_len,
                                 const ExplorationMonitor& monitor) {
  const auto& aut = game.automaton;
  SigmaPlays result;
  result.complete = true;

  std::unordered_set<Word, WordHash> seen;
  std::deque<std::pair<Trace, GlobalState>> frontier;

  Trace eps = Trace::empty(aut.alphabet);
  seen.insert(eps.canonical());
  frontier.emplace_back(eps, GlobalState{aut.initial});

  while (!frontier.empty()) {
    auto [u, state] = std::move(frontier.front());
    frontier.pop_front();

    LetterSet allowed = allowed_from(game, sigma, state, all_views(aut, u));
    if (monitor) monitor(u, state, allowed);
    result.plays.push_back(u);

    bool extendable = false;
    for (LetterId a = 0; a < allowed.size(); ++a) {
      if (!allowed[a]) continue;
      extendable = true;
      if (u.size() >= max_len) break;
      Trace next = concat(u, Trace::normalize(aut.alphabet, {a}));
      if (!seen.insert(next.canonical()).second) continue;
      auto next_state = step(aut, state, a);
      assert(next_state);
      frontier.emplace_back(std::move(next), std::move(*next_state));
    }
    if (extendable && u.size() >= max_len) result.complete = false;
  }
  return result;
}

VerificationVerdict verify_winning(const DistributedGame& game,
                                   const Strategy& sigma, std::size_t max_len,
                                   const ExplorationMonitor& monitor) {
  const auto& aut = game.automaton;
  VerificationVerdict verdict;
  verdict.depth = max_len;

  bool incomplete = false;
  std::optional<Trace> losing_witness;
  VerificationVerdict::Reason losing_reason =
      VerificationVerdict::Reason::DeadlockNonFinal;

  std::unordered_set<Word, WordHash> seen;
  std::deque<std::pair<Trace, GlobalState>> frontier;
  Trace eps = Trace::empty(aut.alphabet);
  seen.insert(eps.canonical());
  frontier.emplace_back(eps, GlobalState{aut.initial});

  while (!frontier.empty()) {
    auto [u, state] = std::move(frontier.front());
    frontier.pop_front();

    LetterSet allowed = allowed_from(game, sigma, state, all_views(aut, u));
    if (monitor) monitor(u, state, allowed);

    bool extendable = false;
    for (LetterId a = 0; a < allowed.size(); ++a) {
      if (!allowed[a]) continue;
      extendable = true;
      if (u.size() >= max_len) break;
      Trace next = concat(u, Trace::normalize(aut.alphabet, {a}));
      if (!seen.insert(next.canonical()).second) continue;
      auto next_state = step(aut, state, a);
      assert(next_state);
      frontier.emplace_back(std::move(next), std::move(*next_state));
    }

    if (extendable) {
      if (u.size() >= max_len) incomplete = true;
      continue;
    }
    // u is a maximal sigma-play.
    if (all_final(aut, state)) continue;
    if (!losing_witness) {
      losing_witness = u;
      losing_reason = VerificationVerdict::Reason::DeadlockNonFinal;
      for (ProcessId p = 0; p < state.locals.size(); ++p)
        if (aut.rules->is_losing_sink(p, state.locals[p]))
          losing_reason = VerificationVerdict::Reason::LoseState;
    }
  }

  if (losing_witness) {
    verdict.kind = VerificationVerdict::Kind::Losing;
    verdict.witness = std::move(losing_witness);
    verdict.reason = losing_reason;
  } else if (incomplete) {
    verdict.kind = VerificationVerdict::Kind::Unknown;
  } else {
    verdict.kind = VerificationVerdict::Kind::Winning;
  }
  return verdict;
}

std::shared_ptr<const Strategy> search_strategy(
    const DistributedGame& game,
    const std::vector<std::shared_ptr<const Strategy>>& candidates,
    std::size_t max_len) {
  for (const auto& candidate : candidates)
    if (verify_winning(game, *candidate, max_len).winning()) return candidate;
  return nullptr;
}

}  // namespace tracegames
