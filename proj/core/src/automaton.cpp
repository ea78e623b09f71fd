#include "tracegames/automaton.hpp"

#include <stdexcept>

namespace tracegames {

std::optional<GlobalState> step(const AsyncAutomaton& aut, const GlobalState& g,
                                LetterId a) {
  const auto& alphabet = *aut.alphabet;
  if (a >= alphabet.letter_count())
    throw std::invalid_argument("unknown letter");
  if (g.locals.size() != aut.process_count())
    throw std::invalid_argument("global state has the wrong arity");

  auto dom = alphabet.domain(a);
  std::vector<LocalState> in;
  in.reserve(dom.size());
  for (ProcessId p : dom) in.push_back(g.locals[p]);

  auto out = aut.rules->apply(a, in);
  if (!out) return std::nullopt;
  if (out->size() != dom.size())
    throw std::logic_error("transition arity mismatch");

  GlobalState next = g;
  for (std::size_t k = 0; k < dom.size(); ++k) next.locals[dom[k]] = (*out)[k];
  return next;
}

std::optional<GlobalState> run(const AsyncAutomaton& aut, const Trace& u) {
  if (!(u.alphabet() == aut.alphabet) && !(*u.alphabet() == *aut.alphabet))
    throw std::invalid_argument("trace over a different alphabet");
  GlobalState g{aut.initial};
  for (LetterId a : u.canonical()) {
    auto next = step(aut, g, a);
    if (!next) return std::nullopt;
    g = std::move(*next);
  }
  return g;
}

bool is_play(const AsyncAutomaton& aut, const Trace& u) {
  return run(aut, u).has_value();
}

bool all_final(const AsyncAutomaton& aut, const GlobalState& g) {
  for (ProcessId p = 0; p < g.locals.size(); ++p)
    if (!aut.rules->is_final(p, g.locals[p])) return false;
  return true;
}

TableRules::TableRules(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {
  names_.resize(alphabet_->process_count());
  finals_.resize(alphabet_->process_count());
  index_.resize(alphabet_->process_count());
}

LocalState TableRules::add_state(ProcessId p, const std::string& name) {
  auto it = index_[p].find(name);
  if (it != index_[p].end()) return it->second;
  LocalState s = static_cast<LocalState>(names_[p].size());
  names_[p].push_back(name);
  finals_[p].push_back(false);
  index_[p].emplace(name, s);
  return s;
}

void TableRules::set_final(ProcessId p, const std::string& name, bool final) {
  finals_[p][state(p, name)] = final;
}

LocalState TableRules::state(ProcessId p, const std::string& name) const {
  auto it = index_[p].find(name);
  if (it == index_[p].end())
    throw std::invalid_argument("unknown state '" + name + "' of process " +
                                alphabet_->process_name(p));
  return it->second;
}

void TableRules::add_transition(LetterId a,
                                const std::vector<std::string>& from,
                                const std::vector<std::string>& to) {
  auto dom = alphabet_->domain(a);
  if (from.size() != dom.size() || to.size() != dom.size())
    throw std::invalid_argument("transition arity does not match dom(a)");
  std::vector<LocalState> key, val;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    key.push_back(state(dom[k], from[k]));
    val.push_back(state(dom[k], to[k]));
  }
  auto [it, inserted] = table_.emplace(std::make_pair(a, key), val);
  if (!inserted && it->second != val)
    throw std::invalid_argument("nondeterministic transition on letter '" +
                                alphabet_->letter_name(a) + "'");
}

std::optional<std::vector<LocalState>> TableRules::apply(
    LetterId a, std::span<const LocalState> states) const {
  auto it = table_.find(
      std::make_pair(a, std::vector<LocalState>(states.begin(), states.end())));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

bool TableRules::is_final(ProcessId p, LocalState s) const {
  return finals_[p][s];
}

}  // namespace tracegames
