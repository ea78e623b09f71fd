#include "tracegames/reduction_game.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tracegames {

namespace {

// Bit layout: phase(3) | last(3) | turn(1) | mod4(2) | one(1) | rc(1) |
// end(1) | answer(20).
constexpr std::uint32_t kPhaseShift = 0;
constexpr std::uint32_t kLastShift = 3;
constexpr std::uint32_t kTurnShift = 6;
constexpr std::uint32_t kMod4Shift = 7;
constexpr std::uint32_t kOneShift = 9;
constexpr std::uint32_t kRcShift = 10;
constexpr std::uint32_t kEndShift = 11;
constexpr std::uint32_t kAnswerShift = 12;

}  // namespace

LocalState ProcessLocalState::pack() const {
  return (static_cast<std::uint32_t>(phase) << kPhaseShift) |
         (static_cast<std::uint32_t>(last_action) << kLastShift) |
         (static_cast<std::uint32_t>(turn_flag) << kTurnShift) |
         (static_cast<std::uint32_t>(inc_mod4) << kMod4Shift) |
         (static_cast<std::uint32_t>(inc_is_one) << kOneShift) |
         (static_cast<std::uint32_t>(round_complete) << kRcShift) |
         (static_cast<std::uint32_t>(played_end) << kEndShift) |
         (static_cast<std::uint32_t>(answer) << kAnswerShift);
}

ProcessLocalState ProcessLocalState::unpack(LocalState s) {
  ProcessLocalState st;
  st.phase = static_cast<Phase>((s >> kPhaseShift) & 0x7);
  st.last_action = static_cast<ActionKind>((s >> kLastShift) & 0x7);
  st.turn_flag = (s >> kTurnShift) & 0x1;
  st.inc_mod4 = static_cast<std::uint8_t>((s >> kMod4Shift) & 0x3);
  st.inc_is_one = (s >> kOneShift) & 0x1;
  st.round_complete = (s >> kRcShift) & 0x1;
  st.played_end = (s >> kEndShift) & 0x1;
  st.answer = static_cast<ColorId>(s >> kAnswerShift);
  return st;
}

std::size_t round_index(std::size_t h) {
  if (h == 0) throw std::invalid_argument("round index undefined before the first increment");
  return (h - 1) / 2;
}

namespace {

struct LetterInfo {
  enum class Cat { Increment, End, Check, Answer, Win, Lose };
  Cat cat;
  Pool pool = Pool::Top;
  int l = 0;
  ColorId color = 0;
};

struct Catalog {
  GameActions actions;
  std::vector<LetterInfo> info;  // by LetterId
};

Catalog make_catalog(DependencyAlphabet& alphabet,
                     const ColoringConstraint& k) {
  Catalog cat;
  const char* pool_tag[2] = {"T", "B"};
  for (ProcessId p = 0; p < 6; ++p)
    alphabet.add_process(std::string(pool_tag[p / 3]) + std::to_string(p % 3));

  auto pname = [&](Pool x, int l) {
    return std::string(pool_tag[static_cast<int>(x)]) + std::to_string(l);
  };

  for (int x = 0; x < 2; ++x)
    for (int l = 0; l < 3; ++l) {
      Pool pool = static_cast<Pool>(x);
      LetterId a = alphabet.add_letter(
          "I_" + pname(pool, l),
          {pname(pool, l), pname(pool, (l + 1) % 3)});
      cat.actions.increment[x][l] = a;
      cat.info.push_back({LetterInfo::Cat::Increment, pool, l, 0});
    }
  for (int x = 0; x < 2; ++x)
    for (int l = 0; l < 3; ++l) {
      Pool pool = static_cast<Pool>(x);
      LetterId a = alphabet.add_letter("END_" + pname(pool, l),
                                       {pname(pool, l)});
      cat.actions.end[x][l] = a;
      cat.info.push_back({LetterInfo::Cat::End, pool, l, 0});
    }
  for (int l = 0; l < 3; ++l) {
    LetterId a = alphabet.add_letter("CHECK_" + std::to_string(l),
                                     {pname(Pool::Top, l), pname(Pool::Bottom, l)});
    cat.actions.check[l] = a;
    cat.info.push_back({LetterInfo::Cat::Check, Pool::Top, l, 0});
  }
  std::vector<std::string> everyone;
  for (ProcessId p = 0; p < 6; ++p) everyone.push_back(alphabet.process_name(p));
  cat.actions.answers.resize(k.color_count());
  for (ColorId c = 0; c < k.color_count(); ++c)
    for (int l = 0; l < 3; ++l) {
      LetterId a = alphabet.add_letter(
          "ANSWER_" + std::to_string(l) + "_" + k.color_name(c),
          {pname(Pool::Top, l), pname(Pool::Bottom, l)});
      cat.actions.answers[c][l] = a;
      cat.info.push_back({LetterInfo::Cat::Answer, Pool::Top, l, c});
    }
  cat.actions.win = alphabet.add_letter("WIN", everyone);
  cat.info.push_back({LetterInfo::Cat::Win, Pool::Top, 0, 0});
  cat.actions.lose = alphabet.add_letter("LOSE", everyone);
  cat.info.push_back({LetterInfo::Cat::Lose, Pool::Top, 0, 0});
  return cat;
}

std::vector<LoseCause> lose_causes_impl(
    const ColoringConstraint& k,
    const std::array<ProcessLocalState, 6>& st) {
  std::vector<LoseCause> out;
  auto answered = [&](int l) {
    return st[l].phase == Phase::Answered && st[l + 3].phase == Phase::Answered;
  };
  for (int l = 0; l < 3; ++l) {
    if (!answered(l)) continue;
    ColorId c = st[l].answer;
    if (st[l].inc_is_one && st[l + 3].inc_is_one && !k.initial_allowed(c))
      out.push_back({LoseClause::A, l, -1});
    if (st[l].played_end && st[l + 3].played_end && !k.final_allowed(c))
      out.push_back({LoseClause::B, l, -1});
  }
  // Two parallel answers by pairs l and l' with l' < l; the answer of the
  // later-indexed pair comes first in the pattern, the pair one round ahead
  // second. "Same round" is parity equality of the round indices.
  for (int lp = 0; lp < 3; ++lp)
    for (int l = lp + 1; l < 3; ++l) {
      if (!answered(l) || !answered(lp)) continue;
      ColorId c = st[l].answer;
      ColorId cp = st[lp].answer;
      bool top_same = st[l].round_parity() == st[lp].round_parity();
      bool bottom_same = st[l + 3].round_parity() == st[lp + 3].round_parity();
      if (top_same && bottom_same && c != cp)
        out.push_back({LoseClause::C, l, lp});
      if (!top_same && !bottom_same && k.square_forbidden(c, cp))
        out.push_back({LoseClause::D, l, lp});
      if (!top_same && bottom_same && k.upper_forbidden(c, cp))
        out.push_back({LoseClause::E, l, lp});
      if (top_same && !bottom_same && k.lower_forbidden(c, cp))
        out.push_back({LoseClause::F, l, lp});
    }
  return out;
}

class GameRules final : public AutomatonRules {
 public:
  GameRules(ColoringConstraint k, Catalog cat)
      : constraint_(std::move(k)), cat_(std::move(cat)) {}

  std::optional<std::vector<LocalState>> apply(
      LetterId a, std::span<const LocalState> in) const override {
    const LetterInfo& li = cat_.info[a];
    std::vector<ProcessLocalState> st;
    st.reserve(in.size());
    for (LocalState s : in) st.push_back(ProcessLocalState::unpack(s));

    switch (li.cat) {
      case LetterInfo::Cat::Increment: {
        // dom(I_{X,l}) = {X_l, next(X_l)}; ascending order puts X_0 first.
        std::size_t owner = (li.l == 2) ? 1 : 0;
        if (st[0].phase != Phase::Playing || st[1].phase != Phase::Playing)
          return std::nullopt;
        if (!st[owner].turn_flag) return std::nullopt;
        for (auto& s : st) {
          bool was_odd = (s.inc_mod4 % 2) == 1;
          s.inc_is_one = !s.has_incremented();
          s.inc_mod4 = static_cast<std::uint8_t>((s.inc_mod4 + 1) % 4);
          s.round_complete = was_odd;
          s.turn_flag = !s.turn_flag;
          s.last_action = ActionKind::Increment;
        }
        break;
      }
      case LetterInfo::Cat::End:
        if (st[0].phase != Phase::Playing || !st[0].round_complete)
          return std::nullopt;
        st[0].phase = Phase::Ended;
        st[0].played_end = true;
        st[0].last_action = ActionKind::End;
        break;
      case LetterInfo::Cat::Check:
        for (const auto& s : st) {
          if (s.phase != Phase::Playing && s.phase != Phase::Ended)
            return std::nullopt;
          if (s.last_action != ActionKind::Increment &&
              s.last_action != ActionKind::End)
            return std::nullopt;
        }
        for (auto& s : st) {
          s.phase = Phase::Checked;
          s.last_action = ActionKind::Check;
        }
        break;
      case LetterInfo::Cat::Answer:
        if (st[0].phase != Phase::Checked || st[1].phase != Phase::Checked)
          return std::nullopt;
        for (auto& s : st) {
          s.phase = Phase::Answered;
          s.answer = li.color;
          s.last_action = ActionKind::Answer;
        }
        break;
      case LetterInfo::Cat::Win: {
        if (!stable(st)) return std::nullopt;
        bool all_ended = true;
        for (const auto& s : st) all_ended &= s.phase == Phase::Ended;
        bool some_pair_answered = false;
        for (int l = 0; l < 3; ++l)
          some_pair_answered |= st[l].phase == Phase::Answered &&
                                st[l + 3].phase == Phase::Answered;
        if (!all_ended && !some_pair_answered) return std::nullopt;
        for (auto& s : st) s.phase = Phase::Won;
        break;
      }
      case LetterInfo::Cat::Lose: {
        if (!stable(st)) return std::nullopt;
        std::array<ProcessLocalState, 6> arr;
        std::copy(st.begin(), st.end(), arr.begin());
        if (lose_causes_impl(constraint_, arr).empty()) return std::nullopt;
        for (auto& s : st) s.phase = Phase::Lost;
        break;
      }
    }

    std::vector<LocalState> out;
    out.reserve(st.size());
    for (const auto& s : st) out.push_back(s.pack());
    return out;
  }

  bool is_final(ProcessId, LocalState s) const override {
    return ProcessLocalState::unpack(s).phase == Phase::Won;
  }

  bool is_losing_sink(ProcessId, LocalState s) const override {
    return ProcessLocalState::unpack(s).phase == Phase::Lost;
  }

  const ColoringConstraint& constraint() const { return constraint_; }
  const Catalog& catalog() const { return cat_; }

 private:
  // A checked pair can only answer; Won and Lost are absorbing. The global
  // outcomes wait for everyone to be out of the mid-check window.
  static bool stable(const std::vector<ProcessLocalState>& st) {
    for (const auto& s : st)
      if (s.phase == Phase::Checked || s.phase == Phase::Won ||
          s.phase == Phase::Lost)
        return false;
    return true;
  }

  ColoringConstraint constraint_;
  Catalog cat_;
};

}  // namespace

std::shared_ptr<const ColoringGame> build_game(const ColoringConstraint& k) {
  if (k.color_count() == 0)
    throw std::invalid_argument("build_game requires a nonempty color set");

  auto alphabet = std::make_shared<DependencyAlphabet>();
  Catalog cat = make_catalog(*alphabet, k);

  auto cg = std::make_shared<ColoringGame>();
  cg->constraint = k;
  cg->actions = cat.actions;

  auto rules = std::make_shared<GameRules>(k, std::move(cat));

  AsyncAutomaton aut;
  aut.alphabet = alphabet;
  aut.rules = rules;
  for (ProcessId p = 0; p < 6; ++p) {
    ProcessLocalState init;
    init.turn_flag = index_of(p) == 0;
    aut.initial.push_back(init.pack());
  }

  cg->game.automaton = std::move(aut);
  cg->game.controllable.assign(alphabet->letter_count(), true);
  for (int l = 0; l < 3; ++l) cg->game.controllable[cg->actions.check[l]] = false;
  cg->game.controllable[cg->actions.lose] = false;
  return cg;
}

std::vector<LoseCause> lose_causes(const ColoringGame& cg,
                                   const GlobalState& g) {
  std::array<ProcessLocalState, 6> st;
  for (ProcessId p = 0; p < 6; ++p)
    st[p] = ProcessLocalState::unpack(g.locals[p]);
  return lose_causes_impl(cg.constraint, st);
}

namespace {

std::size_t increments_of(const ColoringGame& cg, const Trace& t, ProcessId p) {
  std::size_t h = 0;
  for (LetterId a : t.canonical()) {
    Pool pool = pool_of(p);
    int l = index_of(p);
    if (a == cg.actions.increment[static_cast<int>(pool)][l] ||
        a == cg.actions.increment[static_cast<int>(pool)][(l + 2) % 3])
      ++h;
  }
  return h;
}

// The canonical strategy of the converse direction of the equivalence.
class ColoringRuleStrategy final : public Strategy {
 public:
  ColoringRuleStrategy(std::shared_ptr<const ColoringGame> cg, Coloring f)
      : cg_(std::move(cg)), f_(std::move(f)) {}

  LetterSet allowed(ProcessId p, const Trace& v) const override {
    const auto& actions = cg_->actions;
    LetterSet out(cg_->game.automaton.alphabet->letter_count(), false);
    out[actions.win] = true;

    auto g = run(cg_->game.automaton, v);
    if (!g) return out;
    ProcessLocalState st = ProcessLocalState::unpack(g->locals[p]);
    Pool pool = pool_of(p);
    int x = static_cast<int>(pool);
    int l = index_of(p);

    if (st.phase == Phase::Playing) {
      std::size_t budget = 2 * (pool == Pool::Top ? f_.n : f_.m);
      if (increments_of(*cg_, v, p) < budget) {
        out[actions.increment[x][l]] = true;
        out[actions.increment[x][(l + 2) % 3]] = true;
      } else {
        out[actions.end[x][l]] = true;
      }
    } else if (st.phase == Phase::Checked) {
      // Both processes of the pair share the view, so both round indices can
      // be read off it.
      std::size_t ht = increments_of(*cg_, v, process_id(Pool::Top, l));
      std::size_t hb = increments_of(*cg_, v, process_id(Pool::Bottom, l));
      std::size_t cx = round_index(ht);
      std::size_t cy = round_index(hb);
      if (cx < f_.n && cy < f_.m)
        out[actions.answers[f_.at(cx, cy)][l]] = true;
    }
    return out;
  }

 private:
  std::shared_ptr<const ColoringGame> cg_;
  Coloring f_;
};

class SingleAnswerStrategy final : public Strategy {
 public:
  SingleAnswerStrategy(std::shared_ptr<const ColoringGame> cg,
                       std::shared_ptr<const Strategy> base)
      : cg_(std::move(cg)), base_(std::move(base)) {}

  LetterSet allowed(ProcessId p, const Trace& v) const override {
    LetterSet out = base_->allowed(p, v);
    auto g = run(cg_->game.automaton, v);
    if (!g) return out;
    if (ProcessLocalState::unpack(g->locals[p]).phase != Phase::Checked)
      return out;
    int l = index_of(p);
    bool kept = false;
    for (ColorId c = 0; c < cg_->actions.answers.size(); ++c) {
      LetterId a = cg_->actions.answers[c][l];
      if (a < out.size() && out[a]) {
        if (kept) out[a] = false;
        kept = true;
      }
    }
    return out;
  }

 private:
  std::shared_ptr<const ColoringGame> cg_;
  std::shared_ptr<const Strategy> base_;
};

}  // namespace

std::shared_ptr<const Strategy> coloring_rule_strategy(
    std::shared_ptr<const ColoringGame> cg, Coloring f) {
  if (f.n < 1 || f.m < 1 || f.cells.size() != f.n * f.m)
    throw std::invalid_argument("malformed coloring");
  for (ColorId c : f.cells)
    if (c >= cg->constraint.color_count())
      throw std::invalid_argument("coloring color outside the game's colors");
  return std::make_shared<ColoringRuleStrategy>(std::move(cg), std::move(f));
}

std::shared_ptr<const Strategy> strategy_from_coloring(
    std::shared_ptr<const ColoringGame> cg, Coloring f) {
  if (!satisfies(f, cg->constraint).ok)
    throw std::invalid_argument(
        "strategy_from_coloring: coloring violates the constraint");
  return coloring_rule_strategy(std::move(cg), std::move(f));
}

std::shared_ptr<const Strategy> single_answer_form(
    std::shared_ptr<const ColoringGame> cg,
    std::shared_ptr<const Strategy> sigma) {
  return std::make_shared<SingleAnswerStrategy>(std::move(cg),
                                                std::move(sigma));
}

namespace {

Word probe_word(const ColoringGame& cg, std::size_t x, std::size_t y) {
  Word w;
  for (std::size_t r = 0; r < x; ++r)
    for (int l = 0; l < 3; ++l) w.push_back(cg.actions.increment[0][l]);
  w.push_back(cg.actions.increment[0][0]);
  w.push_back(cg.actions.increment[0][1]);
  for (std::size_t r = 0; r < y; ++r)
    for (int l = 0; l < 3; ++l) w.push_back(cg.actions.increment[1][l]);
  w.push_back(cg.actions.increment[1][0]);
  w.push_back(cg.actions.increment[1][1]);
  return w;
}

}  // namespace

ColorId probe(const ColoringGame& cg, const Strategy& sigma, std::size_t x,
              std::size_t y) {
  const auto& alphabet = cg.game.automaton.alphabet;
  Trace u = Trace::empty(alphabet);
  Word w = probe_word(cg, x, y);
  w.push_back(cg.actions.check[1]);
  for (LetterId a : w) {
    LetterSet al = allowed_letters(cg.game, sigma, u);
    if (a >= al.size() || !al[a])
      throw std::invalid_argument(
          "probe: u_{x,y} CHECK_1 is not consistent with the strategy");
    u = concat(u, Trace::normalize(alphabet, {a}));
  }
  LetterSet al = allowed_letters(cg.game, sigma, u);
  std::optional<ColorId> found;
  for (ColorId c = 0; c < cg.actions.answers.size(); ++c) {
    LetterId a = cg.actions.answers[c][1];
    if (a >= al.size() || !al[a]) continue;
    if (found)
      throw std::runtime_error("probe: several answers allowed after the check");
    found = c;
  }
  if (!found)
    throw std::runtime_error("probe: no answer allowed after the check");
  return *found;
}

std::optional<Coloring> coloring_from_strategy(
    std::shared_ptr<const ColoringGame> cg,
    std::shared_ptr<const Strategy> sigma, std::size_t max_len) {
  auto single = single_answer_form(cg, std::move(sigma));
  if (!verify_winning(cg->game, *single, max_len).winning())
    return std::nullopt;

  // Maximal uninterrupted sigma-plays: closure under allowed controllable
  // letters only. A winning strategy gives them all the same round budgets.
  const auto& alphabet = cg->game.automaton.alphabet;
  std::optional<std::size_t> n, m;
  std::set<Word> seen;
  std::deque<Trace> frontier;
  frontier.push_back(Trace::empty(alphabet));
  seen.insert(frontier.back().canonical());
  while (!frontier.empty()) {
    Trace u = std::move(frontier.front());
    frontier.pop_front();
    LetterSet al = allowed_letters(cg->game, *single, u);
    bool extendable = false;
    for (LetterId a = 0; a < al.size(); ++a) {
      if (!al[a] || !cg->game.is_controllable(a)) continue;
      extendable = true;
      Trace next = concat(u, Trace::normalize(alphabet, {a}));
      if (seen.insert(next.canonical()).second) frontier.push_back(next);
    }
    if (extendable) continue;
    std::size_t ht = increments_of(*cg, u, process_id(Pool::Top, 1));
    std::size_t hb = increments_of(*cg, u, process_id(Pool::Bottom, 1));
    if (ht == 0 || hb == 0 || ht % 2 != 0 || hb % 2 != 0)
      throw std::runtime_error(
          "coloring_from_strategy: truncated uninterrupted play");
    std::size_t un = ht / 2, um = hb / 2;
    if ((n && *n != un) || (m && *m != um))
      throw std::runtime_error(
          "coloring_from_strategy: ambiguous round budgets");
    n = un;
    m = um;
  }
  if (!n || !m)
    throw std::runtime_error("coloring_from_strategy: no uninterrupted play");

  Coloring f;
  f.n = *n;
  f.m = *m;
  f.cells.assign(f.n * f.m, 0);
  for (std::size_t x = 0; x < f.n; ++x)
    for (std::size_t y = 0; y < f.m; ++y) f.at(x, y) = probe(*cg, *single, x, y);

  if (!satisfies(f, cg->constraint).ok)
    throw std::logic_error(
        "coloring_from_strategy: extracted coloring violates the constraint");
  return f;
}

ExplorationMonitor structural_monitor(std::shared_ptr<const ColoringGame> cg) {
  return [cg](const Trace& u, const GlobalState& g, const LetterSet& allowed) {
    const auto& aut = cg->game.automaton;
    std::array<ProcessLocalState, 6> st;
    for (ProcessId p = 0; p < 6; ++p)
      st[p] = ProcessLocalState::unpack(g.locals[p]);

    // Increments of each pool happen in the fixed cyclic order.
    for (int x = 0; x < 2; ++x) {
      int expected = 0;
      for (LetterId a : u.canonical()) {
        int which = -1;
        for (int l = 0; l < 3; ++l)
          if (a == cg->actions.increment[x][l]) which = l;
        if (which < 0) continue;
        if (which != expected)
          throw std::logic_error("monitor: increment out of pool order");
        expected = (expected + 1) % 3;
      }
    }

    // CHECK_l is enabled exactly when both processes' last action is an
    // increment or END.
    for (int l = 0; l < 3; ++l) {
      bool defined = step(aut, g, cg->actions.check[l]).has_value();
      auto ready = [](const ProcessLocalState& s) {
        return (s.phase == Phase::Playing || s.phase == Phase::Ended) &&
               (s.last_action == ActionKind::Increment ||
                s.last_action == ActionKind::End);
      };
      if (defined != (ready(st[l]) && ready(st[l + 3])))
        throw std::logic_error("monitor: CHECK guard disagrees with state");
    }

    // Post-WIN and post-LOSE states admit no transition at all.
    bool absorbed = false;
    for (const auto& s : st)
      absorbed |= s.phase == Phase::Won || s.phase == Phase::Lost;
    if (absorbed) {
      for (LetterId a = 0; a < aut.alphabet->letter_count(); ++a)
        if (step(aut, g, a))
          throw std::logic_error("monitor: transition out of an absorbing state");
    }

    // Environment letters are always allowed when their transition exists.
    for (LetterId a = 0; a < aut.alphabet->letter_count(); ++a)
      if (cg->game.is_environment(a) && step(aut, g, a) && !allowed[a])
        throw std::logic_error("monitor: environment letter blocked");

    // Parity comparison agrees with true round indices, and within a pool the
    // lower-indexed process is never behind (same round or one round ahead).
    for (int x = 0; x < 2; ++x)
      for (int lp = 0; lp < 3; ++lp)
        for (int l = lp + 1; l < 3; ++l) {
          ProcessId p = process_id(static_cast<Pool>(x), l);
          ProcessId pp = process_id(static_cast<Pool>(x), lp);
          std::size_t h = increments_of(*cg, u, p);
          std::size_t hp = increments_of(*cg, u, pp);
          if (h == 0 || hp == 0) continue;
          std::size_t r = round_index(h);
          std::size_t rp = round_index(hp);
          bool parity_same = st[p].round_parity() == st[pp].round_parity();
          if (parity_same != (r == rp))
            throw std::logic_error("monitor: parity disagrees with rounds");
          if (!(rp == r || rp == r + 1))
            throw std::logic_error("monitor: round indices out of range");
        }

    // An answered pair stored one shared answer.
    for (int l = 0; l < 3; ++l)
      if (st[l].phase == Phase::Answered &&
          st[l + 3].phase == Phase::Answered &&
          st[l].answer != st[l + 3].answer)
        throw std::logic_error("monitor: answered pair disagrees on the color");
  };
}

}  // namespace tracegames
