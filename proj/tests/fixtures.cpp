#include "fixtures.hpp"

namespace tracegames::fixtures {

Fig1 fig1() {
  auto alphabet = std::make_shared<DependencyAlphabet>();
  for (int p = 1; p <= 7; ++p) alphabet->add_process(std::to_string(p));
  auto letter = [&](std::initializer_list<int> dom) {
    std::string name = "p";
    std::vector<std::string> names;
    for (int p : dom) {
      name += std::to_string(p);
      names.push_back(std::to_string(p));
    }
    return alphabet->add_letter(name, names);
  };
  LetterId l2 = letter({2});
  LetterId l3 = letter({3});
  LetterId l45 = letter({4, 5});
  LetterId l23 = letter({2, 3});
  LetterId l4 = letter({4});
  LetterId l12 = letter({1, 2});
  LetterId l34 = letter({3, 4});

  Fig1 fig;
  fig.alphabet = alphabet;
  fig.lin_a = {l2, l3, l45, l23, l4, l12, l34};
  fig.lin_b = {l45, l4, l2, l3, l23, l34, l12};
  fig.l12 = l12;
  fig.l34 = l34;
  return fig;
}

ColoringConstraint fig3_constraint() {
  ColoringConstraint k({"G", "R", "B"});
  k.allow_initial(k.color("G"));
  k.allow_initial(k.color("R"));
  k.allow_final(k.color("B"));
  for (auto [a, b] : {std::pair{"B", "G"}, std::pair{"G", "B"}}) {
    k.forbid_square(k.color(a), k.color(b));
    k.forbid_upper(k.color(a), k.color(b));
    k.forbid_lower(k.color(a), k.color(b));
  }
  return k;
}

Coloring fig3_coloring() {
  ColoringConstraint k = fig3_constraint();
  Coloring f;
  f.n = 4;
  f.m = 2;
  f.cells.assign(8, k.color("R"));
  f.at(0, 0) = k.color("G");
  f.at(3, 1) = k.color("B");
  return f;
}

ColoringConstraint toy1_constraint() {
  ColoringConstraint k({"0", "+"});
  ColorId zero = k.color("0"), plus = k.color("+");
  k.allow_initial(zero);
  k.allow_final(zero);
  k.allow_final(plus);
  k.forbid_upper(plus, zero);
  k.forbid_upper(zero, zero);
  k.forbid_lower(zero, plus);
  return k;
}

ColoringConstraint toy2_constraint(bool final_zero_only) {
  ColoringConstraint k({"0", "-", "+"});
  ColorId zero = k.color("0"), minus = k.color("-"), plus = k.color("+");
  k.allow_initial(zero);
  k.allow_final(zero);
  if (!final_zero_only) {
    k.allow_final(minus);
    k.allow_final(plus);
  }
  std::vector<ColorId> all{zero, minus, plus};
  auto complement_forbid = [&](auto&& forbid,
                               std::initializer_list<ColorPair> allowed) {
    for (ColorId a : all)
      for (ColorId b : all) {
        bool keep = false;
        for (const auto& p : allowed) keep |= p.first == a && p.second == b;
        if (!keep) forbid(a, b);
      }
  };
  complement_forbid([&](ColorId a, ColorId b) { k.forbid_square(a, b); },
                    {{zero, zero}, {minus, minus}, {plus, plus}});
  // Besides the three pairs driving the uniqueness argument, each triangle
  // set must allow the same-sign pair of the far region ((-,-) across a
  // column step inside x<y, (+,+) across a row step inside x>y), or the sign
  // coloring itself would be rejected as soon as n or m reaches 3.
  complement_forbid([&](ColorId a, ColorId b) { k.forbid_upper(a, b); },
                    {{zero, plus}, {plus, plus}, {minus, zero}, {minus, minus}});
  complement_forbid([&](ColorId a, ColorId b) { k.forbid_lower(a, b); },
                    {{zero, minus}, {minus, minus}, {plus, zero}, {plus, plus}});
  return k;
}

Coloring sign_coloring(const ColoringConstraint& toy2, std::size_t n,
                       std::size_t m) {
  Coloring f;
  f.n = n;
  f.m = m;
  f.cells.assign(n * m, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y)
      f.at(x, y) = x == y ? toy2.color("0")
                          : (x > y ? toy2.color("+") : toy2.color("-"));
  return f;
}

std::vector<PcpInstance> pcp_corpus() {
  return {
      {"a", {{"a", "a"}}},
      {"ab", {{"ab", "a"}, {"a", "ba"}}},
      {"ab", {{"ab", "ba"}}},
      {"ab", {{"a", "ab"}}},
  };
}

std::vector<GameCase> game_corpus() {
  std::vector<GameCase> cases;

  {  // Single color, trivially satisfiable 1x1.
    ColoringConstraint k({"c0"});
    k.allow_initial(0);
    k.allow_final(0);
    Coloring f{1, 1, {0}};
    cases.push_back({"one-color-1x1", k, f});
  }
  {  // Forced color change along the bottom axis, witness 1x2.
    ColoringConstraint k({"c0", "c1"});
    k.allow_initial(k.color("c0"));
    k.allow_final(k.color("c1"));
    k.forbid_lower(k.color("c1"), k.color("c1"));
    k.forbid_lower(k.color("c1"), k.color("c0"));
    Coloring f{1, 2, {k.color("c0"), k.color("c1")}};
    cases.push_back({"forced-step-1x2", k, f});
  }
  {  // Checkerboard 2x2.
    ColoringConstraint k({"c0", "c1"});
    k.allow_initial(k.color("c0"));
    k.allow_final(k.color("c0"));
    k.forbid_upper(k.color("c0"), k.color("c0"));
    k.forbid_lower(k.color("c0"), k.color("c0"));
    k.forbid_square(k.color("c1"), k.color("c1"));
    Coloring f{2, 2,
               {k.color("c0"), k.color("c1"), k.color("c1"), k.color("c0")}};
    cases.push_back({"checkerboard-2x2", k, f});
  }
  {  // All-same 2x2 under a square restriction.
    ColoringConstraint k({"c0", "c1"});
    k.allow_initial(k.color("c0"));
    k.allow_final(k.color("c0"));
    k.forbid_square(k.color("c0"), k.color("c1"));
    Coloring f{2, 2,
               {k.color("c0"), k.color("c0"), k.color("c0"), k.color("c0")}};
    cases.push_back({"uniform-2x2", k, f});
  }
  {  // Column split 2x1 with both colors initial.
    ColoringConstraint k({"c0", "c1"});
    k.allow_initial(k.color("c0"));
    k.allow_initial(k.color("c1"));
    k.allow_final(k.color("c0"));
    k.forbid_lower(k.color("c1"), k.color("c1"));
    Coloring f{2, 1, {k.color("c1"), k.color("c0")}};
    cases.push_back({"two-column-2x1", k, f});
  }
  return cases;
}

namespace {

// Mirrors the canonical coloring strategy's schedule with a pluggable answer
// rule, for adversarial fixtures.
class AnswerRuleStrategy final : public Strategy {
 public:
  AnswerRuleStrategy(std::shared_ptr<const ColoringGame> cg, std::size_t n,
                     std::size_t m,
                     std::function<ColorId(int, std::size_t, std::size_t)> fn)
      : cg_(std::move(cg)), n_(n), m_(m), answer_(std::move(fn)) {}

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
      std::size_t budget = 2 * (pool == Pool::Top ? n_ : m_);
      if (count_increments(v, p) < budget) {
        out[actions.increment[x][l]] = true;
        out[actions.increment[x][(l + 2) % 3]] = true;
      } else {
        out[actions.end[x][l]] = true;
      }
    } else if (st.phase == Phase::Checked) {
      std::size_t ht = count_increments(v, process_id(Pool::Top, l));
      std::size_t hb = count_increments(v, process_id(Pool::Bottom, l));
      out[actions.answers[answer_(l, round_index(ht), round_index(hb))][l]] =
          true;
    }
    return out;
  }

 private:
  std::size_t count_increments(const Trace& t, ProcessId p) const {
    std::size_t h = 0;
    int x = static_cast<int>(pool_of(p));
    int l = index_of(p);
    for (LetterId a : t.canonical())
      if (a == cg_->actions.increment[x][l] ||
          a == cg_->actions.increment[x][(l + 2) % 3])
        ++h;
    return h;
  }

  std::shared_ptr<const ColoringGame> cg_;
  std::size_t n_, m_;
  std::function<ColorId(int, std::size_t, std::size_t)> answer_;
};

}  // namespace

std::shared_ptr<const Strategy> answer_rule_strategy(
    std::shared_ptr<const ColoringGame> cg, std::size_t n, std::size_t m,
    std::function<ColorId(int l, std::size_t x, std::size_t y)> answer) {
  return std::make_shared<AnswerRuleStrategy>(std::move(cg), n, m,
                                              std::move(answer));
}

std::vector<LosingFixture> losing_fixtures() {
  std::vector<LosingFixture> out;
  auto two_colors = [] { return ColoringConstraint({"c0", "c1"}); };

  {  // (a): answer outside C_i while both processes played one increment.
    ColoringConstraint k = two_colors();
    k.allow_initial(0);
    k.allow_final(0);
    k.allow_final(1);
    auto cg = build_game(k);
    out.push_back({"bad-initial", LoseClause::A, cg,
                   answer_rule_strategy(cg, 1, 1,
                                        [](int, std::size_t, std::size_t) {
                                          return ColorId{1};
                                        })});
  }
  {  // (b): answer outside C_f after both processes played END.
    ColoringConstraint k = two_colors();
    k.allow_initial(0);
    k.allow_initial(1);
    k.allow_final(0);
    auto cg = build_game(k);
    out.push_back({"bad-final", LoseClause::B, cg,
                   answer_rule_strategy(cg, 1, 1,
                                        [](int, std::size_t, std::size_t) {
                                          return ColorId{1};
                                        })});
  }
  {  // (c): same rounds, answers depending on the pair identity.
    ColoringConstraint k = two_colors();
    for (ColorId c : {0, 1}) {
      k.allow_initial(c);
      k.allow_final(c);
    }
    auto cg = build_game(k);
    out.push_back({"inconsistent-answers", LoseClause::C, cg,
                   answer_rule_strategy(cg, 1, 1,
                                        [](int l, std::size_t, std::size_t) {
                                          return static_cast<ColorId>(l == 0);
                                        })});
  }
  {  // (d): answers form the forbidden square across consecutive rounds.
    ColoringConstraint k = two_colors();
    for (ColorId c : {0, 1}) {
      k.allow_initial(c);
      k.allow_final(c);
    }
    k.forbid_square(0, 1);
    auto cg = build_game(k);
    out.push_back({"forbidden-square", LoseClause::D, cg,
                   answer_rule_strategy(cg, 2, 2,
                                        [](int, std::size_t x, std::size_t y) {
                                          return static_cast<ColorId>(
                                              x >= 1 || y >= 1);
                                        })});
  }
  {  // (e): column colors form the forbidden upper-triangle.
    ColoringConstraint k = two_colors();
    for (ColorId c : {0, 1}) {
      k.allow_initial(c);
      k.allow_final(c);
    }
    k.forbid_upper(0, 1);
    auto cg = build_game(k);
    out.push_back({"forbidden-upper", LoseClause::E, cg,
                   answer_rule_strategy(cg, 2, 2,
                                        [](int, std::size_t x, std::size_t) {
                                          return static_cast<ColorId>(x >= 1);
                                        })});
  }
  {  // (f): row colors form the forbidden lower-triangle.
    ColoringConstraint k = two_colors();
    for (ColorId c : {0, 1}) {
      k.allow_initial(c);
      k.allow_final(c);
    }
    k.forbid_lower(0, 1);
    auto cg = build_game(k);
    out.push_back({"forbidden-lower", LoseClause::F, cg,
                   answer_rule_strategy(cg, 2, 2,
                                        [](int, std::size_t, std::size_t y) {
                                          return static_cast<ColorId>(y >= 1);
                                        })});
  }
  return out;
}

}  // namespace tracegames::fixtures
