#include "tracegames/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tracegames/documents.hpp"

namespace tracegames {

namespace {

constexpr int kFound = 0;
constexpr int kNotFound = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> letter_names(const Trace& t) {
  std::vector<std::string> out;
  for (LetterId a : t.canonical())
    out.push_back(t.alphabet()->letter_name(a));
  return out;
}

IndexSeq parse_seq(const std::string& spec) {
  IndexSeq seq;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw DocumentError("--seq: '" + item + "' is not a tile index");
    }
    if (pos != item.size() || v == 0)
      throw DocumentError("--seq: tile indices are positive and 1-based");
    seq.push_back(v - 1);
  }
  if (seq.empty()) throw DocumentError("--seq: empty sequence");
  return seq;
}

struct CommandArgs {
  std::string file_a;
  std::string file_b;
  std::string process;
  std::string seq;
  std::string script;
  std::string interactive = "no";
  std::size_t max_len = 8;
  std::size_t max_n = 4;
  std::size_t max_m = 4;
  std::size_t max_depth = 100;
};

int cmd_trace_normalize(const CommandArgs& a, std::ostream& out) {
  TraceDocument doc = parse_trace_document(slurp(a.file_a));
  Trace t = Trace::normalize(doc.alphabet, doc.word);
  out << emit_trace_document(t);
  return kFound;
}

int cmd_trace_view(const CommandArgs& a, std::ostream& out) {
  TraceDocument doc = parse_trace_document(slurp(a.file_a));
  if (!doc.alphabet->has_process(a.process))
    throw DocumentError("unknown process '" + a.process + "'");
  Trace t = Trace::normalize(doc.alphabet, doc.word);
  out << emit_trace_document(view(t, doc.alphabet->process(a.process)));
  return kFound;
}

int cmd_pcp_check(const CommandArgs& a, std::ostream& out) {
  PcpInstance inst = parse_pcp_document(slurp(a.file_a));
  IndexSeq seq = parse_seq(a.seq);
  for (std::size_t i : seq)
    if (i >= inst.tiles.size())
      throw DocumentError("--seq: tile index out of range");
  bool ok = check_solution(inst, seq);
  VerdictDocument v;
  v.result = ok ? "true" : "false";
  out << emit_verdict_document(v);
  return ok ? kFound : kNotFound;
}

int cmd_pcp_solve(const CommandArgs& a, std::ostream& out) {
  PcpInstance inst = parse_pcp_document(slurp(a.file_a));
  auto seq = brute_force(inst, a.max_len);
  VerdictDocument v;
  v.depth = a.max_len;
  if (seq) {
    v.result = "found";
    std::vector<std::size_t> external;
    for (std::size_t i : *seq) external.push_back(i + 1);
    v.witness_indices = external;
  } else {
    v.result = "not-found";
  }
  out << emit_verdict_document(v);
  return seq ? kFound : kNotFound;
}

int cmd_pcp_to_bcp(const CommandArgs& a, std::ostream& out) {
  PcpInstance inst = parse_pcp_document(slurp(a.file_a));
  PcpReduction red = to_coloring_constraint(inst);
  out << emit_constraint_document(red.constraint, red.raw_color_count,
                                  red.colors.size());
  return kFound;
}

int cmd_bcp_check(const CommandArgs& a, std::ostream& out) {
  ColoringConstraint k = parse_constraint_document(slurp(a.file_a));
  ColoringDocument doc = parse_coloring_document(slurp(a.file_b));
  Coloring f = resolve_coloring(doc, k);
  SatisfactionResult r = satisfies(f, k);
  VerdictDocument v;
  v.result = r.ok ? "true" : "false";
  if (!r.ok) {
    const char* clause = "";
    switch (r.violated) {
      case SatisfactionResult::Clause::Initial: clause = "initial"; break;
      case SatisfactionResult::Clause::Final: clause = "final"; break;
      case SatisfactionResult::Clause::Square: clause = "square"; break;
      case SatisfactionResult::Clause::Upper: clause = "upper"; break;
      case SatisfactionResult::Clause::Lower: clause = "lower"; break;
      case SatisfactionResult::Clause::None: break;
    }
    v.reason = std::string(clause) + " at (" + std::to_string(r.cell.first) +
               "," + std::to_string(r.cell.second) + ")";
  }
  out << emit_verdict_document(v);
  return r.ok ? kFound : kNotFound;
}

int cmd_bcp_solve(const CommandArgs& a, std::ostream& out) {
  ColoringConstraint k = parse_constraint_document(slurp(a.file_a));
  auto f = solve(k, a.max_n, a.max_m);
  if (!f) {
    VerdictDocument v;
    v.result = "not-found";
    out << emit_verdict_document(v);
    return kNotFound;
  }
  out << emit_coloring_document(to_document(*f, k));
  return kFound;
}

int cmd_bcp_to_game(const CommandArgs& a, std::ostream& out) {
  ColoringConstraint k = parse_constraint_document(slurp(a.file_a));
  if (k.color_count() == 0)
    throw DocumentError("bcp to-game: the constraint has no colors");
  out << emit_coloring_game_document(k);
  return kFound;
}

int cmd_game_verify(const CommandArgs& a, std::ostream& out) {
  ParsedGame game = parse_game_document(slurp(a.file_a));
  auto sigma = parse_strategy_document(slurp(a.file_b), game);
  VerificationVerdict verdict = verify_winning(game.game, *sigma, a.max_depth);
  VerdictDocument v;
  v.depth = a.max_depth;
  switch (verdict.kind) {
    case VerificationVerdict::Kind::Winning:
      v.result = "winning";
      out << emit_verdict_document(v);
      return kFound;
    case VerificationVerdict::Kind::Losing:
      v.result = "losing";
      v.witness_letters = letter_names(*verdict.witness);
      v.reason = verdict.reason == VerificationVerdict::Reason::LoseState
                     ? "lose-state"
                     : "deadlock-non-final";
      out << emit_verdict_document(v);
      return kNotFound;
    case VerificationVerdict::Kind::Unknown:
      break;
  }
  v.result = "unknown";
  out << emit_verdict_document(v);
  return kUnknown;
}

int cmd_game_extract(const CommandArgs& a, std::ostream& out) {
  ParsedGame game = parse_game_document(slurp(a.file_a));
  if (!game.coloring_game)
    throw DocumentError("game extract-coloring needs a coloring-game");
  auto sigma = parse_strategy_document(slurp(a.file_b), game);
  VerificationVerdict verdict = verify_winning(game.game, *sigma, a.max_depth);
  if (verdict.kind == VerificationVerdict::Kind::Unknown) {
    VerdictDocument v;
    v.result = "unknown";
    v.depth = a.max_depth;
    out << emit_verdict_document(v);
    return kUnknown;
  }
  if (verdict.kind == VerificationVerdict::Kind::Losing) {
    VerdictDocument v;
    v.result = "losing";
    v.witness_letters = letter_names(*verdict.witness);
    v.depth = a.max_depth;
    out << emit_verdict_document(v);
    return kNotFound;
  }
  auto f = coloring_from_strategy(game.coloring_game, sigma, a.max_depth);
  if (!f)
    throw DocumentError("game extract-coloring: extraction failed unexpectedly");
  out << emit_coloring_document(
      to_document(*f, game.coloring_game->constraint));
  return kFound;
}

int cmd_game_simulate(const CommandArgs& a, std::ostream& out) {
  if (a.interactive != "no")
    throw DocumentError("--interactive supports only 'no'");
  ParsedGame game = parse_game_document(slurp(a.file_a));
  auto sigma = parse_strategy_document(slurp(a.file_b), game);
  const auto& alphabet = *game.game.automaton.alphabet;

  std::vector<LetterId> script;
  std::stringstream ss(a.script);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!alphabet.has_letter(item))
      throw DocumentError("--script: unknown letter '" + item + "'");
    script.push_back(alphabet.letter(item));
  }

  Trace u = Trace::empty(game.game.automaton.alphabet);
  std::size_t done = 0;
  for (LetterId letter : script) {
    LetterSet al = allowed_letters(game.game, *sigma, u);
    if (!al[letter]) break;
    u = concat(u, Trace::normalize(game.game.automaton.alphabet, {letter}));
    ++done;
  }
  VerdictDocument v;
  v.witness_letters = letter_names(u);
  if (done == script.size()) {
    v.result = "completed";
    out << emit_verdict_document(v);
    return kFound;
  }
  v.result = "blocked";
  v.reason = "step " + std::to_string(done + 1) + " (" +
             alphabet.letter_name(script[done]) + ") is not allowed";
  out << emit_verdict_document(v);
  return kNotFound;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Mazurkiewicz traces, asynchronous games, and the PCP/coloring"
               " reduction pipeline"};
  app.require_subcommand(1);
  CommandArgs a;
  int (*handler)(const CommandArgs&, std::ostream&) = nullptr;

  auto* trace_cmd = app.add_subcommand("trace", "trace operations");
  trace_cmd->require_subcommand(1);
  auto* trace_normalize =
      trace_cmd->add_subcommand("normalize", "canonical form of a trace");
  trace_normalize->add_option("file", a.file_a)->required();
  trace_normalize->callback([&] { handler = cmd_trace_normalize; });
  auto* trace_view =
      trace_cmd->add_subcommand("view", "causal view of a process");
  trace_view->add_option("file", a.file_a)->required();
  trace_view->add_option("--process", a.process)->required();
  trace_view->callback([&] { handler = cmd_trace_view; });

  auto* pcp_cmd = app.add_subcommand("pcp", "Post correspondence instances");
  pcp_cmd->require_subcommand(1);
  auto* pcp_check = pcp_cmd->add_subcommand("check", "check an index sequence");
  pcp_check->add_option("file", a.file_a)->required();
  pcp_check->add_option("--seq", a.seq)->required();
  pcp_check->callback([&] { handler = cmd_pcp_check; });
  auto* pcp_solve = pcp_cmd->add_subcommand("solve", "bounded brute force");
  pcp_solve->add_option("file", a.file_a)->required();
  pcp_solve->add_option("--max-len", a.max_len)->required();
  pcp_solve->callback([&] { handler = cmd_pcp_solve; });
  auto* pcp_to_bcp =
      pcp_cmd->add_subcommand("to-bcp", "reduce to a coloring constraint");
  pcp_to_bcp->add_option("file", a.file_a)->required();
  pcp_to_bcp->callback([&] { handler = cmd_pcp_to_bcp; });

  auto* bcp_cmd = app.add_subcommand("bcp", "bipartite coloring problems");
  bcp_cmd->require_subcommand(1);
  auto* bcp_check =
      bcp_cmd->add_subcommand("check", "check a coloring against a constraint");
  bcp_check->add_option("constraint", a.file_a)->required();
  bcp_check->add_option("coloring", a.file_b)->required();
  bcp_check->callback([&] { handler = cmd_bcp_check; });
  auto* bcp_solve = bcp_cmd->add_subcommand("solve", "bounded complete solver");
  bcp_solve->add_option("constraint", a.file_a)->required();
  bcp_solve->add_option("--max-n", a.max_n)->required();
  bcp_solve->add_option("--max-m", a.max_m)->required();
  bcp_solve->callback([&] { handler = cmd_bcp_solve; });
  auto* bcp_to_game =
      bcp_cmd->add_subcommand("to-game", "reduce to a six-process game");
  bcp_to_game->add_option("constraint", a.file_a)->required();
  bcp_to_game->callback([&] { handler = cmd_bcp_to_game; });

  auto* game_cmd = app.add_subcommand("game", "distributed games");
  game_cmd->require_subcommand(1);
  auto* game_verify =
      game_cmd->add_subcommand("verify", "verify a strategy by enumeration");
  game_verify->add_option("game", a.file_a)->required();
  game_verify->add_option("strategy", a.file_b)->required();
  game_verify->add_option("--max-depth", a.max_depth)->required();
  game_verify->callback([&] { handler = cmd_game_verify; });
  auto* game_extract = game_cmd->add_subcommand(
      "extract-coloring", "coloring induced by a winning strategy");
  game_extract->add_option("game", a.file_a)->required();
  game_extract->add_option("strategy", a.file_b)->required();
  game_extract->add_option("--max-depth", a.max_depth)->required();
  game_extract->callback([&] { handler = cmd_game_extract; });
  auto* game_simulate =
      game_cmd->add_subcommand("simulate", "scripted play simulation");
  game_simulate->add_option("game", a.file_a)->required();
  game_simulate->add_option("strategy", a.file_b)->required();
  game_simulate->add_option("--interactive", a.interactive);
  game_simulate->add_option("--script", a.script)->required();
  game_simulate->callback([&] { handler = cmd_game_simulate; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    return handler(a, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace tracegames
