#pragma once

#include <optional>
#include <string>

#include "tracegames/pcp.hpp"
#include "tracegames/reduction_game.hpp"

namespace tracegames {

/// Raised on malformed documents; the message names the offending field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocKind {
  Pcp,
  BcpConstraint,
  Coloring,
  Automaton,
  Game,
  Strategy,
  TraceDoc,
  Verdict,
};

DocKind document_kind(const std::string& text);

// ---- pcp ------------------------------------------------------------------
// { "kind":"pcp", "alphabet":["a","b"],
//   "tiles":[{"top":"ab","bottom":"a"}, ...] }    tile indices are 1-based
//                                                 wherever sequences appear
PcpInstance parse_pcp_document(const std::string& text);
std::string emit_pcp_document(const PcpInstance& inst);

// ---- bcp-constraint ---------------------------------------------------------
// { "kind":"bcp-constraint", "colors":[...], "initial":[...], "final":[...],
//   "squares":[[c,d],...], "upper":[...], "lower":[...],
//   "meta":{"raw-colors":N, "pruned-colors":M} }  meta is optional, emitted by
//                                                 the PCP reduction
ColoringConstraint parse_constraint_document(const std::string& text);
std::string emit_constraint_document(const ColoringConstraint& k);
std::string emit_constraint_document(const ColoringConstraint& k,
                                     std::size_t raw_colors,
                                     std::size_t pruned_colors);

// ---- coloring ----------------------------------------------------------------
// { "kind":"coloring", "n":4, "m":2, "cells":["G","R",...] }   cells x-major:
//                                                 f(x,y) at index x*m + y
struct ColoringDocument {
  std::size_t n = 1;
  std::size_t m = 1;
  std::vector<std::string> cells;

  bool operator==(const ColoringDocument&) const = default;
};
ColoringDocument parse_coloring_document(const std::string& text);
std::string emit_coloring_document(const ColoringDocument& doc);
Coloring resolve_coloring(const ColoringDocument& doc,
                          const ColoringConstraint& k);
ColoringDocument to_document(const Coloring& f, const ColoringConstraint& k);

// ---- trace --------------------------------------------------------------------
// { "kind":"trace", "letters":[{"name":"a","domain":["1"]},...],
//   "processes":["1","2"],          optional, declares order/extra processes
//   "word":["b","a"] }              emitted traces carry the canonical word
struct TraceDocument {
  AlphabetRef alphabet;
  Word word;
};
TraceDocument parse_trace_document(const std::string& text);
std::string emit_trace_document(const Trace& t);

// ---- automaton ------------------------------------------------------------------
// { "kind":"automaton", "letters":[...],
//   "processes":[{"name":"p","states":[...],"initial":"q0","final":[...]}],
//   "transitions":[{"letter":"a","from":["q0"],"to":["q1"]}] }
// from/to follow the letter's domain in `processes` declaration order.
struct ParsedAutomaton {
  AsyncAutomaton automaton;
  std::shared_ptr<const TableRules> table;
};
ParsedAutomaton parse_automaton_document(const std::string& text);
std::string emit_automaton_document(const AsyncAutomaton& automaton,
                                    const TableRules& table);

// ---- game ---------------------------------------------------------------------
// builtin form:  { "kind":"game", "builtin":"coloring-game",
//                  "params":{"constraint": <bcp-constraint document>} }
// explicit form: { "kind":"game", "automaton": <automaton document>,
//                  "controllable":[...], "environment":[...] }
struct ParsedGame {
  DistributedGame game;
  std::shared_ptr<const ColoringGame> coloring_game;  // builtin form only
  std::shared_ptr<const TableRules> table;            // explicit form only
};
ParsedGame parse_game_document(const std::string& text);
std::string emit_coloring_game_document(const ColoringConstraint& k);
std::string emit_explicit_game_document(const DistributedGame& game,
                                        const TableRules& table);

// ---- strategy --------------------------------------------------------------------
// builtin forms: { "kind":"strategy", "builtin":"coloring-strategy",
//                  "params":{"coloring": <coloring document>} }
//                { "kind":"strategy", "builtin":"block-all", "params":{} }
// table form:    { "kind":"strategy",
//                  "table":[{"process":"p",
//                            "views":[{"view":[...],"allow":[...]}]}] }
std::shared_ptr<const Strategy> parse_strategy_document(
    const std::string& text, const ParsedGame& context);
std::string emit_coloring_strategy_document(const ColoringDocument& coloring);
std::string emit_block_all_strategy_document();
std::string emit_table_strategy_document(const TableStrategy& strategy);

// ---- verdict ---------------------------------------------------------------------
// { "kind":"verdict", "result":"winning", ... }   produced by solvers and
// verifiers; witnesses are letter words or 1-based tile index sequences.
struct VerdictDocument {
  std::string result;
  std::optional<std::vector<std::string>> witness_letters;
  std::optional<std::vector<std::size_t>> witness_indices;  // 1-based
  std::optional<std::size_t> depth;
  std::optional<std::string> reason;

  bool operator==(const VerdictDocument&) const = default;
};
VerdictDocument parse_verdict_document(const std::string& text);
std::string emit_verdict_document(const VerdictDocument& v);

}  // namespace tracegames
