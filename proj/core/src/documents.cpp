#include "tracegames/documents.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace tracegames {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DocumentError("document is not valid JSON");
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  return j;
}

// Closed-world field check: every required key present, nothing else but the
// declared optional keys.
void check_keys(const Json& j, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  for (const char* k : required)
    if (!j.contains(k))
      throw DocumentError(where + ": missing field '" + k + "'");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) known |= key == k;
    for (const char* k : optional) known |= key == k;
    if (!known) throw DocumentError(where + ": unknown field '" + key + "'");
  }
}

std::string get_string(const Json& j, const std::string& where,
                       const char* field) {
  if (!j.at(field).is_string())
    throw DocumentError(where + ": field '" + field + "' must be a string");
  return j.at(field).get<std::string>();
}

std::size_t get_size(const Json& j, const std::string& where,
                     const char* field) {
  if (!j.at(field).is_number_unsigned())
    throw DocumentError(where + ": field '" + field +
                        "' must be a nonnegative integer");
  return j.at(field).get<std::size_t>();
}

const Json& get_array(const Json& j, const std::string& where,
                      const char* field) {
  if (!j.at(field).is_array())
    throw DocumentError(where + ": field '" + field + "' must be an array");
  return j.at(field);
}

std::vector<std::string> get_string_array(const Json& j,
                                          const std::string& where,
                                          const char* field) {
  std::vector<std::string> out;
  for (const auto& e : get_array(j, where, field)) {
    if (!e.is_string())
      throw DocumentError(where + ": field '" + field +
                          "' must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void expect_kind(const Json& j, const char* kind) {
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw DocumentError("document is missing the 'kind' field");
  if (j.at("kind").get<std::string>() != kind)
    throw DocumentError(std::string("expected a '") + kind +
                        "' document, found '" +
                        j.at("kind").get<std::string>() + "'");
}

// ---- shared letter/alphabet helpers ----

AlphabetRef parse_alphabet(const Json& j, const std::string& where) {
  auto alphabet = std::make_shared<DependencyAlphabet>();
  if (j.contains("processes"))
    for (const auto& p : get_string_array(j, where, "processes"))
      alphabet->add_process(p);
  for (const auto& entry : get_array(j, where, "letters")) {
    if (!entry.is_object())
      throw DocumentError(where + ": 'letters' entries must be objects");
    check_keys(entry, where + ".letters", {"name", "domain"});
    std::string name = get_string(entry, where + ".letters", "name");
    auto domain = get_string_array(entry, where + ".letters", "domain");
    if (domain.empty())
      throw DocumentError(where + ": letter '" + name +
                          "' must have a nonempty domain");
    alphabet->add_letter(name, domain);
  }
  return alphabet;
}

Json emit_alphabet(const DependencyAlphabet& alphabet) {
  Json letters = Json::array();
  for (LetterId a = 0; a < alphabet.letter_count(); ++a) {
    Json entry;
    entry["name"] = alphabet.letter_name(a);
    Json dom = Json::array();
    for (ProcessId p : alphabet.domain(a)) dom.push_back(alphabet.process_name(p));
    entry["domain"] = dom;
    letters.push_back(entry);
  }
  return letters;
}

Json emit_processes(const DependencyAlphabet& alphabet) {
  Json out = Json::array();
  for (ProcessId p = 0; p < alphabet.process_count(); ++p)
    out.push_back(alphabet.process_name(p));
  return out;
}

Word parse_word(const Json& names, const DependencyAlphabet& alphabet,
                const std::string& where) {
  Word w;
  for (const auto& e : names) {
    if (!e.is_string())
      throw DocumentError(where + ": words must contain letter names");
    std::string name = e.get<std::string>();
    if (!alphabet.has_letter(name))
      throw DocumentError(where + ": unknown letter '" + name + "'");
    w.push_back(alphabet.letter(name));
  }
  return w;
}

// ---- constraint helpers ----

PcpInstance pcp_from_json(const Json& j) {
  expect_kind(j, "pcp");
  check_keys(j, "pcp", {"kind", "alphabet", "tiles"});
  PcpInstance inst;
  for (const auto& s : get_string_array(j, "pcp", "alphabet")) {
    if (s.size() != 1)
      throw DocumentError("pcp: alphabet symbols must be single characters");
    inst.sigma += s;
  }
  for (const auto& t : get_array(j, "pcp", "tiles")) {
    if (!t.is_object())
      throw DocumentError("pcp: 'tiles' entries must be objects");
    check_keys(t, "pcp.tiles", {"top", "bottom"});
    PcpTile tile{get_string(t, "pcp.tiles", "top"),
                 get_string(t, "pcp.tiles", "bottom")};
    inst.tiles.push_back(std::move(tile));
  }
  try {
    inst.validate();
  } catch (const std::exception& e) {
    throw DocumentError(std::string("pcp: ") + e.what());
  }
  return inst;
}

ColorId color_of(const ColoringConstraint& k, const std::string& name,
                 const std::string& where) {
  for (ColorId c = 0; c < k.color_count(); ++c)
    if (k.color_name(c) == name) return c;
  throw DocumentError(where + ": unknown color '" + name + "'");
}

ColoringConstraint constraint_from_json(const Json& j) {
  expect_kind(j, "bcp-constraint");
  check_keys(j, "bcp-constraint",
             {"kind", "colors", "initial", "final", "squares", "upper", "lower"},
             {"meta"});
  auto colors = get_string_array(j, "bcp-constraint", "colors");
  std::set<std::string> unique(colors.begin(), colors.end());
  if (unique.size() != colors.size())
    throw DocumentError("bcp-constraint: duplicate color name");
  ColoringConstraint k(colors);

  for (const auto& c : get_string_array(j, "bcp-constraint", "initial"))
    k.allow_initial(color_of(k, c, "bcp-constraint.initial"));
  for (const auto& c : get_string_array(j, "bcp-constraint", "final"))
    k.allow_final(color_of(k, c, "bcp-constraint.final"));

  auto read_pairs = [&](const char* field, auto&& add) {
    for (const auto& pair : get_array(j, "bcp-constraint", field)) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        throw DocumentError(std::string("bcp-constraint: '") + field +
                            "' entries must be two-element color lists");
      add(color_of(k, pair[0].get<std::string>(), field),
          color_of(k, pair[1].get<std::string>(), field));
    }
  };
  read_pairs("squares", [&](ColorId c, ColorId d) { k.forbid_square(c, d); });
  read_pairs("upper", [&](ColorId c, ColorId d) { k.forbid_upper(c, d); });
  read_pairs("lower", [&](ColorId c, ColorId d) { k.forbid_lower(c, d); });

  if (j.contains("meta")) {
    const Json& meta = j.at("meta");
    if (!meta.is_object())
      throw DocumentError("bcp-constraint: 'meta' must be an object");
    check_keys(meta, "bcp-constraint.meta", {},
               {"raw-colors", "pruned-colors"});
  }
  return k;
}

Json constraint_to_json(const ColoringConstraint& k) {
  Json j;
  j["kind"] = "bcp-constraint";
  Json colors = Json::array();
  for (const auto& name : k.color_names()) colors.push_back(name);
  j["colors"] = colors;
  auto name_list = [&](const std::vector<ColorId>& ids) {
    Json out = Json::array();
    for (ColorId c : ids) out.push_back(k.color_name(c));
    return out;
  };
  j["initial"] = name_list(k.initial_colors());
  j["final"] = name_list(k.final_colors());
  auto pair_list = [&](const std::vector<ColorPair>& pairs) {
    Json out = Json::array();
    for (const auto& [c, d] : pairs)
      out.push_back(Json::array({k.color_name(c), k.color_name(d)}));
    return out;
  };
  j["squares"] = pair_list(k.forbidden_squares());
  j["upper"] = pair_list(k.forbidden_upper());
  j["lower"] = pair_list(k.forbidden_lower());
  return j;
}

ColoringDocument coloring_from_json(const Json& j) {
  expect_kind(j, "coloring");
  check_keys(j, "coloring", {"kind", "n", "m", "cells"});
  ColoringDocument doc;
  doc.n = get_size(j, "coloring", "n");
  doc.m = get_size(j, "coloring", "m");
  if (doc.n < 1 || doc.m < 1)
    throw DocumentError("coloring: 'n' and 'm' must be positive");
  doc.cells = get_string_array(j, "coloring", "cells");
  if (doc.cells.size() != doc.n * doc.m)
    throw DocumentError("coloring: 'cells' must hold exactly n*m colors");
  return doc;
}

Json coloring_to_json(const ColoringDocument& doc) {
  Json j;
  j["kind"] = "coloring";
  j["n"] = doc.n;
  j["m"] = doc.m;
  Json cells = Json::array();
  for (const auto& c : doc.cells) cells.push_back(c);
  j["cells"] = cells;
  return j;
}

ParsedAutomaton automaton_from_json(const Json& j) {
  expect_kind(j, "automaton");
  check_keys(j, "automaton", {"kind", "letters", "processes", "transitions"});

  auto alphabet = std::make_shared<DependencyAlphabet>();
  // Processes first, in declaration order, then the letters.
  const Json& procs = get_array(j, "automaton", "processes");
  for (const auto& p : procs) {
    if (!p.is_object())
      throw DocumentError("automaton: 'processes' entries must be objects");
    check_keys(p, "automaton.processes", {"name", "states", "initial", "final"});
    alphabet->add_process(get_string(p, "automaton.processes", "name"));
  }
  for (const auto& entry : get_array(j, "automaton", "letters")) {
    if (!entry.is_object())
      throw DocumentError("automaton: 'letters' entries must be objects");
    check_keys(entry, "automaton.letters", {"name", "domain"});
    std::string name = get_string(entry, "automaton.letters", "name");
    auto domain = get_string_array(entry, "automaton.letters", "domain");
    for (const auto& d : domain)
      if (!alphabet->has_process(d))
        throw DocumentError("automaton: letter '" + name +
                            "' names undeclared process '" + d + "'");
    alphabet->add_letter(name, domain);
  }

  auto table = std::make_shared<TableRules>(alphabet);
  AsyncAutomaton aut;
  aut.alphabet = alphabet;
  aut.initial.assign(alphabet->process_count(), 0);
  for (const auto& p : procs) {
    ProcessId pid = alphabet->process(get_string(p, "automaton.processes", "name"));
    for (const auto& s : get_string_array(p, "automaton.processes", "states"))
      table->add_state(pid, s);
    aut.initial[pid] =
        table->state(pid, get_string(p, "automaton.processes", "initial"));
    for (const auto& s : get_string_array(p, "automaton.processes", "final"))
      table->set_final(pid, s);
  }
  for (const auto& t : get_array(j, "automaton", "transitions")) {
    if (!t.is_object())
      throw DocumentError("automaton: 'transitions' entries must be objects");
    check_keys(t, "automaton.transitions", {"letter", "from", "to"});
    std::string name = get_string(t, "automaton.transitions", "letter");
    if (!alphabet->has_letter(name))
      throw DocumentError("automaton: transition on unknown letter '" + name +
                          "'");
    try {
      table->add_transition(alphabet->letter(name),
                            get_string_array(t, "automaton.transitions", "from"),
                            get_string_array(t, "automaton.transitions", "to"));
    } catch (const std::exception& e) {
      throw DocumentError(std::string("automaton: ") + e.what());
    }
  }
  aut.rules = table;
  return {std::move(aut), table};
}

Json automaton_to_json(const AsyncAutomaton& aut, const TableRules& table) {
  const auto& alphabet = *aut.alphabet;
  Json j;
  j["kind"] = "automaton";
  j["letters"] = emit_alphabet(alphabet);
  Json procs = Json::array();
  for (ProcessId p = 0; p < alphabet.process_count(); ++p) {
    Json entry;
    entry["name"] = alphabet.process_name(p);
    Json states = Json::array();
    Json finals = Json::array();
    for (LocalState s = 0; s < table.state_count(p); ++s) {
      states.push_back(table.state_name(p, s));
      if (table.final_flag(p, s)) finals.push_back(table.state_name(p, s));
    }
    entry["states"] = states;
    entry["initial"] = table.state_name(p, aut.initial[p]);
    entry["final"] = finals;
    procs.push_back(entry);
  }
  j["processes"] = procs;
  Json transitions = Json::array();
  for (const auto& [key, to] : table.transitions()) {
    const auto& [letter, from] = key;
    auto dom = alphabet.domain(letter);
    Json entry;
    entry["letter"] = alphabet.letter_name(letter);
    Json jfrom = Json::array(), jto = Json::array();
    for (std::size_t k = 0; k < dom.size(); ++k) {
      jfrom.push_back(table.state_name(dom[k], from[k]));
      jto.push_back(table.state_name(dom[k], to[k]));
    }
    entry["from"] = jfrom;
    entry["to"] = jto;
    transitions.push_back(entry);
  }
  j["transitions"] = transitions;
  return j;
}

}  // namespace

DocKind document_kind(const std::string& text) {
  Json j = parse_json(text);
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw DocumentError("document is missing the 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "pcp") return DocKind::Pcp;
  if (kind == "bcp-constraint") return DocKind::BcpConstraint;
  if (kind == "coloring") return DocKind::Coloring;
  if (kind == "automaton") return DocKind::Automaton;
  if (kind == "game") return DocKind::Game;
  if (kind == "strategy") return DocKind::Strategy;
  if (kind == "trace") return DocKind::TraceDoc;
  if (kind == "verdict") return DocKind::Verdict;
  throw DocumentError("unknown document kind '" + kind + "'");
}

PcpInstance parse_pcp_document(const std::string& text) {
  return pcp_from_json(parse_json(text));
}

std::string emit_pcp_document(const PcpInstance& inst) {
  Json j;
  j["kind"] = "pcp";
  Json alphabet = Json::array();
  for (char c : inst.sigma) alphabet.push_back(std::string(1, c));
  j["alphabet"] = alphabet;
  Json tiles = Json::array();
  for (const auto& t : inst.tiles) {
    Json entry;
    entry["top"] = t.top;
    entry["bottom"] = t.bottom;
    tiles.push_back(entry);
  }
  j["tiles"] = tiles;
  return j.dump(2) + "\n";
}

ColoringConstraint parse_constraint_document(const std::string& text) {
  return constraint_from_json(parse_json(text));
}

std::string emit_constraint_document(const ColoringConstraint& k) {
  return constraint_to_json(k).dump(2) + "\n";
}

std::string emit_constraint_document(const ColoringConstraint& k,
                                     std::size_t raw_colors,
                                     std::size_t pruned_colors) {
  Json j = constraint_to_json(k);
  j["meta"] = Json{{"raw-colors", raw_colors}, {"pruned-colors", pruned_colors}};
  return j.dump(2) + "\n";
}

ColoringDocument parse_coloring_document(const std::string& text) {
  return coloring_from_json(parse_json(text));
}

std::string emit_coloring_document(const ColoringDocument& doc) {
  return coloring_to_json(doc).dump(2) + "\n";
}

Coloring resolve_coloring(const ColoringDocument& doc,
                          const ColoringConstraint& k) {
  Coloring f;
  f.n = doc.n;
  f.m = doc.m;
  for (const auto& name : doc.cells)
    f.cells.push_back(color_of(k, name, "coloring.cells"));
  return f;
}

ColoringDocument to_document(const Coloring& f, const ColoringConstraint& k) {
  ColoringDocument doc;
  doc.n = f.n;
  doc.m = f.m;
  for (ColorId c : f.cells) doc.cells.push_back(k.color_name(c));
  return doc;
}

TraceDocument parse_trace_document(const std::string& text) {
  Json j = parse_json(text);
  expect_kind(j, "trace");
  check_keys(j, "trace", {"kind", "letters", "word"}, {"processes"});
  TraceDocument doc;
  doc.alphabet = parse_alphabet(j, "trace");
  doc.word = parse_word(get_array(j, "trace", "word"), *doc.alphabet, "trace");
  return doc;
}

std::string emit_trace_document(const Trace& t) {
  const auto& alphabet = *t.alphabet();
  Json j;
  j["kind"] = "trace";
  j["letters"] = emit_alphabet(alphabet);
  j["processes"] = emit_processes(alphabet);
  Json word = Json::array();
  for (LetterId a : t.canonical()) word.push_back(alphabet.letter_name(a));
  j["word"] = word;
  return j.dump(2) + "\n";
}

ParsedAutomaton parse_automaton_document(const std::string& text) {
  return automaton_from_json(parse_json(text));
}

std::string emit_automaton_document(const AsyncAutomaton& automaton,
                                    const TableRules& table) {
  return automaton_to_json(automaton, table).dump(2) + "\n";
}

ParsedGame parse_game_document(const std::string& text) {
  Json j = parse_json(text);
  expect_kind(j, "game");
  ParsedGame out;
  if (j.contains("builtin")) {
    check_keys(j, "game", {"kind", "builtin", "params"});
    std::string builtin = get_string(j, "game", "builtin");
    if (builtin != "coloring-game")
      throw DocumentError("game: unknown builtin '" + builtin + "'");
    const Json& params = j.at("params");
    if (!params.is_object())
      throw DocumentError("game: 'params' must be an object");
    check_keys(params, "game.params", {"constraint"});
    ColoringConstraint k = constraint_from_json(params.at("constraint"));
    out.coloring_game = build_game(k);
    out.game = out.coloring_game->game;
    return out;
  }
  check_keys(j, "game", {"kind", "automaton", "controllable", "environment"});
  ParsedAutomaton pa = automaton_from_json(j.at("automaton"));
  out.table = pa.table;
  out.game.automaton = std::move(pa.automaton);
  const auto& alphabet = *out.game.automaton.alphabet;
  out.game.controllable.assign(alphabet.letter_count(), false);
  std::vector<bool> seen(alphabet.letter_count(), false);
  for (const auto& name : get_string_array(j, "game", "controllable")) {
    if (!alphabet.has_letter(name))
      throw DocumentError("game: unknown controllable letter '" + name + "'");
    out.game.controllable[alphabet.letter(name)] = true;
    seen[alphabet.letter(name)] = true;
  }
  for (const auto& name : get_string_array(j, "game", "environment")) {
    if (!alphabet.has_letter(name))
      throw DocumentError("game: unknown environment letter '" + name + "'");
    if (out.game.controllable[alphabet.letter(name)])
      throw DocumentError("game: letter '" + name +
                          "' is both controllable and environment");
    seen[alphabet.letter(name)] = true;
  }
  for (LetterId a = 0; a < alphabet.letter_count(); ++a)
    if (!seen[a])
      throw DocumentError("game: letter '" + alphabet.letter_name(a) +
                          "' is neither controllable nor environment");
  return out;
}

std::string emit_coloring_game_document(const ColoringConstraint& k) {
  Json j;
  j["kind"] = "game";
  j["builtin"] = "coloring-game";
  j["params"] = Json{{"constraint", constraint_to_json(k)}};
  return j.dump(2) + "\n";
}

std::string emit_explicit_game_document(const DistributedGame& game,
                                        const TableRules& table) {
  Json j;
  j["kind"] = "game";
  j["automaton"] = automaton_to_json(game.automaton, table);
  Json controllable = Json::array(), environment = Json::array();
  const auto& alphabet = *game.automaton.alphabet;
  for (LetterId a = 0; a < alphabet.letter_count(); ++a)
    (game.controllable[a] ? controllable : environment)
        .push_back(alphabet.letter_name(a));
  j["controllable"] = controllable;
  j["environment"] = environment;
  return j.dump(2) + "\n";
}

std::shared_ptr<const Strategy> parse_strategy_document(
    const std::string& text, const ParsedGame& context) {
  Json j = parse_json(text);
  expect_kind(j, "strategy");
  const auto& alphabet = *context.game.automaton.alphabet;
  if (j.contains("builtin")) {
    check_keys(j, "strategy", {"kind", "builtin", "params"});
    std::string builtin = get_string(j, "strategy", "builtin");
    const Json& params = j.at("params");
    if (!params.is_object())
      throw DocumentError("strategy: 'params' must be an object");
    if (builtin == "block-all") {
      check_keys(params, "strategy.params", {});
      return std::make_shared<BlockAllStrategy>(alphabet.letter_count());
    }
    if (builtin == "coloring-strategy") {
      if (!context.coloring_game)
        throw DocumentError(
            "strategy: coloring-strategy requires a coloring-game");
      check_keys(params, "strategy.params", {"coloring"});
      ColoringDocument doc = coloring_from_json(params.at("coloring"));
      Coloring f = resolve_coloring(doc, context.coloring_game->constraint);
      try {
        return strategy_from_coloring(context.coloring_game, std::move(f));
      } catch (const std::exception& e) {
        throw DocumentError(std::string("strategy: ") + e.what());
      }
    }
    throw DocumentError("strategy: unknown builtin '" + builtin + "'");
  }
  check_keys(j, "strategy", {"kind", "table"});
  auto strategy = std::make_shared<TableStrategy>(context.game.automaton.alphabet);
  for (const auto& entry : get_array(j, "strategy", "table")) {
    if (!entry.is_object())
      throw DocumentError("strategy: 'table' entries must be objects");
    check_keys(entry, "strategy.table", {"process", "views"});
    std::string pname = get_string(entry, "strategy.table", "process");
    if (!alphabet.has_process(pname))
      throw DocumentError("strategy: unknown process '" + pname + "'");
    ProcessId p = alphabet.process(pname);
    for (const auto& v : get_array(entry, "strategy.table", "views")) {
      if (!v.is_object())
        throw DocumentError("strategy: 'views' entries must be objects");
      check_keys(v, "strategy.table.views", {"view", "allow"});
      Word view = parse_word(get_array(v, "strategy.table.views", "view"),
                             alphabet, "strategy");
      Word canonical =
          Trace::normalize(context.game.automaton.alphabet, view).canonical();
      std::vector<LetterId> allow;
      for (const auto& name :
           get_string_array(v, "strategy.table.views", "allow")) {
        if (!alphabet.has_letter(name))
          throw DocumentError("strategy: unknown letter '" + name + "'");
        allow.push_back(alphabet.letter(name));
      }
      strategy->set(p, canonical, allow);
    }
  }
  return strategy;
}

std::string emit_coloring_strategy_document(const ColoringDocument& coloring) {
  Json j;
  j["kind"] = "strategy";
  j["builtin"] = "coloring-strategy";
  j["params"] = Json{{"coloring", coloring_to_json(coloring)}};
  return j.dump(2) + "\n";
}

std::string emit_block_all_strategy_document() {
  Json j;
  j["kind"] = "strategy";
  j["builtin"] = "block-all";
  j["params"] = Json::object();
  return j.dump(2) + "\n";
}

std::string emit_table_strategy_document(const TableStrategy& strategy) {
  const auto& alphabet = *strategy.alphabet();
  Json j;
  j["kind"] = "strategy";
  std::map<ProcessId, Json> rows;
  for (const auto& [key, allow] : strategy.table()) {
    const auto& [p, word] = key;
    Json view = Json::array();
    for (LetterId a : word) view.push_back(alphabet.letter_name(a));
    Json allowed = Json::array();
    for (LetterId a : allow) allowed.push_back(alphabet.letter_name(a));
    if (!rows.count(p)) {
      rows[p] = Json::object();
      rows[p]["process"] = alphabet.process_name(p);
      rows[p]["views"] = Json::array();
    }
    rows[p]["views"].push_back(Json{{"view", view}, {"allow", allowed}});
  }
  Json table = Json::array();
  for (auto& [p, row] : rows) table.push_back(std::move(row));
  j["table"] = table;
  return j.dump(2) + "\n";
}

VerdictDocument parse_verdict_document(const std::string& text) {
  Json j = parse_json(text);
  expect_kind(j, "verdict");
  check_keys(j, "verdict", {"kind", "result"},
             {"witness", "witness-seq", "depth", "reason"});
  VerdictDocument v;
  v.result = get_string(j, "verdict", "result");
  if (j.contains("witness")) v.witness_letters = get_string_array(j, "verdict", "witness");
  if (j.contains("witness-seq")) {
    std::vector<std::size_t> seq;
    for (const auto& e : get_array(j, "verdict", "witness-seq")) {
      if (!e.is_number_unsigned())
        throw DocumentError("verdict: 'witness-seq' must hold positive integers");
      seq.push_back(e.get<std::size_t>());
    }
    v.witness_indices = std::move(seq);
  }
  if (j.contains("depth")) v.depth = get_size(j, "verdict", "depth");
  if (j.contains("reason")) v.reason = get_string(j, "verdict", "reason");
  return v;
}

std::string emit_verdict_document(const VerdictDocument& v) {
  Json j;
  j["kind"] = "verdict";
  j["result"] = v.result;
  if (v.witness_letters) {
    Json w = Json::array();
    for (const auto& s : *v.witness_letters) w.push_back(s);
    j["witness"] = w;
  }
  if (v.witness_indices) {
    Json w = Json::array();
    for (std::size_t i : *v.witness_indices) w.push_back(i);
    j["witness-seq"] = w;
  }
  if (v.depth) j["depth"] = *v.depth;
  if (v.reason) j["reason"] = *v.reason;
  return j.dump(2) + "\n";
}

}  // namespace tracegames
