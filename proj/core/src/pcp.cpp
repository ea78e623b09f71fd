#include "tracegames/pcp.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracegames {

void PcpInstance::validate() const {
  if (tiles.empty()) throw std::invalid_argument("instance has no tiles");
  for (const auto& t : tiles) {
    if (t.top.empty() || t.bottom.empty())
      throw std::invalid_argument("tile words must be nonempty");
    for (char c : t.top + t.bottom)
      if (sigma.find(c) == std::string::npos)
        throw std::invalid_argument(std::string("tile symbol '") + c +
                                    "' outside the alphabet");
  }
}

bool check_solution(const PcpInstance& inst, const IndexSeq& seq) {
  if (seq.empty()) throw std::invalid_argument("empty index sequence");
  std::string top, bottom;
  for (std::size_t i : seq) {
    if (i >= inst.tiles.size())
      throw std::invalid_argument("tile index out of range");
    top += inst.tiles[i].top;
    bottom += inst.tiles[i].bottom;
  }
  return top == bottom;
}

namespace {

bool prefix_compatible(const std::string& a, const std::string& b) {
  std::size_t k = std::min(a.size(), b.size());
  return a.compare(0, k, b, 0, k) == 0;
}

bool extend(const PcpInstance& inst, IndexSeq& seq, std::string& top,
            std::string& bottom, std::size_t budget) {
  if (!seq.empty() && top == bottom) return true;
  if (budget == 0) return false;
  for (std::size_t i = 0; i < inst.tiles.size(); ++i) {
    std::size_t nt = top.size(), nb = bottom.size();
    top += inst.tiles[i].top;
    bottom += inst.tiles[i].bottom;
    seq.push_back(i);
    // Mismatched prefixes can never become equal again.
    if (prefix_compatible(top, bottom) &&
        extend(inst, seq, top, bottom, budget - 1))
      return true;
    seq.pop_back();
    top.resize(nt);
    bottom.resize(nb);
  }
  return false;
}

}  // namespace

std::optional<IndexSeq> brute_force(const PcpInstance& inst,
                                    std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  inst.validate();
  // Iterative deepening: a solution found at budget L has exact length L
  // (shorter ones would have surfaced earlier), and depth-first order is
  // lexicographic, so the result is the (length, lex)-least solution.
  for (std::size_t len = 1; len <= max_len; ++len) {
    IndexSeq seq;
    std::string top, bottom;
    if (extend(inst, seq, top, bottom, len)) return seq;
  }
  return std::nullopt;
}

bool verify_same_length(const PosSet& set, const std::string& u,
                        const std::string& v) {
  for (const auto& [xu, xv] : set)
    if (xu >= u.size() || xv >= v.size())
      throw std::invalid_argument("pair outside [|u|] x [|v|]");

  // (1)
  if (!set.count({u.size() - 1, v.size() - 1})) return false;
  // (2)
  for (const auto& [xu, xv] : set)
    if (xu > 0 && xv > 0 && !set.count({xu - 1, xv - 1})) return false;
  // (3)
  if (!set.count({0, 0})) return false;
  for (const auto& [xu, xv] : set)
    if ((xu == 0 || xv == 0) && !(xu == 0 && xv == 0)) return false;
  // (4)
  for (const auto& [xu, xv] : set)
    if (u[xu] != v[xv]) return false;
  return true;
}

bool exists_same_length(const std::string& u, const std::string& v) {
  std::size_t cells = u.size() * v.size();
  if (cells > 16)
    throw std::invalid_argument("exists_same_length oracle bound exceeded");
  std::vector<PosPair> all;
  for (std::size_t xu = 0; xu < u.size(); ++xu)
    for (std::size_t xv = 0; xv < v.size(); ++xv) all.emplace_back(xu, xv);
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    PosSet set;
    for (std::size_t b = 0; b < cells; ++b)
      if (mask & (std::size_t{1} << b)) set.insert(all[b]);
    if (verify_same_length(set, u, v)) return true;
  }
  return false;
}

PosSet canonical_same_length(const std::string& u, const std::string& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("canonical_same_length needs |u| == |v|");
  PosSet set;
  for (std::size_t x = 0; x < u.size(); ++x) set.insert({x, x});
  return set;
}

namespace {

struct Factorization {
  std::string word;
  std::vector<std::size_t> tile;   // tile index at each position
  std::vector<std::size_t> block;  // 0-based rank of the tile occurrence
  std::vector<bool> starts;        // position is the first index of a tile
  std::size_t first_len = 0;       // length of the first tile word
};

Factorization factorize(const PcpInstance& inst, const IndexSeq& seq,
                        bool top) {
  if (seq.empty()) throw std::invalid_argument("empty index sequence");
  Factorization f;
  for (std::size_t b = 0; b < seq.size(); ++b) {
    std::size_t i = seq[b];
    if (i >= inst.tiles.size())
      throw std::invalid_argument("tile index out of range");
    const std::string& w = top ? inst.tiles[i].top : inst.tiles[i].bottom;
    if (b == 0) f.first_len = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      f.word += w[p];
      f.tile.push_back(i);
      f.block.push_back(b);
      f.starts.push_back(p == 0);
    }
  }
  return f;
}

}  // namespace

bool verify_same_tile(const PosSet& set, const PcpInstance& inst,
                      const IndexSeq& top_seq, const IndexSeq& bottom_seq) {
  Factorization u = factorize(inst, top_seq, true);
  Factorization v = factorize(inst, bottom_seq, false);
  for (const auto& [xu, xv] : set)
    if (xu >= u.word.size() || xv >= v.word.size())
      throw std::invalid_argument("pair outside [|u|] x [|v|]");

  // (5)
  if (!set.count({u.word.size() - 1, v.word.size() - 1})) return false;
  // (6)
  for (const auto& [xu, xv] : set) {
    if (xu == 0 || xv == 0) continue;
    if (u.starts[xu] && v.starts[xv] && !set.count({xu - 1, xv - 1}))
      return false;
    if (!u.starts[xu] && !set.count({xu - 1, xv})) return false;
    if (!v.starts[xv] && !set.count({xu, xv - 1})) return false;
  }
  // (7)
  if (!set.count({0, 0})) return false;
  for (const auto& [xu, xv] : set)
    if ((xu < u.first_len) != (xv < v.first_len)) return false;
  // (8)
  for (const auto& [xu, xv] : set)
    if (u.tile[xu] != v.tile[xv]) return false;
  return true;
}

bool exists_same_tile(const PcpInstance& inst, const IndexSeq& top_seq,
                      const IndexSeq& bottom_seq) {
  Factorization u = factorize(inst, top_seq, true);
  Factorization v = factorize(inst, bottom_seq, false);
  std::size_t cells = u.word.size() * v.word.size();
  if (cells > 16)
    throw std::invalid_argument("exists_same_tile oracle bound exceeded");
  std::vector<PosPair> all;
  for (std::size_t xu = 0; xu < u.word.size(); ++xu)
    for (std::size_t xv = 0; xv < v.word.size(); ++xv) all.emplace_back(xu, xv);
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    PosSet set;
    for (std::size_t b = 0; b < cells; ++b)
      if (mask & (std::size_t{1} << b)) set.insert(all[b]);
    if (verify_same_tile(set, inst, top_seq, bottom_seq)) return true;
  }
  return false;
}

PosSet canonical_same_tile(const PcpInstance& inst, const IndexSeq& top_seq,
                           const IndexSeq& bottom_seq) {
  Factorization u = factorize(inst, top_seq, true);
  Factorization v = factorize(inst, bottom_seq, false);
  std::size_t k = top_seq.size() - 1;
  std::size_t l = bottom_seq.size() - 1;
  PosSet set;
  // Pairs whose positions have the same number of tiles after them.
  for (std::size_t xu = 0; xu < u.word.size(); ++xu)
    for (std::size_t xv = 0; xv < v.word.size(); ++xv)
      if (k - u.block[xu] == l - v.block[xv]) set.insert({xu, xv});
  return set;
}

namespace {

std::string state_name(const TileLetterState& q) {
  return std::string(1, q.symbol) + "@" + std::to_string(q.tile + 1) + "." +
         std::to_string(q.pos) + ":" + (q.initial_letter ? "1" : "0") +
         (q.initial_tile ? "1" : "0");
}

std::string color_name(const ReductionColor& c) {
  return state_name(c.top) + "/" + state_name(c.bottom) + "/" +
         (c.same_length ? "SL" : "-") + "/" + (c.same_tile ? "ST" : "-");
}

std::vector<TileLetterState> letter_states(const PcpInstance& inst, bool top) {
  std::vector<TileLetterState> out;
  for (std::size_t i = 0; i < inst.tiles.size(); ++i) {
    const std::string& w = top ? inst.tiles[i].top : inst.tiles[i].bottom;
    for (std::size_t p = 0; p < w.size(); ++p)
      for (int b0 = 0; b0 < 2; ++b0)
        for (int b1 = 0; b1 < 2; ++b1)
          out.push_back({w[p], i, p, b0 == 1, b1 == 1});
  }
  return out;
}

bool pos_maximal(const PcpInstance& inst, const TileLetterState& q, bool top) {
  const std::string& w = top ? inst.tiles[q.tile].top : inst.tiles[q.tile].bottom;
  return q.pos + 1 == w.size();
}

// The deterministic tiling automaton along one axis: the successor state
// either starts a new tile or advances one position inside the same tile.
bool tiling_step_ok(const PcpInstance& inst, const TileLetterState& q,
                    const TileLetterState& q2, bool top) {
  if (pos_maximal(inst, q, top) && q2.pos == 0) return true;
  return q.tile == q2.tile && q2.pos == q.pos + 1;
}

// Flag discipline along one axis: the initial-letter flag may only appear at
// the very first position, and the initial-tile flag only persists while the
// predecessor carries it inside a non-finished first tile.
bool flag_step_ok(const PcpInstance& inst, const TileLetterState& q,
                  const TileLetterState& q2, bool top) {
  if (q2.initial_letter) return false;
  if (q2.initial_tile && !(q.initial_tile && !pos_maximal(inst, q, top)))
    return false;
  return true;
}

}  // namespace

PcpReduction to_coloring_constraint(const PcpInstance& inst) {
  inst.validate();
  std::vector<TileLetterState> qu = letter_states(inst, true);
  std::vector<TileLetterState> qv = letter_states(inst, false);

  PcpReduction red;
  red.raw_color_count = qu.size() * qv.size() * 4;

  // Prune first (conditions 3, 4, 7, 8), then expand the families over C'.
  for (const auto& t : qu)
    for (const auto& b : qv)
      for (bool sl : {true, false})
        for (bool st : {true, false}) {
          if (sl && t.initial_letter != b.initial_letter) continue;
          if (sl && t.symbol != b.symbol) continue;
          if (st && t.initial_tile != b.initial_tile) continue;
          if (st && t.tile != b.tile) continue;
          red.colors.push_back({t, b, sl, st});
        }

  std::vector<std::string> names;
  names.reserve(red.colors.size());
  for (const auto& c : red.colors) names.push_back(color_name(c));
  ColoringConstraint k(std::move(names));

  std::size_t nc = red.colors.size();
  for (ColorId a = 0; a < nc; ++a) {
    const ReductionColor& c = red.colors[a];
    for (ColorId b = 0; b < nc; ++b) {
      const ReductionColor& d = red.colors[b];

      // Lower-triangles (same column, y increasing): the Q_u component is a
      // function of x, and the Q_v component follows the bottom tiling
      // automaton and its flag discipline along y.
      bool lower_bad = !(c.top == d.top) ||
                       !tiling_step_ok(inst, c.bottom, d.bottom, false) ||
                       !flag_step_ok(inst, c.bottom, d.bottom, false) ||
                       (!c.same_tile && d.same_tile && d.bottom.pos != 0);
      if (lower_bad) k.forbid_lower(a, b);

      // Upper-triangles (same row, x increasing): symmetric on Q_v / Q_u.
      bool upper_bad = !(c.bottom == d.bottom) ||
                       !tiling_step_ok(inst, c.top, d.top, true) ||
                       !flag_step_ok(inst, c.top, d.top, true) ||
                       (!c.same_tile && d.same_tile && d.top.pos != 0);
      if (upper_bad) k.forbid_upper(a, b);

      // Squares: SameLength decrement closure, and SameTile closure when the
      // successor starts a new tile on both sides.
      bool square_bad = (!c.same_length && d.same_length) ||
                        (!c.same_tile && d.same_tile && d.top.pos == 0 &&
                         d.bottom.pos == 0);
      if (square_bad) k.forbid_square(a, b);
    }

    if (c.same_length && c.same_tile && c.top.pos == 0 && c.bottom.pos == 0 &&
        c.top.initial_letter && c.top.initial_tile && c.bottom.initial_letter &&
        c.bottom.initial_tile)
      k.allow_initial(a);
    if (c.same_length && c.same_tile && pos_maximal(inst, c.top, true) &&
        pos_maximal(inst, c.bottom, false))
      k.allow_final(a);
  }

  red.constraint = std::move(k);
  return red;
}

std::pair<IndexSeq, IndexSeq> decode_coloring(const PcpInstance& inst,
                                              const Coloring& f) {
  PcpReduction red = to_coloring_constraint(inst);
  if (!satisfies(f, red.constraint).ok)
    throw std::invalid_argument(
        "decode_coloring: coloring does not satisfy the reduction constraint");

  auto column_states = [&](bool top) {
    std::vector<TileLetterState> states;
    std::size_t extent = top ? f.n : f.m;
    std::size_t other = top ? f.m : f.n;
    for (std::size_t x = 0; x < extent; ++x) {
      const ReductionColor& first =
          red.colors[top ? f.at(x, 0) : f.at(0, x)];
      TileLetterState q = top ? first.top : first.bottom;
      for (std::size_t y = 1; y < other; ++y) {
        const ReductionColor& c = red.colors[top ? f.at(x, y) : f.at(y, x)];
        if (!((top ? c.top : c.bottom) == q))
          throw std::runtime_error(
              "decode_coloring: coloring is not column/row consistent");
      }
      states.push_back(q);
    }
    return states;
  };

  auto read_sequence = [&](const std::vector<TileLetterState>& states,
                           bool top) {
    IndexSeq seq;
    for (std::size_t x = 0; x < states.size(); ++x) {
      const TileLetterState& q = states[x];
      if (q.pos == 0) {
        if (x > 0 && !pos_maximal(inst, states[x - 1], top))
          throw std::runtime_error(
              "decode_coloring: tile truncated along an axis");
        seq.push_back(q.tile);
      } else if (x == 0 || states[x - 1].tile != q.tile ||
                 states[x - 1].pos + 1 != q.pos) {
        throw std::runtime_error(
            "decode_coloring: tiling automaton violated along an axis");
      }
    }
    if (!pos_maximal(inst, states.back(), top))
      throw std::runtime_error(
          "decode_coloring: last tile is incomplete along an axis");
    return seq;
  };

  IndexSeq top_seq = read_sequence(column_states(true), true);
  IndexSeq bottom_seq = read_sequence(column_states(false), false);

  if (top_seq != bottom_seq || !check_solution(inst, top_seq))
    throw std::logic_error(
        "decode_coloring: decoded sequences do not solve the instance");
  return {top_seq, bottom_seq};
}

}  // namespace tracegames
