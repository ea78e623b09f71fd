#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tracegames/coloring.hpp"

namespace tracegames {

struct PcpTile {
  std::string top;
  std::string bottom;

  bool operator==(const PcpTile&) const = default;
};

/// A Post correspondence instance: indexed tiles of nonempty word pairs over
/// a finite symbol alphabet. Indices are 0-based here; the document format
/// speaks 1-based.
struct PcpInstance {
  std::string sigma;           // one char per symbol
  std::vector<PcpTile> tiles;

  void validate() const;

  bool operator==(const PcpInstance&) const = default;
};

using IndexSeq = std::vector<std::size_t>;

/// True iff the top and bottom concatenations along `seq` coincide.
bool check_solution(const PcpInstance& inst, const IndexSeq& seq);

/// First solution in (length, lexicographic) order among sequences of length
/// at most max_len; complete within the bound.
std::optional<IndexSeq> brute_force(const PcpInstance& inst,
                                    std::size_t max_len);

using PosPair = std::pair<std::size_t, std::size_t>;
using PosSet = std::set<PosPair>;

/// The four SameLength properties over X = [|u|] x [|v|]:
///  (1) contains (|u|-1, |v|-1);
///  (2) closed under simultaneous decrement while both coordinates positive;
///  (3) contains (0,0) and no other member with a zero coordinate;
///  (4) letters of u and v agree at every member.
bool verify_same_length(const PosSet& set, const std::string& u,
                        const std::string& v);

/// Brute force over all subsets of X; requires |u|*|v| <= 16. Equals (u == v).
bool exists_same_length(const std::string& u, const std::string& v);

/// The diagonal witness for equal words; requires |u| == |v|.
PosSet canonical_same_length(const std::string& u, const std::string& v);

/// The four SameTile properties (5)-(8) for the factorizations of the two
/// concatenations along top_seq and bottom_seq.
bool verify_same_tile(const PosSet& set, const PcpInstance& inst,
                      const IndexSeq& top_seq, const IndexSeq& bottom_seq);

/// Brute force over subsets; requires |u|*|v| <= 16. Equals sequence equality.
bool exists_same_tile(const PcpInstance& inst, const IndexSeq& top_seq,
                      const IndexSeq& bottom_seq);

/// The witness set A: pairs of positions with equally many tiles after them.
PosSet canonical_same_tile(const PcpInstance& inst, const IndexSeq& top_seq,
                           const IndexSeq& bottom_seq);

/// One letter-in-tile state of the reduction: a symbol occurrence inside a
/// tile word, plus the initial-letter and initial-tile flags.
struct TileLetterState {
  char symbol = 0;
  std::size_t tile = 0;  // 0-based
  std::size_t pos = 0;   // position within the tile word
  bool initial_letter = false;
  bool initial_tile = false;

  bool operator==(const TileLetterState&) const = default;
};

struct ReductionColor {
  TileLetterState top;     // Q_u component
  TileLetterState bottom;  // Q_v component
  bool same_length = false;
  bool same_tile = false;

  bool operator==(const ReductionColor&) const = default;
};

struct PcpReduction {
  ColoringConstraint constraint;
  std::vector<ReductionColor> colors;  // by ColorId of `constraint`
  std::size_t raw_color_count = 0;     // |Q_u| * |Q_v| * 4 before pruning
};

/// The coloring constraint of the reduction: satisfiable iff the instance
/// has a solution. Colors are pruned first (flag/letter/tile agreement on
/// flagged colors), then the wildcard pattern families are expanded over the
/// pruned set.
PcpReduction to_coloring_constraint(const PcpInstance& inst);

/// Reads the tile sequences back from a satisfying coloring of the
/// reduction constraint. Throws if the coloring is not column/row consistent
/// or the sequences fail to solve the instance.
std::pair<IndexSeq, IndexSeq> decode_coloring(const PcpInstance& inst,
                                              const Coloring& f);

}  // namespace tracegames
