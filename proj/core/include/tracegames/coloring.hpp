#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tracegames {

using ColorId = std::uint32_t;
using ColorPair = std::pair<ColorId, ColorId>;

/// A finite bipartite coloring f : [n] x [m] -> C, stored x-major
/// (cells[x*m + y]).
struct Coloring {
  std::size_t n = 1;
  std::size_t m = 1;
  std::vector<ColorId> cells;

  ColorId at(std::size_t x, std::size_t y) const { return cells[x * m + y]; }
  ColorId& at(std::size_t x, std::size_t y) { return cells[x * m + y]; }

  bool operator==(const Coloring&) const = default;
};

/// Forbidden-pattern constraint: colors, allowed initial/final colors, and
/// the forbidden squares, upper-triangles and lower-triangles.
class ColoringConstraint {
 public:
  ColoringConstraint() = default;
  explicit ColoringConstraint(std::vector<std::string> color_names);

  std::size_t color_count() const { return color_names_.size(); }
  const std::string& color_name(ColorId c) const { return color_names_[c]; }
  const std::vector<std::string>& color_names() const { return color_names_; }
  ColorId color(const std::string& name) const;

  void allow_initial(ColorId c) { initial_[c] = true; }
  void allow_final(ColorId c) { final_[c] = true; }
  void forbid_square(ColorId c, ColorId d) { set(squares_, c, d); }
  void forbid_upper(ColorId c, ColorId d) { set(upper_, c, d); }
  void forbid_lower(ColorId c, ColorId d) { set(lower_, c, d); }

  bool initial_allowed(ColorId c) const { return initial_[c]; }
  bool final_allowed(ColorId c) const { return final_[c]; }
  bool square_forbidden(ColorId c, ColorId d) const {
    return squares_[c * color_count() + d];
  }
  bool upper_forbidden(ColorId c, ColorId d) const {
    return upper_[c * color_count() + d];
  }
  bool lower_forbidden(ColorId c, ColorId d) const {
    return lower_[c * color_count() + d];
  }

  std::vector<ColorId> initial_colors() const;
  std::vector<ColorId> final_colors() const;
  std::vector<ColorPair> forbidden_squares() const { return list(squares_); }
  std::vector<ColorPair> forbidden_upper() const { return list(upper_); }
  std::vector<ColorPair> forbidden_lower() const { return list(lower_); }

 private:
  void set(std::vector<bool>& m, ColorId c, ColorId d) {
    m[c * color_count() + d] = true;
  }
  std::vector<ColorPair> list(const std::vector<bool>& m) const;

  std::vector<std::string> color_names_;
  std::vector<bool> initial_, final_;
  std::vector<bool> squares_, upper_, lower_;  // |C|² matrices
};

struct InducedPatterns {
  std::set<ColorPair> squares;  // (f(x,y), f(x+1,y+1))
  std::set<ColorPair> upper;    // (f(x,y), f(x+1,y))
  std::set<ColorPair> lower;    // (f(x,y), f(x,y+1))
};

InducedPatterns patterns(const Coloring& f);

struct SatisfactionResult {
  enum class Clause { None, Initial, Final, Square, Upper, Lower };

  bool ok = true;
  Clause violated = Clause::None;
  // Cells witnessing a pattern violation ((x,y) and the pattern partner), or
  // the offending corner for the color clauses.
  std::pair<std::size_t, std::size_t> cell{0, 0};
  std::pair<std::size_t, std::size_t> partner{0, 0};
};

/// First violation in x-major scan order, or ok.
SatisfactionResult satisfies(const Coloring& f, const ColoringConstraint& k);

/// Complete bounded search: the first satisfying coloring with n <= n_max and
/// m <= m_max, visiting (n, m) by increasing n+m then n and filling cells
/// x-major with colors in declared order; absent when none exists in bounds.
std::optional<Coloring> solve(const ColoringConstraint& k, std::size_t n_max,
                              std::size_t m_max);

}  // namespace tracegames
