#include "tracegames/coloring.hpp"

#include <stdexcept>

namespace tracegames {

ColoringConstraint::ColoringConstraint(std::vector<std::string> color_names)
    : color_names_(std::move(color_names)) {
  std::size_t n = color_names_.size();
  initial_.assign(n, false);
  final_.assign(n, false);
  squares_.assign(n * n, false);
  upper_.assign(n * n, false);
  lower_.assign(n * n, false);
}

ColorId ColoringConstraint::color(const std::string& name) const {
  for (ColorId c = 0; c < color_names_.size(); ++c)
    if (color_names_[c] == name) return c;
  throw std::invalid_argument("unknown color '" + name + "'");
}

std::vector<ColorId> ColoringConstraint::initial_colors() const {
  std::vector<ColorId> out;
  for (ColorId c = 0; c < color_count(); ++c)
    if (initial_[c]) out.push_back(c);
  return out;
}

std::vector<ColorId> ColoringConstraint::final_colors() const {
  std::vector<ColorId> out;
  for (ColorId c = 0; c < color_count(); ++c)
    if (final_[c]) out.push_back(c);
  return out;
}

std::vector<ColorPair> ColoringConstraint::list(
    const std::vector<bool>& m) const {
  std::vector<ColorPair> out;
  for (ColorId c = 0; c < color_count(); ++c)
    for (ColorId d = 0; d < color_count(); ++d)
      if (m[c * color_count() + d]) out.emplace_back(c, d);
  return out;
}

InducedPatterns patterns(const Coloring& f) {
  InducedPatterns out;
  for (std::size_t x = 0; x + 1 < f.n; ++x)
    for (std::size_t y = 0; y + 1 < f.m; ++y)
      out.squares.emplace(f.at(x, y), f.at(x + 1, y + 1));
  for (std::size_t x = 0; x + 1 < f.n; ++x)
    for (std::size_t y = 0; y < f.m; ++y)
      out.upper.emplace(f.at(x, y), f.at(x + 1, y));
  for (std::size_t x = 0; x < f.n; ++x)
    for (std::size_t y = 0; y + 1 < f.m; ++y)
      out.lower.emplace(f.at(x, y), f.at(x, y + 1));
  return out;
}

SatisfactionResult satisfies(const Coloring& f, const ColoringConstraint& k) {
  for (ColorId c : f.cells)
    if (c >= k.color_count())
      throw std::invalid_argument("coloring uses a color outside the constraint");
  SatisfactionResult r;
  auto fail = [&](SatisfactionResult::Clause clause,
                  std::pair<std::size_t, std::size_t> cell,
                  std::pair<std::size_t, std::size_t> partner) {
    r.ok = false;
    r.violated = clause;
    r.cell = cell;
    r.partner = partner;
    return r;
  };

  if (!k.initial_allowed(f.at(0, 0)))
    return fail(SatisfactionResult::Clause::Initial, {0, 0}, {0, 0});
  if (!k.final_allowed(f.at(f.n - 1, f.m - 1)))
    return fail(SatisfactionResult::Clause::Final, {f.n - 1, f.m - 1},
                {f.n - 1, f.m - 1});
  for (std::size_t x = 0; x < f.n; ++x)
    for (std::size_t y = 0; y < f.m; ++y) {
      if (x + 1 < f.n && y + 1 < f.m &&
          k.square_forbidden(f.at(x, y), f.at(x + 1, y + 1)))
        return fail(SatisfactionResult::Clause::Square, {x, y}, {x + 1, y + 1});
      if (x + 1 < f.n && k.upper_forbidden(f.at(x, y), f.at(x + 1, y)))
        return fail(SatisfactionResult::Clause::Upper, {x, y}, {x + 1, y});
      if (y + 1 < f.m && k.lower_forbidden(f.at(x, y), f.at(x, y + 1)))
        return fail(SatisfactionResult::Clause::Lower, {x, y}, {x, y + 1});
    }
  return r;
}

namespace {

// Backtracking in x-major cell order. Placing a color checks the corner
// clauses and the three patterns whose later cell is the one being placed,
// so a completed grid satisfies the constraint by construction.
bool fill(const ColoringConstraint& k, Coloring& f, std::size_t idx) {
  if (idx == f.cells.size()) return true;
  std::size_t x = idx / f.m;
  std::size_t y = idx % f.m;
  for (ColorId c = 0; c < k.color_count(); ++c) {
    if (x == 0 && y == 0 && !k.initial_allowed(c)) continue;
    if (x == f.n - 1 && y == f.m - 1 && !k.final_allowed(c)) continue;
    if (x > 0 && y > 0 && k.square_forbidden(f.at(x - 1, y - 1), c)) continue;
    if (x > 0 && k.upper_forbidden(f.at(x - 1, y), c)) continue;
    if (y > 0 && k.lower_forbidden(f.at(x, y - 1), c)) continue;
    f.at(x, y) = c;
    if (fill(k, f, idx + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<Coloring> solve(const ColoringConstraint& k, std::size_t n_max,
                              std::size_t m_max) {
  if (n_max < 1 || m_max < 1)
    throw std::invalid_argument("solve bounds must be at least 1");
  if (k.color_count() == 0) return std::nullopt;
  for (std::size_t total = 2; total <= n_max + m_max; ++total) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (total < n + 1 || total - n > m_max) continue;
      std::size_t m = total - n;
      Coloring f;
      f.n = n;
      f.m = m;
      f.cells.assign(n * m, 0);
      if (fill(k, f, 0)) return f;
    }
  }
  return std::nullopt;
}

}  // namespace tracegames
