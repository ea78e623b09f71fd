#include "oracles.hpp"

#include <algorithm>
#include <deque>

namespace tracegames::oracle {

std::set<Word> commutation_closure(const DependencyAlphabet& alphabet,
                                   const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> frontier{w};
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (alphabet.dependent(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

bool brute_is_prefix(const AlphabetRef& alphabet, const Word& u,
                     const Word& v) {
  // Letter multiset difference v \ u; fail when u is not a sub-multiset.
  Word diff = v;
  for (LetterId a : u) {
    auto it = std::find(diff.begin(), diff.end(), a);
    if (it == diff.end()) return false;
    diff.erase(it);
  }
  std::sort(diff.begin(), diff.end());
  do {
    Word joined = u;
    joined.insert(joined.end(), diff.begin(), diff.end());
    if (equivalent(alphabet, joined, v)) return true;
  } while (std::next_permutation(diff.begin(), diff.end()));
  return false;
}

Word brute_view(const AlphabetRef& alphabet, const Word& w, ProcessId p) {
  std::size_t best_suffix = 0;
  Word best_prefix = w;
  for (const Word& lin : commutation_closure(*alphabet, w)) {
    // Longest p-free suffix of this linearization.
    std::size_t k = lin.size();
    while (k > 0 && !alphabet->in_domain(lin[k - 1], p)) --k;
    std::size_t suffix = lin.size() - k;
    if (suffix >= best_suffix) {
      best_suffix = suffix;
      best_prefix = Word(lin.begin(), lin.begin() + k);
    }
  }
  return Trace::normalize(alphabet, best_prefix).canonical();
}

std::set<LetterId> brute_maxima(const DependencyAlphabet& alphabet,
                                const Word& w) {
  std::set<LetterId> out;
  for (const Word& lin : commutation_closure(alphabet, w))
    if (!lin.empty()) out.insert(lin.back());
  return out;
}

bool brute_common_extension(const AlphabetRef& alphabet, const Word& u,
                            const Word& v) {
  // Any common extension w of u and v can be written u·z with |z| <= |v|.
  std::size_t letters = alphabet->letter_count();
  std::vector<Word> level{Word{}};
  for (std::size_t len = 0; len <= v.size(); ++len) {
    std::vector<Word> next;
    for (const Word& z : level) {
      Word joined = u;
      joined.insert(joined.end(), z.begin(), z.end());
      if (brute_is_prefix(alphabet, v, joined)) return true;
      for (LetterId a = 0; a < letters; ++a) {
        Word zz = z;
        zz.push_back(a);
        next.push_back(std::move(zz));
      }
    }
    level = std::move(next);
  }
  return false;
}

namespace {

void enumerate_cells(const ColoringConstraint& k, Coloring& f, std::size_t idx,
                     std::vector<Coloring>& out) {
  if (idx == f.cells.size()) {
    out.push_back(f);
    return;
  }
  std::size_t x = idx / f.m;
  std::size_t y = idx % f.m;
  for (ColorId c = 0; c < k.color_count(); ++c) {
    // Pruning only ever discards grids that already violate the constraint,
    // so the enumeration of satisfying grids stays exhaustive.
    if (x == 0 && y == 0 && !k.initial_allowed(c)) continue;
    if (x == f.n - 1 && y == f.m - 1 && !k.final_allowed(c)) continue;
    if (x > 0 && y > 0 && k.square_forbidden(f.at(x - 1, y - 1), c)) continue;
    if (x > 0 && k.upper_forbidden(f.at(x - 1, y), c)) continue;
    if (y > 0 && k.lower_forbidden(f.at(x, y - 1), c)) continue;
    f.at(x, y) = c;
    enumerate_cells(k, f, idx + 1, out);
  }
}

}  // namespace

std::vector<Coloring> enumerate_satisfying(const ColoringConstraint& k,
                                           std::size_t n, std::size_t m) {
  Coloring f;
  f.n = n;
  f.m = m;
  f.cells.assign(n * m, 0);
  std::vector<Coloring> out;
  enumerate_cells(k, f, 0, out);
  return out;
}

}  // namespace tracegames::oracle
