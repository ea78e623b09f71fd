#include "tracegames/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace tracegames {

namespace {

void require_same_alphabet(const Trace& u, const Trace& v) {
  if (u.alphabet() == v.alphabet()) return;
  if (u.alphabet() && v.alphabet() && *u.alphabet() == *v.alphabet()) return;
  throw std::invalid_argument("traces over mismatched alphabets");
}

void require_known_letters(const DependencyAlphabet& alphabet,
                           const Word& word) {
  for (LetterId a : word)
    if (a >= alphabet.letter_count())
      throw std::invalid_argument("word contains a letter outside the alphabet");
}

// Direct successors in the dependence order of `word`: i -> j when i < j,
// the letters are dependent, and no dependent position lies strictly between
// acting as a relay. The full order is the transitive closure; for the
// algorithms below the non-reduced edge set (all dependent pairs i < j) is
// used, which represents the same partial order.
std::vector<std::vector<std::size_t>> dependence_edges(
    const DependencyAlphabet& alphabet, const Word& word) {
  std::size_t n = word.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alphabet.dependent(word[i], word[j])) succ[i].push_back(j);
  return succ;
}

// Lexicographically least linearization: repeatedly emit the source of the
// dependence order carrying the least letter. A position is a source iff it
// is the first remaining position on the sequence of every process in its
// domain, so sources are found among the per-process queue heads.
Word least_linearization(const DependencyAlphabet& alphabet, const Word& word) {
  std::size_t n = word.size();
  std::size_t np = alphabet.process_count();
  std::vector<std::vector<std::size_t>> proc_pos(np);
  for (std::size_t i = 0; i < n; ++i)
    for (ProcessId p : alphabet.domain(word[i])) proc_pos[p].push_back(i);
  std::vector<std::size_t> head(np, 0);

  auto is_source = [&](std::size_t i) {
    for (ProcessId p : alphabet.domain(word[i]))
      if (proc_pos[p][head[p]] != i) return false;
    return true;
  };

  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (ProcessId p = 0; p < np; ++p) {
      if (head[p] >= proc_pos[p].size()) continue;
      std::size_t i = proc_pos[p][head[p]];
      if ((best == n || word[i] < word[best]) && is_source(i)) best = i;
    }
    out.push_back(word[best]);
    for (ProcessId p : alphabet.domain(word[best])) ++head[p];
  }
  return out;
}

}  // namespace

Trace Trace::normalize(AlphabetRef alphabet, const Word& word) {
  if (!alphabet) throw std::invalid_argument("null alphabet");
  require_known_letters(*alphabet, word);
  Word canonical = least_linearization(*alphabet, word);
  return Trace(std::move(alphabet), std::move(canonical));
}

Trace Trace::empty(AlphabetRef alphabet) {
  if (!alphabet) throw std::invalid_argument("null alphabet");
  return Trace(std::move(alphabet), {});
}

bool Trace::operator==(const Trace& other) const {
  if (word_ != other.word_) return false;
  if (alphabet_ == other.alphabet_) return true;
  return alphabet_ && other.alphabet_ && *alphabet_ == *other.alphabet_;
}

bool Trace::operator<(const Trace& other) const { return word_ < other.word_; }

bool equivalent(const Trace& u, const Trace& v) {
  require_same_alphabet(u, v);
  return u.canonical() == v.canonical();
}

bool equivalent(const AlphabetRef& alphabet, const Word& w1, const Word& w2) {
  return Trace::normalize(alphabet, w1) == Trace::normalize(alphabet, w2);
}

Trace concat(const Trace& u, const Trace& v) {
  require_same_alphabet(u, v);
  Word joined = u.canonical();
  joined.insert(joined.end(), v.canonical().begin(), v.canonical().end());
  return Trace::normalize(u.alphabet(), joined);
}

// u ⊑ v iff the letters of u, taken in linearization order, can be consumed
// from the sources of v's dependence order. Sources of u are sources of v
// whenever u is a prefix, so the greedy consumption is exact.
bool is_prefix(const Trace& u, const Trace& v) {
  require_same_alphabet(u, v);
  if (u.size() > v.size()) return false;
  const auto& alphabet = *v.alphabet();
  const Word& vw = v.canonical();
  std::size_t n = vw.size();
  auto succ = dependence_edges(alphabet, vw);
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : succ[i]) ++indeg[j];
  std::vector<bool> used(n, false);

  for (LetterId a : u.canonical()) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && indeg[i] == 0 && vw[i] == a) {
        pick = i;
        break;  // occurrences of one letter are chain-ordered
      }
    }
    if (pick == n) return false;
    used[pick] = true;
    for (std::size_t j : succ[pick])
      if (!used[j]) --indeg[j];
  }
  return true;
}

std::set<LetterId> maxima(const Trace& u) {
  const Word& w = u.canonical();
  const auto& alphabet = *u.alphabet();
  std::set<LetterId> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool has_successor = false;
    for (std::size_t j = i + 1; j < w.size() && !has_successor; ++j)
      if (alphabet.dependent(w[i], w[j])) has_successor = true;
    if (!has_successor) out.insert(w[i]);
  }
  return out;
}

bool is_prime(const Trace& u) { return maxima(u).size() == 1; }

LetterId last_letter(const Trace& u) {
  if (u.is_empty())
    throw std::invalid_argument("last letter of the empty trace");
  auto m = maxima(u);
  if (m.size() != 1)
    throw std::invalid_argument("last letter of a non-prime trace");
  return *m.begin();
}

// Matching the k-th occurrence of each letter across u and v (occurrences of
// one letter are chain-ordered, so in any common extension both prefixes pin
// the same occurrence), a common extension exists iff
//   - the shared occurrences are downward closed in both u and v,
//   - u and v order dependent shared occurrences identically,
//   - no u-only occurrence depends on a v-only occurrence.
bool are_parallel(const Trace& u, const Trace& v) {
  require_same_alphabet(u, v);
  if (!is_prime(u) || !is_prime(v))
    throw std::invalid_argument("are_parallel requires prime traces");
  if (is_prefix(u, v) || is_prefix(v, u)) return false;

  const auto& alphabet = *u.alphabet();
  const Word& uw = u.canonical();
  const Word& vw = v.canonical();

  std::map<LetterId, std::size_t> ucount, vcount;
  for (LetterId a : uw) ++ucount[a];
  for (LetterId a : vw) ++vcount[a];
  auto shared_count = [&](LetterId a) {
    auto iu = ucount.find(a);
    auto iv = vcount.find(a);
    if (iu == ucount.end() || iv == vcount.end()) return std::size_t{0};
    return std::min(iu->second, iv->second);
  };

  // Occurrence ranks per position.
  auto ranks = [](const Word& w) {
    std::map<LetterId, std::size_t> seen;
    std::vector<std::size_t> r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = seen[w[i]]++;
    return r;
  };
  auto urank = ranks(uw);
  auto vrank = ranks(vw);
  auto shared_in = [&](const Word& w, const std::vector<std::size_t>& rank,
                       std::size_t i) {
    return rank[i] < shared_count(w[i]);
  };

  // Downward closure of the shared part, in each trace.
  for (std::size_t j = 0; j < uw.size(); ++j) {
    if (!shared_in(uw, urank, j)) continue;
    for (std::size_t i = 0; i < j; ++i)
      if (alphabet.dependent(uw[i], uw[j]) && !shared_in(uw, urank, i))
        return false;
  }
  for (std::size_t j = 0; j < vw.size(); ++j) {
    if (!shared_in(vw, vrank, j)) continue;
    for (std::size_t i = 0; i < j; ++i)
      if (alphabet.dependent(vw[i], vw[j]) && !shared_in(vw, vrank, i))
        return false;
  }

  // Order agreement on dependent shared pairs.
  std::map<std::pair<LetterId, std::size_t>, std::size_t> vpos;
  for (std::size_t i = 0; i < vw.size(); ++i)
    if (shared_in(vw, vrank, i)) vpos[{vw[i], vrank[i]}] = i;
  for (std::size_t i = 0; i < uw.size(); ++i) {
    if (!shared_in(uw, urank, i)) continue;
    for (std::size_t j = i + 1; j < uw.size(); ++j) {
      if (!shared_in(uw, urank, j)) continue;
      if (!alphabet.dependent(uw[i], uw[j])) continue;
      if (vpos.at({uw[i], urank[i]}) > vpos.at({uw[j], urank[j]})) return false;
    }
  }

  // No dependence between u-only and v-only occurrences.
  for (std::size_t i = 0; i < uw.size(); ++i) {
    if (shared_in(uw, urank, i)) continue;
    for (std::size_t j = 0; j < vw.size(); ++j) {
      if (shared_in(vw, vrank, j)) continue;
      if (alphabet.dependent(uw[i], vw[j])) return false;
    }
  }
  return true;
}

// The view of p is the downward closure of the p-occurrences in the
// dependence order; the complement is the longest p-free suffix.
Trace view(const Trace& u, ProcessId p) {
  const auto& alphabet = *u.alphabet();
  if (p >= alphabet.process_count())
    throw std::invalid_argument("unknown process");
  const Word& w = u.canonical();
  std::size_t n = w.size();
  std::vector<bool> keep(n, false);
  // Scan right to left: a position is kept if p acts in it or if some kept
  // later position depends on it.
  for (std::size_t ii = n; ii-- > 0;) {
    if (alphabet.in_domain(w[ii], p)) {
      keep[ii] = true;
      continue;
    }
    for (std::size_t j = ii + 1; j < n && !keep[ii]; ++j)
      if (keep[j] && alphabet.dependent(w[ii], w[j])) keep[ii] = true;
  }
  Word sub;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) sub.push_back(w[i]);
  return Trace::normalize(u.alphabet(), sub);
}

TraceStats stats(const Trace& u) {
  const auto& alphabet = *u.alphabet();
  TraceStats s;
  s.length = u.size();
  s.process_counts.assign(alphabet.process_count(), 0);
  for (LetterId a : u.canonical()) {
    ++s.letter_counts[a];
    for (ProcessId p : alphabet.domain(a)) ++s.process_counts[p];
  }
  for (ProcessId p = 0; p < s.process_counts.size(); ++p)
    if (s.process_counts[p] != 0) s.dom.insert(p);
  return s;
}

}  // namespace tracegames
