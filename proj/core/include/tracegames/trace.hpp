#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "tracegames/alphabet.hpp"

namespace tracegames {

using AlphabetRef = std::shared_ptr<const DependencyAlphabet>;
using Word = std::vector<LetterId>;

/// A Mazurkiewicz trace: the commutation class of a word, stored as its
/// lexicographic normal form (the least linearization under the alphabet's
/// letter order). Immutable; all operations return new values.
class Trace {
 public:
  /// Class of `word`; two words yield equal traces iff they are equivalent.
  static Trace normalize(AlphabetRef alphabet, const Word& word);
  static Trace empty(AlphabetRef alphabet);

  const AlphabetRef& alphabet() const { return alphabet_; }
  const Word& canonical() const { return word_; }
  std::size_t size() const { return word_.size(); }
  bool is_empty() const { return word_.empty(); }

  bool operator==(const Trace& other) const;
  bool operator!=(const Trace& other) const { return !(*this == other); }
  bool operator<(const Trace& other) const;  // on canonical words

 private:
  Trace(AlphabetRef alphabet, Word canonical)
      : alphabet_(std::move(alphabet)), word_(std::move(canonical)) {}

  AlphabetRef alphabet_;
  Word word_;
};

struct TraceStats {
  std::size_t length = 0;
  std::map<LetterId, std::size_t> letter_counts;
  std::vector<std::size_t> process_counts;  // |u|_p, indexed by ProcessId
  std::set<ProcessId> dom;                  // processes with |u|_p != 0
};

bool equivalent(const Trace& u, const Trace& v);
bool equivalent(const AlphabetRef& alphabet, const Word& w1, const Word& w2);

Trace concat(const Trace& u, const Trace& v);

/// u ⊑ v: some trace w satisfies uw = v.
bool is_prefix(const Trace& u, const Trace& v);

/// Letters terminating some linearization of u; empty for the empty trace.
std::set<LetterId> maxima(const Trace& u);

/// True iff u has a unique maximum.
bool is_prime(const Trace& u);

/// The unique maximum of a prime trace; error on the empty or non-prime.
LetterId last_letter(const Trace& u);

/// Two prime traces are parallel when neither is a prefix of the other and
/// they admit a common extension. Arguments must be prime.
bool are_parallel(const Trace& u, const Trace& v);

/// Causal view of process p: the unique prefix x of u with u = x·v, p not in
/// dom(v), and v of maximal length. Empty or prime with p in dom(last).
Trace view(const Trace& u, ProcessId p);

TraceStats stats(const Trace& u);

}  // namespace tracegames
