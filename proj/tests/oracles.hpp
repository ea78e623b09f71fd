#pragma once

// Brute-force reference implementations used as test oracles. Everything here
// is deliberately independent of the library's algorithms: closures by
// exhaustive swapping, prefix checks by permutation, satisfaction counts by
// full grid enumeration.

#include <set>
#include <vector>

#include "tracegames/coloring.hpp"
#include "tracegames/trace.hpp"

namespace tracegames::oracle {

/// All words reachable from `w` by swapping adjacent independent letters.
std::set<Word> commutation_closure(const DependencyAlphabet& alphabet,
                                   const Word& w);

/// u is a prefix of v iff appending some ordering of the letter multiset
/// difference to u lands in v's class.
bool brute_is_prefix(const AlphabetRef& alphabet, const Word& u, const Word& v);

/// Longest p-free suffix over all linearizations; returns the canonical
/// complement prefix.
Word brute_view(const AlphabetRef& alphabet, const Word& w, ProcessId p);

/// Maximal letters: letters ending some word of the closure.
std::set<LetterId> brute_maxima(const DependencyAlphabet& alphabet,
                                const Word& w);

/// Common-extension search: some word z with |z| <= |v| makes v a prefix of
/// u·z. Assumes u, v prime; prefix checks use brute_is_prefix.
bool brute_common_extension(const AlphabetRef& alphabet, const Word& u,
                            const Word& v);

/// Every satisfying coloring of the exact size (n, m), by exhaustive
/// enumeration of all |C|^(n*m) grids (with sound prefix pruning).
std::vector<Coloring> enumerate_satisfying(const ColoringConstraint& k,
                                           std::size_t n, std::size_t m);

}  // namespace tracegames::oracle
