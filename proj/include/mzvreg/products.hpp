#pragma once

#include <vector>

#include "mzvreg/lincomb.hpp"

namespace mzvreg {

/// Quasi-shuffle (stuffle) product: on the last parts a of u = u'a and b of v = v'b,
///   u * v = (u' * v) a + (u * v') b + (u' * v') (a + b).
IndexCombination harmonic_product(const Index& u, const Index& v);
IndexCombination harmonic_product(const IndexCombination& u, const IndexCombination& v);

/// Shuffle product of words: sum over all order-preserving interleavings.
WordCombination shuffle_product(const Word& u, const Word& v);
WordCombination shuffle_product(const WordCombination& u, const WordCombination& v);

/// The 2^(r-1) indices obtained by merging runs of adjacent parts, one per
/// choice of '<' or '=' at each weak inequality. Entry i merges part j with
/// part j+1 iff bit j-1 of i is set, so the first entry is k itself.
std::vector<Index> contractions(const Index& k);

}  // namespace mzvreg
