#pragma once

#include "mzvreg/lincomb.hpp"
#include "mzvreg/poly_expr.hpp"
#include "mzvreg/tpoly.hpp"

namespace mzvreg {

/// Polynomial in T whose coefficients are Q-polynomials in admissible MZV symbols.
using MzvSymbolPoly = TPoly<ZetaExpr>;

/// "ζ(2)·T − ζ(1,2)".
std::string to_string(const MzvSymbolPoly& p);

/// Harmonic regularization zeta_harm(K; T): the stuffle homomorphism extending
/// zeta on admissible indices with (1) -> T. Degree in T equals the trailing-ones
/// count of K.
MzvSymbolPoly reg_harm(const Index& k);
MzvSymbolPoly reg_harm(const IndexCombination& c);

/// zeta*_harm(K; T) as the sum of reg_harm over contractions(K).
MzvSymbolPoly reg_harm_star(const Index& k);

/// Shuffle regularization zeta_sh(K; T): the shuffle homomorphism on words
/// extending zeta on convergent words with y -> T.
MzvSymbolPoly reg_shuffle(const Index& k);
MzvSymbolPoly reg_shuffle(const Word& w);
MzvSymbolPoly reg_shuffle(const WordCombination& c);

/// e(k; T): zeta(k) for k > 1 and T for k = 1.
MzvSymbolPoly e_poly(int k);

}  // namespace mzvreg
