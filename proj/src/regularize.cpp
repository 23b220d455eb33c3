#include "mzvreg/regularize.hpp"

#include <map>
#include <stdexcept>

#include "mzvreg/error.hpp"
#include "mzvreg/products.hpp"

namespace mzvreg {

ZetaExpr zeta_symbol(const Index& k) {
    if (k.empty())
        return ZetaExpr(Rational(1));
    if (!k.admissible())
        throw DomainError("non-admissible index (" + k.to_string() + ") cannot be a zeta symbol");
    return ZetaExpr::symbol(k);
}

std::string to_string(const ZetaExpr& e) {
    return e.to_string([](const Index& k) { return "ζ(" + k.to_string() + ")"; });
}

std::string to_string(const MzvSymbolPoly& p) {
    return format_tpoly<ZetaExpr>(p, [](const ZetaExpr& c) {
        return c.signed_terms([](const Index& k) { return "ζ(" + k.to_string() + ")"; });
    });
}

MzvSymbolPoly e_poly(int k) {
    if (k < 1)
        throw DomainError("e(k; T) needs k >= 1");
    return k == 1 ? MzvSymbolPoly::T() : MzvSymbolPoly(zeta_symbol(Index{k}));
}

namespace {

// The recursions below peel one divergent generator at a time:
//   g * V = n K + R,  so  reg(K) = (T reg(V) - reg(R)) / n,
// where every term of R has fewer divergent generators than K.

MzvSymbolPoly reg_harm_rec(const Index& k, std::map<Index, MzvSymbolPoly>& memo) {
    if (k.empty() || k.admissible())
        return MzvSymbolPoly(zeta_symbol(k));
    if (auto it = memo.find(k); it != memo.end())
        return it->second;

    const int n = k.trailing_ones();
    const Index v = k.prefix(k.depth() - 1);
    IndexCombination rest = harmonic_product(Index{1}, v);
    const Rational c = rest.coefficient(k);
    if (c != n)
        throw std::logic_error("stuffle recursion: coefficient of (" + k.to_string() + ") is " + c.get_str());
    rest.add(k, Rational(-c));

    MzvSymbolPoly out = MzvSymbolPoly::T() * reg_harm_rec(v, memo);
    for (const auto& [term, q] : rest.terms())
        out -= reg_harm_rec(term, memo).scaled(q);
    out = out.scaled(Rational(1, n));
    memo.emplace(k, out);
    return out;
}

MzvSymbolPoly reg_shuffle_rec(const Word& w, std::map<Word, MzvSymbolPoly>& memo) {
    if (w.empty())
        return MzvSymbolPoly(ZetaExpr(Rational(1)));
    if (w.letters().back() != 'y')
        throw DomainError("word '" + w.letters() + "' does not end in y");
    if (w.convergent())
        return MzvSymbolPoly(zeta_symbol(word_to_index(w)));
    if (auto it = memo.find(w); it != memo.end())
        return it->second;

    const int n = w.leading_ys();
    const Word tail(w.letters().substr(1));
    WordCombination rest = shuffle_product(Word("y"), tail);
    const Rational c = rest.coefficient(w);
    if (c != n)
        throw std::logic_error("shuffle recursion: coefficient of " + w.letters() + " is " + c.get_str());
    rest.add(w, Rational(-c));

    MzvSymbolPoly out = MzvSymbolPoly::T() * reg_shuffle_rec(tail, memo);
    for (const auto& [term, q] : rest.terms())
        out -= reg_shuffle_rec(term, memo).scaled(q);
    out = out.scaled(Rational(1, n));
    memo.emplace(w, out);
    return out;
}

}  // namespace

MzvSymbolPoly reg_harm(const Index& k) {
    std::map<Index, MzvSymbolPoly> memo;
    return reg_harm_rec(k, memo);
}

MzvSymbolPoly reg_harm(const IndexCombination& c) {
    std::map<Index, MzvSymbolPoly> memo;
    MzvSymbolPoly out;
    for (const auto& [k, q] : c.terms())
        out += reg_harm_rec(k, memo).scaled(q);
    return out;
}

MzvSymbolPoly reg_harm_star(const Index& k) {
    std::map<Index, MzvSymbolPoly> memo;
    MzvSymbolPoly out;
    for (const Index& c : contractions(k))
        out += reg_harm_rec(c, memo);
    return out;
}

MzvSymbolPoly reg_shuffle(const Word& w) {
    std::map<Word, MzvSymbolPoly> memo;
    return reg_shuffle_rec(w, memo);
}

MzvSymbolPoly reg_shuffle(const Index& k) { return reg_shuffle(index_to_word(k)); }

MzvSymbolPoly reg_shuffle(const WordCombination& c) {
    std::map<Word, MzvSymbolPoly> memo;
    MzvSymbolPoly out;
    for (const auto& [w, q] : c.terms())
        out += reg_shuffle_rec(w, memo).scaled(q);
    return out;
}

}  // namespace mzvreg
