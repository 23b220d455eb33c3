#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mzvreg/error.hpp"
#include "mzvreg/index.hpp"
#include "mzvreg/lincomb.hpp"
#include "mzvreg/products.hpp"
#include "mzvreg/regularize.hpp"
#include "mzvreg/zeta_numerics.hpp"

using namespace mzvreg;

namespace {

ZetaExpr z(std::initializer_list<int> k) { return zeta_symbol(Index(k)); }

MzvSymbolPoly poly(std::vector<ZetaExpr> cs) { return MzvSymbolPoly(std::move(cs)); }

IndexCombination ic(std::initializer_list<std::pair<Index, int>> terms) {
    IndexCombination c;
    for (const auto& [k, q] : terms)
        c.add(k, Rational(q));
    return c;
}

WordCombination wc(std::initializer_list<std::pair<const char*, int>> terms) {
    WordCombination c;
    for (const auto& [w, q] : terms)
        c.add(Word(w), Rational(q));
    return c;
}

// Interleavings of u and v enumerated by the positions taken by u.
WordCombination brute_shuffle(const Word& u, const Word& v) {
    const std::size_t n = u.size() + v.size();
    WordCombination out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != u.size())
            continue;
        std::string w;
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0; p < n; ++p)
            w += (mask >> p) & 1ul ? u.letters()[i++] : v.letters()[j++];
        out.add(Word(w), Rational(1));
    }
    return out;
}

Index random_index(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> part(1, 3);
    std::vector<int> parts;
    int w = 0;
    std::uniform_int_distribution<int> depth(0, 3);
    const int d = depth(rng);
    for (int i = 0; i < d; ++i) {
        int k = part(rng);
        if (w + k > max_weight)
            break;
        parts.push_back(k);
        w += k;
    }
    return Index(parts);
}

Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::bernoulli_distribution coin;
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
        s += coin(rng) ? 'x' : 'y';
    return Word(s);
}

// Exact value of a combination of truncated sums at cap n.
Rational truncated(const IndexCombination& c, long n) {
    Rational acc = 0;
    for (const auto& [k, q] : c.terms())
        acc += q * truncated_sum_exact(k, n);
    return acc;
}

bool numerically_equal(const TPoly<Approx>& a, const TPoly<Approx>& b, double tol) {
    const int deg = std::max(a.degree(), b.degree());
    for (int n = 0; n <= deg; ++n) {
        const Approx x = a.coefficient(n), y = b.coefficient(n);
        const Real dev = abs(x.value - y.value);
        const Real allowed = x.bound + y.bound + rounding_unit(abs(x.value) + abs(y.value));
        if (dev > allowed || allowed > Real(tol))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("index basics") {
    Index k = Index::parse("1,1,2");
    CHECK(k.depth() == 3);
    CHECK(k.weight() == 4);
    CHECK(k.admissible());
    CHECK_FALSE(Index::parse("2,1").admissible());
    CHECK_FALSE(Index().admissible());
    CHECK(Index::parse("2,1,1").trailing_ones() == 2);
    CHECK(Index::parse(" 3 , 4 ") == Index{3, 4});
    CHECK_THROWS_AS(Index::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(Index::parse("0,2"), ParseError);
    CHECK_THROWS_AS(Index::parse("a"), ParseError);
    CHECK(Index::ones(3) == Index{1, 1, 1});
}

TEST_CASE("index and word conventions") {
    CHECK(index_to_word(Index{2}) == Word("xy"));
    CHECK(index_to_word(Index{1, 2}) == Word("xyy"));
    CHECK(index_to_word(Index{2, 1}) == Word("yxy"));
    CHECK(index_to_word(Index{3, 1, 2}) == Word("xyyxxy"));
    CHECK(word_to_index(Word("yxy")) == Index{2, 1});
    CHECK_THROWS_AS(word_to_index(Word("yx")), DomainError);
    CHECK(Word("xy").convergent());
    CHECK_FALSE(Word("yxy").convergent());

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 9) + Word("y");
        CHECK(index_to_word(word_to_index(w)) == w);
        Index k = random_index(rng, 8);
        CHECK(word_to_index(index_to_word(k)) == k);
        CHECK(index_to_word(k).convergent() == k.admissible());
    }
}

TEST_CASE("harmonic product examples") {
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            auto expected = ic({{Index{k, l}, 1}, {Index{l, k}, 1}, {Index{k + l}, 1}});
            CHECK(harmonic_product(Index{k}, Index{l}) == expected);
        }
    CHECK(harmonic_product(Index{1}, Index{1}) == ic({{Index{1, 1}, 2}, {Index{2}, 1}}));
    CHECK(harmonic_product(Index(), Index{2, 3}) == ic({{Index{2, 3}, 1}}));
    CHECK(harmonic_product(Index{2, 3}, Index()) == ic({{Index{2, 3}, 1}}));
}

TEST_CASE("shuffle product examples") {
    CHECK(shuffle_product(Word("y"), Word("y")) == wc({{"yy", 2}}));
    CHECK(shuffle_product(Word("x"), Word("y")) == wc({{"xy", 1}, {"yx", 1}}));
    CHECK(shuffle_product(Word("xy"), Word("y")) == wc({{"yxy", 1}, {"xyy", 2}}));
    CHECK(shuffle_product(Word(""), Word("xy")) == wc({{"xy", 1}}));
}

TEST_CASE("shuffle product matches brute-force interleaving") {
    std::mt19937 rng(11);
    for (int i = 0; i < 150; ++i) {
        Word u = random_word(rng, 5), v = random_word(rng, 5);
        CHECK(shuffle_product(u, v) == brute_shuffle(u, v));
    }
}

TEST_CASE("products are commutative and associative") {
    std::mt19937 rng(3);
    auto random_ic = [&] {
        IndexCombination c;
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int i = 0; i < 3; ++i)
            c.add(random_index(rng, 4), Rational(coef(rng)) / (1 + i));
        return c;
    };
    auto random_wc = [&] {
        WordCombination c;
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int i = 0; i < 3; ++i)
            c.add(random_word(rng, 3), Rational(coef(rng)) / (2 + i));
        return c;
    };
    for (int i = 0; i < 40; ++i) {
        auto a = random_ic(), b = random_ic(), c = random_ic();
        CHECK(harmonic_product(a, b) == harmonic_product(b, a));
        CHECK(harmonic_product(harmonic_product(a, b), c) == harmonic_product(a, harmonic_product(b, c)));
        auto u = random_wc(), v = random_wc(), w = random_wc();
        CHECK(shuffle_product(u, v) == shuffle_product(v, u));
        CHECK(shuffle_product(shuffle_product(u, v), w) == shuffle_product(u, shuffle_product(v, w)));
    }
}

TEST_CASE("Y-terminated words are closed under shuffle") {
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        Word u = random_word(rng, 4) + Word("y"), v = random_word(rng, 4) + Word("y");
        const auto prod = shuffle_product(u, v);
        for (const auto& [w, q] : prod.terms())
            CHECK(w.letters().back() == 'y');
    }
}

TEST_CASE("truncated sums respect the harmonic product exactly") {
    const std::vector<Index> small{Index{1},    Index{2},    Index{3},    Index{1, 1}, Index{1, 2},
                                   Index{2, 1}, Index{2, 2}, Index{3, 1}, Index{1, 3}};
    for (long n : {1L, 2L, 5L, 13L}) {
        for (const auto& u : small)
            for (const auto& v : small) {
                const Rational lhs = truncated_sum_exact(u, n) * truncated_sum_exact(v, n);
                CHECK(lhs == truncated(harmonic_product(u, v), n));
            }
    }
    CHECK(truncated_sum_exact(Index{2}, 3) == Rational(49, 36));
    CHECK(truncated_sum_exact(Index{1, 1}, 3) == 1);  // 1/2 + 1/3 + 1/6
    CHECK(truncated_sum_exact(Index{1, 2}, 2) == Rational(1, 4));
    CHECK(truncated_sum_exact(Index(), 7) == 1);
}

TEST_CASE("contractions") {
    auto set_of = [](const std::vector<Index>& v) { return std::set<Index>(v.begin(), v.end()); };
    CHECK(set_of(contractions(Index{1, 2})) == std::set<Index>{Index{1, 2}, Index{3}});
    CHECK(contractions(Index{5}) == std::vector<Index>{Index{5}});
    CHECK(set_of(contractions(Index{1, 1, 2})) ==
          std::set<Index>{Index{1, 1, 2}, Index{2, 2}, Index{1, 3}, Index{4}});
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        Index k = random_index(rng, 9);
        if (k.empty())
            continue;
        auto cs = contractions(k);
        CHECK(cs.size() == (1u << (k.depth() - 1)));
        for (const auto& c : cs)
            CHECK(c.weight() == k.weight());
    }
}

TEST_CASE("truncated star sums equal the contraction expansion") {
    // zeta*_N(K) summed over 0 < m_1 <= ... <= m_r <= N, brute force
    auto star_brute = [](const Index& k, long n) {
        Rational acc = 0;
        std::vector<long> m(static_cast<std::size_t>(k.depth()), 1);
        std::function<void(int, long, Rational)> rec = [&](int i, long lo, Rational prod) {
            if (i == k.depth()) {
                acc += prod;
                return;
            }
            for (long x = lo; x <= n; ++x) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(k[static_cast<std::size_t>(i)]));
                rec(i + 1, x, prod / Rational(p));
            }
        };
        rec(0, 1, Rational(1));
        return acc;
    };
    for (const Index& k : {Index{1, 2}, Index{2, 1, 1}, Index{1, 1, 2}, Index{3, 2}}) {
        Rational sum = 0;
        for (const auto& c : contractions(k))
            sum += truncated_sum_exact(c, 6);
        CHECK(sum == star_brute(k, 6));
    }
}

TEST_CASE("harmonic regularization examples") {
    CHECK(reg_harm(Index{2, 3}) == poly({z({2, 3})}));
    CHECK(reg_harm(Index{1}) == MzvSymbolPoly::T());
    CHECK(reg_harm(Index()) == poly({ZetaExpr(1)}));
    for (int k = 2; k <= 4; ++k)
        CHECK(reg_harm(Index{k, 1}) == poly({-z({1, k}) - z({k + 1}), z({k})}));
    // 2 zeta(1,1) + zeta(2) = T^2
    CHECK(reg_harm(Index{1, 1}) == poly({z({2}).scaled(Rational(-1, 2)), ZetaExpr(0), ZetaExpr(Rational(1, 2))}));
}

TEST_CASE("star harmonic regularization examples") {
    CHECK(reg_harm_star(Index{1}) == MzvSymbolPoly::T());
    for (int k = 2; k <= 4; ++k) {
        CHECK(reg_harm_star(Index{1, k}) == poly({z({1, k}) + z({k + 1})}));
        CHECK(reg_harm_star(Index{k, 1}) == poly({-z({1, k}), z({k})}));
    }
}

TEST_CASE("shuffle regularization examples") {
    CHECK(reg_shuffle(Index{1, 2}) == poly({z({1, 2})}));
    CHECK(reg_shuffle(Index{1}) == MzvSymbolPoly::T());
    CHECK(reg_shuffle(Index{2, 1}) == poly({z({1, 2}).scaled(-2), z({2})}));
    CHECK(to_string(reg_shuffle(Index{2, 1})) == "ζ(2)·T − 2ζ(1,2)");
    CHECK(reg_shuffle(Index{1, 1}) == poly({ZetaExpr(0), ZetaExpr(0), ZetaExpr(Rational(1, 2))}));
}

TEST_CASE("regularized degree equals the trailing-ones count") {
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        Index k = random_index(rng, 7);
        if (k.empty())
            continue;
        CHECK(reg_harm(k).degree() == k.trailing_ones());
        CHECK(reg_shuffle(k).degree() == k.trailing_ones());
        CHECK(reg_harm_star(k).degree() == k.trailing_ones());
    }
}

TEST_CASE("regularizations are algebra maps on all-ones indices") {
    // On indices 1_r both sides only involve T and single zetas, so the
    // homomorphism property holds exactly for shuffle and after collecting for stuffle.
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            auto lhs = reg_shuffle(Index::ones(a)) * reg_shuffle(Index::ones(b));
            auto rhs = reg_shuffle(shuffle_product(index_to_word(Index::ones(a)), index_to_word(Index::ones(b))));
            CHECK(lhs == rhs);
        }
    CHECK(reg_harm(Index{1}) * reg_harm(Index{1}) == reg_harm(harmonic_product(Index{1}, Index{1})));
}

TEST_CASE("regularizations are algebra maps numerically") {
    ZetaEvaluator ev;
    const std::vector<std::pair<Index, Index>> pairs{
        {Index{1}, Index{2}}, {Index{1}, Index{2, 1}}, {Index{2, 1}, Index{3}}, {Index{1, 1}, Index{2}},
        {Index{2, 1}, Index{2, 1}}};
    for (const auto& [u, v] : pairs) {
        CAPTURE(u.to_string());
        CAPTURE(v.to_string());
        CHECK(numerically_equal(ev.evaluate(reg_harm(u)) * ev.evaluate(reg_harm(v)),
                                ev.evaluate(reg_harm(harmonic_product(u, v))), 1e-9));
        CHECK(numerically_equal(
            ev.evaluate(reg_shuffle(u)) * ev.evaluate(reg_shuffle(v)),
            ev.evaluate(reg_shuffle(shuffle_product(index_to_word(u), index_to_word(v)))), 1e-9));
    }
}

TEST_CASE("shuffle product of convergent words respects values") {
    ZetaEvaluator ev;
    const std::vector<std::pair<Index, Index>> pairs{
        {Index{2}, Index{2}},    {Index{2}, Index{3}},    {Index{2}, Index{1, 2}}, {Index{3}, Index{3}},
        {Index{2}, Index{4}},    {Index{2}, Index{1, 3}}, {Index{2}, Index{2, 2}}, {Index{1, 2}, Index{3}},
        {Index{2}, Index{1, 1, 2}}, {Index{1, 2}, Index{1, 2}}};
    for (const auto& [u, v] : pairs) {
        CAPTURE(u.to_string());
        CAPTURE(v.to_string());
        Approx lhs = ev.mzv(u) * ev.mzv(v);
        Approx rhs;
        const auto prod = shuffle_product(index_to_word(u), index_to_word(v));
        for (const auto& [w, q] : prod.terms()) {
            REQUIRE(w.convergent());
            rhs += ev.mzv(word_to_index(w)).scaled(q);
        }
        CHECK(abs(lhs.value - rhs.value) <= lhs.bound + rhs.bound);
        CHECK(lhs.bound + rhs.bound < Real(1e-9));
    }
}
