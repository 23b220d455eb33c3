#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>
#include <vector>

#include "mzvreg/bell.hpp"
#include "mzvreg/error.hpp"
#include "mzvreg/regularize.hpp"
#include "mzvreg/series.hpp"
#include "mzvreg/series_reg.hpp"
#include "mzvreg/zeta_numerics.hpp"

using namespace mzvreg;

namespace {

ZetaExpr z(std::initializer_list<int> k) { return zeta_symbol(Index(k)); }
ZetaExpr q(long a, long b = 1) { return ZetaExpr(Rational(a) / b); }
MzvSymbolPoly poly(std::vector<ZetaExpr> cs) { return MzvSymbolPoly(std::move(cs)); }
MzvSymbolPoly tpow(int n) { return MzvSymbolPoly::monomial(n, ZetaExpr(1)); }

const ZetaProvider<ZetaExpr> sym = symbolic_zeta;

// zeta(m) as exact rationals standing in for a generic commutative ring.
Rational fake_zeta(int m) { return Rational(1) / (m * m + 1); }

bool close(const TPoly<Approx>& a, const TPoly<Approx>& b, double tol) {
    for (int n = 0; n <= std::max(a.degree(), b.degree()); ++n) {
        const Approx x = a.coefficient(n), y = b.coefficient(n);
        const Real allowed = x.bound + y.bound;
        if (abs(x.value - y.value) > allowed || allowed > Real(tol))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("A(t) leading coefficients") {
    auto a = a_series<ZetaExpr>(4, sym);
    CHECK(a[0] == q(1));
    CHECK(a[1] == q(0));
    CHECK(a[2] == z({2}).scaled(Rational(1, 2)));
    CHECK(a[3] == z({3}).scaled(Rational(-1, 3)));
    CHECK(a[4] == (z({2}) * z({2})).scaled(Rational(1, 8)) + z({4}).scaled(Rational(1, 4)));
}

TEST_CASE("A(t) agrees with exp(gamma t) Gamma(1 + t)") {
    PrecisionScope scope(160);
    ZetaEvaluator ev(PrecisionConfig{160, 100000, 12, 1e-30});
    const int order = 60;
    auto a = a_series<Approx>(order, ev.single_provider());
    for (double tv : {0.25, -0.3, 0.5}) {
        const Real t(tv);
        Real sum, tn(1L);
        for (int n = 0; n <= order; ++n) {
            sum += a[n].value * tn;
            tn *= t;
        }
        Real euler, gamma, one_plus_t = Real(1L) + t;
        mpfr_const_euler(euler.get(), MPFR_RNDN);
        mpfr_gamma(gamma.get(), one_plus_t.get(), MPFR_RNDN);
        Real ex = euler * t;
        mpfr_exp(ex.get(), ex.get(), MPFR_RNDN);
        const Real oracle = ex * gamma;
        CAPTURE(tv);
        CHECK(abs(sum - oracle) < Real(1e-15));
    }
}

TEST_CASE("rho_bar* examples") {
    CHECK(rho_bar_star(poly({q(1)}), sym) == poly({q(1)}));
    CHECK(rho_bar_star(tpow(1), sym) == tpow(1));
    CHECK(rho_bar_star(tpow(2), sym) == poly({-z({2}), q(0), q(1)}));
    CHECK(rho_bar_star(tpow(3), sym) == poly({z({3}).scaled(-2), z({2}).scaled(-3), q(0), q(1)}));
}

TEST_CASE("rho_bar*^-1 examples") {
    CHECK(rho_bar_star_inverse(tpow(1), sym) == tpow(1));
    CHECK(rho_bar_star_inverse(tpow(2), sym) == poly({z({2}), q(0), q(1)}));
    CHECK(rho_bar_star_inverse(tpow(3), sym) == poly({z({3}).scaled(2), z({2}).scaled(3), q(0), q(1)}));
}

TEST_CASE("rho examples") {
    CHECK(rho(tpow(1), sym) == tpow(1));
    CHECK(rho(tpow(2), sym) == poly({z({2}), q(0), q(1)}));
    CHECK(rho(tpow(3), sym) == poly({z({3}).scaled(-2), z({2}).scaled(3), q(0), q(1)}));
    // rho applied to zeta_harm(2,1;T) = zeta(2)T - zeta(1,2) - zeta(3) is linear in T, so fixed
    auto h = reg_harm(Index{2, 1});
    CHECK(rho(h, sym) == h);
    ZetaEvaluator ev;
    CHECK(close(ev.evaluate(rho(h, sym)), ev.evaluate(reg_shuffle(Index{2, 1})), 1e-9));
}

TEST_CASE("maps fix polynomials of degree at most one") {
    auto p = poly({z({2, 3}) + q(3, 2), z({5}) - z({2}) * z({3})});
    CHECK(rho(p, sym) == p);
    CHECK(rho_bar_star(p, sym) == p);
    CHECK(rho_bar_star_inverse(p, sym) == p);
}

TEST_CASE("insufficient series order is a capacity error") {
    CHECK_THROWS_AS(rho(tpow(4), sym, 3), CapacityError);
    CHECK_THROWS_AS(rho_bar_star(tpow(4), sym, 2), CapacityError);
    GammaMaps<ZetaExpr> maps(3, sym);
    CHECK_THROWS_AS(maps.rho_bar_star_inverse(tpow(4)), CapacityError);
    CHECK_NOTHROW(maps.rho(tpow(3)));
    // a larger order than needed gives the same image
    CHECK(rho(tpow(3), sym, 9) == rho(tpow(3), sym));
}

TEST_CASE("rho_bar* and its inverse compose to the identity") {
    for (int n = 0; n <= 10; ++n) {
        GammaMaps<ZetaExpr> maps(10, sym);
        auto p = tpow(n) + poly({z({2, 3}), q(-1, 3)});
        CHECK(maps.rho_bar_star(maps.rho_bar_star_inverse(p)) == p);
        CHECK(maps.rho_bar_star_inverse(maps.rho_bar_star(p)) == p);
    }
    ZetaEvaluator ev;
    GammaMaps<Approx> maps(8, ev.single_provider());
    TPoly<Approx> p = ev.evaluate(tpow(8) + tpow(5) + poly({z({2, 3})}));
    CHECK(close(maps.rho_bar_star(maps.rho_bar_star_inverse(p)), p, 1e-9));
}

TEST_CASE("series exp, log and inverse round trips over rationals") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = 1 + trial % 12;
        TruncSeries<Rational> s(order);
        for (int i = 1; i <= order; ++i)
            s[i] = Rational(num(rng)) / den(rng);
        CHECK(s.exp().log() == s);
        TruncSeries<Rational> u = s + TruncSeries<Rational>::one(order);
        CHECK(u.log().exp() == u);
        CHECK(u * u.inverse() == TruncSeries<Rational>::one(order));
        CHECK(u.reflected().reflected() == u);
    }
    TruncSeries<Rational> x(5);
    x[1] = 1;
    auto e = x.exp();
    for (int n = 0; n <= 5; ++n)
        CHECK(e[n] == Rational(1) / Rational(factorial(static_cast<unsigned>(n))));
    CHECK_THROWS_AS(TruncSeries<Rational>::one(3).exp(), DomainError);
    CHECK_THROWS_AS(x.log(), DomainError);
}

TEST_CASE("the operators run over plain rationals") {
    const ZetaProvider<Rational> zq = fake_zeta;
    GammaMaps<Rational> maps(6, zq);
    TPoly<Rational> p(std::vector<Rational>{1, -2, 0, 5, 0, 0, 3});
    CHECK(maps.rho_bar_star(maps.rho_bar_star_inverse(p)) == p);
    // A(t) A(-t)^-1 restricted to even zetas: A(t)/A(-t) = exp(-2 sum_{m odd} zeta(m) t^m / m)
    TruncSeries<Rational> ratio = maps.a() * maps.a().reflected().inverse();
    TruncSeries<Rational> expo(6);
    for (int m = 3; m <= 6; m += 2)
        expo[m] = -2 * fake_zeta(m) / m;
    CHECK(ratio == expo.exp());
}

TEST_CASE("rho_bar*^-1 of T^r is the complete Bell polynomial of the e(k) symbols") {
    ZetaEvaluator ev;
    for (int r = 1; r <= 8; ++r) {
        std::vector<MzvSymbolPoly> xs;
        for (int j = 1; j <= r; ++j)
            xs.push_back(e_poly(j).scaled(Rational(factorial(static_cast<unsigned>(j - 1)))));
        const MzvSymbolPoly bell = bell_complete<MzvSymbolPoly>(r, xs);
        const MzvSymbolPoly image = rho_bar_star_inverse(tpow(r), sym);
        CAPTURE(r);
        CHECK(image == bell);
        CHECK(close(ev.evaluate(image), ev.evaluate(bell), 1e-10));
    }
}
