#pragma once

#include <algorithm>
#include <functional>
#include <string>

#include "mzvreg/error.hpp"
#include "mzvreg/poly_expr.hpp"
#include "mzvreg/series.hpp"
#include "mzvreg/tpoly.hpp"

namespace mzvreg {

/// Supplies single zeta values zeta(m), m >= 2, in the coefficient ring C.
template <class C>
using ZetaProvider = std::function<C(int)>;

/// zeta(m) as a formal symbol.
inline ZetaExpr symbolic_zeta(int m) { return ZetaExpr::symbol(Index{m}); }

/// A(t) = exp(sum_{m>=2} (-1)^m zeta(m) t^m / m), to the given order.
template <class C>
TruncSeries<C> a_series(int order, const ZetaProvider<C>& zeta) {
    TruncSeries<C> exponent(order);
    for (int m = 2; m <= order; ++m)
        exponent[m] = ring_scale(zeta(m), Rational(m % 2 == 0 ? 1 : -1, m));
    return exponent.exp();
}

/// The linear map on polynomials in T fixed by e^{Tt} -> K(t) e^{Tt}, acting
/// coefficientwise in t:  T^n -> n! sum_{m+j=n} k_m T^j / j!.
template <class C>
TPoly<C> apply_kernel(const TruncSeries<C>& kernel, const TPoly<C>& p) {
    if (p.degree() > kernel.order())
        throw CapacityError("series order " + std::to_string(kernel.order()) + " is below polynomial degree " +
                            std::to_string(p.degree()));
    TPoly<C> out;
    for (int n = 0; n <= p.degree(); ++n) {
        const C& pn = p.coefficients()[static_cast<std::size_t>(n)];
        if (ring_is_zero(pn))
            continue;
        std::vector<C> image(static_cast<std::size_t>(n + 1), ring_zero<C>());
        for (int j = 0; j <= n; ++j) {
            const Rational w(Integer(factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(j))));
            image[static_cast<std::size_t>(j)] = ring_scale(C(kernel[n - j] * pn), w);
        }
        out += TPoly<C>(std::move(image));
    }
    return out;
}

/// The three regularization maps at a fixed series order, with their kernels
/// computed once:
///   rho:        e^{Tt} -> A(t) e^{Tt}
///   rho_bar*:   e^{Tt} -> A(-t)^{-1} e^{Tt}
///   rho_bar*^-1: e^{Tt} -> A(-t) e^{Tt} = exp(Tt + sum_{m>=2} zeta(m) t^m / m)
template <class C>
class GammaMaps {
public:
    GammaMaps(int order, const ZetaProvider<C>& zeta)
        : a_(a_series<C>(order, zeta)), a_reflected_(a_.reflected()), a_reflected_inv_(a_reflected_.inverse()) {}

    int order() const noexcept { return a_.order(); }
    const TruncSeries<C>& a() const noexcept { return a_; }

    TPoly<C> rho(const TPoly<C>& p) const { return apply_kernel(a_, p); }
    TPoly<C> rho_bar_star(const TPoly<C>& p) const { return apply_kernel(a_reflected_inv_, p); }
    TPoly<C> rho_bar_star_inverse(const TPoly<C>& p) const { return apply_kernel(a_reflected_, p); }

private:
    TruncSeries<C> a_;
    TruncSeries<C> a_reflected_;
    TruncSeries<C> a_reflected_inv_;
};

namespace detail {
template <class C>
int resolve_order(const TPoly<C>& p, int order) {
    if (order < 0)
        return std::max(p.degree(), 0);
    if (order < p.degree())
        throw CapacityError("series order " + std::to_string(order) + " is below polynomial degree " +
                            std::to_string(p.degree()));
    return order;
}
}  // namespace detail

/// order < 0 picks the polynomial degree.
template <class C>
TPoly<C> rho(const TPoly<C>& p, const ZetaProvider<C>& zeta, int order = -1) {
    return GammaMaps<C>(detail::resolve_order(p, order), zeta).rho(p);
}

template <class C>
TPoly<C> rho_bar_star(const TPoly<C>& p, const ZetaProvider<C>& zeta, int order = -1) {
    return GammaMaps<C>(detail::resolve_order(p, order), zeta).rho_bar_star(p);
}

template <class C>
TPoly<C> rho_bar_star_inverse(const TPoly<C>& p, const ZetaProvider<C>& zeta, int order = -1) {
    return GammaMaps<C>(detail::resolve_order(p, order), zeta).rho_bar_star_inverse(p);
}

}  // namespace mzvreg
