#pragma once

#include "mzvreg/rational.hpp"
#include "mzvreg/real.hpp"

namespace mzvreg {

// Coefficient rings used by the generic algebra code (Bell polynomials, truncated
// series, polynomials in T). A ring R needs +, -, * and a specialization of
// RingTraits giving the embedding of Q (or Z) and a zero test.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational scale(const Rational& x, const Rational& q) { return Rational(x * q); }
};

template <>
struct RingTraits<Integer> {
    static Integer from_rational(const Rational& q);
    static bool is_zero(const Integer& x) { return sgn(x) == 0; }
    static Integer scale(const Integer& x, const Rational& q) { return x * from_rational(q); }
};

template <>
struct RingTraits<Real> {
    static Real from_rational(const Rational& q) { return Real(q); }
    static bool is_zero(const Real& x) { return x.is_zero(); }
    static Real scale(const Real& x, const Rational& q) { return x * Real(q); }
};

template <>
struct RingTraits<Approx> {
    static Approx from_rational(const Rational& q) {
        Real v(q);
        Real b = q.get_den() == 1 && abs(v) < Real::exp2(working_precision()) ? Real() : rounding_unit(v);
        return Approx(std::move(v), std::move(b));
    }
    static bool is_zero(const Approx& x) { return x.is_zero(); }
    static Approx scale(const Approx& x, const Rational& q) { return x.scaled(q); }
};

template <class R>
R ring_zero() {
    return RingTraits<R>::from_rational(Rational(0));
}

template <class R>
R ring_one() {
    return RingTraits<R>::from_rational(Rational(1));
}

template <class R>
R ring_from(const Rational& q) {
    return RingTraits<R>::from_rational(q);
}

template <class R>
R ring_scale(const R& x, const Rational& q) {
    return RingTraits<R>::scale(x, q);
}

template <class R>
bool ring_is_zero(const R& x) {
    return RingTraits<R>::is_zero(x);
}

}  // namespace mzvreg
