#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

#include "mzvreg/rational.hpp"

namespace mzvreg {

/// Working precision (bits) used for newly constructed reals on this thread.
long working_precision() noexcept;

/// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(long bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    long previous_;
};

/// Multiprecision binary float backed by MPFR, round-to-nearest.
/// Binary operations produce a result at the larger operand precision.
class Real {
public:
    Real();
    Real(long v);
    explicit Real(const Integer& z);
    explicit Real(const Rational& q);
    explicit Real(double d);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    /// Parses a decimal string at the working precision.
    static Real from_string(const std::string& text);
    static Real pi();
    /// 2^e at the working precision.
    static Real exp2(long e);

    long precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_ptr get() noexcept { return v_; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant digits; digits == 0 picks
    /// enough digits to round-trip at this precision.
    std::string to_string(int digits = 0) const;

private:
    explicit Real(long prec, int);
    mpfr_t v_;
};

Real abs(const Real& x);
Real pow(const Real& x, long e);
Real log(const Real& x);
Real max(const Real& a, const Real& b);

/// One unit of relative rounding at x's precision: |x|·2^(1-prec).
Real rounding_unit(const Real& x);

/// A real value together with an absolute error bound. Arithmetic propagates
/// bounds and adds one rounding unit per operation.
struct Approx {
    Real value;
    Real bound;

    Approx() = default;
    Approx(Real v, Real b = Real()) : value(std::move(v)), bound(std::move(b)) {}

    Approx& operator+=(const Approx& o);
    Approx& operator-=(const Approx& o);
    Approx& operator*=(const Approx& o);
    Approx operator-() const { return Approx(-value, bound); }

    friend Approx operator+(Approx a, const Approx& b) { return a += b; }
    friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
    friend Approx operator*(Approx a, const Approx& b) { return a *= b; }

    Approx scaled(const Rational& q) const;
    bool is_zero() const { return value.is_zero() && bound.is_zero(); }
};

}  // namespace mzvreg
