#include "mzvreg/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "mzvreg/error.hpp"

namespace mzvreg {

namespace {
thread_local long t_precision = 128;
}

long working_precision() noexcept { return t_precision; }

PrecisionScope::PrecisionScope(long bits) : previous_(t_precision) {
    if (bits < MPFR_PREC_MIN || bits > 1L << 20)
        throw DomainError("precision " + std::to_string(bits) + " bits out of range");
    t_precision = bits;
}

PrecisionScope::~PrecisionScope() { t_precision = previous_; }

Real::Real(long prec, int) { mpfr_init2(v_, prec); }

Real::Real() : Real(t_precision, 0) { mpfr_set_zero(v_, 1); }

Real::Real(long v) : Real(t_precision, 0) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(const Integer& z) : Real(t_precision, 0) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

Real::Real(const Rational& q) : Real(t_precision, 0) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

Real::Real(double d) : Real(t_precision, 0) { mpfr_set_d(v_, d, MPFR_RNDN); }

Real::Real(const Real& other) : Real(other.precision(), 0) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(other.precision(), 0) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_string(const std::string& text) {
    Real out;
    if (text.empty() || mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("malformed real '" + text + "'");
    return out;
}

Real Real::pi() {
    Real out;
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

Real Real::exp2(long e) {
    Real out(1L);
    mpfr_mul_2si(out.v_, out.v_, e, MPFR_RNDN);
    return out;
}

namespace {
// Raises the precision of `a` to at least that of `b` without changing its value.
void widen(Real& a, const Real& b) {
    if (a.precision() < b.precision())
        mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& o) {
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_))
        return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string Real::to_string(int digits) const {
    if (mpfr_nan_p(v_))
        return "nan";
    if (mpfr_inf_p(v_))
        return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (digits <= 0)
        digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 2;
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", digits - 1, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

Real abs(const Real& x) {
    Real out(x);
    mpfr_abs(out.get(), out.get(), MPFR_RNDN);
    return out;
}

Real pow(const Real& x, long e) {
    Real out(x);
    mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
    return out;
}

Real log(const Real& x) {
    Real out(x);
    mpfr_log(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real rounding_unit(const Real& x) {
    Real out = abs(x);
    mpfr_mul_2si(out.get(), out.get(), 1 - x.precision(), MPFR_RNDU);
    return out;
}

Approx& Approx::operator+=(const Approx& o) {
    value += o.value;
    bound += o.bound;
    bound += rounding_unit(value);
    return *this;
}

Approx& Approx::operator-=(const Approx& o) {
    value -= o.value;
    bound += o.bound;
    bound += rounding_unit(value);
    return *this;
}

Approx& Approx::operator*=(const Approx& o) {
    Real b = abs(value) * o.bound + abs(o.value) * bound + bound * o.bound;
    value *= o.value;
    bound = b + rounding_unit(value);
    return *this;
}

Approx Approx::scaled(const Rational& q) const {
    const Real rq(q);
    Approx out(value * rq, bound * abs(rq));
    out.bound += rounding_unit(out.value) + rounding_unit(rq) * abs(value);
    return out;
}

}  // namespace mzvreg
