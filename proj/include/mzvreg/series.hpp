#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mzvreg/error.hpp"
#include "mzvreg/ring.hpp"

namespace mzvreg {

/// Power series in t over the ring C, exact modulo t^(order+1).
template <class C>
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(check(order) + 1), ring_zero<C>()) {}
    TruncSeries(int order, std::vector<C> coeffs) : TruncSeries(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
            c_[i] = std::move(coeffs[i]);
    }

    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.c_[0] = ring_one<C>();
        return s;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    C& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<C>& coefficients() const noexcept { return c_; }

    TruncSeries& operator+=(const TruncSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = c_[i] + o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = c_[i] - o.c_[i];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.same_order(b);
        TruncSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (ring_is_zero(a[i]))
                continue;
            for (int j = 0; i + j <= a.order(); ++j)
                out[i + j] = out[i + j] + a[i] * b[j];
        }
        return out;
    }
    TruncSeries scaled(const Rational& q) const {
        TruncSeries out(order());
        for (int i = 0; i <= order(); ++i)
            out[i] = ring_scale<C>(c_[static_cast<std::size_t>(i)], q);
        return out;
    }

    /// f(-t).
    TruncSeries reflected() const {
        TruncSeries out(*this);
        for (int i = 1; i <= order(); i += 2)
            out[i] = ring_scale<C>(out[i], Rational(-1));
        return out;
    }

    /// Multiplicative inverse; the constant term must be 1.
    TruncSeries inverse() const {
        require_unit_constant("inverse");
        TruncSeries out = one(order());
        for (int n = 1; n <= order(); ++n) {
            C acc = ring_zero<C>();
            for (int k = 1; k <= n; ++k)
                acc = acc + c_[static_cast<std::size_t>(k)] * out[n - k];
            out[n] = ring_scale<C>(acc, Rational(-1));
        }
        return out;
    }

    /// exp of a series with zero constant term: n e_n = sum_k k s_k e_{n-k}.
    TruncSeries exp() const {
        if (!ring_is_zero(c_[0]))
            throw DomainError("series exp needs a zero constant term");
        TruncSeries out = one(order());
        for (int n = 1; n <= order(); ++n) {
            C acc = ring_zero<C>();
            for (int k = 1; k <= n; ++k)
                acc = acc + ring_scale<C>(c_[static_cast<std::size_t>(k)] * out[n - k], Rational(k));
            out[n] = ring_scale<C>(acc, Rational(1, n));
        }
        return out;
    }

    /// log of a series with constant term 1: n l_n = n s_n - sum_{k<n} k l_k s_{n-k}.
    TruncSeries log() const {
        require_unit_constant("log");
        TruncSeries out(order());
        for (int n = 1; n <= order(); ++n) {
            C acc = ring_scale<C>(c_[static_cast<std::size_t>(n)], Rational(n));
            for (int k = 1; k < n; ++k)
                acc = acc - ring_scale<C>(out[k] * c_[static_cast<std::size_t>(n - k)], Rational(k));
            out[n] = ring_scale<C>(acc, Rational(1, n));
        }
        return out;
    }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    static int check(int order) {
        if (order < 0)
            throw DomainError("series order must be non-negative");
        return order;
    }
    void same_order(const TruncSeries& o) const {
        if (o.order() != order())
            throw DomainError("series orders differ: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
    }
    void require_unit_constant(const char* what) const {
        if (!ring_is_zero(C(c_[0] - ring_one<C>())))
            throw DomainError(std::string("series ") + what + " needs constant term 1");
    }
    std::vector<C> c_;
};

}  // namespace mzvreg
