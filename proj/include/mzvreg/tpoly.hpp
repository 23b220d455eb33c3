#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mzvreg/ring.hpp"

namespace mzvreg {

/// Polynomial in the indeterminate T with coefficients in the ring V.
/// Trailing zero coefficients are pruned, so degree() is exact; the zero
/// polynomial has degree -1.
template <class V>
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(V constant) {
        coeffs_.push_back(std::move(constant));
        normalize();
    }
    explicit TPoly(std::vector<V> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    /// T^n.
    static TPoly monomial(int n, V c = ring_one<V>()) {
        std::vector<V> cs(static_cast<std::size_t>(n + 1), ring_zero<V>());
        cs.back() = std::move(c);
        return TPoly(std::move(cs));
    }
    static TPoly T() { return monomial(1); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<V>& coefficients() const noexcept { return coeffs_; }
    V coefficient(int n) const {
        return n >= 0 && n < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(n)] : ring_zero<V>();
    }

    TPoly& operator+=(const TPoly& o) {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), ring_zero<V>());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        normalize();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        if (coeffs_.size() < o.coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), ring_zero<V>());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        normalize();
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<V> out(a.coeffs_.size() + b.coeffs_.size() - 1, ring_zero<V>());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (ring_is_zero(a.coeffs_[i]))
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return TPoly(std::move(out));
    }
    TPoly scaled(const Rational& q) const {
        std::vector<V> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(ring_scale(c, q));
        return TPoly(std::move(out));
    }
    /// Multiplies every coefficient by c.
    TPoly times(const V& c) const {
        std::vector<V> out;
        out.reserve(coeffs_.size());
        for (const auto& x : coeffs_)
            out.push_back(x * c);
        return TPoly(std::move(out));
    }

    /// Applies f to every coefficient.
    template <class W>
    TPoly<W> map(const std::function<W(const V&)>& f) const {
        std::vector<W> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_)
            out.push_back(f(c));
        return TPoly<W>(std::move(out));
    }

    friend bool operator==(const TPoly&, const TPoly&) = default;

private:
    void normalize() {
        while (!coeffs_.empty() && ring_is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }
    std::vector<V> coeffs_;
};

template <class V>
struct RingTraits<TPoly<V>> {
    static TPoly<V> from_rational(const Rational& q) { return TPoly<V>(ring_from<V>(q)); }
    static bool is_zero(const TPoly<V>& x) { return x.is_zero(); }
    static TPoly<V> scale(const TPoly<V>& x, const Rational& q) { return x.scaled(q); }
};

/// Renders sum c_n T^n from the highest power down. `coeff_terms` splits a
/// coefficient into signed printable terms (negative flag, magnitude).
template <class V>
std::string format_tpoly(const TPoly<V>& p,
                         const std::function<std::vector<std::pair<bool, std::string>>(const V&)>& coeff_terms) {
    std::vector<std::pair<bool, std::string>> parts;
    for (int n = p.degree(); n >= 0; --n) {
        const V& c = p.coefficients()[static_cast<std::size_t>(n)];
        if (ring_is_zero(c))
            continue;
        auto terms = coeff_terms(c);
        const std::string power = n == 0 ? "" : (n == 1 ? "T" : "T^" + std::to_string(n));
        if (n == 0) {
            parts.insert(parts.end(), terms.begin(), terms.end());
        } else if (terms.size() == 1) {
            const auto& [neg, mag] = terms.front();
            parts.emplace_back(neg, mag == "1" ? power : mag + "·" + power);
        } else {
            std::string inner;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i == 0)
                    inner += terms[i].first ? "−" : "";
                else
                    inner += terms[i].first ? " − " : " + ";
                inner += terms[i].second;
            }
            parts.emplace_back(false, "(" + inner + ")·" + power);
        }
    }
    if (parts.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0)
            out += parts[i].first ? "−" : "";
        else
            out += parts[i].first ? " − " : " + ";
        out += parts[i].second;
    }
    return out;
}

}  // namespace mzvreg
