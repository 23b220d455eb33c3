#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzvreg/index.hpp"
#include "mzvreg/rational.hpp"
#include "mzvreg/ring.hpp"

namespace mzvreg {

/// Commutative polynomial over Q in symbols of type Var. A monomial is the
/// sorted multiset of its symbols; the empty monomial is the constant 1.
template <class Var>
class PolyExpr {
public:
    using Monomial = std::vector<Var>;
    using Terms = std::map<Monomial, Rational>;

    PolyExpr() = default;
    explicit PolyExpr(const Rational& c) { add(Monomial{}, c); }

    static PolyExpr symbol(const Var& v) {
        PolyExpr out;
        out.add(Monomial{v}, 1);
        return out;
    }

    void add(const Monomial& m, const Rational& c) {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    PolyExpr& operator+=(const PolyExpr& o) {
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    PolyExpr& operator-=(const PolyExpr& o) {
        for (const auto& [m, c] : o.terms_)
            add(m, Rational(-c));
        return *this;
    }
    PolyExpr operator-() const { return PolyExpr() -= *this; }
    friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
    friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
    friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
        PolyExpr out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                out.add(m, Rational(ca * cb));
            }
        }
        return out;
    }
    PolyExpr scaled(const Rational& q) const {
        PolyExpr out;
        if (sgn(q) == 0)
            return out;
        out.terms_ = terms_;
        for (auto& [m, c] : out.terms_)
            c *= q;
        return out;
    }

    friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

    /// Substitutes every symbol by a value of ring R.
    template <class R>
    R evaluate(const std::function<R(const Var&)>& value_of) const {
        R acc = ring_zero<R>();
        std::map<Var, R> memo;
        for (const auto& [m, c] : terms_) {
            R term = ring_one<R>();
            for (const Var& v : m) {
                auto it = memo.find(v);
                if (it == memo.end())
                    it = memo.emplace(v, value_of(v)).first;
                term = term * it->second;
            }
            acc = acc + ring_scale(term, c);
        }
        return acc;
    }

    /// Signed terms rendered by `name`; factors joined by `sep`. Each entry is
    /// (negative, magnitude text).
    std::vector<std::pair<bool, std::string>> signed_terms(const std::function<std::string(const Var&)>& name,
                                                           const std::string& sep = "") const {
        std::vector<std::pair<bool, std::string>> out;
        for (const auto& [m, c] : terms_) {
            const bool negative = sgn(c) < 0;
            const Rational mag = abs(c);
            std::string text;
            if (m.empty()) {
                text = mag.get_str();
            } else {
                if (mag != 1)
                    text = mag.get_den() == 1 ? mag.get_str() + sep : "(" + mag.get_str() + ")" + sep;
                for (std::size_t i = 0; i < m.size();) {
                    std::size_t j = i;
                    while (j < m.size() && m[j] == m[i])
                        ++j;
                    if (i)
                        text += sep;
                    text += name(m[i]);
                    if (j - i > 1)
                        text += "^" + std::to_string(j - i);
                    i = j;
                }
            }
            out.emplace_back(negative, std::move(text));
        }
        return out;
    }

    std::string to_string(const std::function<std::string(const Var&)>& name, const std::string& sep = "") const {
        return join_signed(signed_terms(name, sep));
    }

    static std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
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

private:
    Terms terms_;
};

template <class Var>
struct RingTraits<PolyExpr<Var>> {
    static PolyExpr<Var> from_rational(const Rational& q) { return PolyExpr<Var>(q); }
    static bool is_zero(const PolyExpr<Var>& x) { return x.is_zero(); }
    static PolyExpr<Var> scale(const PolyExpr<Var>& x, const Rational& q) { return x.scaled(q); }
};

/// Q-polynomials in formal MZV symbols zeta(K), K admissible. Symbols are kept
/// unreduced: no relation among MZVs is ever applied.
using ZetaExpr = PolyExpr<Index>;

/// zeta(K) as a symbol; the empty index gives 1. Non-admissible K raises DomainError.
ZetaExpr zeta_symbol(const Index& k);

/// "ζ(2)ζ(3) + 2ζ(1,2)".
std::string to_string(const ZetaExpr& e);

}  // namespace mzvreg
