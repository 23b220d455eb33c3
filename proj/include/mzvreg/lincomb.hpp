#pragma once

#include <map>
#include <utility>

#include "mzvreg/index.hpp"
#include "mzvreg/rational.hpp"

namespace mzvreg {

/// Finitely supported map Key -> Q. Zero coefficients are never stored.
template <class Key>
class LinearCombination {
public:
    using Terms = std::map<Key, Rational>;

    LinearCombination() = default;
    explicit LinearCombination(const Key& k, const Rational& c = 1) { add(k, c); }

    void add(const Key& k, const Rational& c) {
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    void add(const LinearCombination& o, const Rational& scale = 1) {
        for (const auto& [k, c] : o.terms_)
            add(k, Rational(c * scale));
    }

    Rational coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LinearCombination& operator+=(const LinearCombination& o) {
        add(o);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        add(o, Rational(-1));
        return *this;
    }
    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Rational& q) {
        if (sgn(q) == 0)
            return {};
        for (auto& [k, c] : a.terms_)
            c *= q;
        return a;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    Terms terms_;
};

using IndexCombination = LinearCombination<Index>;
using WordCombination = LinearCombination<Word>;

}  // namespace mzvreg
