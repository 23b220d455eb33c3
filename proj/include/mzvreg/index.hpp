#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mzvreg {

/// A finite sequence (k_1, ..., k_r) of positive integers. The empty index is
/// the algebra unit. The summation convention is 0 < m_1 < ... < m_r with k_r on
/// the largest variable, so the index is admissible iff k_r >= 2.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<int> parts);
    explicit Index(std::vector<int> parts);

    /// "k1,k2,...,kr"; the empty string gives the empty index.
    static Index parse(const std::string& text);

    /// (1, ..., 1) of the given depth.
    static Index ones(int depth);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    bool admissible() const noexcept { return !parts_.empty() && parts_.back() >= 2; }
    int trailing_ones() const noexcept;
    int operator[](std::size_t i) const { return parts_[i]; }

    Index with_appended(int k) const;
    Index prefix(int len) const;
    Index suffix_from(int start) const;

    std::string to_string() const;

    friend bool operator==(const Index&, const Index&) = default;
    /// Ordered by weight, then depth, then lexicographically.
    friend std::strong_ordering operator<=>(const Index& a, const Index& b);

private:
    std::vector<int> parts_;
};

/// A word over {x, y}. Words coming from indices end in y; a word is
/// convergent iff it starts with x and ends with y.
class Word {
public:
    Word() = default;
    /// Letters 'x'/'y' (upper case accepted).
    explicit Word(const std::string& letters);

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    bool convergent() const noexcept;
    /// Number of leading y letters.
    int leading_ys() const noexcept;

    Word operator+(const Word& o) const { return Word(letters_ + o.letters_, 0); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    Word(std::string letters, int) : letters_(std::move(letters)) {}
    std::string letters_;
};

/// W(K) = x^{k_r-1} y x^{k_{r-1}-1} y ... x^{k_1-1} y.
Word index_to_word(const Index& k);
/// Inverse of index_to_word; the word must be empty or end in y.
Index word_to_index(const Word& w);

}  // namespace mzvreg
