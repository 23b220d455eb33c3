#include "mzvreg/products.hpp"


namespace mzvreg {

namespace {

IndexCombination append_part(const IndexCombination& c, int part) {
    IndexCombination out;
    for (const auto& [k, q] : c.terms())
        out.add(k.with_appended(part), q);
    return out;
}

WordCombination append_letter(const WordCombination& c, char letter) {
    WordCombination out;
    const Word suffix(std::string(1, letter));
    for (const auto& [w, q] : c.terms())
        out.add(w + suffix, q);
    return out;
}

}  // namespace

IndexCombination harmonic_product(const Index& u, const Index& v) {
    const auto du = static_cast<std::size_t>(u.depth());
    const auto dv = static_cast<std::size_t>(v.depth());
    // table[i][j] = (u_1..u_i) * (v_1..v_j)
    std::vector<std::vector<IndexCombination>> table(du + 1, std::vector<IndexCombination>(dv + 1));
    for (std::size_t i = 0; i <= du; ++i) {
        for (std::size_t j = 0; j <= dv; ++j) {
            if (i == 0 || j == 0) {
                table[i][j] = IndexCombination(i == 0 ? v.prefix(static_cast<int>(j)) : u.prefix(static_cast<int>(i)));
                continue;
            }
            const int a = u[i - 1];
            const int b = v[j - 1];
            IndexCombination cur = append_part(table[i - 1][j], a);
            cur += append_part(table[i][j - 1], b);
            cur += append_part(table[i - 1][j - 1], a + b);
            table[i][j] = std::move(cur);
        }
    }
    return table[du][dv];
}

IndexCombination harmonic_product(const IndexCombination& u, const IndexCombination& v) {
    IndexCombination out;
    for (const auto& [a, p] : u.terms())
        for (const auto& [b, q] : v.terms())
            out.add(harmonic_product(a, b), Rational(p * q));
    return out;
}

WordCombination shuffle_product(const Word& u, const Word& v) {
    const std::size_t lu = u.size();
    const std::size_t lv = v.size();
    std::vector<std::vector<WordCombination>> table(lu + 1, std::vector<WordCombination>(lv + 1));
    for (std::size_t i = 0; i <= lu; ++i) {
        for (std::size_t j = 0; j <= lv; ++j) {
            if (i == 0 || j == 0) {
                table[i][j] = WordCombination(Word(i == 0 ? v.letters().substr(0, j) : u.letters().substr(0, i)));
                continue;
            }
            WordCombination cur = append_letter(table[i - 1][j], u.letters()[i - 1]);
            cur += append_letter(table[i][j - 1], v.letters()[j - 1]);
            table[i][j] = std::move(cur);
        }
    }
    return table[lu][lv];
}

WordCombination shuffle_product(const WordCombination& u, const WordCombination& v) {
    WordCombination out;
    for (const auto& [a, p] : u.terms())
        for (const auto& [b, q] : v.terms())
            out.add(shuffle_product(a, b), Rational(p * q));
    return out;
}

std::vector<Index> contractions(const Index& k) {
    if (k.empty())
        return {Index()};
    const int r = k.depth();
    const unsigned choices = 1U << static_cast<unsigned>(r - 1);
    std::vector<Index> out;
    out.reserve(choices);
    for (unsigned mask = 0; mask < choices; ++mask) {
        std::vector<int> parts{k[0]};
        for (int j = 1; j < r; ++j) {
            if (mask >> static_cast<unsigned>(j - 1) & 1U)
                parts.back() += k[static_cast<std::size_t>(j)];
            else
                parts.push_back(k[static_cast<std::size_t>(j)]);
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace mzvreg
