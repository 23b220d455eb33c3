#include "mzvreg/index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mzvreg/error.hpp"

namespace mzvreg {

namespace {
void check_parts(const std::vector<int>& parts) {
    for (int k : parts)
        if (k < 1)
            throw DomainError("index parts must be positive integers");
}
}  // namespace

Index::Index(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

Index Index::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.empty())
        return Index();
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos)
            comma = text.size();
        std::string tok = text.substr(start, comma - start);
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty() || tok.size() > 6 ||
            !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("malformed index '" + text + "' (expected k1,k2,...,kr)");
        const int k = std::stoi(tok);
        if (k < 1)
            throw ParseError("index parts must be positive in '" + text + "'");
        parts.push_back(k);
        start = comma + 1;
    }
    return Index(std::move(parts));
}

Index Index::ones(int depth) { return Index(std::vector<int>(static_cast<std::size_t>(std::max(depth, 0)), 1)); }

int Index::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Index::trailing_ones() const noexcept {
    int n = 0;
    for (auto it = parts_.rbegin(); it != parts_.rend() && *it == 1; ++it)
        ++n;
    return n;
}

Index Index::with_appended(int k) const {
    Index out(*this);
    if (k < 1)
        throw DomainError("index parts must be positive integers");
    out.parts_.push_back(k);
    return out;
}

Index Index::prefix(int len) const {
    Index out;
    out.parts_.assign(parts_.begin(), parts_.begin() + len);
    return out;
}

Index Index::suffix_from(int start) const {
    Index out;
    out.parts_.assign(parts_.begin() + start, parts_.end());
    return out;
}

std::string Index::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    if (auto c = a.depth() <=> b.depth(); c != 0)
        return c;
    return a.parts_ <=> b.parts_;
}

Word::Word(const std::string& letters) {
    letters_.reserve(letters.size());
    for (char c : letters) {
        const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (l != 'x' && l != 'y')
            throw ParseError("word letters must be x or y, got '" + letters + "'");
        letters_.push_back(l);
    }
}

bool Word::convergent() const noexcept {
    return !letters_.empty() && letters_.front() == 'x' && letters_.back() == 'y';
}

int Word::leading_ys() const noexcept {
    int n = 0;
    while (n < static_cast<int>(letters_.size()) && letters_[static_cast<std::size_t>(n)] == 'y')
        ++n;
    return n;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0)
        return c;
    return a.letters_.compare(b.letters_) <=> 0;
}

Word index_to_word(const Index& k) {
    std::string letters;
    for (auto it = k.parts().rbegin(); it != k.parts().rend(); ++it) {
        letters.append(static_cast<std::size_t>(*it - 1), 'x');
        letters.push_back('y');
    }
    return Word(letters);
}

Index word_to_index(const Word& w) {
    if (!w.empty() && w.letters().back() != 'y')
        throw DomainError("word '" + w.letters() + "' does not end in y");
    std::vector<int> parts;
    int xs = 0;
    for (char c : w.letters()) {
        if (c == 'x') {
            ++xs;
        } else {
            parts.push_back(xs + 1);
            xs = 0;
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Index(std::move(parts));
}

}  // namespace mzvreg
