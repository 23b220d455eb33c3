#include "mzvreg/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <numeric>

#include "mzvreg/error.hpp"

namespace mzvreg {

SetPartition SetPartition::from_blocks(std::vector<Block> blocks) {
    SetPartition out;
    for (auto& b : blocks) {
        if (b.empty())
            throw DomainError("set partition has an empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1)
                throw DomainError("set partition elements must be positive integers");
            out.ground_.push_back(e);
        }
    }
    std::sort(out.ground_.begin(), out.ground_.end());
    if (std::adjacent_find(out.ground_.begin(), out.ground_.end()) != out.ground_.end())
        throw DomainError("set partition blocks overlap");
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    out.blocks_ = std::move(blocks);
    return out;
}

SetPartition SetPartition::parse(const std::string& text) {
    if (text == "{}" || text.empty())
        return {};
    std::vector<Block> blocks;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        if (bar == std::string::npos)
            bar = text.size();
        const std::string part = text.substr(start, bar - start);
        Block block;
        if (part.find(',') != std::string::npos) {
            std::size_t s = 0;
            while (s <= part.size()) {
                std::size_t c = part.find(',', s);
                if (c == std::string::npos)
                    c = part.size();
                const std::string tok = part.substr(s, c - s);
                if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                    throw ParseError("malformed partition '" + text + "'");
                block.push_back(std::stoi(tok));
                s = c + 1;
            }
        } else {
            for (char ch : part) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw ParseError("malformed partition '" + text + "'");
                block.push_back(ch - '0');
            }
        }
        if (block.empty())
            throw ParseError("malformed partition '" + text + "'");
        blocks.push_back(std::move(block));
        start = bar + 1;
    }
    try {
        return from_blocks(std::move(blocks));
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

std::string SetPartition::to_text() const {
    if (blocks_.empty())
        return "{}";
    const bool compact = ground_.back() <= 9;
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            out += '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j && !compact)
                out += ',';
            out += std::to_string(blocks_[i][j]);
        }
    }
    return out;
}

std::vector<int> range_set(int r) {
    std::vector<int> out(static_cast<std::size_t>(std::max(r, 0)));
    std::iota(out.begin(), out.end(), 1);
    return out;
}

std::vector<int> normalize_set(std::span<const int> elems) {
    std::vector<int> out(elems.begin(), elems.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw DomainError("set has repeated elements");
    if (!out.empty() && out.front() < 1)
        throw DomainError("set elements must be positive integers");
    return out;
}

void for_each_set_partition(std::span<const int> A, const std::function<void(const SetPartition&)>& visit,
                            EnumLimits limits) {
    const std::vector<int> ground = normalize_set(A);
    const std::size_t n = ground.size();
    if (n > limits.max_ground)
        throw CapacityError("set of size " + std::to_string(n) + " exceeds the partition enumeration bound " +
                            std::to_string(limits.max_ground));
    if (n == 0) {
        visit(SetPartition{});
        return;
    }
    // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0);
    while (true) {
        const int blocks = prefix_max[n - 1] + 1;
        std::vector<SetPartition::Block> bl(static_cast<std::size_t>(blocks));
        for (std::size_t i = 0; i < n; ++i)
            bl[static_cast<std::size_t>(rgs[i])].push_back(ground[i]);
        visit(SetPartition::from_blocks(std::move(bl)));

        std::size_t i = n - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1])
            --i;
        if (i == 0)
            return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<SetPartition> enum_set_partitions(std::span<const int> A, EnumLimits limits) {
    std::vector<SetPartition> out;
    for_each_set_partition(A, [&](const SetPartition& p) { out.push_back(p); }, limits);
    return out;
}

std::vector<SetPartition> enum_restricted_partitions(std::span<const int> A, std::span<const int> B,
                                                     EnumLimits limits) {
    const std::vector<int> b = normalize_set(B);
    std::vector<SetPartition> out;
    for_each_set_partition(
        A,
        [&](const SetPartition& p) {
            const bool ok = std::none_of(p.blocks().begin(), p.blocks().end(), [&](const SetPartition::Block& blk) {
                return std::includes(b.begin(), b.end(), blk.begin(), blk.end());
            });
            if (ok)
                out.push_back(p);
        },
        limits);
    return out;
}

Integer coeff_c_star(const SetPartition& pi) {
    Integer out = 1;
    for (const auto& b : pi.blocks())
        out *= factorial(static_cast<unsigned>(b.size() - 1));
    return out;
}

Integer coeff_c(const SetPartition& pi) {
    Integer out = coeff_c_star(pi);
    if ((pi.size() - pi.block_count()) % 2 == 1)
        out = -out;
    return out;
}

SetPartition relabel_partition(std::span<const int> A, const SetPartition& xi) {
    const std::vector<int> a = normalize_set(A);
    if (xi.ground() != a)
        throw DomainError("relabel_partition: partition does not cover the given set");
    std::vector<SetPartition::Block> blocks;
    blocks.reserve(xi.block_count());
    for (const auto& b : xi.blocks()) {
        SetPartition::Block nb;
        for (int e : b)
            nb.push_back(static_cast<int>(std::lower_bound(a.begin(), a.end(), e) - a.begin()) + 1);
        blocks.push_back(std::move(nb));
    }
    return SetPartition::from_blocks(std::move(blocks));
}

SetPartition disjoint_union(const SetPartition& a, const SetPartition& b) {
    std::vector<SetPartition::Block> blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return SetPartition::from_blocks(std::move(blocks));
}

std::vector<DecompositionTriple> prop1_decomposition(int r, std::span<const int> B, EnumLimits limits) {
    if (r < 1)
        throw DomainError("prop1_decomposition needs r >= 1");
    const std::vector<int> b = normalize_set(B);
    if (!b.empty() && b.back() > r)
        throw DomainError("B is not a subset of {1.." + std::to_string(r) + "}");
    if (b.size() == static_cast<std::size_t>(r))
        throw DomainError("the decomposition needs B to be a proper subset of {1.." + std::to_string(r) + "}");
    if (static_cast<std::size_t>(r) > limits.max_ground)
        throw CapacityError("r = " + std::to_string(r) + " exceeds the partition enumeration bound");

    const std::vector<int> all = range_set(r);
    std::vector<DecompositionTriple> out;
    const std::size_t subsets = std::size_t{1} << b.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (mask >> i & 1U)
                subset.push_back(b[i]);
        std::vector<int> rest;
        std::set_difference(all.begin(), all.end(), subset.begin(), subset.end(), std::back_inserter(rest));
        const auto inner = enum_set_partitions(subset, limits);
        const auto outer = enum_restricted_partitions(rest, b, limits);
        for (const auto& xi : inner)
            for (const auto& delta : outer)
                out.push_back({subset, xi, delta});
    }
    return out;
}

int PartitionShape::block_count() const { return std::accumulate(counts.begin(), counts.end(), 0); }

PartitionShape shape_of(const SetPartition& pi) {
    PartitionShape s;
    s.r = static_cast<int>(pi.size());
    s.counts.assign(pi.size(), 0);
    for (const auto& b : pi.blocks())
        ++s.counts[b.size() - 1];
    return s;
}

namespace {
void shapes_rec(int a, int max_a, int remaining_blocks, int remaining_size, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if (a > max_a) {
        if (remaining_blocks == 0 && remaining_size == 0)
            out.push_back(cur);
        return;
    }
    for (int i = 0; i <= remaining_blocks && i * a <= remaining_size; ++i) {
        cur[static_cast<std::size_t>(a - 1)] = i;
        shapes_rec(a + 1, max_a, remaining_blocks - i, remaining_size - i * a, cur, out);
    }
    cur[static_cast<std::size_t>(a - 1)] = 0;
}
}  // namespace

std::vector<std::vector<int>> partition_shapes(int r, int k) {
    if (k < 1 || k > r)
        throw DomainError("partition_shapes needs 1 <= k <= r");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r - k + 1), 0);
    shapes_rec(1, r - k + 1, k, r, cur, out);
    return out;
}

}  // namespace mzvreg
