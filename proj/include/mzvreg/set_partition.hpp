#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mzvreg/rational.hpp"

namespace mzvreg {

/// A partition of a finite set of positive integers. Blocks are kept sorted
/// ascending and ordered by their minimum element, so equal partitions compare
/// equal member-wise. The default value is the empty partition of the empty set.
class SetPartition {
public:
    using Block = std::vector<int>;

    SetPartition() = default;

    /// Builds the partition whose ground set is the union of `blocks`.
    /// Throws DomainError on empty, overlapping or non-positive blocks.
    static SetPartition from_blocks(std::vector<Block> blocks);

    /// Parses the compact text form: "13|2", "1,3|2" or "{}" for the empty partition.
    static SetPartition parse(const std::string& text);

    const std::vector<int>& ground() const noexcept { return ground_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return ground_.size(); }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    bool empty() const noexcept { return ground_.empty(); }

    /// "13|2" when every element is a single digit, "1,3|2" otherwise.
    std::string to_text() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.blocks_ <=> b.blocks_; }

private:
    std::vector<int> ground_;
    std::vector<Block> blocks_;
};

struct EnumLimits {
    std::size_t max_ground = 14;
};

/// {1, ..., r}.
std::vector<int> range_set(int r);

/// Sorts and validates a set given as a list; duplicates or non-positive
/// entries raise DomainError.
std::vector<int> normalize_set(std::span<const int> elems);

/// Visits every partition of A once, in restricted-growth-string order.
void for_each_set_partition(std::span<const int> A, const std::function<void(const SetPartition&)>& visit,
                            EnumLimits limits = {});

std::vector<SetPartition> enum_set_partitions(std::span<const int> A, EnumLimits limits = {});

/// Partitions of A none of whose blocks is a subset of B.
std::vector<SetPartition> enum_restricted_partitions(std::span<const int> A, std::span<const int> B,
                                                     EnumLimits limits = {});

/// prod (|P_i| - 1)!; equals 1 for the empty partition.
Integer coeff_c_star(const SetPartition& pi);
/// (-1)^(r-g) prod (|P_i| - 1)!.
Integer coeff_c(const SetPartition& pi);

/// Applies the order-preserving bijection A -> {1..|A|} to every block of xi.
SetPartition relabel_partition(std::span<const int> A, const SetPartition& xi);

/// Union of two partitions with disjoint ground sets.
SetPartition disjoint_union(const SetPartition& a, const SetPartition& b);

struct DecompositionTriple {
    std::vector<int> subset;  // A, a subset of B
    SetPartition inner;       // Xi, a partition of A
    SetPartition outer;       // Delta, a partition of {1..r} \ A with no block inside B
};

/// All triples (A, Xi, Delta) with A a subset of B. Requires B to be a proper
/// subset of {1..r}.
std::vector<DecompositionTriple> prop1_decomposition(int r, std::span<const int> B, EnumLimits limits = {});

/// Block-size profile of a partition: counts[a-1] blocks of cardinality a.
struct PartitionShape {
    int r = 0;
    std::vector<int> counts;

    int block_count() const;
    friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
    friend auto operator<=>(const PartitionShape&, const PartitionShape&) = default;
};

PartitionShape shape_of(const SetPartition& pi);

/// Every shape of {1..r} with k blocks, as vectors (i_1, ..., i_{r-k+1}).
std::vector<std::vector<int>> partition_shapes(int r, int k);

}  // namespace mzvreg
