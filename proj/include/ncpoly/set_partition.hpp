#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Integer partition: weakly decreasing positive parts.
struct IntegerPartition {
    std::vector<int> parts;

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> p);

    int n() const;
    int length() const { return static_cast<int>(parts.size()); }

    /// Exponent map: part value -> multiplicity.
    std::map<int, int, std::greater<int>> exponents() const;

    bool operator==(const IntegerPartition& o) const { return parts == o.parts; }
    bool operator<(const IntegerPartition& o) const { return parts < o.parts; }
    std::string to_string() const;  // e.g. "2^2 1^3"
};

/// Set partition of [n] = {1,...,n} in canonical form: each block sorted
/// ascending, blocks ordered by their minimum.
struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    SetPartition() = default;
    SetPartition(int ground, std::vector<std::vector<int>> bs);

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    /// Index of the block containing i (1-based element).
    int block_index_of(int i) const;

    bool operator==(const SetPartition& o) const { return n == o.n && blocks == o.blocks; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const;
    std::string to_string() const;  // e.g. "13|2|46|5|7"

    static SetPartition discrete(int n);
    static SetPartition indiscrete(int n);
};

/// Set partition of the index set of `values` with i, j in one block iff
/// values[i] == values[j].
template <typename T>
SetPartition set_partition_of_tuple(const std::vector<T>& values) {
    if (values.empty()) throw std::invalid_argument("set_partition_of_tuple: empty tuple");
    std::map<T, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(values.size()); ++i)
        groups[values[i]].push_back(i + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& [v, idx] : groups) blocks.push_back(idx);
    return SetPartition(static_cast<int>(values.size()), std::move(blocks));
}

/// Multiset of block sizes, sorted descending.
IntegerPartition shape(const SetPartition& p);

/// True iff every block of p is contained in a block of q.
bool refinement_leq(const SetPartition& p, const SetPartition& q);

/// Merge parts of lambda according to a grouping of part indices (0-based
/// into lambda.parts); result parts are the block sums.
IntegerPartition int_partition_merge(const IntegerPartition& lambda,
                                     const std::vector<std::vector<int>>& grouping);

/// Number of set partitions of [n] with the given shape:
/// multinomial(n; parts) / prod_i (exponent_i)!.
BigInt count_set_partitions_of_shape(const IntegerPartition& lambda);

/// Row of multiplicities [m_l, m_1, ..., m_k, m_r] with m_l, m_r >= 0 and
/// interior entries strictly positive.
struct LinearComposition {
    std::vector<int> entries;

    LinearComposition() = default;
    explicit LinearComposition(std::vector<int> e);

    int n() const;
    int length() const { return static_cast<int>(entries.size()); }

    bool operator==(const LinearComposition& o) const { return entries == o.entries; }
    bool operator<(const LinearComposition& o) const { return entries < o.entries; }
};

/// Replace entries i and i+1 with their sum (0-based i).
LinearComposition elementary_merge(const LinearComposition& c, int i);

}  // namespace ncpoly
