#pragma once

#include "ncpoly/permutation.hpp"
#include "ncpoly/set_partition.hpp"

namespace ncpoly {

bool is_noncrossing(const SetPartition& p);

/// SetPartition validated noncrossing on construction.
class NoncrossingPartition {
public:
    NoncrossingPartition() = default;
    explicit NoncrossingPartition(SetPartition p);

    const SetPartition& part() const { return part_; }
    int d() const { return part_.n; }

    bool operator==(const NoncrossingPartition& o) const { return part_ == o.part_; }
    bool operator!=(const NoncrossingPartition& o) const { return part_ != o.part_; }
    bool operator<(const NoncrossingPartition& o) const { return part_ < o.part_; }
    std::string to_string() const { return part_.to_string(); }

    static NoncrossingPartition discrete(int d);
    static NoncrossingPartition indiscrete(int d);

private:
    SetPartition part_;
};

/// Each block {b1 < b2 < ... < bk} becomes the cycle (b1 b2 ... bk).
Permutation perm_of(const NoncrossingPartition& p);

/// True iff the cycle partition of pi is noncrossing (pi lies in [1, delta]).
bool is_nc_permutation(const Permutation& pi);

/// Inverse of perm_of; throws if pi is not noncrossing.
NoncrossingPartition partition_of_perm(const Permutation& pi);

int absolute_length(const Permutation& pi);

/// Right Kreweras complement: partition of perm(p)^-1 * delta.  Order-reversing.
NoncrossingPartition kreweras(const NoncrossingPartition& p);
/// Left complement: partition of delta * perm(p)^-1.
NoncrossingPartition kreweras_left(const NoncrossingPartition& p);

/// All noncrossing partitions of [d], canonically ordered.
std::vector<NoncrossingPartition> enumerate_ncpart(int d);

/// Partitions covering p in refinement order (merge two blocks, stay NC).
std::vector<NoncrossingPartition> covers(const NoncrossingPartition& p);

/// Strictly increasing chain in the refinement order.
struct NCChain {
    std::vector<NoncrossingPartition> elements;

    NCChain() = default;
    explicit NCChain(std::vector<NoncrossingPartition> elems);

    int length() const { return static_cast<int>(elements.size()); }
    int d() const { return elements.empty() ? 0 : elements.front().d(); }
    bool operator==(const NCChain& o) const { return elements == o.elements; }
    bool operator<(const NCChain& o) const { return elements < o.elements; }
};

/// All maximal chains discrete = p0 < p1 < ... < p_{d-1} = indiscrete.
std::vector<NCChain> maximal_chains(int d);

enum class Side { Top, Bottom, Left, Right };

enum class MatchingConvention { LR, TB };

/// Perfect noncrossing matching on [2d]; under the LR convention point 2m-1
/// is L_m and 2m is R_m, under TB point 2m-1 is T_m and 2m is B_m.  Blocks
/// always pair an odd point with an even one.
struct NCMatching {
    NoncrossingPartition underlying;  // on [2d], all blocks size 2
    MatchingConvention convention = MatchingConvention::LR;

    NCMatching() = default;
    NCMatching(NoncrossingPartition u, MatchingConvention c);

    int d() const { return underlying.d() / 2; }
    bool operator==(const NCMatching& o) const {
        return convention == o.convention && underlying == o.underlying;
    }
};

/// Boundary matching of the side-labeled copy of p.  Top/bottom partitions
/// produce LR matchings, left/right partitions produce TB matchings.
NCMatching matching_of_partition(const NoncrossingPartition& p, Side side);

/// Inverse of matching_of_partition for the given side.
NoncrossingPartition partition_of_matching(const NCMatching& m, Side side);

}  // namespace ncpoly
