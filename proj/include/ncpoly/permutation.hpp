#pragma once

#include <string>
#include <vector>

namespace ncpoly {

/// Permutation of {1,...,n}.  Composition convention throughout: mul(a, b)
/// applies b first, then a.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    /// The long cycle (1 2 ... n).
    static Permutation long_cycle(int n);
    /// From one-line notation: img[i-1] is the image of i.
    static Permutation from_one_line(std::vector<int> img);
    /// From a cycle list on {1,...,n}; omitted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int n() const { return static_cast<int>(img_.size()); }
    int apply(int i) const;
    int operator()(int i) const { return apply(i); }
    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Cycles in canonical form: each starts at its minimum, sorted by
    /// minimum; fixed points omitted.
    std::vector<std::vector<int>> cycles() const;
    /// Cycle type including fixed points, sorted descending.
    std::vector<int> cycle_type() const;
    /// Reflection length: n minus number of cycles (fixed points count).
    int absolute_length() const;

    std::string to_string() const;  // cycle notation, "e" for identity

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

/// a after b: mul(a,b)(i) = a(b(i)).
Permutation mul(const Permutation& a, const Permutation& b);

/// Product of a list, leftmost factor applied last.
Permutation product(const std::vector<Permutation>& factors);

/// Absolute (reflection length) order: a <= b iff |a| + |a^-1 b| = |b|.
bool absolute_leq(const Permutation& a, const Permutation& b);

}  // namespace ncpoly
