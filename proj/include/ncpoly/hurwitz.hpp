#pragma once

#include <stdexcept>
#include <vector>

#include "ncpoly/permutation.hpp"

namespace ncpoly {

/// Ordered tuple of permutations; the product (leftmost factor applied last)
/// is the target and is preserved by Hurwitz moves.
struct Factorization {
    int d = 0;
    std::vector<Permutation> factors;
    Permutation target;

    Factorization() = default;
    explicit Factorization(std::vector<Permutation> fs);

    int length() const { return static_cast<int>(factors.size()); }
    bool operator==(const Factorization& o) const { return factors == o.factors; }
    bool operator<(const Factorization& o) const { return factors < o.factors; }
};

/// Factorization whose target is the long cycle delta.
struct Constellation : Factorization {
    Constellation() = default;
    explicit Constellation(std::vector<Permutation> fs);

    /// Sum of factor absolute lengths equals d-1.
    bool is_minimal() const;
};

struct OrbitCapExceeded : std::runtime_error {
    explicit OrbitCapExceeded(size_t cap)
        : std::runtime_error("hurwitz_orbit: orbit exceeds cap of " + std::to_string(cap)) {}
};

/// Elementary move at position i (1-based): (g_i, g_{i+1}) becomes
/// (g_{i+1}, g_{i+1}^-1 g_i g_{i+1}).  Target preserved.
Factorization hurwitz_move(const Factorization& f, int i);
/// Inverse move: (g_i, g_{i+1}) becomes (g_i g_{i+1} g_i^-1, g_i).
Factorization hurwitz_move_inverse(const Factorization& f, int i);

/// Closure under moves and inverse moves, sorted canonically.
std::vector<Factorization> hurwitz_orbit(const Factorization& f, size_t cap = 1000000);

/// All tuples of absolute_length(pi) transpositions with product pi
/// (brute force; the orbit oracle).
std::vector<Factorization> minimal_transposition_factorizations(const Permutation& pi);

}  // namespace ncpoly
