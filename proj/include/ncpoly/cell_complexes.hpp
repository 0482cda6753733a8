#pragma once

#include <map>
#include <vector>

#include "ncpoly/hurwitz.hpp"
#include "ncpoly/nc_lattice.hpp"
#include "ncpoly/set_partition.hpp"

namespace ncpoly {

/// Simplex of the one-vertex quotient complex, keyed by its edge-label
/// sequence together with the attaching endpoint data (left and right
/// permutations of the chain that produced it).
struct DualBraidSimplex {
    Permutation left;                     // pi^L: first chain element
    std::vector<Permutation> edge_labels; // consecutive quotients, all nontrivial
    Permutation right;                    // pi^R: complement of the last element

    DualBraidSimplex() = default;
    DualBraidSimplex(Permutation l, std::vector<Permutation> labels, Permutation r);

    int dim() const { return static_cast<int>(edge_labels.size()); }
    /// Full constellation [left, labels..., right]; product is delta.
    std::vector<Permutation> constellation() const;
};

struct ComplexStats {
    int d = 0;
    std::vector<long long> cells_by_dim;
    long long euler = 0;
};

/// Identified cell counts of the quotient of the noncrossing-partition order
/// complex by equal edge-label sequences; one vertex, chi computed.
ComplexStats dual_braid_complex_stats(int d);

/// Replace (pi^L, labels, pi^R) by (delta * pi^R * delta^-1 * pi^L, labels, e).
DualBraidSimplex standardize_circle(const DualBraidSimplex& s);

/// Merge the TB matching of piL with the LR matching of piB on the 4d
/// cyclically ordered side symbols T_1,L_1,B_1,R_1,...; true iff the merged
/// partition is noncrossing with all blocks of size 4.
bool is_basketball(const Permutation& piL, const Permutation& piB);
bool is_basketball(const NoncrossingPartition& pL, const NoncrossingPartition& pB);

/// The merged side partition itself (the basketball candidate on [4d]).
SetPartition side_partition_of_pair(const NoncrossingPartition& pL,
                                    const NoncrossingPartition& pB);

/// Pair of chains labeling a product cell; every (left element, bottom
/// element) pair must be basketball-compatible.
struct RectangleCellLabel {
    NCChain left_chain;
    NCChain bottom_chain;

    RectangleCellLabel() = default;
    RectangleCellLabel(NCChain left, NCChain bottom);

    int d() const { return left_chain.d(); }
};

struct RectangleStats {
    int d = 0;
    long long vertices = 0;
    long long top_cells = 0;
    std::map<std::pair<int, int>, long long> cells_by_bidim;
};

RectangleStats rectangle_complex_stats(int d);

/// Standard annulus representative: the horizontal constellation of the left
/// chain after circle standardization, plus the (unnormalized) bottom chain.
struct AnnulusRepresentative {
    DualBraidSimplex horizontal;
    NCChain bottom_chain;

    bool operator==(const AnnulusRepresentative& o) const;
    bool operator<(const AnnulusRepresentative& o) const;
};

AnnulusRepresentative standardize_annulus(const RectangleCellLabel& c);

/// Number of identified vertex classes of the annulus quotient.
long long annulus_vertex_class_count(int d);

/// Multiset of reals in [x_l, x_r] recorded as a linear composition plus the
/// strictly increasing interior support points.
struct OrthoschemePoint {
    LinearComposition composition;
    std::vector<double> interior_points;
    double x_l = 0, x_r = 1;

    int n() const { return composition.n(); }
};

/// Build the orthoscheme point and the relative-width weights of the
/// subintervals cut out by the interior points.
OrthoschemePoint orthoscheme_point_of_multiset(
    const std::vector<std::pair<double, int>>& values, double x_l, double x_r,
    std::vector<double>* weights = nullptr);

/// Expand back to the sorted n-vector of support points with multiplicity.
std::vector<double> orthoscheme_expand(const OrthoschemePoint& a);

/// Euclidean distance between the sorted n-cube representatives.
double orthoscheme_distance(const OrthoschemePoint& a, const OrthoschemePoint& b);

}  // namespace ncpoly
