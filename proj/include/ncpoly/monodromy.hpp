#pragma once

#include "ncpoly/hurwitz.hpp"
#include "ncpoly/nc_lattice.hpp"
#include "ncpoly/poly_numeric.hpp"

namespace ncpoly {

struct ClearanceError : NumericalError {
    using NumericalError::NumericalError;
};

/// Polyline in the w-plane.
struct PathSpec {
    std::vector<cplx> vertices;
    bool closed = false;

    PathSpec() = default;
    PathSpec(std::vector<cplx> vs, bool cl);
};

/// Fiber of p over the basepoint with points indexed by label: points[k-1]
/// carries label k under the asymptotic-ray convention of standard_labels.
struct LabeledFiber {
    ComplexPoly poly;
    cplx basepoint;
    std::vector<cplx> points;
};

/// The d distinct solutions of p(z) = w at a regular value w.
std::vector<cplx> fiber(const ComplexPoly& p, cplx w, double tol = -1, unsigned seed = 0);

/// Trace every labeled point continuously along the path (predictor-corrector
/// with adaptive step halving).  The path must start at the fiber basepoint.
LabeledFiber continue_fiber(const ComplexPoly& p, const LabeledFiber& start,
                            const PathSpec& path);

/// Label the fiber over the basepoint: trace to a large positive real value
/// where the d preimages approach R^(1/d) e(k/d); label k = d sits on the
/// branch asymptotic to the positive real axis; labels are pulled back along
/// a route below all critical values.
LabeledFiber standard_labels(const ComplexPoly& p, cplx basepoint, unsigned seed = 0);

/// Monodromy permutation of a closed regular loop: the inverse of the
/// endpoint-transport map, so that a clockwise circle under z^d gives delta
/// and concatenating loops composes with the earlier loop as the left factor.
Permutation loop_monodromy(const ComplexPoly& p, const LabeledFiber& fib, const PathSpec& loop);

struct SideChains {
    NCChain left;                           // increasing, one entry per vertical arc
    std::vector<NoncrossingPartition> right;  // decreasing, aligned with left
    NCChain bottom;                         // increasing, one entry per horizontal arc
    std::vector<NoncrossingPartition> top;    // decreasing, aligned with bottom
    std::vector<double> left_weights;       // relative widths of the real-part subintervals
    std::vector<double> bottom_weights;     // relative widths of the imaginary-part subintervals
    Rectangle rect;
};

SideChains side_chains(const ComplexPoly& p, const Rectangle& rect, double tol = -1,
                       unsigned seed = 0);

struct GeoComPoint {
    NCChain left_chain;
    std::vector<double> left_weights;
    NCChain bottom_chain;
    std::vector<double> bottom_weights;
};

GeoComPoint geocom(const ComplexPoly& p, const Rectangle& rect, double tol = -1,
                   unsigned seed = 0);

struct SideConstellations {
    Constellation horizontal;  // [pi_1^L, sigma_1, ..., sigma_{k-1}, pi_k^R]
    Constellation vertical;
    std::vector<Permutation> horizontal_stripped;  // end identities removed
    std::vector<Permutation> vertical_stripped;
};

SideConstellations side_constellations(const ComplexPoly& p, const Rectangle& rect,
                                       double tol = -1, unsigned seed = 0);
SideConstellations side_constellations_of(const SideChains& sc);

/// Lift a weakly-shape-increasing path of critical-value multisets through
/// the critical-data map, starting at p0 (whose cvl must match the first
/// target).  The critical-point barycenter is held fixed along the lift.
ComplexPoly lift_multiset_path(const ComplexPoly& p0,
                               const std::vector<NumericMultiset>& targets, double tol = -1,
                               unsigned seed = 0);

}  // namespace ncpoly
