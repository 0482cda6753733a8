#pragma once

#include "ncpoly/monodromy.hpp"
#include "ncpoly/poly_numeric.hpp"

namespace ncpoly {

struct FiberDiagnostics {
    int starts = 0;
    double dedup_radius = 0;
    double rotation_phase = 0;  // phase applied to separate real parts, 0 if none
    int expected = 0;           // d^{d-2}
};

struct FiberResult {
    NumericMultiset target;
    std::vector<ComplexPoly> polynomials;  // centered, in the original frame
    std::vector<std::vector<Permutation>> labels;  // stripped horizontal constellations
    FiberDiagnostics diagnostics;
};

/// Enumerate the preimages of a critical-value multiset under the map
/// polynomial -> critical values, labeling each preimage by its stripped
/// horizontal constellation.  starts <= 0 selects the default 200 * d^{d-2}.
FiberResult fiber_enumerate(const NumericMultiset& target, int d, int starts = -1,
                            unsigned seed = 0);

}  // namespace ncpoly
