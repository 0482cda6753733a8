#pragma once

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "ncpoly/set_partition.hpp"

namespace ncpoly {

using cplx = std::complex<double>;

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- dense polynomial helpers, coefficients in descending degree ---

cplx poly_eval(const std::vector<cplx>& c, cplx z);
/// Value and derivative value at z in one Horner pass.
std::pair<cplx, cplx> poly_eval_d(const std::vector<cplx>& c, cplx z);
std::vector<cplx> poly_derivative(const std::vector<cplx>& c);
std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b);
/// Antiderivative with zero constant term.
std::vector<cplx> poly_antiderivative(const std::vector<cplx>& c);
/// Coefficients of p(z + s).
std::vector<cplx> poly_shift(const std::vector<cplx>& c, cplx s);
std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots);

/// Monic polynomial with complex coefficients, descending degree.
struct ComplexPoly {
    std::vector<cplx> coeffs;  // coeffs[0] == 1

    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx eval(cplx z) const { return poly_eval(coeffs, z); }
    cplx eval_deriv(cplx z) const { return poly_eval_d(coeffs, z).second; }
    ComplexPoly shifted(cplx s) const { return ComplexPoly(poly_shift(coeffs, s)); }

    bool operator==(const ComplexPoly& o) const { return coeffs == o.coeffs; }
};

/// Clustered multiset of complex points: distinct centers with positive
/// multiplicities, pairwise separation > tol.
struct NumericMultiset {
    std::vector<cplx> points;
    std::vector<int> mult;
    double tol = 0;

    NumericMultiset() = default;
    NumericMultiset(std::vector<cplx> pts, std::vector<int> ms, double t);

    int size() const;  // with multiplicity
    int num_distinct() const { return static_cast<int>(points.size()); }
    double max_abs() const;
    /// Multiplicities sorted descending.
    IntegerPartition shape() const;
    /// All points repeated by multiplicity.
    std::vector<cplx> expand() const;
};

/// Single-linkage clustering at radius tol.
NumericMultiset cluster_points(const std::vector<cplx>& pts, double tol);

/// True iff the two multisets match point-for-point (same shape, centers
/// within dist).
bool multisets_match(const NumericMultiset& a, const NumericMultiset& b, double dist);

/// Aberth-Ehrlich simultaneous iteration with restarts and cluster-aware
/// polishing; returns d roots (listed with multiplicity).
std::vector<cplx> aberth_roots(const std::vector<cplx>& monic, std::mt19937_64& rng);

/// All roots of p, clustered into a multiset.  tol <= 0 selects the default
/// 1e-7 * (1 + max |root|).
NumericMultiset roots(const ComplexPoly& p, double tol = -1, unsigned seed = 0);

struct CriticalData {
    NumericMultiset cpt;       // critical points, total multiplicity d-1
    NumericMultiset cvl;       // critical values
    IntegerPartition lambda;   // shape of cpt
    IntegerPartition mu;       // shape of cvl
};

CriticalData critical_data(const ComplexPoly& p, double tol = -1, unsigned seed = 0);

/// Translate so the subleading coefficient vanishes.
ComplexPoly center(const ComplexPoly& p);

/// The multiset of critical values of p.
NumericMultiset ll(const ComplexPoly& p, double tol = -1, unsigned seed = 0);

struct Rectangle {
    double xl = 0, xr = 1, yb = 0, yt = 1;

    Rectangle() = default;
    Rectangle(double l, double r, double b, double t);

    bool contains(cplx z) const {
        return z.real() > xl && z.real() < xr && z.imag() > yb && z.imag() < yt;
    }
};

/// Smallest axis-aligned rectangle around the points, padded by
/// margin * (1 + diameter) on every side.
Rectangle bounding_rectangle(const NumericMultiset& ms, double margin);

// --- the critical-point -> critical-value map theta ---

/// Monic polynomial of degree n+1 with critical points z_j of multiplicities
/// m_j: p(w) = d * integral_b^w prod (t - z_j)^{m_j} dt + c, d = n+1.
std::vector<cplx> theta_poly(const std::vector<cplx>& z, const std::vector<int>& m, cplx b,
                             cplx c);

/// (p(z_1), ..., p(z_k)) for the polynomial above.
std::vector<cplx> theta_apply(const std::vector<cplx>& z, const std::vector<int>& m, cplx b,
                              cplx c);

/// Analytic k x k Jacobian d theta_i / d z_j (row-major).
std::vector<std::vector<cplx>> theta_jacobian(const std::vector<cplx>& z,
                                              const std::vector<int>& m, cplx b, cplx c);

/// Closed form: d^k / multinomial(n; m) * prod_j (b - z_j)^{m_j}
/// * prod_{i != j} (z_i - z_j)^{m_j}.
cplx theta_jacobian_det(const std::vector<cplx>& z, const std::vector<int>& m, cplx b, cplx c);

namespace detail {

/// Newton solve for theta(z, c) = targets subject to sum m_i z_i = gauge.
/// Updates (z, c) in place; returns false on non-convergence or a singular
/// Jacobian.
bool newton_cvl_solve(std::vector<cplx>& z, const std::vector<int>& m, cplx& c,
                      const std::vector<cplx>& targets, cplx gauge, int max_iters = 50);

}  // namespace detail

}  // namespace ncpoly
