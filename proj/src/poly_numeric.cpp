#include "ncpoly/poly_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include <Eigen/Dense>

namespace ncpoly {

cplx poly_eval(const std::vector<cplx>& c, cplx z) {
    cplx v = 0;
    for (auto& a : c) v = v * z + a;
    return v;
}

std::pair<cplx, cplx> poly_eval_d(const std::vector<cplx>& c, cplx z) {
    cplx v = 0, dv = 0;
    for (auto& a : c) {
        dv = dv * z + v;
        v = v * z + a;
    }
    return {v, dv};
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
    int d = static_cast<int>(c.size()) - 1;
    if (d < 1) return {cplx(0)};
    std::vector<cplx> out(d);
    for (int i = 0; i < d; ++i) out[i] = c[i] * cplx(d - i);
    return out;
}

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() + b.size() - 1, cplx(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<cplx> poly_antiderivative(const std::vector<cplx>& c) {
    int d = static_cast<int>(c.size()) - 1;
    std::vector<cplx> out(c.size() + 1);
    for (int i = 0; i <= d; ++i) out[i] = c[i] / cplx(d + 1 - i);
    out.back() = 0;
    return out;
}

std::vector<cplx> poly_shift(const std::vector<cplx>& c, cplx s) {
    // repeated synthetic division by (z - s): the remainders are the Taylor
    // coefficients of p at s, lowest degree first
    std::vector<cplx> a = c;
    int d = static_cast<int>(c.size()) - 1;
    std::vector<cplx> out(c.size());
    for (int k = d; k >= 0; --k) {
        // divide a by (z - s): remainder is p_k, quotient replaces a
        cplx rem = a[0];
        for (size_t i = 1; i < a.size(); ++i) {
            cplx next = a[i] + rem * s;
            a[i - 1] = rem;
            rem = next;
        }
        a[a.size() - 1] = rem;
        out[k] = rem;
        a.pop_back();
        if (a.empty()) break;
    }
    return out;
}

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> out{cplx(1)};
    for (auto& r : roots) out = poly_mul(out, {cplx(1), -r});
    return out;
}

ComplexPoly::ComplexPoly(std::vector<cplx> c) : coeffs(std::move(c)) {
    if (coeffs.size() < 2) throw std::invalid_argument("ComplexPoly: degree must be >= 1");
    if (std::abs(coeffs[0] - cplx(1)) > 1e-9)
        throw std::invalid_argument("ComplexPoly: leading coefficient must be 1");
    coeffs[0] = 1;
}

NumericMultiset::NumericMultiset(std::vector<cplx> pts, std::vector<int> ms, double t)
    : points(std::move(pts)), mult(std::move(ms)), tol(t) {
    if (points.size() != mult.size())
        throw std::invalid_argument("NumericMultiset: size mismatch");
    for (int m : mult)
        if (m <= 0) throw std::invalid_argument("NumericMultiset: nonpositive multiplicity");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (std::abs(points[i] - points[j]) <= tol)
                throw std::invalid_argument("NumericMultiset: centers closer than tol");
}

int NumericMultiset::size() const { return std::accumulate(mult.begin(), mult.end(), 0); }

double NumericMultiset::max_abs() const {
    double m = 0;
    for (auto& p : points) m = std::max(m, std::abs(p));
    return m;
}

IntegerPartition NumericMultiset::shape() const {
    std::vector<int> s = mult;
    std::sort(s.rbegin(), s.rend());
    return IntegerPartition(std::move(s));
}

std::vector<cplx> NumericMultiset::expand() const {
    std::vector<cplx> out;
    for (size_t i = 0; i < points.size(); ++i)
        for (int k = 0; k < mult[i]; ++k) out.push_back(points[i]);
    return out;
}

NumericMultiset cluster_points(const std::vector<cplx>& pts, double tol) {
    size_t n = pts.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= tol) parent[find(i)] = find(j);
    std::map<int, std::vector<cplx>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(pts[i]);

    std::vector<std::pair<cplx, int>> clusters;
    for (auto& [root, members] : groups) {
        cplx c = 0;
        for (auto& z : members) c += z;
        clusters.push_back({c / cplx(double(members.size())), static_cast<int>(members.size())});
    }
    std::sort(clusters.begin(), clusters.end(), [](auto& a, auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    std::vector<cplx> centers;
    std::vector<int> mult;
    for (auto& [c, m] : clusters) {
        centers.push_back(c);
        mult.push_back(m);
    }
    return NumericMultiset(std::move(centers), std::move(mult), tol);
}

bool multisets_match(const NumericMultiset& a, const NumericMultiset& b, double dist) {
    if (a.size() != b.size() || a.num_distinct() != b.num_distinct()) return false;
    std::vector<bool> used(b.num_distinct(), false);
    for (int i = 0; i < a.num_distinct(); ++i) {
        int best = -1;
        double bd = dist;
        for (int j = 0; j < b.num_distinct(); ++j) {
            if (used[j] || a.mult[i] != b.mult[j]) continue;
            double d = std::abs(a.points[i] - b.points[j]);
            if (d <= bd) {
                bd = d;
                best = j;
            }
        }
        if (best < 0) return false;
        used[best] = true;
    }
    return true;
}

namespace {

double rel_residual(const std::vector<cplx>& c, cplx z) {
    double s = std::max(1.0, std::abs(z));
    double scale = 0, zp = 1;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        scale += std::abs(c[i]) * zp;
        zp *= s;
    }
    return std::abs(poly_eval(c, z)) / std::max(scale, 1e-300);
}

// one Aberth-Ehrlich attempt from a randomized circle start
std::vector<cplx> aberth_attempt(const std::vector<cplx>& c, std::mt19937_64& rng) {
    int d = static_cast<int>(c.size()) - 1;
    // Fujiwara-style radius bound
    double r = 0;
    for (int i = 1; i <= d; ++i) r = std::max(r, std::pow(std::abs(c[i]), 1.0 / i));
    r = 2 * r + 0.5;
    std::uniform_real_distribution<double> U(0, 1);
    double phase = U(rng);
    std::vector<cplx> z(d);
    for (int k = 0; k < d; ++k) {
        double ang = 2 * M_PI * (k + phase) / d + 0.3 * (U(rng) - 0.5);
        z[k] = r * (0.9 + 0.2 * U(rng)) * cplx(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0;
        for (int k = 0; k < d; ++k) {
            auto [p, dp] = poly_eval_d(c, z[k]);
            if (p == cplx(0)) continue;
            if (dp == cplx(0)) {
                z[k] += 1e-6 * r * cplx(U(rng) - 0.5, U(rng) - 0.5);
                worst = 1;
                continue;
            }
            cplx w = p / dp;
            cplx s = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) s += cplx(1) / (z[k] - z[j]);
            cplx denom = cplx(1) - w * s;
            cplx corr = std::abs(denom) < 1e-14 ? w : w / denom;
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / (1 + std::abs(z[k])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

// Newton refinement on the (m-1)-th derivative: a multiplicity-m root of p is
// a simple root of p^{(m-1)}.
cplx refine_multiple_root(const std::vector<cplx>& c, cplx z0, int m) {
    std::vector<cplx> g = c;
    for (int i = 1; i < m; ++i) g = poly_derivative(g);
    cplx z = z0;
    for (int it = 0; it < 40; ++it) {
        auto [v, dv] = poly_eval_d(g, z);
        if (dv == cplx(0)) break;
        cplx step = v / dv;
        z -= step;
        if (std::abs(step) < 1e-15 * (1 + std::abs(z))) break;
    }
    return z;
}

bool multiple_root_ok(const std::vector<cplx>& c, cplx z, int m) {
    std::vector<cplx> g = c;
    for (int j = 0; j < m; ++j) {
        if (rel_residual(g, z) > 1e-6) return false;
        g = poly_derivative(g);
    }
    return true;
}

}  // namespace

std::vector<cplx> aberth_roots(const std::vector<cplx>& monic, std::mt19937_64& rng) {
    int d = static_cast<int>(monic.size()) - 1;
    if (d < 1) throw std::invalid_argument("aberth_roots: degree must be >= 1");
    if (d == 1) return {-monic[1]};
    std::vector<cplx> best;
    double best_res = 1e300;
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto z = aberth_attempt(monic, rng);
        // Newton polish
        for (auto& zk : z)
            for (int it = 0; it < 3; ++it) {
                auto [p, dp] = poly_eval_d(monic, zk);
                if (dp == cplx(0)) break;
                zk -= p / dp;
            }
        double res = 0;
        for (auto& zk : z) res = std::max(res, rel_residual(monic, zk));
        if (res < best_res) {
            best_res = res;
            best = z;
        }
        if (best_res < 1e-12) break;
    }
    if (best_res > 1e-7)
        throw NumericalError("aberth_roots: failed to converge (residual " +
                             std::to_string(best_res) + ")");
    return best;
}

NumericMultiset roots(const ComplexPoly& p, double tol, unsigned seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto raw = aberth_roots(p.coeffs, rng);
    double maxabs = 0;
    for (auto& z : raw) maxabs = std::max(maxabs, std::abs(z));
    double tol_eff = tol > 0 ? tol : 1e-7 * (1 + maxabs);

    // coarse clusters first: a multiplicity-m root is only computed to about
    // eps^(1/m), so detect the cluster, then re-solve it as a simple root of
    // the (m-1)-th derivative
    double coarse = std::max(tol_eff, 1e-5 * (1 + maxabs));
    NumericMultiset rough = cluster_points(raw, coarse);
    std::vector<cplx> polished;
    for (int i = 0; i < rough.num_distinct(); ++i) {
        int m = rough.mult[i];
        if (m == 1) {
            polished.push_back(rough.points[i]);
            continue;
        }
        cplx cand = refine_multiple_root(p.coeffs, rough.points[i], m);
        if (multiple_root_ok(p.coeffs, cand, m)) {
            for (int k = 0; k < m; ++k) polished.push_back(cand);
        } else {
            // genuinely close simple roots: keep the raw points
            for (auto& z : raw)
                if (std::abs(z - rough.points[i]) <= coarse + 1e-300) polished.push_back(z);
        }
    }
    return cluster_points(polished, tol_eff);
}

CriticalData critical_data(const ComplexPoly& p, double tol, unsigned seed) {
    int d = p.degree();
    auto dc = poly_derivative(p.coeffs);
    for (auto& a : dc) a /= cplx(double(d));
    CriticalData out;
    if (d == 1) throw std::invalid_argument("critical_data: degree must be >= 2");
    out.cpt = roots(ComplexPoly(dc), tol, seed);

    std::vector<cplx> values;
    for (int i = 0; i < out.cpt.num_distinct(); ++i)
        for (int k = 0; k < out.cpt.mult[i]; ++k) values.push_back(p.eval(out.cpt.points[i]));
    double vmax = 0;
    for (auto& v : values) vmax = std::max(vmax, std::abs(v));
    double tol_v = tol > 0 ? tol : 1e-7 * (1 + vmax);
    out.cvl = cluster_points(values, tol_v);
    out.lambda = out.cpt.shape();
    out.mu = out.cvl.shape();
    return out;
}

ComplexPoly center(const ComplexPoly& p) {
    cplx s = -p.coeffs[1] / cplx(double(p.degree()));
    return p.shifted(s);
}

NumericMultiset ll(const ComplexPoly& p, double tol, unsigned seed) {
    return critical_data(p, tol, seed).cvl;
}

Rectangle::Rectangle(double l, double r, double b, double t) : xl(l), xr(r), yb(b), yt(t) {
    if (!(xl < xr && yb < yt)) throw std::invalid_argument("Rectangle: degenerate");
}

Rectangle bounding_rectangle(const NumericMultiset& ms, double margin) {
    if (ms.points.empty()) throw std::invalid_argument("bounding_rectangle: empty multiset");
    if (margin <= 0) throw std::invalid_argument("bounding_rectangle: margin must be positive");
    double xl = 1e300, xr = -1e300, yb = 1e300, yt = -1e300, diam = 0;
    for (auto& z : ms.points) {
        xl = std::min(xl, z.real());
        xr = std::max(xr, z.real());
        yb = std::min(yb, z.imag());
        yt = std::max(yt, z.imag());
    }
    for (auto& a : ms.points)
        for (auto& b : ms.points) diam = std::max(diam, std::abs(a - b));
    double pad = margin * (1 + diam);
    return Rectangle(xl - pad, xr + pad, yb - pad, yt + pad);
}

std::vector<cplx> theta_poly(const std::vector<cplx>& z, const std::vector<int>& m, cplx b,
                             cplx c) {
    if (z.size() != m.size() || z.empty())
        throw std::invalid_argument("theta_poly: size mismatch");
    int n = 0;
    for (int mi : m) {
        if (mi <= 0) throw std::invalid_argument("theta_poly: multiplicities must be positive");
        n += mi;
    }
    int d = n + 1;
    std::vector<cplx> q{cplx(double(d))};
    for (size_t j = 0; j < z.size(); ++j)
        for (int k = 0; k < m[j]; ++k) q = poly_mul(q, {cplx(1), -z[j]});
    auto Q = poly_antiderivative(q);
    Q.back() = c - poly_eval(Q, b);
    return Q;
}

std::vector<cplx> theta_apply(const std::vector<cplx>& z, const std::vector<int>& m, cplx b,
                              cplx c) {
    auto p = theta_poly(z, m, b, c);
    std::vector<cplx> out;
    for (auto& zi : z) out.push_back(poly_eval(p, zi));
    return out;
}

std::vector<std::vector<cplx>> theta_jacobian(const std::vector<cplx>& z,
                                              const std::vector<int>& m, cplx b, cplx c) {
    (void)c;
    size_t k = z.size();
    int n = 0;
    for (int mi : m) n += mi;
    int d = n + 1;
    std::vector<std::vector<cplx>> J(k, std::vector<cplx>(k));
    for (size_t j = 0; j < k; ++j) {
        // integrand (t-z_j)^{m_j-1} prod_{l != j} (t-z_l)^{m_l}
        std::vector<cplx> g{cplx(1)};
        for (size_t l = 0; l < k; ++l) {
            int e = (l == j) ? m[l] - 1 : m[l];
            for (int t = 0; t < e; ++t) g = poly_mul(g, {cplx(1), -z[l]});
        }
        auto G = poly_antiderivative(g);
        cplx Gb = poly_eval(G, b);
        for (size_t i = 0; i < k; ++i)
            J[i][j] = -cplx(double(d)) * cplx(double(m[j])) * (poly_eval(G, z[i]) - Gb);
    }
    return J;
}

cplx theta_jacobian_det(const std::vector<cplx>& z, const std::vector<int>& m, cplx b, cplx c) {
    (void)c;
    if (z.size() != m.size() || z.empty())
        throw std::invalid_argument("theta_jacobian_det: size mismatch");
    int n = 0;
    for (int mi : m) n += mi;
    int d = n + 1;
    // d^k / multinomial(n; m)
    BigInt multinom = 1, fact = 1;
    {
        BigInt num = 1;
        for (int i = 2; i <= n; ++i) num *= i;
        BigInt den = 1;
        for (int mi : m) {
            BigInt f = 1;
            for (int i = 2; i <= mi; ++i) f *= i;
            den *= f;
        }
        multinom = num / den;
        (void)fact;
    }
    cplx out = std::pow(cplx(double(d)), double(z.size())) /
               cplx(static_cast<double>(multinom));
    for (size_t j = 0; j < z.size(); ++j) out *= std::pow(b - z[j], double(m[j]));
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = 0; j < z.size(); ++j)
            if (i != j) out *= std::pow(z[i] - z[j], double(m[j]));
    return out;
}

namespace detail {

bool newton_cvl_solve(std::vector<cplx>& z, const std::vector<int>& m, cplx& c,
                      const std::vector<cplx>& targets, cplx gauge, int max_iters) {
    const int k = static_cast<int>(z.size());
    if (targets.size() != z.size()) throw std::invalid_argument("newton_cvl_solve: size mismatch");
    double scale = 1;
    for (auto& t : targets) scale = std::max(scale, std::abs(t));

    std::vector<cplx> zw = z;
    cplx cw = c;
    for (int iter = 0; iter < max_iters; ++iter) {
        auto vals = theta_apply(zw, m, cplx(0), cw);
        Eigen::VectorXcd F(k + 1);
        cplx bary = 0;
        for (int i = 0; i < k; ++i) {
            F(i) = vals[i] - targets[i];
            bary += cplx(double(m[i])) * zw[i];
        }
        F(k) = bary - gauge;
        double fnorm = F.lpNorm<Eigen::Infinity>();
        if (fnorm < 1e-11 * scale) {
            z = zw;
            c = cw;
            return true;
        }
        auto Jz = theta_jacobian(zw, m, cplx(0), cw);
        Eigen::MatrixXcd J(k + 1, k + 1);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) J(i, j) = Jz[i][j];
            J(i, k) = 1;
            J(k, i) = double(m[i]);
        }
        J(k, k) = 0;
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(J);
        Eigen::VectorXcd delta = lu.solve(-F);
        if (!delta.allFinite()) return false;
        double step = delta.lpNorm<Eigen::Infinity>();
        // crude divergence guard
        if (step > 1e8 * (1 + scale)) return false;
        for (int i = 0; i < k; ++i) zw[i] += delta(i);
        cw += delta(k);
    }
    return false;
}

}  // namespace detail

}  // namespace ncpoly
