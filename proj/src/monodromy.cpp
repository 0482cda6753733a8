#include "ncpoly/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace ncpoly {

PathSpec::PathSpec(std::vector<cplx> vs, bool cl) : vertices(std::move(vs)), closed(cl) {
    if (vertices.size() < 2) throw std::invalid_argument("PathSpec: need at least two vertices");
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw std::invalid_argument("PathSpec: repeated consecutive vertex");
    if (closed && vertices.front() != vertices.back())
        throw std::invalid_argument("PathSpec: closed path must return to its start");
}

namespace {

double point_segment_dist(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    double t = len2 == 0 ? 0 : std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

void check_clearance(const PathSpec& path, const NumericMultiset& cvl) {
    double clearance = 1e-6 * (1 + cvl.max_abs());
    for (size_t i = 1; i < path.vertices.size(); ++i)
        for (auto& v : cvl.points)
            if (point_segment_dist(v, path.vertices[i - 1], path.vertices[i]) < clearance)
                throw ClearanceError("path passes within clearance of a critical value");
}

double min_separation(const std::vector<cplx>& zs) {
    double m = 1e300;
    for (size_t i = 0; i < zs.size(); ++i)
        for (size_t j = i + 1; j < zs.size(); ++j) m = std::min(m, std::abs(zs[i] - zs[j]));
    return m;
}

// Newton-correct all points onto p(z) = w; false on failure.
bool correct_fiber(const ComplexPoly& p, std::vector<cplx>& zs, cplx w) {
    for (auto& z : zs) {
        bool ok = false;
        for (int it = 0; it < 16; ++it) {
            auto [v, dv] = poly_eval_d(p.coeffs, z);
            v -= w;
            if (dv == cplx(0)) return false;
            cplx step = v / dv;
            z -= step;
            if (std::abs(step) < 1e-13 * (1 + std::abs(z))) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// trace all fiber points as the target value moves from w0 to w1
void trace_segment(const ComplexPoly& p, std::vector<cplx>& zs, cplx w0, cplx w1) {
    double t = 0;
    double h = 1.0 / 64;
    const double h_floor = std::pow(2.0, -20);
    cplx dw_full = w1 - w0;
    while (t < 1) {
        double step = std::min(h, 1 - t);
        cplx w_next = w0 + (t + step) * dw_full;
        std::vector<cplx> trial = zs;
        // tangent predictor
        bool pred_ok = true;
        for (auto& z : trial) {
            cplx dp = p.eval_deriv(z);
            if (dp == cplx(0)) {
                pred_ok = false;
                break;
            }
            z += step * dw_full / dp;
        }
        double sep = min_separation(zs);
        bool ok = pred_ok && correct_fiber(p, trial, w_next);
        if (ok) {
            for (size_t i = 0; i < zs.size(); ++i)
                if (std::abs(trial[i] - zs[i]) > 0.4 * sep) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            double zscale = 0;
            for (auto& z : trial) zscale = std::max(zscale, std::abs(z));
            if (min_separation(trial) < 1e-12 * (1 + zscale)) ok = false;
        }
        if (ok) {
            zs = trial;
            t += step;
            h = std::min(h * 2, 1.0 / 16);
        } else {
            h = step / 2;
            if (h < h_floor)
                throw NumericalError("continue_fiber: step size underflow near w = " +
                                     std::to_string(w_next.real()) + "+" +
                                     std::to_string(w_next.imag()) + "i");
        }
    }
}

void trace_path(const ComplexPoly& p, std::vector<cplx>& zs, const std::vector<cplx>& verts) {
    for (size_t i = 1; i < verts.size(); ++i) trace_segment(p, zs, verts[i - 1], verts[i]);
}

// transport map of a closed loop, as a permutation of labels
Permutation transport_of_loop(const ComplexPoly& p, const LabeledFiber& fib,
                              const PathSpec& loop) {
    if (!loop.closed || loop.vertices.front() != loop.vertices.back())
        throw std::invalid_argument("loop_monodromy: loop must be closed");
    if (std::abs(loop.vertices.front() - fib.basepoint) > 1e-9 * (1 + std::abs(fib.basepoint)))
        throw std::invalid_argument("loop_monodromy: loop must start at the fiber basepoint");
    std::vector<cplx> zs = fib.points;
    trace_path(p, zs, loop.vertices);
    double match_tol = 0.3 * min_separation(fib.points);
    int d = static_cast<int>(zs.size());
    std::vector<int> img(d, 0);
    std::vector<bool> used(d, false);
    for (int i = 0; i < d; ++i) {
        int best = -1;
        double bd = match_tol;
        for (int j = 0; j < d; ++j) {
            double dist = std::abs(zs[i] - fib.points[j]);
            if (!used[j] && dist < bd) {
                bd = dist;
                best = j;
            }
        }
        if (best < 0) throw NumericalError("loop_monodromy: endpoint fiber does not match start");
        used[best] = true;
        img[i] = best + 1;
    }
    return Permutation::from_one_line(std::move(img));
}

Permutation monodromy_impl(const ComplexPoly& p, const LabeledFiber& fib, const PathSpec& loop,
                           const NumericMultiset& cvl) {
    check_clearance(loop, cvl);
    // monodromy is the inverse of endpoint transport
    return transport_of_loop(p, fib, loop).inverse();
}

}  // namespace

std::vector<cplx> fiber(const ComplexPoly& p, cplx w, double tol, unsigned seed) {
    std::vector<cplx> shifted = p.coeffs;
    shifted.back() -= w;
    NumericMultiset ms = roots(ComplexPoly(std::move(shifted)), tol, seed);
    if (ms.num_distinct() != p.degree())
        throw NumericalError("fiber: w is within tolerance of a critical value");
    return ms.points;
}

LabeledFiber continue_fiber(const ComplexPoly& p, const LabeledFiber& start,
                            const PathSpec& path) {
    if (std::abs(path.vertices.front() - start.basepoint) >
        1e-9 * (1 + std::abs(start.basepoint)))
        throw std::invalid_argument("continue_fiber: path must start at the fiber basepoint");
    std::vector<cplx> zs = start.points;
    trace_path(p, zs, path.vertices);
    return LabeledFiber{p, path.vertices.back(), zs};
}

LabeledFiber standard_labels(const ComplexPoly& p, cplx basepoint, unsigned seed) {
    const int d = p.degree();
    CriticalData cd = critical_data(p, -1, seed);

    double coeff_max = 0;
    for (auto& a : p.coeffs) coeff_max = std::max(coeff_max, std::abs(a));
    double base = 32.0 * d * (1 + coeff_max);
    double extent = 1 + cd.cvl.max_abs() + std::abs(basepoint);
    double W = std::max(std::pow(base, d), 16.0 * extent);

    // fiber over W: close to the scaled d-th roots of unity
    std::vector<cplx> zs(d);
    double r = std::pow(W, 1.0 / d);
    for (int k = 1; k <= d; ++k)
        zs[k - 1] = r * std::exp(cplx(0, 2 * M_PI * k / d));
    if (!correct_fiber(p, zs, cplx(W)))
        throw NumericalError("standard_labels: could not resolve the asymptotic fiber");
    // verify each point kept its nominal direction
    for (int k = 1; k <= d; ++k) {
        double want = 2 * M_PI * k / d;
        double got = std::arg(zs[k - 1]);
        double diff = std::remainder(got - want, 2 * M_PI);
        if (std::abs(diff) > M_PI / (2 * d))
            throw NumericalError("standard_labels: asymptotic labels ambiguous; increase R");
    }

    // route from W back to the basepoint below every critical value
    double y_low = std::min(basepoint.imag(), 0.0);
    for (auto& v : cd.cvl.points) y_low = std::min(y_low, v.imag());
    double diam = 1 + cd.cvl.max_abs() + std::abs(basepoint);
    y_low -= diam;
    // descend geometrically: W can be orders of magnitude above the basepoint
    // scale and a single segment would defeat the adaptive step control
    std::vector<cplx> route{cplx(W), cplx(W, y_low)};
    double x_stop = std::max(16.0 * extent, std::abs(basepoint.real()) + diam);
    for (double x = W / 2; x > x_stop; x /= 2) route.emplace_back(x, y_low);
    route.emplace_back(basepoint.real(), y_low);
    route.push_back(basepoint);
    route.erase(std::unique(route.begin(), route.end()), route.end());
    PathSpec ps(route, false);
    check_clearance(ps, cd.cvl);
    trace_path(p, zs, ps.vertices);
    return LabeledFiber{p, basepoint, zs};
}

Permutation loop_monodromy(const ComplexPoly& p, const LabeledFiber& fib, const PathSpec& loop) {
    CriticalData cd = critical_data(p);
    return monodromy_impl(p, fib, loop, cd.cvl);
}

namespace {

// cluster the sorted 1d coordinates of cvl points at tol
std::vector<double> distinct_coords(const NumericMultiset& cvl, bool real_part, double tol) {
    std::vector<double> xs;
    for (auto& v : cvl.points) xs.push_back(real_part ? v.real() : v.imag());
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    for (double x : xs) {
        if (out.empty() || x - out.back() > tol)
            out.push_back(x);
    }
    return out;
}

}  // namespace

SideChains side_chains(const ComplexPoly& p, const Rectangle& rect, double tol, unsigned seed) {
    CriticalData cd = critical_data(p, tol, seed);
    double scale = 1 + cd.cvl.max_abs();
    double coord_tol = tol > 0 ? tol : 1e-7 * scale;
    for (auto& v : cd.cvl.points)
        if (!rect.contains(v))
            throw std::invalid_argument("side_chains: rectangle does not contain cvl");
    double side_eps = 1e-9 * scale;
    for (auto& v : cd.cvl.points) {
        if (std::min(v.real() - rect.xl, rect.xr - v.real()) < side_eps ||
            std::min(v.imag() - rect.yb, rect.yt - v.imag()) < side_eps)
            throw std::invalid_argument("side_chains: critical value on a rectangle side");
    }

    cplx b(rect.xl, rect.yb);
    LabeledFiber lf = standard_labels(p, b, seed);
    Permutation delta = Permutation::long_cycle(p.degree());

    auto xs = distinct_coords(cd.cvl, true, coord_tol);
    auto ys = distinct_coords(cd.cvl, false, coord_tol);

    SideChains out;
    out.rect = rect;

    std::vector<double> xcuts{rect.xl};
    xcuts.insert(xcuts.end(), xs.begin(), xs.end());
    xcuts.push_back(rect.xr);
    std::vector<NoncrossingPartition> left_parts;
    for (size_t i = 1; i < xcuts.size(); ++i) {
        double t = (xcuts[i - 1] + xcuts[i]) / 2;
        // clockwise boundary of [xl, t] x [yb, yt] based at b
        PathSpec loop({b, cplx(rect.xl, rect.yt), cplx(t, rect.yt), cplx(t, rect.yb), b}, true);
        Permutation piL = monodromy_impl(p, lf, loop, cd.cvl);
        left_parts.push_back(partition_of_perm(piL));
        out.right.push_back(partition_of_perm(mul(piL.inverse(), delta)));
        out.left_weights.push_back((xcuts[i] - xcuts[i - 1]) / (rect.xr - rect.xl));
    }
    out.left = NCChain(std::move(left_parts));

    std::vector<double> ycuts{rect.yb};
    ycuts.insert(ycuts.end(), ys.begin(), ys.end());
    ycuts.push_back(rect.yt);
    std::vector<NoncrossingPartition> bottom_parts;
    for (size_t j = 1; j < ycuts.size(); ++j) {
        double s = (ycuts[j - 1] + ycuts[j]) / 2;
        // clockwise boundary of [xl, xr] x [yb, s] based at b
        PathSpec loop({b, cplx(rect.xl, s), cplx(rect.xr, s), cplx(rect.xr, rect.yb), b}, true);
        Permutation piB = monodromy_impl(p, lf, loop, cd.cvl);
        bottom_parts.push_back(partition_of_perm(piB));
        out.top.push_back(partition_of_perm(mul(delta, piB.inverse())));
        out.bottom_weights.push_back((ycuts[j] - ycuts[j - 1]) / (rect.yt - rect.yb));
    }
    out.bottom = NCChain(std::move(bottom_parts));
    return out;
}

GeoComPoint geocom(const ComplexPoly& p, const Rectangle& rect, double tol, unsigned seed) {
    SideChains sc = side_chains(p, rect, tol, seed);
    return GeoComPoint{sc.left, sc.left_weights, sc.bottom, sc.bottom_weights};
}

SideConstellations side_constellations_of(const SideChains& sc) {
    const int d = sc.left.d();
    Permutation delta = Permutation::long_cycle(d);

    std::vector<Permutation> L;
    for (auto& q : sc.left.elements) L.push_back(perm_of(q));
    std::vector<Permutation> horiz{L.front()};
    for (size_t i = 1; i < L.size(); ++i) horiz.push_back(mul(L[i - 1].inverse(), L[i]));
    horiz.push_back(mul(L.back().inverse(), delta));  // pi_k^R

    std::vector<Permutation> B;
    for (auto& q : sc.bottom.elements) B.push_back(perm_of(q));
    // delta = pi_k^T . rho_{k-1} ... rho_1 . pi_1^B with rho_j = pi_{j+1}^B (pi_j^B)^-1
    std::vector<Permutation> vert{mul(delta, B.back().inverse())};
    for (size_t j = B.size() - 1; j >= 1; --j) vert.push_back(mul(B[j], B[j - 1].inverse()));
    vert.push_back(B.front());

    auto strip = [](const std::vector<Permutation>& fs) {
        size_t a = 0, b = fs.size();
        while (a < b && fs[a].is_identity()) ++a;
        while (b > a && fs[b - 1].is_identity()) --b;
        return std::vector<Permutation>(fs.begin() + a, fs.begin() + b);
    };
    SideConstellations out;
    out.horizontal_stripped = strip(horiz);
    out.vertical_stripped = strip(vert);
    out.horizontal = Constellation(std::move(horiz));
    out.vertical = Constellation(std::move(vert));
    return out;
}

SideConstellations side_constellations(const ComplexPoly& p, const Rectangle& rect, double tol,
                                       unsigned seed) {
    return side_constellations_of(side_chains(p, rect, tol, seed));
}

ComplexPoly lift_multiset_path(const ComplexPoly& p0, const std::vector<NumericMultiset>& targets,
                               double tol, unsigned seed) {
    if (targets.empty()) throw std::invalid_argument("lift_multiset_path: empty target list");
    const int d = p0.degree();
    for (auto& t : targets)
        if (t.size() != d - 1)
            throw std::invalid_argument("lift_multiset_path: target size must be d-1");

    CriticalData cd = critical_data(p0, -1, seed);
    double scale = 1 + cd.cvl.max_abs();
    for (auto& t : targets) scale = std::max(scale, 1 + t.max_abs());
    double tol_eff = tol > 0 ? tol : 1e-6 * scale;
    if (!multisets_match(targets.front(), cd.cvl, tol_eff))
        throw std::invalid_argument("lift_multiset_path: first target must equal cvl(p0)");

    std::vector<cplx> z = cd.cpt.points;
    std::vector<int> m = cd.cpt.mult;
    cplx c = p0.eval(0);
    cplx gauge = 0;
    for (size_t i = 0; i < z.size(); ++i) gauge += cplx(double(m[i])) * z[i];
    bool changed = false;
    double merge_tol = 1e-7 * (1 + cd.cpt.max_abs());

    auto merge_close_points = [&]() {
        bool merged = true;
        while (merged) {
            merged = false;
            for (size_t i = 0; i < z.size() && !merged; ++i)
                for (size_t j = i + 1; j < z.size() && !merged; ++j)
                    if (std::abs(z[i] - z[j]) < merge_tol) {
                        z[i] = (cplx(double(m[i])) * z[i] + cplx(double(m[j])) * z[j]) /
                               cplx(double(m[i] + m[j]));
                        m[i] += m[j];
                        z.erase(z.begin() + j);
                        m.erase(m.begin() + j);
                        merged = true;
                    }
        }
    };

    for (size_t step = 1; step < targets.size(); ++step) {
        const NumericMultiset& M = targets[step];
        // indiscrete target: the unique preimage is z^d + c (singular Jacobian)
        if (M.num_distinct() == 1 && d >= 2) {
            cplx zstar = gauge / cplx(double(d - 1));
            z = {zstar};
            m = {d - 1};
            cplx val0 = theta_apply(z, m, cplx(0), cplx(0))[0];
            c = M.points[0] - val0;
            changed = true;
            continue;
        }
        // assign each current critical point the nearest target value
        std::vector<cplx> vals = theta_apply(z, m, cplx(0), c);
        std::vector<cplx> goal(z.size());
        std::vector<int> received(M.num_distinct(), 0);
        for (size_t i = 0; i < z.size(); ++i) {
            int best = 0;
            for (int j = 1; j < M.num_distinct(); ++j)
                if (std::abs(vals[i] - M.points[j]) < std::abs(vals[i] - M.points[best]))
                    best = j;
            goal[i] = M.points[best];
            received[best] += m[i];
        }
        for (int j = 0; j < M.num_distinct(); ++j)
            if (received[j] != M.mult[j])
                throw std::invalid_argument(
                    "lift_multiset_path: shape decrease or multiplicity mismatch along path");
        bool already = true;
        for (size_t i = 0; i < z.size(); ++i)
            if (std::abs(vals[i] - goal[i]) > 1e-13 * scale) already = false;
        if (already) continue;

        // continue from vals to goal with adaptive subdivision
        double s = 0, h = 1;
        const double h_floor = std::pow(2.0, -20);
        while (s < 1) {
            double hh = std::min(h, 1 - s);
            std::vector<cplx> w(z.size());
            for (size_t i = 0; i < z.size(); ++i)
                w[i] = vals[i] + (s + hh) * (goal[i] - vals[i]);
            std::vector<cplx> z_try = z;
            cplx c_try = c;
            if (detail::newton_cvl_solve(z_try, m, c_try, w, gauge)) {
                z = z_try;
                c = c_try;
                s += hh;
                h = std::min(h * 2, 1.0);
                merge_close_points();
                if (z.size() != w.size()) break;  // shape merged; re-match against M
            } else {
                h = hh / 2;
                if (h < h_floor)
                    throw NumericalError(
                        "lift_multiset_path: Jacobian near-singular without a shape merge event");
            }
        }
        if (s < 1) {
            --step;  // re-run this target with the merged shape
            continue;
        }
        changed = true;
    }

    if (!changed) return p0;
    ComplexPoly result(theta_poly(z, m, cplx(0), c));
    if (!multisets_match(ll(result, -1, seed), targets.back(), std::max(tol_eff, 1e-6 * scale)))
        throw NumericalError("lift_multiset_path: endpoint verification failed");
    return result;
}

}  // namespace ncpoly
