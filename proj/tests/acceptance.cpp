// Acceptance harness: one pass/fail line per criterion, nonzero exit on any failure.
#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncpoly/cell_complexes.hpp"
#include "ncpoly/hurwitz.hpp"
#include "ncpoly/ll_fiber.hpp"
#include "ncpoly/monodromy.hpp"
#include "ncpoly/nc_lattice.hpp"
#include "ncpoly/poly_numeric.hpp"

using namespace ncpoly;
using cplx = std::complex<double>;

namespace {

int failures = 0;

void run(int idx, const std::string& name, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
        body();
    } catch (const std::exception& e) {
        err = e.what();
    } catch (...) {
        err = "unknown exception";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (err.empty()) {
        std::printf("PASS %2d  %-36s (%.2fs)\n", idx, name.c_str(), secs);
    } else {
        std::printf("FAIL %2d  %-36s (%.2fs): %s\n", idx, name.c_str(), secs, err.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

ComplexPoly deg5() {
    return ComplexPoly({cplx(1, 0), cplx(-17, 6) / 4.0, cplx(73, -63) / 15.0,
                        cplx(34, -12) / 25.0, cplx(-308, 252) / 125.0, cplx(0, 0)});
}

std::vector<std::string> chain_strings(const std::vector<NoncrossingPartition>& ps) {
    std::vector<std::string> out;
    for (auto& p : ps) out.push_back(p.to_string());
    return out;
}

std::vector<std::string> chain_strings(const NCChain& c) { return chain_strings(c.elements); }

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& x : v) s += x + " ";
    return s;
}

void check_weights(const std::vector<double>& got, const std::vector<double>& want,
                   double tol, const std::string& what) {
    require(got.size() == want.size(), what + ": wrong length");
    for (size_t i = 0; i < got.size(); ++i)
        require(std::abs(got[i] - want[i]) < tol, what + ": entry off");
}

// pseudo-random monic polynomial of degree d whose critical values are in
// generic position (distinct real and imaginary parts)
ComplexPoly random_generic_poly(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<cplx> rts;
        for (int i = 0; i < d; ++i) rts.emplace_back(u(rng), u(rng));
        ComplexPoly p(poly_from_roots(rts));
        try {
            auto cd = critical_data(p);
            if (static_cast<int>(cd.cvl.points.size()) != d - 1) continue;
            auto& pts = cd.cvl.points;
            bool ok = true;
            for (size_t i = 0; i < pts.size() && ok; ++i)
                for (size_t j = i + 1; j < pts.size() && ok; ++j)
                    if (std::abs(pts[i].real() - pts[j].real()) < 1e-2 ||
                        std::abs(pts[i].imag() - pts[j].imag()) < 1e-2)
                        ok = false;
            if (ok) return p;
        } catch (const NumericalError&) {
        }
    }
    throw std::runtime_error("could not generate a generic polynomial");
}

}  // namespace

int main() {
    run(1, "noncrossing partition counts", [] {
        std::vector<long long> catalan{1, 2, 5, 14, 42, 132, 429};
        for (int d = 1; d <= 7; ++d)
            require(static_cast<long long>(enumerate_ncpart(d).size()) == catalan[d - 1],
                    "Catalan count mismatch at d=" + std::to_string(d));
    });

    run(2, "maximal chain counts", [] {
        std::vector<long long> want{1, 3, 16, 125, 1296, 16807};
        for (int d = 2; d <= 7; ++d)
            require(static_cast<long long>(maximal_chains(d).size()) == want[d - 2],
                    "chain count mismatch at d=" + std::to_string(d));
    });

    run(3, "Kreweras complement properties", [] {
        for (int d = 1; d <= 7; ++d) {
            Permutation delta = Permutation::long_cycle(d);
            auto all = enumerate_ncpart(d);
            for (auto& p : all) {
                require(mul(perm_of(p), perm_of(kreweras(p))) == delta,
                        "complement factorization failed");
                require(perm_of(kreweras(kreweras(p))) ==
                            mul(mul(delta.inverse(), perm_of(p)), delta),
                        "double complement is not delta-conjugation");
            }
            if (d > 6) continue;
            for (auto& x : all)
                for (auto& y : all)
                    require(refinement_leq(x.part(), y.part()) ==
                                refinement_leq(kreweras(y).part(), kreweras(x).part()),
                            "complement is not order-reversing");
        }
    });

    run(4, "degree-9 worked example", [] {
        NoncrossingPartition top(SetPartition(9, {{1, 3, 7}, {2}, {4, 5}, {6}, {8}, {9}}));
        NoncrossingPartition bottom(SetPartition(9, {{1, 2}, {3, 5, 6}, {4}, {7, 8, 9}}));
        require(mul(perm_of(top), perm_of(bottom)) == Permutation::long_cycle(9),
                "permutation product is not the long cycle");
        auto m_top = matching_of_partition(top, Side::Top);
        auto m_bot = matching_of_partition(bottom, Side::Bottom);
        require(m_top == m_bot, "top and bottom matchings differ");
        require(partition_of_matching(m_top, Side::Top) == top, "top round trip failed");
        require(partition_of_matching(m_bot, Side::Bottom) == bottom,
                "bottom round trip failed");
    });

    run(5, "Hurwitz orbits", [] {
        for (int d = 3; d <= 5; ++d) {
            auto facs = minimal_transposition_factorizations(Permutation::long_cycle(d));
            require(static_cast<long long>(facs.size()) ==
                        static_cast<long long>(std::llround(std::pow(d, d - 2))),
                    "factorization count is not d^(d-2)");
            auto orbit = hurwitz_orbit(facs.front());
            std::set<Factorization> all(facs.begin(), facs.end());
            require(orbit.size() == all.size(), "orbit size mismatch");
            for (auto& f : orbit) require(all.count(f) == 1, "orbit left the brute-force set");
        }
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 50; ++trial) {
            int d = 4 + static_cast<int>(rng() % 3);  // braid relation needs >= 3 factors
            auto facs = minimal_transposition_factorizations(Permutation::long_cycle(d));
            const auto& f = facs[rng() % facs.size()];
            int i = 1 + static_cast<int>(rng() % (f.factors.size() - 2));
            auto lhs = hurwitz_move(hurwitz_move(hurwitz_move(f, i), i + 1), i);
            auto rhs = hurwitz_move(hurwitz_move(hurwitz_move(f, i + 1), i), i + 1);
            require(lhs == rhs, "braid relation failed");
            require(hurwitz_move_inverse(hurwitz_move(f, i), i) == f, "inverse move failed");
        }
    });

    run(6, "basketball counts", [] {
        std::vector<long long> want{1, 4, 22, 140, 969};
        for (int d = 1; d <= 5; ++d) {
            long long n = 0;
            auto all = enumerate_ncpart(d);
            for (auto& l : all)
                for (auto& b : all)
                    if (is_basketball(l, b)) ++n;
            require(n == want[d - 1], "basketball count mismatch at d=" + std::to_string(d));
        }
    });

    run(7, "dual braid complex cells", [] {
        auto s2 = dual_braid_complex_stats(2);
        require(s2.cells_by_dim == std::vector<long long>{1, 1}, "K_2 mismatch");
        auto s3 = dual_braid_complex_stats(3);
        require(s3.cells_by_dim == std::vector<long long>{1, 4, 3}, "K_3 mismatch");
        require(s3.euler == 0, "K_3 Euler characteristic");
        auto s4 = dual_braid_complex_stats(4);
        require(s4.cells_by_dim[0] == 1, "K_4 vertex count");
        require(s4.cells_by_dim[1] == 13, "K_4 edge count");
        require(s4.cells_by_dim[3] == 16, "K_4 top cell count");
        require(s4.euler == 0, "K_4 Euler characteristic");
    });

    run(8, "rectangle and annulus complexes", [] {
        auto s2 = rectangle_complex_stats(2);
        require(s2.vertices == 4, "d=2 vertex count");
        require(s2.top_cells == 1, "d=2 top cell count");
        auto s3 = rectangle_complex_stats(3);
        require(s3.vertices == 22, "d=3 vertex count");
        require(s3.top_cells == 6, "d=3 top cell count");
        std::vector<long long> catalan{1, 2, 5, 14, 42};
        for (int d = 1; d <= 5; ++d)
            require(annulus_vertex_class_count(d) == catalan[d - 1],
                    "annulus class count mismatch at d=" + std::to_string(d));
    });

    run(9, "degree-5 example end-to-end", [] {
        ComplexPoly p = deg5();
        auto cd = critical_data(p);
        auto want_cpt = cluster_points(
            {cplx(-0.4, 0), cplx(0.4, 0), cplx(1.4, -1.4), cplx(2.0, 0.2)}, 0);
        require(multisets_match(cd.cpt, want_cpt, 1e-9),
                "critical points off by more than 1e-9");
        // one-decimal reference values: each coordinate within 0.05
        std::vector<cplx> want_cvl{cplx(0.8, -0.6), cplx(-0.6, 0.5), cplx(-8.5, -4.3),
                                   cplx(3.6, -6.9)};
        require(cd.cvl.points.size() == 4, "wrong number of critical values");
        for (auto& w : want_cvl) {
            bool hit = false;
            for (auto& v : cd.cvl.points)
                if (std::abs(v.real() - w.real()) <= 5e-2 &&
                    std::abs(v.imag() - w.imag()) <= 5e-2)
                    hit = true;
            require(hit, "critical value off by more than 0.05 per coordinate");
        }

        Rectangle rect{-10, 5, -9, 2};
        auto sc = side_chains(p, rect);
        std::vector<std::string> want_left{"1|2|3|4|5", "1|2|3|45", "1|245|3", "1|2345",
                                           "12345"};
        std::vector<std::string> want_bottom{"1|2|3|4|5", "15|2|3|4", "145|2|3", "145|23",
                                             "12345"};
        std::vector<std::string> want_right{"12345", "1235|4", "15|23|4", "15|2|3|4",
                                            "1|2|3|4|5"};
        std::vector<std::string> want_top{"12345", "1|2345", "1|234|5", "1|24|3|5",
                                          "1|2|3|4|5"};
        require(chain_strings(sc.left) == want_left,
                "left chain: " + join(chain_strings(sc.left)));
        require(chain_strings(sc.bottom) == want_bottom,
                "bottom chain: " + join(chain_strings(sc.bottom)));
        require(chain_strings(sc.right) == want_right,
                "right chain: " + join(chain_strings(sc.right)));
        require(chain_strings(sc.top) == want_top,
                "top chain: " + join(chain_strings(sc.top)));
        check_weights(sc.left_weights, {.102, .528, .089, .191, .091}, 5e-3,
                      "horizontal weights");
        check_weights(sc.bottom_weights, {.190, .241, .334, .098, .136}, 5e-3,
                      "vertical weights");
    });

    run(10, "monodromy convention anchors", [] {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 10; ++trial) {
            int d = 2 + trial % 5;
            ComplexPoly p = random_generic_poly(d, rng);
            auto cd = critical_data(p);
            Rectangle rect = bounding_rectangle(cd.cvl, 0.5);
            cplx b(rect.xl, rect.yb);
            auto lf = standard_labels(p, b);
            PathSpec loop({b, cplx(rect.xl, rect.yt), cplx(rect.xr, rect.yt),
                           cplx(rect.xr, rect.yb), b},
                          true);
            require(loop_monodromy(p, lf, loop) == Permutation::long_cycle(d),
                    "global clockwise loop is not the long cycle");
            auto sc = side_chains(p, rect);
            Permutation delta = Permutation::long_cycle(d);
            for (int i = 0; i < sc.left.length(); ++i)
                require(mul(perm_of(sc.left.elements[i]), perm_of(sc.right[i])) == delta,
                        "left*right != delta");
            for (int j = 0; j < sc.bottom.length(); ++j)
                require(mul(perm_of(sc.top[j]), perm_of(sc.bottom.elements[j])) == delta,
                        "top*bottom != delta");
        }
    });

    run(11, "critical-value fiber enumeration", [] {
        // target {-2, 2}, d = 3: fiber is exactly { z^3 - 3 w^k z }
        auto target = cluster_points({cplx(-2, 0), cplx(2, 0)}, 0);
        auto res = fiber_enumerate(target, 3, -1, 0);
        require(res.polynomials.size() == 3, "d=3 fiber size is not 3");
        cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
        std::set<int> seen;
        for (auto& q : res.polynomials) {
            require(q.coeffs.size() == 4, "wrong degree");
            bool matched = false;
            for (int k = 0; k < 3; ++k) {
                cplx a = -3.0 * std::pow(omega, k);
                if (std::abs(q.coeffs[1]) < 1e-8 && std::abs(q.coeffs[2] - a) < 1e-8 &&
                    std::abs(q.coeffs[3]) < 1e-8) {
                    seen.insert(k);
                    matched = true;
                }
            }
            require(matched, "fiber polynomial is not of the form z^3 - 3 w^k z");
        }
        require(seen.size() == 3, "the three rotations were not all found");

        // seeded generic d = 4 target: full fiber with distinct constellations
        auto target4 = cluster_points({cplx(-2.0, 0.3), cplx(0.5, -1.1), cplx(1.7, 0.9)}, 0);
        auto res4 = fiber_enumerate(target4, 4, -1, 0);
        require(res4.polynomials.size() == 16, "d=4 fiber size is not 16");
        std::set<std::string> labels;
        for (auto& cons : res4.labels) {
            std::string key;
            for (auto& g : cons) key += g.to_string() + ";";
            labels.insert(key);
        }
        require(labels.size() == 16, "constellations are not pairwise distinct");
    });

    run(12, "critical-point Jacobian determinant", [] {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        int done = 0;
        while (done < 20) {
            int k = 2 + static_cast<int>(rng() % 3);
            std::vector<cplx> z;
            std::vector<int> m;
            int total = 0;
            for (int i = 0; i < k; ++i) {
                z.emplace_back(u(rng), u(rng));
                int mi = 1 + static_cast<int>(rng() % 2);
                if (total + mi + (k - i - 1) > 4) mi = 1;
                m.push_back(mi);
                total += mi;
            }
            cplx b(u(rng), u(rng)), c(u(rng), u(rng));
            // well-separated points only
            bool sep = true;
            for (size_t i = 0; i < z.size() && sep; ++i) {
                if (std::abs(z[i] - b) < 0.3) sep = false;
                for (size_t j = i + 1; j < z.size() && sep; ++j)
                    if (std::abs(z[i] - z[j]) < 0.3) sep = false;
            }
            if (!sep) continue;
            cplx closed = theta_jacobian_det(z, m, b, c);
            if (std::abs(closed) < 1e-3) continue;

            double h = 1e-5;
            Eigen::MatrixXcd J(k, k);
            for (int j = 0; j < k; ++j) {
                auto zp = z, zm = z;
                zp[j] += h;
                zm[j] -= h;
                auto wp = theta_apply(zp, m, b, c);
                auto wm = theta_apply(zm, m, b, c);
                for (int i = 0; i < k; ++i) J(i, j) = (wp[i] - wm[i]) / (2 * h);
            }
            cplx fd = J.determinant();
            require(std::abs(fd - closed) / std::abs(closed) < 1e-5,
                    "finite-difference determinant disagrees");
            ++done;
        }
        // coincident critical points give an exactly singular Jacobian
        cplx z0(0.7, -0.3);
        require(theta_jacobian_det({z0, z0}, {1, 1}, cplx(2, 1), cplx(0, 0)) == cplx(0, 0),
                "coincident points should give exact zero");
    });

    run(13, "critical-value path lifting", [] {
        // constant path returns the input unchanged
        ComplexPoly p3({1, 0, -3, 0});
        auto cvl3 = critical_data(p3).cvl;
        auto same = lift_multiset_path(p3, {cvl3, cvl3, cvl3});
        for (size_t i = 0; i < 4; ++i)
            require(std::abs(same.coeffs[i] - p3.coeffs[i]) < 1e-12,
                    "constant path moved the polynomial");

        // merging {-2, 2} to {0, 0} lands on z^3
        std::vector<NumericMultiset> collapse;
        for (int s = 0; s <= 16; ++s) {
            double t = 1.0 - s / 16.0;
            collapse.push_back(cluster_points({cplx(-2 * t, 0), cplx(2 * t, 0)}, 1e-12));
        }
        auto z3 = lift_multiset_path(p3, collapse);
        for (size_t i = 1; i < 4; ++i)
            require(std::abs(z3.coeffs[i]) < 1e-8, "merge did not land on z^3");

        // vertically collapsing the degree-5 critical values preserves the
        // stripped horizontal constellation
        ComplexPoly p = deg5();
        Rectangle rect{-10, 5, -9, 2};
        auto before = side_constellations(p, rect);
        auto cvl = critical_data(p).cvl;
        double mean = 0;
        for (auto& w : cvl.points) mean += w.imag();
        mean /= cvl.points.size();
        auto make_path = [&](int steps) {
            std::vector<NumericMultiset> path;
            for (int s = 0; s <= steps; ++s) {
                double t = static_cast<double>(s) / steps;
                std::vector<cplx> pts;
                for (auto& w : cvl.points)
                    pts.emplace_back(w.real(), (1 - t) * w.imag() + t * mean);
                path.push_back(cluster_points(pts, 0));
            }
            return path;
        };
        auto q = lift_multiset_path(p, make_path(32));
        auto after = side_constellations(q, rect);
        require(before.horizontal_stripped == after.horizontal_stripped,
                "stripped horizontal constellation changed under vertical collapse");

        // discretization refinement stability
        auto q2 = lift_multiset_path(p, make_path(64));
        for (size_t i = 0; i < q.coeffs.size(); ++i)
            require(std::abs(q.coeffs[i] - q2.coeffs[i]) < 1e-6,
                    "lift depends on the path discretization");
    });

    if (failures == 0) {
        std::printf("all 13 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
