#include "ncpoly/ll_fiber.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <thread>

namespace ncpoly {

namespace {

long long expected_count(int d) {
    long long e = 1;
    for (int i = 0; i < d - 2; ++i) e *= d;
    return e;
}

int thread_cap() {
    if (const char* env = std::getenv("NCPOLY_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

std::vector<Permutation> label_of(const ComplexPoly& q, const Rectangle& rect, unsigned seed) {
    return side_constellations(q, rect, -1, seed).horizontal_stripped;
}

}  // namespace

FiberResult fiber_enumerate(const NumericMultiset& target, int d, int starts, unsigned seed) {
    if (d < 2) throw std::invalid_argument("fiber_enumerate: d must be >= 2");
    if (target.size() != d - 1)
        throw std::invalid_argument("fiber_enumerate: target must have d-1 values");

    FiberResult out;
    out.target = target;
    out.diagnostics.expected = static_cast<int>(expected_count(d));
    out.diagnostics.dedup_radius = 1e-6;

    // indiscrete target: unique preimage z^d + c, singular for Newton
    if (target.num_distinct() == 1 && target.mult[0] == d - 1) {
        std::vector<cplx> coeffs(d + 1, cplx(0));
        coeffs[0] = 1;
        coeffs[d] = target.points[0];
        ComplexPoly q(std::move(coeffs));
        Rectangle rect = bounding_rectangle(target, 0.5);
        out.polynomials.push_back(q);
        out.labels.push_back(label_of(q, rect, seed));
        out.diagnostics.starts = 0;
        return out;
    }
    for (int m : target.mult)
        if (m != 1)
            throw std::invalid_argument(
                "fiber_enumerate: non-generic (and non-indiscrete) targets are unsupported");

    double scale = 1 + target.max_abs();
    // rotate until all real parts are distinct; the solver's column structure
    // needs them separated
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    std::uniform_real_distribution<double> U(0, 2 * M_PI);
    double phase = 0;
    std::vector<cplx> u;
    for (int attempt = 0; attempt < 50; ++attempt) {
        u.clear();
        for (auto& t : target.points) u.push_back(std::exp(cplx(0, phase)) * t);
        double minsep = 1e300;
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = i + 1; j < u.size(); ++j)
                minsep = std::min(minsep, std::abs(u[i].real() - u[j].real()));
        if (u.size() < 2 || minsep > 1e-4 * scale) break;
        phase = U(rng);
    }
    out.diagnostics.rotation_phase = phase;

    const int k = d - 1;
    const int n_starts = starts > 0 ? starts : 200 * out.diagnostics.expected;
    out.diagnostics.starts = n_starts;
    const std::vector<int> ones(k, 1);
    const double radius = 2 * (1 + target.max_abs());

    // each start is seeded independently, so the result set is deterministic
    // for a given seed regardless of thread count
    auto run_start = [&](int idx) -> std::optional<std::vector<cplx>> {
        std::mt19937_64 r(seed * 1315423911ULL + 0x51ULL * idx + 17);
        std::uniform_real_distribution<double> u01(0, 1);
        std::vector<cplx> z(k);
        cplx zsum = 0;
        for (auto& zi : z) {
            double rr = radius * std::sqrt(u01(r)), th = 2 * M_PI * u01(r);
            zi = rr * std::exp(cplx(0, th));
            zsum += zi;
        }
        for (auto& zi : z) zi -= zsum / cplx(double(k));  // start in the gauge slice
        std::vector<cplx> goal = u;
        std::shuffle(goal.begin(), goal.end(), r);
        cplx c = 0;
        for (auto& g : goal) c += g;
        c /= cplx(double(k));
        if (!detail::newton_cvl_solve(z, ones, c, goal, cplx(0), 60)) return std::nullopt;
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t j = i + 1; j < z.size(); ++j)
                if (std::abs(z[i] - z[j]) < 1e-6 * (1 + std::abs(z[i]))) return std::nullopt;
        return theta_poly(z, ones, cplx(0), c);
    };

    const int threads = std::max(1, std::min(thread_cap(), 16));
    std::vector<std::vector<cplx>> found;  // deduped coefficient vectors, rotated frame
    double dedup_abs = out.diagnostics.dedup_radius * scale;
    NumericMultiset u_ms = cluster_points(u, 1e-9 * scale);

    int done = 0;
    while (done < n_starts &&
           static_cast<int>(found.size()) < out.diagnostics.expected) {
        int block = std::min(n_starts - done, 64 * threads);
        std::vector<std::optional<std::vector<cplx>>> results(block);
        if (threads == 1) {
            for (int i = 0; i < block; ++i) results[i] = run_start(done + i);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&, t]() {
                    for (int i = t; i < block; i += threads) results[i] = run_start(done + i);
                });
            for (auto& th : pool) th.join();
        }
        for (int i = 0; i < block; ++i) {
            if (!results[i]) continue;
            const auto& cs = *results[i];
            bool dup = false;
            for (auto& f : found) {
                double dist = 0;
                for (size_t j = 0; j < cs.size(); ++j)
                    dist = std::max(dist, std::abs(cs[j] - f[j]));
                if (dist <= dedup_abs) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            // verify the critical values really match the (rotated) target
            try {
                if (!multisets_match(ll(ComplexPoly(cs), -1, seed), u_ms, 1e-5 * scale)) continue;
            } catch (const NumericalError&) {
                continue;
            }
            found.push_back(cs);
        }
        done += block;
    }

    Rectangle rect = bounding_rectangle(u_ms, 0.5);
    cplx unrot = std::exp(cplx(0, -phase / d));
    for (auto& cs : found) {
        ComplexPoly q(cs);
        out.labels.push_back(label_of(q, rect, seed));
        std::vector<cplx> orig(cs.size());
        cplx f = 1;
        for (size_t j = 0; j < cs.size(); ++j) {
            orig[j] = cs[j] * f;
            f *= unrot;
        }
        out.polynomials.push_back(ComplexPoly(std::move(orig)));
    }
    return out;
}

}  // namespace ncpoly
