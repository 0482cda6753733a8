#include <doctest.h>

#include "ncpoly/monodromy.hpp"
#include "ncpoly/nc_lattice.hpp"
#include "ncpoly/poly_numeric.hpp"

using namespace ncpoly;
using cplx = std::complex<double>;

TEST_CASE("fiber and standard labels") {
    for (int d = 2; d <= 5; ++d) {
        std::vector<cplx> coeffs(d + 1, cplx(0, 0));
        coeffs[0] = 1;
        ComplexPoly p(coeffs);  // z^d
        auto lf = standard_labels(p, cplx(10, -7));
        REQUIRE(static_cast<int>(lf.points.size()) == d);
        for (auto& z : lf.points) CHECK(std::abs(p.eval(z) - cplx(10, -7)) < 1e-6);
        // all labeled points distinct
        for (size_t i = 0; i < lf.points.size(); ++i)
            for (size_t j = i + 1; j < lf.points.size(); ++j)
                CHECK(std::abs(lf.points[i] - lf.points[j]) > 1e-6);
    }
    // fiber at a critical value is rejected
    CHECK_THROWS_AS(fiber(ComplexPoly({1, 0, 0}), cplx(0, 0)), NumericalError);
}

TEST_CASE("monodromy of z^d around the origin") {
    // clockwise rectangle around the unique critical value 0 gives the long cycle
    for (int d = 2; d <= 5; ++d) {
        std::vector<cplx> coeffs(d + 1, cplx(0, 0));
        coeffs[0] = 1;
        ComplexPoly p(coeffs);
        cplx b(-3, -3);
        PathSpec loop({b, cplx(-3, 3), cplx(3, 3), cplx(3, -3), b}, true);
        auto lf = standard_labels(p, b);
        CHECK(loop_monodromy(p, lf, loop) == Permutation::long_cycle(d));
        // counterclockwise gives the inverse
        PathSpec ccw({b, cplx(3, -3), cplx(3, 3), cplx(-3, 3), b}, true);
        CHECK(loop_monodromy(p, lf, ccw) == Permutation::long_cycle(d).inverse());
    }
}

TEST_CASE("monodromy composition: earlier loop is the left factor") {
    // z^3 - 3z has critical values -+2; two small clockwise loops compose
    // (earlier on the left) to the full clockwise boundary loop
    ComplexPoly p({1, 0, -3, 0});
    cplx b(-4, -3);
    auto lf = standard_labels(p, b);
    PathSpec around_m2({b, cplx(-4, 3), cplx(0, 3), cplx(0, -3), b}, true);
    PathSpec around_p2({b, cplx(0, -3), cplx(0, 3), cplx(4, 3), cplx(4, -3), b}, true);
    PathSpec around_both({b, cplx(-4, 3), cplx(4, 3), cplx(4, -3), b}, true);
    auto g1 = loop_monodromy(p, lf, around_m2);
    auto g2 = loop_monodromy(p, lf, around_p2);
    auto g = loop_monodromy(p, lf, around_both);
    CHECK(g1.absolute_length() == 1);
    CHECK(g2.absolute_length() == 1);
    CHECK(mul(g1, g2) == g);
    CHECK(g == Permutation::long_cycle(3));
    // a loop through a critical value is rejected
    PathSpec bad({b, cplx(-2, -3), cplx(-2, 3), cplx(-4, 3), b}, true);
    CHECK_THROWS_AS(loop_monodromy(p, lf, bad), ClearanceError);
}

TEST_CASE("continuation self-consistency under refinement") {
    ComplexPoly p({1, cplx(0.3, 0.1), -2, cplx(1, 0.5)});
    cplx b(-5, -4);
    auto lf = standard_labels(p, b);
    PathSpec coarse({b, cplx(5, -4), cplx(5, 4)}, false);
    PathSpec fine({b, cplx(0, -4), cplx(5, -4), cplx(5, 0), cplx(5, 4)}, false);
    auto a = continue_fiber(p, lf, coarse);
    auto c = continue_fiber(p, lf, fine);
    REQUIRE(a.points.size() == c.points.size());
    for (size_t i = 0; i < a.points.size(); ++i)
        CHECK(std::abs(a.points[i] - c.points[i]) < 1e-6);
}

TEST_CASE("side chains of z^3 - 3z") {
    ComplexPoly p({1, 0, -3, 0});
    Rectangle rect{-4, 4, -3, 3};
    auto sc = side_chains(p, rect);
    REQUIRE(sc.left.length() == 3);         // k = k' + 1 with k' = 2 distinct real parts
    REQUIRE(sc.bottom.length() == 2);       // both critical values share one imaginary part
    CHECK(sc.left.elements.front() == NoncrossingPartition::discrete(3));
    CHECK(sc.left.elements.back() == NoncrossingPartition::indiscrete(3));
    // left/right and top/bottom entries are pointwise delta-complements
    Permutation delta = Permutation::long_cycle(3);
    for (int i = 0; i < sc.left.length(); ++i)
        CHECK(mul(perm_of(sc.left.elements[i]), perm_of(sc.right[i])) == delta);
    for (int j = 0; j < sc.bottom.length(); ++j)
        CHECK(mul(perm_of(sc.top[j]), perm_of(sc.bottom.elements[j])) == delta);
    double wsum = 0;
    for (double w : sc.left_weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0));

    // constellations multiply to delta
    auto cons = side_constellations_of(sc);
    CHECK(product(cons.horizontal.factors) == delta);
    CHECK(product(cons.vertical.factors) == delta);
    CHECK(product(cons.horizontal_stripped) == delta);
}

TEST_CASE("geocom of z^3 - 3z") {
    ComplexPoly p({1, 0, -3, 0});
    Rectangle rect{-4, 4, -3, 3};
    auto g = geocom(p, rect);
    CHECK(g.left_chain.length() == 3);
    CHECK(g.left_weights.size() == 3);
    CHECK(g.bottom_chain.length() == 2);
    CHECK(g.left_chain.elements.front() == NoncrossingPartition::discrete(3));
    CHECK(g.left_chain.elements.back() == NoncrossingPartition::indiscrete(3));
}

TEST_CASE("stripped constellation of z^d + c") {
    ComplexPoly p({1, 0, 0, cplx(0.3, 0.2)});
    auto cvl = critical_data(p).cvl;
    auto cons = side_constellations(p, bounding_rectangle(cvl, 0.5));
    REQUIRE(cons.horizontal_stripped.size() == 1);
    CHECK(cons.horizontal_stripped[0] == Permutation::long_cycle(3));
}

TEST_CASE("lifting multiset paths of critical values") {
    // move the critical values of z^3 - 3z from {-2, 2} to {-2+i, 2+i}:
    // the result is the vertical translate z^3 - 3z + i
    ComplexPoly p({1, 0, -3, 0});
    std::vector<NumericMultiset> path;
    for (int s = 0; s <= 8; ++s) {
        double t = s / 8.0;
        path.push_back(cluster_points({cplx(-2, t), cplx(2, t)}, 0));
    }
    auto q = lift_multiset_path(p, path);
    REQUIRE(q.coeffs.size() == 4);
    CHECK(std::abs(q.coeffs[1]) < 1e-6);
    CHECK(std::abs(q.coeffs[2] - cplx(-3, 0)) < 1e-6);
    CHECK(std::abs(q.coeffs[3] - cplx(0, 1)) < 1e-6);

    // collapse onto the indiscrete stratum: {-2,2} -> {0,0} gives z^3
    std::vector<NumericMultiset> collapse;
    for (int s = 0; s <= 8; ++s) {
        double t = 1.0 - s / 8.0;
        collapse.push_back(cluster_points({cplx(-2 * t, 0), cplx(2 * t, 0)}, 1e-12));
    }
    auto z3 = lift_multiset_path(p, collapse);
    for (int i = 1; i <= 3; ++i) CHECK(std::abs(z3.coeffs[i]) < 1e-6);

    // a shape-decreasing path is rejected
    std::vector<NumericMultiset> bad{collapse.back(), path.front()};
    CHECK_THROWS(lift_multiset_path(ComplexPoly({1, 0, 0, 0}), bad));
}
