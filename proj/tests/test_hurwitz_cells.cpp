#include <doctest.h>

#include <cmath>
#include <set>

#include "ncpoly/cell_complexes.hpp"
#include "ncpoly/hurwitz.hpp"
#include "ncpoly/nc_lattice.hpp"

using namespace ncpoly;

TEST_CASE("hurwitz moves") {
    Permutation a = Permutation::from_cycles(3, {{1, 2}});
    Permutation b = Permutation::from_cycles(3, {{2, 3}});
    Factorization f({a, b});
    auto g = hurwitz_move(f, 1);
    CHECK(g.factors[0] == b);
    CHECK(g.factors[1] == Permutation::from_cycles(3, {{1, 3}}));
    CHECK(g.target == f.target);
    CHECK(hurwitz_move_inverse(g, 1) == f);

    // braid relation: moves at positions i, i+1 satisfy m_i m_{i+1} m_i = m_{i+1} m_i m_{i+1}
    Factorization h({Permutation::from_cycles(4, {{1, 2}}),
                     Permutation::from_cycles(4, {{2, 3}}),
                     Permutation::from_cycles(4, {{3, 4}})});
    auto lhs = hurwitz_move(hurwitz_move(hurwitz_move(h, 1), 2), 1);
    auto rhs = hurwitz_move(hurwitz_move(hurwitz_move(h, 2), 1), 2);
    CHECK(lhs == rhs);
    // inverse undoes the move at every position
    for (int i = 1; i <= 2; ++i) CHECK(hurwitz_move_inverse(hurwitz_move(h, i), i) == h);
}

TEST_CASE("hurwitz orbits and minimal factorizations") {
    // minimal transposition factorizations of the d-cycle: d^{d-2} of them,
    // forming a single Hurwitz orbit
    std::vector<long long> want{1, 3, 16, 125};
    for (int d = 2; d <= 5; ++d) {
        auto facs = minimal_transposition_factorizations(Permutation::long_cycle(d));
        CHECK(static_cast<long long>(facs.size()) == want[d - 2]);
        std::set<Factorization> all(facs.begin(), facs.end());
        auto orbit = hurwitz_orbit(facs.front());
        CHECK(orbit.size() == all.size());
        for (auto& f : orbit) CHECK(all.count(f) == 1);
    }
    // factorizations of a non-cycle target
    auto facs22 = minimal_transposition_factorizations(
        Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
    CHECK(facs22.size() == 2);
}

TEST_CASE("dual braid complex") {
    auto s2 = dual_braid_complex_stats(2);
    CHECK(s2.cells_by_dim == std::vector<long long>{1, 1});
    auto s3 = dual_braid_complex_stats(3);
    CHECK(s3.cells_by_dim == std::vector<long long>{1, 4, 3});
    CHECK(s3.euler == 0);
    std::vector<long long> catalan{1, 2, 5, 14, 42, 132};
    std::vector<long long> top{1, 3, 16, 125};
    for (int d = 2; d <= 5; ++d) {
        auto s = dual_braid_complex_stats(d);
        CHECK(s.cells_by_dim[0] == 1);
        CHECK(s.cells_by_dim[1] == catalan[d - 1] - 1);
        CHECK(s.cells_by_dim.back() == top[d - 2]);
        CHECK(s.euler == 0);
    }
}

TEST_CASE("standardize_circle") {
    DualBraidSimplex s(Permutation::identity(3),
                       {Permutation::from_cycles(3, {{1, 2}})},
                       Permutation::from_cycles(3, {{2, 3}}));
    auto r = standardize_circle(s);
    CHECK(r.left == Permutation::from_cycles(3, {{1, 3}}));
    CHECK(r.edge_labels == std::vector<Permutation>{Permutation::from_cycles(3, {{1, 2}})});
    CHECK(r.right.is_identity());
    // product stays delta and the right end is always trivial
    CHECK(product(r.constellation()) == Permutation::long_cycle(3));
}

TEST_CASE("basketballs") {
    // Fuss-Catalan counts
    std::vector<long long> want{1, 4, 22, 140, 969};
    for (int d = 1; d <= 5; ++d) {
        long long n = 0;
        auto all = enumerate_ncpart(d);
        for (auto& l : all)
            for (auto& b : all)
                if (is_basketball(l, b)) ++n;
        CHECK(n == want[d - 1]);
    }
    // a Kreweras pair is always a basketball; crossing side data is not
    for (auto& q : enumerate_ncpart(5)) CHECK(is_basketball(q, kreweras(q)));
    CHECK(!is_basketball(NoncrossingPartition(SetPartition(3, {{1}, {2, 3}})),
                         NoncrossingPartition(SetPartition(3, {{1, 2}, {3}}))));
}

TEST_CASE("rectangle complex") {
    auto s2 = rectangle_complex_stats(2);
    CHECK(s2.vertices == 4);
    CHECK(s2.top_cells == 1);
    auto s3 = rectangle_complex_stats(3);
    CHECK(s3.vertices == 22);
    CHECK(s3.top_cells == 6);  // (d-1)! * d^{d-2}
    auto s4 = rectangle_complex_stats(4);
    CHECK(s4.vertices == 140);
    CHECK(s4.top_cells == 6 * 16);
    // contractible: Euler characteristic 1
    for (auto* s : {&s2, &s3, &s4}) {
        long long chi = 0;
        for (auto& [bd, cnt] : s->cells_by_bidim)
            chi += ((bd.first + bd.second) % 2 == 0 ? cnt : -cnt);
        CHECK(chi == 1);
    }
}

TEST_CASE("annulus classes") {
    std::vector<long long> catalan{1, 2, 5, 14, 42};
    for (int d = 1; d <= 5; ++d) CHECK(annulus_vertex_class_count(d) == catalan[d - 1]);
}

TEST_CASE("orthoscheme points") {
    // multiset {1,1,2,3,3} in [0,4]
    std::vector<double> w;
    auto pt = orthoscheme_point_of_multiset({{1.0, 2}, {2.0, 1}, {3.0, 2}}, 0.0, 4.0, &w);
    CHECK(pt.composition == LinearComposition({0, 2, 1, 2, 0}));
    CHECK(pt.interior_points == std::vector<double>{1.0, 2.0, 3.0});
    REQUIRE(w.size() == 4);
    for (double wi : w) CHECK(wi == doctest::Approx(0.25));
    auto ex = orthoscheme_expand(pt);
    CHECK(ex == std::vector<double>{1.0, 1.0, 2.0, 3.0, 3.0});

    // mass sitting on the left endpoint lands in m_l
    auto pe = orthoscheme_point_of_multiset({{0.0, 1}, {2.0, 2}}, 0.0, 4.0, nullptr);
    CHECK(pe.composition == LinearComposition({1, 2, 0}));

    // distance is symmetric and zero on itself
    CHECK(orthoscheme_distance(pt, pt) == doctest::Approx(0.0));
    auto pt2 = orthoscheme_point_of_multiset({{1.0, 1}, {2.0, 3}, {3.0, 1}}, 0.0, 4.0, nullptr);
    CHECK(orthoscheme_distance(pt, pt2) == doctest::Approx(orthoscheme_distance(pt2, pt)));
    CHECK(orthoscheme_distance(pt, pt2) == doctest::Approx(std::sqrt(2.0)));
}
