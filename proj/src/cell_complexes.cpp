#include "ncpoly/cell_complexes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncpoly {

DualBraidSimplex::DualBraidSimplex(Permutation l, std::vector<Permutation> labels, Permutation r)
    : left(std::move(l)), edge_labels(std::move(labels)), right(std::move(r)) {
    for (auto& s : edge_labels)
        if (s.is_identity())
            throw std::invalid_argument("DualBraidSimplex: trivial edge label");
    if (product(constellation()) != Permutation::long_cycle(left.n()))
        throw std::invalid_argument("DualBraidSimplex: constellation product is not delta");
}

std::vector<Permutation> DualBraidSimplex::constellation() const {
    std::vector<Permutation> c{left};
    c.insert(c.end(), edge_labels.begin(), edge_labels.end());
    c.push_back(right);
    return c;
}

namespace {

bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int changes = 0, last = -1;
    while (i < a.size() || j < b.size()) {
        int which;
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            which = 0;
            ++i;
        } else {
            which = 1;
            ++j;
        }
        if (which != last) {
            if (last != -1) ++changes;
            last = which;
        }
    }
    return changes >= 3;
}

// All strictly increasing chains (as index lists) in the refinement order on
// enumerate_ncpart(d).
struct LatticeData {
    std::vector<NoncrossingPartition> elems;
    std::vector<std::vector<bool>> leq;  // leq[i][j]: elems[i] <= elems[j]
};

LatticeData lattice_data(int d) {
    LatticeData L;
    L.elems = enumerate_ncpart(d);
    size_t m = L.elems.size();
    L.leq.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            L.leq[i][j] = refinement_leq(L.elems[i].part(), L.elems[j].part());
    return L;
}

std::vector<std::vector<int>> all_chains(const LatticeData& L) {
    size_t m = L.elems.size();
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    std::function<void()> rec = [&]() {
        out.push_back(chain);
        // extend by any element strictly above the top (chains are totally
        // ordered, so checking the top suffices)
        for (size_t j = 0; j < m; ++j) {
            if (static_cast<int>(j) != chain.back() && L.leq[chain.back()][j]) {
                chain.push_back(static_cast<int>(j));
                rec();
                chain.pop_back();
            }
        }
    };
    for (size_t i = 0; i < m; ++i) {
        chain = {static_cast<int>(i)};
        rec();
    }
    return out;
}

}  // namespace

ComplexStats dual_braid_complex_stats(int d) {
    if (d < 2 || d > 7) throw std::invalid_argument("dual_braid_complex_stats: need 2 <= d <= 7");
    LatticeData L = lattice_data(d);
    std::vector<Permutation> perms;
    for (auto& p : L.elems) perms.push_back(perm_of(p));

    std::set<std::vector<std::vector<int>>> distinct;  // label sequences as one-line rows
    std::vector<long long> by_dim(d, 0);
    for (auto& chain : all_chains(L)) {
        std::vector<std::vector<int>> labels;
        for (size_t i = 1; i < chain.size(); ++i)
            labels.push_back(mul(perms[chain[i - 1]].inverse(), perms[chain[i]]).one_line());
        if (distinct.insert(labels).second) by_dim[labels.size()]++;
    }
    while (by_dim.size() > 1 && by_dim.back() == 0) by_dim.pop_back();
    ComplexStats st;
    st.d = d;
    st.cells_by_dim = by_dim;
    for (size_t k = 0; k < by_dim.size(); ++k) st.euler += (k % 2 ? -1 : 1) * by_dim[k];
    return st;
}

DualBraidSimplex standardize_circle(const DualBraidSimplex& s) {
    Permutation delta = Permutation::long_cycle(s.left.n());
    Permutation new_left = mul(mul(mul(delta, s.right), delta.inverse()), s.left);
    return DualBraidSimplex(new_left, s.edge_labels, Permutation::identity(s.left.n()));
}

SetPartition side_partition_of_pair(const NoncrossingPartition& pL,
                                    const NoncrossingPartition& pB) {
    const int d = pL.d();
    if (pB.d() != d) throw std::invalid_argument("side_partition_of_pair: mixed degrees");
    // positions around the 4d-gon: T_m, L_m, B_m, R_m at 4(m-1)+1..4
    auto T = [](int m) { return 4 * (m - 1) + 1; };
    auto Lp = [](int m) { return 4 * (m - 1) + 2; };
    auto B = [](int m) { return 4 * (m - 1) + 3; };
    auto R = [](int m) { return 4 * (m - 1) + 4; };

    Permutation piL = perm_of(pL), piB = perm_of(pB);
    std::vector<std::vector<int>> blocks;
    for (int m = 1; m <= d; ++m) blocks.push_back({B(m), T(piL(m))});   // TB arcs of piL
    for (int m = 1; m <= d; ++m) blocks.push_back({R(m), Lp(piB(m))});  // LR arcs of piB
    for (auto& b : blocks) std::sort(b.begin(), b.end());

    // repeatedly merge any two crossing blocks
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < blocks.size() && !merged; ++i) {
            for (size_t j = i + 1; j < blocks.size() && !merged; ++j) {
                if (blocks_cross(blocks[i], blocks[j])) {
                    std::vector<int> u;
                    std::merge(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                               blocks[j].end(), std::back_inserter(u));
                    blocks[i] = std::move(u);
                    blocks.erase(blocks.begin() + j);
                    merged = true;
                }
            }
        }
    }
    return SetPartition(4 * d, std::move(blocks));
}

bool is_basketball(const NoncrossingPartition& pL, const NoncrossingPartition& pB) {
    SetPartition sp = side_partition_of_pair(pL, pB);
    for (auto& b : sp.blocks)
        if (b.size() != 4) return false;
    return true;  // merged closure is noncrossing by construction
}

bool is_basketball(const Permutation& piL, const Permutation& piB) {
    return is_basketball(partition_of_perm(piL), partition_of_perm(piB));
}

RectangleCellLabel::RectangleCellLabel(NCChain left, NCChain bottom)
    : left_chain(std::move(left)), bottom_chain(std::move(bottom)) {
    if (left_chain.d() != bottom_chain.d())
        throw std::invalid_argument("RectangleCellLabel: mixed degrees");
    for (auto& l : left_chain.elements)
        for (auto& b : bottom_chain.elements)
            if (!is_basketball(l, b))
                throw std::invalid_argument("RectangleCellLabel: incompatible chain pair");
}

RectangleStats rectangle_complex_stats(int d) {
    if (d < 1 || d > 5) throw std::invalid_argument("rectangle_complex_stats: need 1 <= d <= 5");
    RectangleStats st;
    st.d = d;
    LatticeData L = lattice_data(d);
    size_t m = L.elems.size();
    std::vector<std::vector<bool>> compat(m, std::vector<bool>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            compat[i][j] = is_basketball(L.elems[i], L.elems[j]);

    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (compat[i][j]) st.vertices++;

    auto chains = all_chains(L);
    auto pair_ok = [&](const std::vector<int>& a, const std::vector<int>& b) {
        for (int i : a)
            for (int j : b)
                if (!compat[i][j]) return false;
        return true;
    };
    for (auto& a : chains)
        for (auto& b : chains)
            if (pair_ok(a, b)) {
                auto key = std::make_pair(static_cast<int>(a.size()) - 1,
                                          static_cast<int>(b.size()) - 1);
                st.cells_by_bidim[key]++;
            }
    auto it = st.cells_by_bidim.find({d - 1, d - 1});
    st.top_cells = it == st.cells_by_bidim.end() ? 0 : it->second;
    return st;
}

bool AnnulusRepresentative::operator==(const AnnulusRepresentative& o) const {
    return horizontal.left == o.horizontal.left && horizontal.edge_labels == o.horizontal.edge_labels &&
           horizontal.right == o.horizontal.right && bottom_chain == o.bottom_chain;
}

bool AnnulusRepresentative::operator<(const AnnulusRepresentative& o) const {
    auto key = [](const AnnulusRepresentative& r) {
        std::vector<std::vector<int>> k{r.horizontal.left.one_line()};
        for (auto& s : r.horizontal.edge_labels) k.push_back(s.one_line());
        k.push_back(r.horizontal.right.one_line());
        for (auto& p : r.bottom_chain.elements) k.push_back(perm_of(p).one_line());
        return k;
    };
    return key(*this) < key(o);
}

AnnulusRepresentative standardize_annulus(const RectangleCellLabel& c) {
    const int d = c.d();
    Permutation delta = Permutation::long_cycle(d);
    std::vector<Permutation> perms;
    for (auto& p : c.left_chain.elements) perms.push_back(perm_of(p));
    std::vector<Permutation> labels;
    for (size_t i = 1; i < perms.size(); ++i)
        labels.push_back(mul(perms[i - 1].inverse(), perms[i]));
    DualBraidSimplex horiz(perms.front(), std::move(labels), mul(perms.back().inverse(), delta));
    return AnnulusRepresentative{standardize_circle(horiz), c.bottom_chain};
}

long long annulus_vertex_class_count(int d) {
    std::set<AnnulusRepresentative> classes;
    auto elems = enumerate_ncpart(d);
    for (auto& l : elems)
        for (auto& b : elems)
            if (is_basketball(l, b)) {
                RectangleCellLabel v(NCChain({l}), NCChain({b}));
                classes.insert(standardize_annulus(v));
            }
    return static_cast<long long>(classes.size());
}

OrthoschemePoint orthoscheme_point_of_multiset(
    const std::vector<std::pair<double, int>>& values, double x_l, double x_r,
    std::vector<double>* weights) {
    if (!(x_l < x_r)) throw std::invalid_argument("orthoscheme_point_of_multiset: empty interval");
    std::map<double, int> agg;
    for (auto& [v, m] : values) {
        if (m <= 0) throw std::invalid_argument("orthoscheme_point_of_multiset: bad multiplicity");
        if (v < x_l || v > x_r)
            throw std::invalid_argument("orthoscheme_point_of_multiset: value outside interval");
        agg[v] += m;
    }
    OrthoschemePoint pt;
    pt.x_l = x_l;
    pt.x_r = x_r;
    std::vector<int> entries{0};
    for (auto& [v, m] : agg) {
        if (v == x_l)
            entries[0] = m;
        else if (v == x_r)
            continue;
        else {
            entries.push_back(m);
            pt.interior_points.push_back(v);
        }
    }
    entries.push_back(agg.count(x_r) ? agg[x_r] : 0);
    pt.composition = LinearComposition(std::move(entries));
    if (weights) {
        weights->clear();
        std::vector<double> cuts{x_l};
        cuts.insert(cuts.end(), pt.interior_points.begin(), pt.interior_points.end());
        cuts.push_back(x_r);
        for (size_t i = 1; i < cuts.size(); ++i)
            weights->push_back((cuts[i] - cuts[i - 1]) / (x_r - x_l));
    }
    return pt;
}

std::vector<double> orthoscheme_expand(const OrthoschemePoint& a) {
    std::vector<double> out;
    const auto& e = a.composition.entries;
    for (int i = 0; i < e[0]; ++i) out.push_back(a.x_l);
    for (size_t k = 0; k < a.interior_points.size(); ++k)
        for (int i = 0; i < e[k + 1]; ++i) out.push_back(a.interior_points[k]);
    for (int i = 0; i < e.back(); ++i) out.push_back(a.x_r);
    return out;
}

double orthoscheme_distance(const OrthoschemePoint& a, const OrthoschemePoint& b) {
    if (a.n() != b.n() || a.x_l != b.x_l || a.x_r != b.x_r)
        throw std::invalid_argument("orthoscheme_distance: incompatible points");
    auto u = orthoscheme_expand(a), v = orthoscheme_expand(b);
    double s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(s);
}

}  // namespace ncpoly
