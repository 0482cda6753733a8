#include "ncpoly/json_io.hpp"

namespace ncpoly {

json to_json(const SetPartition& p) { return json{{"n", p.n}, {"blocks", p.blocks}}; }

SetPartition set_partition_from_json(const json& j) {
    return SetPartition(j.at("n").get<int>(), j.at("blocks").get<std::vector<std::vector<int>>>());
}

json to_json(const IntegerPartition& p) { return json{{"parts", p.parts}}; }

json to_json(const LinearComposition& c) { return json{{"entries", c.entries}}; }

json to_json(const Permutation& p) { return json(p.one_line()); }

Permutation permutation_from_json(const json& j, int d) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("permutation: expected array");
    if (j[0].is_array()) {
        if (d < 1) throw std::invalid_argument("permutation: cycle notation needs a degree");
        return Permutation::from_cycles(d, j.get<std::vector<std::vector<int>>>());
    }
    return Permutation::from_one_line(j.get<std::vector<int>>());
}

json to_json(const NoncrossingPartition& p) { return to_json(p.part()); }

json to_json(const NCChain& c) {
    json arr = json::array();
    for (auto& p : c.elements) arr.push_back(to_json(p));
    return arr;
}

json to_json(const NCMatching& m) {
    json j = to_json(m.underlying.part());
    j["side_convention"] = m.convention == MatchingConvention::LR ? "LR" : "TB";
    return j;
}

NCMatching matching_from_json(const json& j) {
    auto conv = j.at("side_convention").get<std::string>() == "TB" ? MatchingConvention::TB
                                                                   : MatchingConvention::LR;
    return NCMatching(NoncrossingPartition(set_partition_from_json(j)), conv);
}

json to_json(const Factorization& f) {
    json factors = json::array();
    for (auto& g : f.factors) factors.push_back(to_json(g));
    return json{{"d", f.d}, {"factors", factors}};
}

Factorization factorization_from_json(const json& j) {
    int d = j.at("d").get<int>();
    std::vector<Permutation> fs;
    for (auto& g : j.at("factors")) fs.push_back(permutation_from_json(g, d));
    return Factorization(std::move(fs));
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0);
    return cplx(j.at(0).get<double>(), j.at(1).get<double>());
}

json to_json(const ComplexPoly& p) {
    json coeffs = json::array();
    for (auto& c : p.coeffs) coeffs.push_back(to_json(c));
    return json{{"coeffs", coeffs}};
}

ComplexPoly poly_from_json(const json& j) {
    const json& arr = j.is_array() ? j : j.at("coeffs");
    std::vector<cplx> coeffs;
    for (auto& c : arr) coeffs.push_back(cplx_from_json(c));
    return ComplexPoly(std::move(coeffs));
}

json to_json(const NumericMultiset& m) {
    json pts = json::array();
    for (auto& p : m.points) pts.push_back(to_json(p));
    return json{{"points", pts}, {"mult", m.mult}, {"tol", m.tol}};
}

NumericMultiset multiset_from_json(const json& j) {
    if (j.is_array()) {
        // bare list of values, multiplicity 1 each
        std::vector<cplx> pts;
        for (auto& p : j) pts.push_back(cplx_from_json(p));
        return cluster_points(pts, 0);
    }
    std::vector<cplx> pts;
    for (auto& p : j.at("points")) pts.push_back(cplx_from_json(p));
    return NumericMultiset(std::move(pts), j.at("mult").get<std::vector<int>>(),
                           j.value("tol", 0.0));
}

json to_json(const Rectangle& r) {
    return json{{"xl", r.xl}, {"xr", r.xr}, {"yb", r.yb}, {"yt", r.yt}};
}

Rectangle rectangle_from_json(const json& j) {
    if (j.is_array())
        return Rectangle(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
                         j.at(3).get<double>());
    return Rectangle(j.at("xl").get<double>(), j.at("xr").get<double>(),
                     j.at("yb").get<double>(), j.at("yt").get<double>());
}

json to_json(const CriticalData& cd) {
    return json{{"cpt", to_json(cd.cpt)},
                {"cvl", to_json(cd.cvl)},
                {"lambda", to_json(cd.lambda)},
                {"mu", to_json(cd.mu)}};
}

json to_json(const ComplexStats& st) {
    return json{{"d", st.d}, {"cells_by_dim", st.cells_by_dim}, {"euler", st.euler}};
}

json to_json(const RectangleStats& st) {
    json bidim = json::array();
    for (auto& [key, count] : st.cells_by_bidim)
        bidim.push_back(json{{"dim", {key.first, key.second}}, {"count", count}});
    return json{{"d", st.d},
                {"vertices", st.vertices},
                {"top_cells", st.top_cells},
                {"cells_by_bidim", bidim}};
}

json to_json(const SideChains& sc) {
    json right = json::array(), top = json::array();
    for (auto& p : sc.right) right.push_back(to_json(p));
    for (auto& p : sc.top) top.push_back(to_json(p));
    return json{{"left", to_json(sc.left)},       {"right", right},
                {"bottom", to_json(sc.bottom)},   {"top", top},
                {"left_weights", sc.left_weights}, {"bottom_weights", sc.bottom_weights},
                {"rectangle", to_json(sc.rect)}};
}

json to_json(const GeoComPoint& g) {
    return json{{"left_chain", to_json(g.left_chain)},
                {"left_weights", g.left_weights},
                {"bottom_chain", to_json(g.bottom_chain)},
                {"bottom_weights", g.bottom_weights}};
}

json to_json(const SideConstellations& sc) {
    auto perms = [](const std::vector<Permutation>& fs) {
        json arr = json::array();
        for (auto& g : fs) arr.push_back(to_json(g));
        return arr;
    };
    return json{{"horizontal", perms(sc.horizontal.factors)},
                {"vertical", perms(sc.vertical.factors)},
                {"horizontal_stripped", perms(sc.horizontal_stripped)},
                {"vertical_stripped", perms(sc.vertical_stripped)}};
}

json to_json(const FiberResult& fr) {
    json polys = json::array(), labels = json::array();
    for (auto& p : fr.polynomials) polys.push_back(to_json(p));
    for (auto& l : fr.labels) {
        json arr = json::array();
        for (auto& g : l) arr.push_back(to_json(g));
        labels.push_back(arr);
    }
    return json{{"target", to_json(fr.target)},
                {"polys", polys},
                {"constellations", labels},
                {"found", static_cast<int>(fr.polynomials.size())},
                {"expected", fr.diagnostics.expected},
                {"diagnostics",
                 {{"starts", fr.diagnostics.starts},
                  {"dedup_radius", fr.diagnostics.dedup_radius},
                  {"rotation_phase", fr.diagnostics.rotation_phase}}}};
}

}  // namespace ncpoly
