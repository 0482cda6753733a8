// Command-line surface: analyze a polynomial, enumerate complexes, solve a
// critical-value fiber, render SVG diagrams.
//
// Exit codes: 0 success, 1 input error, 2 numerical failure, 3 internal
// invariant violation.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ncpoly/json_io.hpp"
#include "ncpoly/render.hpp"

using namespace ncpoly;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open " + out_path + " for writing");
        out << text;
    }
}

int run_analyze(const std::string& input, const std::vector<double>& rect_flag, double tol,
                unsigned seed, const std::string& out_path) {
    json in = read_json_file(input);
    ComplexPoly p = poly_from_json(in.contains("poly") ? in["poly"] : in);

    CriticalData cd = critical_data(p, tol, seed);
    Rectangle rect;
    bool user_rect = false;
    if (rect_flag.size() == 4) {
        rect = Rectangle(rect_flag[0], rect_flag[1], rect_flag[2], rect_flag[3]);
        user_rect = true;
    } else if (in.contains("rect")) {
        rect = rectangle_from_json(in["rect"]);
        user_rect = true;
    } else {
        rect = bounding_rectangle(cd.cvl, 0.25);
    }

    // per-side regularity report
    double eps = 1e-9 * (1 + cd.cvl.max_abs());
    bool reg_l = true, reg_r = true, reg_b = true, reg_t = true;
    for (auto& v : cd.cvl.points) {
        if (std::abs(v.real() - rect.xl) < eps) reg_l = false;
        if (std::abs(v.real() - rect.xr) < eps) reg_r = false;
        if (std::abs(v.imag() - rect.yb) < eps) reg_b = false;
        if (std::abs(v.imag() - rect.yt) < eps) reg_t = false;
    }

    SideChains sc = side_chains(p, rect, tol, seed);
    SideConstellations cons = side_constellations_of(sc);

    json report{{"poly", to_json(p)},
                {"rectangle", to_json(rect)},
                {"rectangle_user_supplied", user_rect},
                {"critical_data", to_json(cd)},
                {"side_chains", to_json(sc)},
                {"geocom",
                 to_json(GeoComPoint{sc.left, sc.left_weights, sc.bottom, sc.bottom_weights})},
                {"constellations", to_json(cons)},
                {"side_regular",
                 {{"left", reg_l}, {"right", reg_r}, {"bottom", reg_b}, {"top", reg_t}}},
                {"tol", tol},
                {"seed", seed}};
    write_output(out_path, report.dump(2));
    return 0;
}

int run_enum(const std::string& kind, int d, bool list, const std::string& out_path) {
    json out{{"kind", kind}, {"d", d}};
    if (kind == "ncpart") {
        auto all = enumerate_ncpart(d);
        out["count"] = all.size();
        if (list) {
            json arr = json::array();
            for (auto& p : all) arr.push_back(to_json(p));
            out["items"] = arr;
        }
    } else if (kind == "chains") {
        auto all = maximal_chains(d);
        out["count"] = all.size();
        if (list) {
            json arr = json::array();
            for (auto& c : all) arr.push_back(to_json(c));
            out["items"] = arr;
        }
    } else if (kind == "basketballs") {
        auto elems = enumerate_ncpart(d);
        long long count = 0;
        json arr = json::array();
        for (auto& l : elems)
            for (auto& b : elems)
                if (is_basketball(l, b)) {
                    ++count;
                    if (list) arr.push_back(json{{"left", to_json(l)}, {"bottom", to_json(b)}});
                }
        out["count"] = count;
        if (list) out["items"] = arr;
    } else if (kind == "dual-braid") {
        out.update(to_json(dual_braid_complex_stats(d)));
    } else if (kind == "rectangle") {
        out.update(to_json(rectangle_complex_stats(d)));
    } else if (kind == "annulus") {
        out["vertex_classes"] = annulus_vertex_class_count(d);
    } else {
        throw std::invalid_argument("unknown enum kind: " + kind);
    }
    write_output(out_path, out.dump(2));
    return 0;
}

int run_fiber(const std::string& cvl_path, int d, int starts, unsigned seed,
              const std::string& out_path) {
    NumericMultiset target = multiset_from_json(read_json_file(cvl_path));
    FiberResult fr = fiber_enumerate(target, d, starts, seed);
    write_output(out_path, to_json(fr).dump(2));
    return 0;
}

int run_render(const std::string& analysis_path, const std::string& what,
               const std::string& out_path) {
    json in = read_json_file(analysis_path);
    std::string svg;
    if (what == "qprime") {
        Rectangle rect = rectangle_from_json(in.at("rectangle"));
        NumericMultiset cvl = multiset_from_json(in.at("critical_data").at("cvl"));
        svg = svg_qprime(rect, cvl);
    } else if (what == "chords") {
        if (in.contains("matching")) {
            svg = svg_chords(matching_from_json(in["matching"]));
        } else {
            // bottom partition of the analysis, as an LR matching
            json chain = in.at("side_chains").at("bottom");
            NoncrossingPartition p(set_partition_from_json(chain.back()));
            svg = svg_chords(matching_of_partition(p, Side::Bottom));
        }
    } else if (what == "banyan") {
        json g = in.at("geocom");
        std::vector<NoncrossingPartition> elems;
        for (auto& e : g.at("left_chain")) elems.push_back(NoncrossingPartition(set_partition_from_json(e)));
        svg = svg_banyan(NCChain(std::move(elems)), g.at("left_weights").get<std::vector<double>>());
    } else if (what == "cactus") {
        std::vector<Permutation> fs;
        for (auto& f : in.at("constellations").at("horizontal_stripped"))
            fs.push_back(permutation_from_json(f));
        svg = svg_cactus(fs);
    } else {
        throw std::invalid_argument("unknown render target: " + what);
    }
    write_output(out_path, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric-combinatorial invariants of monic complex polynomials"};
    app.require_subcommand(1);

    std::string input, out_path, kind = "ncpart", cvl_path, what = "qprime";
    std::vector<double> rect_flag;
    double tol = -1;
    unsigned seed = 0;
    int d = 3, starts = -1;
    bool list = false;

    auto* analyze = app.add_subcommand("analyze", "full report for one polynomial");
    analyze->add_option("input", input, "polynomial JSON file")->required();
    analyze->add_option("--rect", rect_flag, "rectangle xl xr yb yt")->expected(4);
    analyze->add_option("--tol", tol, "clustering tolerance");
    analyze->add_option("--seed", seed, "random seed");
    analyze->add_option("--out", out_path, "output file (default stdout)");

    auto* en = app.add_subcommand("enum", "enumerate a combinatorial complex");
    en->add_option("kind", kind, "ncpart|chains|basketballs|dual-braid|rectangle|annulus")
        ->required();
    en->add_option("--d", d, "degree")->required();
    en->add_flag("--list", list, "emit full listing");
    en->add_option("--out", out_path, "output file");

    auto* fib = app.add_subcommand("fiber", "enumerate the preimages of a critical-value multiset");
    fib->add_option("--cvl", cvl_path, "critical-value multiset JSON file")->required();
    fib->add_option("--d", d, "degree")->required();
    fib->add_option("--starts", starts, "Newton starts");
    fib->add_option("--seed", seed, "random seed");
    fib->add_option("--out", out_path, "output file");

    std::string analysis_path;
    auto* ren = app.add_subcommand("render", "render an analysis report to SVG");
    ren->add_option("--analysis", analysis_path, "analysis report JSON file")->required();
    ren->add_option("--what", what, "qprime|chords|banyan|cactus");
    ren->add_option("--out", out_path, "output SVG file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(input, rect_flag, tol, seed, out_path);
        if (en->parsed()) return run_enum(kind, d, list, out_path);
        if (fib->parsed()) return run_fiber(cvl_path, d, starts, seed, out_path);
        if (ren->parsed()) return run_render(analysis_path, what, out_path);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
