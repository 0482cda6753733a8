#include "ncpoly/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ncpoly {

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    return buf;
}

std::string svg_open(double w, double h) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
       << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
    return os.str();
}

}  // namespace

std::string svg_qprime(const Rectangle& rect, const NumericMultiset& cvl) {
    const double W = 480, H = 360, pad = 24;
    auto X = [&](double x) { return pad + (x - rect.xl) / (rect.xr - rect.xl) * (W - 2 * pad); };
    auto Y = [&](double y) { return H - pad - (y - rect.yb) / (rect.yt - rect.yb) * (H - 2 * pad); };
    std::ostringstream os;
    os << svg_open(W, H);
    os << "<rect x=\"" << num(X(rect.xl)) << "\" y=\"" << num(Y(rect.yt)) << "\" width=\""
       << num(X(rect.xr) - X(rect.xl)) << "\" height=\"" << num(Y(rect.yb) - Y(rect.yt))
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (auto& v : cvl.points) {
        os << "<line x1=\"" << num(X(v.real())) << "\" y1=\"" << num(Y(rect.yb)) << "\" x2=\""
           << num(X(v.real())) << "\" y2=\"" << num(Y(rect.yt))
           << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        os << "<line x1=\"" << num(X(rect.xl)) << "\" y1=\"" << num(Y(v.imag())) << "\" x2=\""
           << num(X(rect.xr)) << "\" y2=\"" << num(Y(v.imag()))
           << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (auto& v : cvl.points)
        os << "<circle cx=\"" << num(X(v.real())) << "\" cy=\"" << num(Y(v.imag()))
           << "\" r=\"4\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string svg_chords(const NCMatching& m) {
    const double W = 400, R = 170, cx = 200, cy = 200;
    int n = m.underlying.d();
    auto pt = [&](int i) {
        double ang = -M_PI / 2 + 2 * M_PI * (i - 1) / n;
        return std::pair<double, double>(cx + R * std::cos(ang), cy + R * std::sin(ang));
    };
    std::ostringstream os;
    os << svg_open(W, W);
    os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(R)
       << "\" fill=\"none\" stroke=\"lightgray\"/>\n";
    for (auto& b : m.underlying.part().blocks) {
        auto [x1, y1] = pt(b[0]);
        auto [x2, y2] = pt(b[1]);
        // bow the chord toward the center so nested chords stay visible
        double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        double qx = cx + (mx - cx) * 0.55, qy = cy + (my - cy) * 0.55;
        os << "<path d=\"M " << num(x1) << " " << num(y1) << " Q " << num(qx) << " " << num(qy)
           << " " << num(x2) << " " << num(y2) << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int i = 1; i <= n; ++i) {
        auto [x, y] = pt(i);
        os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\""
           << (i % 2 ? "black" : "white") << "\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string svg_banyan(const NCChain& chain, const std::vector<double>& weights) {
    const int d = chain.d(), k = chain.length();
    const double W = 80.0 * k + 80, H = 40.0 * d + 80;
    std::ostringstream os;
    os << svg_open(W, H);
    auto X = [&](int col) { return 60.0 + 80.0 * col; };
    auto Y = [&](double row) { return 40.0 + 40.0 * row; };
    // one column per chain element; a block is drawn at the mean height of
    // its elements, edges join each block to the block containing it next
    std::vector<std::vector<double>> heights(k);
    for (int c = 0; c < k; ++c) {
        for (auto& blk : chain.elements[c].part().blocks) {
            double h = 0;
            for (int x : blk) h += x - 1;
            heights[c].push_back(h / blk.size());
        }
    }
    for (int c = 0; c + 1 < k; ++c) {
        const auto& cur = chain.elements[c].part();
        const auto& nxt = chain.elements[c + 1].part();
        for (int bi = 0; bi < cur.num_blocks(); ++bi) {
            int target = nxt.block_index_of(cur.blocks[bi][0]);
            os << "<line x1=\"" << num(X(c)) << "\" y1=\"" << num(Y(heights[c][bi]))
               << "\" x2=\"" << num(X(c + 1)) << "\" y2=\"" << num(Y(heights[c + 1][target]))
               << "\" stroke=\"black\"/>\n";
        }
    }
    for (int c = 0; c < k; ++c)
        for (double h : heights[c])
            os << "<circle cx=\"" << num(X(c)) << "\" cy=\"" << num(Y(h))
               << "\" r=\"4\" fill=\"black\"/>\n";
    for (int c = 0; c < k && c < static_cast<int>(weights.size()); ++c)
        os << "<text x=\"" << num(X(c) - 14) << "\" y=\"" << num(H - 16)
           << "\" font-size=\"11\">" << num(weights[c]) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string svg_cactus(const std::vector<Permutation>& constellation) {
    const int k = static_cast<int>(constellation.size());
    const double W = 110.0 * std::max(k, 1) + 60, H = 220;
    std::ostringstream os;
    os << svg_open(W, H);
    // one lobe per factor, sized by its absolute length, sharing a spine
    double spine_y = H / 2;
    os << "<line x1=\"30\" y1=\"" << num(spine_y) << "\" x2=\"" << num(W - 30) << "\" y2=\""
       << num(spine_y) << "\" stroke=\"lightgray\"/>\n";
    for (int i = 0; i < k; ++i) {
        double cx = 85 + 110.0 * i;
        double r = 12.0 + 10.0 * constellation[i].absolute_length();
        os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(spine_y - r) << "\" r=\"" << num(r)
           << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(cx - r) << "\" y=\"" << num(spine_y + 18)
           << "\" font-size=\"11\">" << constellation[i].to_string() << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ncpoly
