#include "ncpoly/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncpoly {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::long_cycle(int n) {
    Permutation p = identity(n);
    for (int i = 0; i < n; ++i) p.img_[i] = (i + 1) % n + 1;
    return p;
}

Permutation Permutation::from_one_line(std::vector<int> img) {
    int n = static_cast<int>(img.size());
    if (n < 1) throw std::invalid_argument("Permutation: empty one-line");
    std::set<int> seen;
    for (int x : img) {
        if (x < 1 || x > n) throw std::invalid_argument("Permutation: image out of range");
        if (!seen.insert(x).second) throw std::invalid_argument("Permutation: repeated image");
    }
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    std::set<int> seen;
    for (auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (a < 1 || a > n) throw std::invalid_argument("Permutation: cycle entry out of range");
            if (!seen.insert(a).second)
                throw std::invalid_argument("Permutation: cycles are not disjoint");
            p.img_[a - 1] = b;
        }
    }
    return p;
}

int Permutation::apply(int i) const {
    if (i < 1 || i > n()) throw std::out_of_range("Permutation::apply");
    return img_[i - 1];
}

Permutation Permutation::inverse() const {
    Permutation p = identity(n());
    for (int i = 1; i <= n(); ++i) p.img_[img_[i - 1] - 1] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> done(n() + 1, false);
    for (int i = 1; i <= n(); ++i) {
        if (done[i] || img_[i - 1] == i) continue;
        std::vector<int> c;
        int j = i;
        do {
            c.push_back(j);
            done[j] = true;
            j = img_[j - 1];
        } while (j != i);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<bool> done(n() + 1, false);
    for (int i = 1; i <= n(); ++i) {
        if (done[i]) continue;
        int len = 0, j = i;
        do {
            ++len;
            done[j] = true;
            j = img_[j - 1];
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

int Permutation::absolute_length() const {
    return n() - static_cast<int>(cycle_type().size());
}

std::string Permutation::to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "e";
    std::ostringstream os;
    for (auto& c : cs) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation mul(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("mul: mismatched degrees");
    std::vector<int> img(a.n());
    for (int i = 1; i <= a.n(); ++i) img[i - 1] = a.apply(b.apply(i));
    return Permutation::from_one_line(std::move(img));
}

Permutation product(const std::vector<Permutation>& factors) {
    if (factors.empty()) throw std::invalid_argument("product: empty factor list");
    Permutation r = factors.back();
    for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i) r = mul(factors[i], r);
    return r;
}

bool absolute_leq(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("absolute_leq: mismatched degrees");
    return a.absolute_length() + mul(a.inverse(), b).absolute_length() == b.absolute_length();
}

}  // namespace ncpoly
