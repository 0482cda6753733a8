#include "ncpoly/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ncpoly {

Factorization::Factorization(std::vector<Permutation> fs) : factors(std::move(fs)) {
    if (factors.empty()) throw std::invalid_argument("Factorization: empty factor list");
    d = factors.front().n();
    for (auto& g : factors)
        if (g.n() != d) throw std::invalid_argument("Factorization: mixed degrees");
    target = product(factors);
}

Constellation::Constellation(std::vector<Permutation> fs) : Factorization(std::move(fs)) {
    if (target != Permutation::long_cycle(d))
        throw std::invalid_argument("Constellation: product is not the long cycle");
}

bool Constellation::is_minimal() const {
    int s = 0;
    for (auto& g : factors) s += g.absolute_length();
    return s == d - 1;
}

Factorization hurwitz_move(const Factorization& f, int i) {
    if (i < 1 || i >= f.length()) throw std::invalid_argument("hurwitz_move: index out of range");
    auto fs = f.factors;
    Permutation gi = fs[i - 1], gj = fs[i];
    fs[i - 1] = gj;
    fs[i] = mul(mul(gj.inverse(), gi), gj);
    return Factorization(std::move(fs));
}

Factorization hurwitz_move_inverse(const Factorization& f, int i) {
    if (i < 1 || i >= f.length())
        throw std::invalid_argument("hurwitz_move_inverse: index out of range");
    auto fs = f.factors;
    Permutation gi = fs[i - 1], gj = fs[i];
    fs[i - 1] = mul(mul(gi, gj), gi.inverse());
    fs[i] = gi;
    return Factorization(std::move(fs));
}

std::vector<Factorization> hurwitz_orbit(const Factorization& f, size_t cap) {
    std::set<Factorization> seen{f};
    std::vector<Factorization> queue{f};
    while (!queue.empty()) {
        Factorization cur = queue.back();
        queue.pop_back();
        for (int i = 1; i < cur.length(); ++i) {
            for (auto& next : {hurwitz_move(cur, i), hurwitz_move_inverse(cur, i)}) {
                if (seen.insert(next).second) {
                    if (seen.size() > cap) throw OrbitCapExceeded(cap);
                    queue.push_back(next);
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Factorization> minimal_transposition_factorizations(const Permutation& pi) {
    const int d = pi.n();
    std::vector<Permutation> transpositions;
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            transpositions.push_back(Permutation::from_cycles(d, {{a, b}}));

    const int len = pi.absolute_length();
    std::vector<Factorization> out;
    if (len == 0) return out;
    std::vector<Permutation> tuple;
    // build right-to-left so prefix products can prune: remaining length must
    // drop by exactly one per factor
    std::function<void(const Permutation&)> rec = [&](const Permutation& remaining) {
        if (static_cast<int>(tuple.size()) == len) {
            if (remaining.is_identity())
                out.push_back(Factorization(std::vector<Permutation>(tuple.rbegin(), tuple.rend())));
            return;
        }
        for (auto& t : transpositions) {
            Permutation rest = mul(remaining, t.inverse());
            if (rest.absolute_length() == remaining.absolute_length() - 1) {
                tuple.push_back(t);
                rec(rest);
                tuple.pop_back();
            }
        }
    };
    rec(pi);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ncpoly
