#include "ncpoly/nc_lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ncpoly {

namespace {

// Blocks a and b cross iff their merged order reads ...a...b...a...b...
// (at least 3 label alternations).
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

}  // namespace

bool is_noncrossing(const SetPartition& p) {
    for (int a = 0; a < p.num_blocks(); ++a)
        for (int b = a + 1; b < p.num_blocks(); ++b)
            if (blocks_cross(p.blocks[a], p.blocks[b])) return false;
    return true;
}

NoncrossingPartition::NoncrossingPartition(SetPartition p) : part_(std::move(p)) {
    if (!is_noncrossing(part_))
        throw std::invalid_argument("NoncrossingPartition: partition has a crossing");
}

NoncrossingPartition NoncrossingPartition::discrete(int d) {
    return NoncrossingPartition(SetPartition::discrete(d));
}

NoncrossingPartition NoncrossingPartition::indiscrete(int d) {
    return NoncrossingPartition(SetPartition::indiscrete(d));
}

Permutation perm_of(const NoncrossingPartition& p) {
    return Permutation::from_cycles(p.d(), p.part().blocks);
}

bool is_nc_permutation(const Permutation& pi) {
    std::vector<std::vector<int>> blocks;
    std::vector<bool> done(pi.n() + 1, false);
    for (int i = 1; i <= pi.n(); ++i) {
        if (done[i]) continue;
        std::vector<int> c;
        int j = i;
        do {
            c.push_back(j);
            done[j] = true;
            j = pi(j);
        } while (j != i);
        blocks.push_back(std::move(c));
    }
    SetPartition sp(pi.n(), std::move(blocks));
    if (!is_noncrossing(sp)) return false;
    // each cycle must traverse its block in increasing order
    return perm_of(NoncrossingPartition(sp)) == pi;
}

NoncrossingPartition partition_of_perm(const Permutation& pi) {
    if (!is_nc_permutation(pi))
        throw std::invalid_argument("partition_of_perm: permutation is not noncrossing");
    std::vector<std::vector<int>> blocks;
    std::vector<bool> done(pi.n() + 1, false);
    for (int i = 1; i <= pi.n(); ++i) {
        if (done[i]) continue;
        std::vector<int> c;
        int j = i;
        do {
            c.push_back(j);
            done[j] = true;
            j = pi(j);
        } while (j != i);
        blocks.push_back(std::move(c));
    }
    return NoncrossingPartition(SetPartition(pi.n(), std::move(blocks)));
}

int absolute_length(const Permutation& pi) { return pi.absolute_length(); }

NoncrossingPartition kreweras(const NoncrossingPartition& p) {
    return partition_of_perm(mul(perm_of(p).inverse(), Permutation::long_cycle(p.d())));
}

NoncrossingPartition kreweras_left(const NoncrossingPartition& p) {
    return partition_of_perm(mul(Permutation::long_cycle(p.d()), perm_of(p).inverse()));
}

std::vector<NoncrossingPartition> enumerate_ncpart(int d) {
    if (d < 1) throw std::invalid_argument("enumerate_ncpart: d must be >= 1");
    // grow restricted-growth strings, pruning crossings as we go
    std::vector<NoncrossingPartition> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i > d) {
            SetPartition sp(d, blocks);
            if (is_noncrossing(sp)) out.push_back(NoncrossingPartition(std::move(sp)));
            return;
        }
        // index loop: deeper recursion grows `blocks` and would invalidate
        // a range-for reference
        for (size_t k = 0, nb = blocks.size(); k < nb; ++k) {
            blocks[k].push_back(i);
            rec(i + 1);
            blocks[k].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NoncrossingPartition> covers(const NoncrossingPartition& p) {
    std::vector<NoncrossingPartition> out;
    const auto& bs = p.part().blocks;
    for (int a = 0; a < p.part().num_blocks(); ++a) {
        for (int b = a + 1; b < p.part().num_blocks(); ++b) {
            std::vector<std::vector<int>> merged;
            std::vector<int> join = bs[a];
            join.insert(join.end(), bs[b].begin(), bs[b].end());
            merged.push_back(std::move(join));
            for (int c = 0; c < p.part().num_blocks(); ++c)
                if (c != a && c != b) merged.push_back(bs[c]);
            SetPartition sp(p.d(), std::move(merged));
            if (is_noncrossing(sp)) out.push_back(NoncrossingPartition(std::move(sp)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

NCChain::NCChain(std::vector<NoncrossingPartition> elems) : elements(std::move(elems)) {
    if (elements.empty()) throw std::invalid_argument("NCChain: empty chain");
    for (size_t i = 1; i < elements.size(); ++i) {
        if (elements[i].d() != elements[0].d())
            throw std::invalid_argument("NCChain: mixed degrees");
        if (!(refinement_leq(elements[i - 1].part(), elements[i].part()) &&
              elements[i - 1] != elements[i]))
            throw std::invalid_argument("NCChain: not strictly increasing");
    }
}

std::vector<NCChain> maximal_chains(int d) {
    if (d < 2) throw std::invalid_argument("maximal_chains: d must be >= 2");
    std::vector<NCChain> out;
    std::vector<NoncrossingPartition> chain{NoncrossingPartition::discrete(d)};
    std::function<void()> rec = [&]() {
        if (chain.back().part().num_blocks() == 1) {
            out.push_back(NCChain(chain));
            return;
        }
        for (auto& q : covers(chain.back())) {
            chain.push_back(q);
            rec();
            chain.pop_back();
        }
    };
    rec();
    return out;
}

NCMatching::NCMatching(NoncrossingPartition u, MatchingConvention c)
    : underlying(std::move(u)), convention(c) {
    if (underlying.d() % 2 != 0)
        throw std::invalid_argument("NCMatching: ground set must have even size");
    for (auto& b : underlying.part().blocks) {
        if (b.size() != 2) throw std::invalid_argument("NCMatching: block of size != 2");
        if ((b[0] + b[1]) % 2 == 0)
            throw std::invalid_argument("NCMatching: block members must have opposite parity");
    }
}

namespace {
// positions on [2d]
int pos_first(int m) { return 2 * m - 1; }  // L_m or T_m
int pos_second(int m) { return 2 * m; }     // R_m or B_m
}  // namespace

NCMatching matching_of_partition(const NoncrossingPartition& p, Side side) {
    const int d = p.d();
    Permutation pi = perm_of(p);
    std::vector<std::vector<int>> arcs;
    for (int m = 1; m <= d; ++m) {
        switch (side) {
            case Side::Top:
                // {L_m, R_{pi(m)-1}} with R-index mod d
                arcs.push_back({pos_first(m), pos_second((pi(m) - 2 + d) % d + 1)});
                break;
            case Side::Bottom:
                arcs.push_back({pos_second(m), pos_first(pi(m))});
                break;
            case Side::Left:
                arcs.push_back({pos_second(m), pos_first(pi(m))});
                break;
            case Side::Right:
                arcs.push_back({pos_first(m % d + 1), pos_second(pi(m))});
                break;
        }
    }
    auto conv = (side == Side::Top || side == Side::Bottom) ? MatchingConvention::LR
                                                            : MatchingConvention::TB;
    return NCMatching(NoncrossingPartition(SetPartition(2 * d, std::move(arcs))), conv);
}

NoncrossingPartition partition_of_matching(const NCMatching& m, Side side) {
    const int d = m.d();
    auto expected = (side == Side::Top || side == Side::Bottom) ? MatchingConvention::LR
                                                                : MatchingConvention::TB;
    if (m.convention != expected)
        throw std::invalid_argument("partition_of_matching: wrong matching convention for side");
    // partner[x] = the point matched with x
    std::vector<int> partner(2 * d + 1);
    for (auto& b : m.underlying.part().blocks) {
        partner[b[0]] = b[1];
        partner[b[1]] = b[0];
    }
    std::vector<int> img(d);
    for (int mm = 1; mm <= d; ++mm) {
        int q;
        switch (side) {
            case Side::Top:
                q = partner[pos_first(mm)];  // = R_j, pi(m) = j+1 mod d
                if (q % 2 != 0) throw std::invalid_argument("partition_of_matching: bad arc");
                img[mm - 1] = (q / 2) % d + 1;
                break;
            case Side::Bottom:
                q = partner[pos_second(mm)];  // = L_j, pi(m) = j
                if (q % 2 == 0) throw std::invalid_argument("partition_of_matching: bad arc");
                img[mm - 1] = (q + 1) / 2;
                break;
            case Side::Left:
                q = partner[pos_second(mm)];  // = T_j, pi(m) = j
                if (q % 2 == 0) throw std::invalid_argument("partition_of_matching: bad arc");
                img[mm - 1] = (q + 1) / 2;
                break;
            case Side::Right:
                q = partner[pos_first(mm % d + 1)];  // = B_j, pi(m) = j
                if (q % 2 != 0) throw std::invalid_argument("partition_of_matching: bad arc");
                img[mm - 1] = q / 2;
                break;
        }
    }
    return partition_of_perm(Permutation::from_one_line(std::move(img)));
}

}  // namespace ncpoly
