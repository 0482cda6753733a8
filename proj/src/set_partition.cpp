#include "ncpoly/set_partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ncpoly {

IntegerPartition::IntegerPartition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("IntegerPartition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("IntegerPartition: parts must be weakly decreasing");
    }
}

int IntegerPartition::n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::map<int, int, std::greater<int>> IntegerPartition::exponents() const {
    std::map<int, int, std::greater<int>> e;
    for (int p : parts) e[p]++;
    return e;
}

std::string IntegerPartition::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [v, m] : exponents()) {
        if (!first) os << ' ';
        first = false;
        os << v;
        if (m > 1) os << '^' << m;
    }
    return os.str();
}

SetPartition::SetPartition(int ground, std::vector<std::vector<int>> bs)
    : n(ground), blocks(std::move(bs)) {
    if (n < 1) throw std::invalid_argument("SetPartition: n must be >= 1");
    std::set<int> seen;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n) throw std::invalid_argument("SetPartition: element out of range");
            if (!seen.insert(x).second)
                throw std::invalid_argument("SetPartition: repeated element");
        }
    }
    if (static_cast<int>(seen.size()) != n)
        throw std::invalid_argument("SetPartition: blocks do not cover [n]");
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

int SetPartition::block_index_of(int i) const {
    for (int k = 0; k < num_blocks(); ++k)
        for (int x : blocks[k])
            if (x == i) return k;
    throw std::out_of_range("SetPartition::block_index_of");
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (n != o.n) return n < o.n;
    return blocks < o.blocks;
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    for (int k = 0; k < num_blocks(); ++k) {
        if (k) os << '|';
        for (int x : blocks[k]) {
            os << x;
            if (n > 9 && x != blocks[k].back()) os << ',';
        }
    }
    return os.str();
}

SetPartition SetPartition::discrete(int n) {
    std::vector<std::vector<int>> bs;
    for (int i = 1; i <= n; ++i) bs.push_back({i});
    return SetPartition(n, std::move(bs));
}

SetPartition SetPartition::indiscrete(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return SetPartition(n, {all});
}

IntegerPartition shape(const SetPartition& p) {
    std::vector<int> sizes;
    for (auto& b : p.blocks) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return IntegerPartition(std::move(sizes));
}

bool refinement_leq(const SetPartition& p, const SetPartition& q) {
    if (p.n != q.n) throw std::invalid_argument("refinement_leq: mismatched ground sets");
    for (auto& b : p.blocks) {
        int k = q.block_index_of(b[0]);
        for (int x : b)
            if (q.block_index_of(x) != k) return false;
    }
    return true;
}

IntegerPartition int_partition_merge(const IntegerPartition& lambda,
                                     const std::vector<std::vector<int>>& grouping) {
    std::set<int> seen;
    std::vector<int> merged;
    for (auto& g : grouping) {
        if (g.empty()) throw std::invalid_argument("int_partition_merge: empty group");
        int s = 0;
        for (int i : g) {
            if (i < 0 || i >= lambda.length())
                throw std::invalid_argument("int_partition_merge: index out of range");
            if (!seen.insert(i).second)
                throw std::invalid_argument("int_partition_merge: repeated index");
            s += lambda.parts[i];
        }
        merged.push_back(s);
    }
    if (static_cast<int>(seen.size()) != lambda.length())
        throw std::invalid_argument("int_partition_merge: grouping must cover all parts");
    std::sort(merged.rbegin(), merged.rend());
    return IntegerPartition(std::move(merged));
}

static BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt count_set_partitions_of_shape(const IntegerPartition& lambda) {
    BigInt num = factorial(lambda.n());
    BigInt den = 1;
    for (int p : lambda.parts) den *= factorial(p);
    for (auto& [v, m] : lambda.exponents()) den *= factorial(m);
    return num / den;
}

LinearComposition::LinearComposition(std::vector<int> e) : entries(std::move(e)) {
    if (entries.size() < 2)
        throw std::invalid_argument("LinearComposition: need at least the two end entries");
    if (entries.front() < 0 || entries.back() < 0)
        throw std::invalid_argument("LinearComposition: end entries must be >= 0");
    for (size_t i = 1; i + 1 < entries.size(); ++i)
        if (entries[i] <= 0)
            throw std::invalid_argument("LinearComposition: interior entries must be positive");
}

int LinearComposition::n() const {
    int s = 0;
    for (int e : entries) s += e;
    return s;
}

LinearComposition elementary_merge(const LinearComposition& c, int i) {
    if (i < 0 || i + 1 >= c.length())
        throw std::invalid_argument("elementary_merge: index out of range");
    std::vector<int> e = c.entries;
    e[i] += e[i + 1];
    e.erase(e.begin() + i + 1);
    if (e.size() < 2) throw std::invalid_argument("elementary_merge: cannot merge last two entries");
    return LinearComposition(std::move(e));
}

}  // namespace ncpoly
