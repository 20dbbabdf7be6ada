#ifndef PSC_NB_HPP
#define PSC_NB_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "psc/common.hpp"
#include "psc/profile.hpp"

namespace psc {

// Linear order of the voters, order[pos] = voter id at that position.
struct Axis {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }

    // positions()[v-1] = 0-based position of voter v.
    std::vector<int> positions() const {
        std::vector<int> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i] - 1] = static_cast<int>(i);
        return pos;
    }
};

inline Axis identity_axis(int n) {
    Axis a;
    a.order.resize(n);
    std::iota(a.order.begin(), a.order.end(), 1);
    return a;
}

inline void check_axis(const Axis& axis, int n) {
    if (axis.size() != n) throw std::invalid_argument("axis: size mismatch");
    std::vector<char> seen(n, 0);
    for (int v : axis.order) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("axis: not a permutation of [n]");
        seen[v - 1] = 1;
    }
}

// Non-betweenness constraints over [ground_size]. A triple (i, j, k) forbids
// j from lying strictly between i and k. Satisfaction is symmetric in the
// outer elements, so storage keeps one canonical representative per
// {(i,j,k), (k,j,i)} class: the smaller outer element first.
struct NbInstance {
    int ground_size = 0;
    std::vector<std::array<int, 3>> triples;  // canonical, sorted, deduplicated

    bool contains(int i, int j, int k) const {
        std::array<int, 3> t{std::min(i, k), j, std::max(i, k)};
        return std::binary_search(triples.begin(), triples.end(), t);
    }
};

inline std::array<int, 3> canonical_triple(int i, int j, int k) {
    return {std::min(i, k), j, std::max(i, k)};
}

inline NbInstance make_nb_instance(int n, std::vector<std::array<int, 3>> triples) {
    for (auto& t : triples) {
        if (t[0] < 1 || t[0] > n || t[1] < 1 || t[1] > n || t[2] < 1 || t[2] > n)
            throw std::invalid_argument("nb triple: element out of range");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw std::invalid_argument("nb triple: elements must be distinct");
        t = canonical_triple(t[0], t[1], t[2]);
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    NbInstance inst;
    inst.ground_size = n;
    inst.triples = std::move(triples);
    return inst;
}

// (i, j, k) is a constraint iff some candidate pair a, b has
// a >_i b, b >_j a and a >_k b.
inline NbInstance extract_nb_constraints(const WeakOrderProfile& p) {
    std::vector<std::array<int, 3>> triples;
    std::vector<int> above, below;
    for (int a = 1; a <= p.m; ++a) {
        for (int b = a + 1; b <= p.m; ++b) {
            above.clear();
            below.clear();
            for (int v = 1; v <= p.n; ++v) {
                if (p.prefers(v, a, b))
                    above.push_back(v);
                else if (p.prefers(v, b, a))
                    below.push_back(v);
            }
            // outer pair prefers one way, the middle voter the other
            for (std::size_t x = 0; x < above.size(); ++x)
                for (std::size_t y = x + 1; y < above.size(); ++y)
                    for (int j : below) triples.push_back({above[x], j, above[y]});
            for (std::size_t x = 0; x < below.size(); ++x)
                for (std::size_t y = x + 1; y < below.size(); ++y)
                    for (int j : above) triples.push_back({below[x], j, below[y]});
        }
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    NbInstance inst;
    inst.ground_size = p.n;
    inst.triples = std::move(triples);
    return inst;
}

inline NbInstance extract_nb_constraints(const ApprovalProfile& p) {
    return extract_nb_constraints(to_weak_order(p));
}

inline bool order_satisfies(const NbInstance& inst, const Axis& axis) {
    check_axis(axis, inst.ground_size);
    auto pos = axis.positions();
    for (const auto& t : inst.triples) {
        int pi = pos[t[0] - 1], pj = pos[t[1] - 1], pk = pos[t[2] - 1];
        if ((pi < pj && pj < pk) || (pk < pj && pj < pi)) return false;
    }
    return true;
}

// Testing oracle: exhausts all n! orders, returns the lexicographically
// smallest satisfying one.
inline std::optional<Axis> brute_force_solve(const NbInstance& inst, int cap = 9) {
    if (inst.ground_size > cap)
        throw std::invalid_argument("brute_force_solve: ground set exceeds cap");
    Axis axis = identity_axis(inst.ground_size);
    do {
        if (order_satisfies(inst, axis)) return axis;
    } while (std::next_permutation(axis.order.begin(), axis.order.end()));
    return std::nullopt;
}

}  // namespace psc

#endif
