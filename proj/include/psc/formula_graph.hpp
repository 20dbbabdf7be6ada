#ifndef PSC_FORMULA_GRAPH_HPP
#define PSC_FORMULA_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <utility>
#include <variant>
#include <vector>

#include "psc/nb.hpp"

namespace psc {

// Vertices of the formula graph are the ordered voter pairs (i, j), i != j,
// materialized through an index bijection to keep memory at O(n^2).
// Indices are ordered lexicographically by (i, j).

inline int pair_vertex_count(int n) { return n * (n - 1); }

inline int pair_to_index(int i, int j, int n) {
    return (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2);
}

inline std::pair<int, int> index_to_pair(int idx, int n) {
    int i = idx / (n - 1) + 1;
    int o = idx % (n - 1);
    int j = (o + 1 < i) ? o + 1 : o + 2;
    return {i, j};
}

inline int mirror_index(int idx, int n) {
    auto [i, j] = index_to_pair(idx, n);
    return pair_to_index(j, i, n);
}

// Graph on the ordered voter pairs whose edges encode the equalities implied
// by the constraint set: each triple (a, b, c) contributes (a,b) -- (c,b) and
// (b,a) -- (b,c). Edge u -- v exists iff the complemented edge does, where
// the complement of (i, j) is (j, i).
struct FormulaGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // vertex indices, first < second, sorted, unique

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), std::pair<int, int>{u, v});
    }

    bool has_pair_edge(std::pair<int, int> a, std::pair<int, int> b) const {
        return has_edge(pair_to_index(a.first, a.second, n),
                        pair_to_index(b.first, b.second, n));
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(pair_vertex_count(n));
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
        return adj;
    }
};

inline FormulaGraph build_formula_graph(const NbInstance& inst) {
    FormulaGraph g;
    g.n = inst.ground_size;
    g.edges.reserve(inst.triples.size() * 2);
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    };
    for (const auto& t : inst.triples) {
        int a = t[0], b = t[1], c = t[2];
        add(pair_to_index(a, b, g.n), pair_to_index(c, b, g.n));
        add(pair_to_index(b, a, g.n), pair_to_index(b, c, g.n));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

// One half of a complementary pair of connected components. members holds the
// deterministic representative: the component containing the smallest vertex
// of the pair's union. mirror is its complemented image.
struct ComponentPair {
    std::vector<int> members;  // vertex indices, ascending
    std::vector<int> mirror;   // complements of members, ascending
    bool singleton = false;
};

struct ComplementaryPartition {
    int n = 0;
    std::vector<ComponentPair> pairs;     // ordered by smallest member vertex
    std::vector<int> pair_of_vertex;  // vertex index -> index into pairs
};

// Witness that some component contains both a vertex and its complement.
// path connects the two, consecutive entries adjacent in the formula graph.
struct ComplementClash {
    int n = 0;
    std::vector<std::pair<int, int>> path;  // ordered voter pairs
};

namespace detail {
struct union_find {
    std::vector<int> parent;
    explicit union_find(int size) : parent(size) {
        for (int i = 0; i < size; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

inline std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, int from, int to) {
    std::vector<int> prev(adj.size(), -1);
    std::queue<int> q;
    q.push(from);
    prev[from] = from;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == to) break;
        for (int w : adj[u])
            if (prev[w] == -1) {
                prev[w] = u;
                q.push(w);
            }
    }
    std::vector<int> path;
    for (int u = to; u != from; u = prev[u]) path.push_back(u);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}
}  // namespace detail

// Groups the connected components into complementary pairs {S, S-bar}, or
// returns a clash witness when some component is self-complementary, in which
// case the constraints are unsatisfiable.
inline std::variant<ComplementaryPartition, ComplementClash> complementary_pairs_partition(
    const FormulaGraph& g) {
    const int vcount = pair_vertex_count(g.n);
    detail::union_find uf(vcount);
    for (auto [u, v] : g.edges) uf.unite(u, v);

    for (int u = 0; u < vcount; ++u) {
        if (uf.find(u) == uf.find(mirror_index(u, g.n))) {
            ComplementClash clash;
            clash.n = g.n;
            auto raw = detail::bfs_path(g.adjacency(), u, mirror_index(u, g.n));
            clash.path.reserve(raw.size());
            for (int idx : raw) clash.path.push_back(index_to_pair(idx, g.n));
            return clash;
        }
    }

    std::vector<std::vector<int>> members(vcount);
    for (int u = 0; u < vcount; ++u) members[uf.find(u)].push_back(u);

    ComplementaryPartition part;
    part.n = g.n;
    part.pair_of_vertex.assign(vcount, -1);
    for (int u = 0; u < vcount; ++u) {
        if (part.pair_of_vertex[u] != -1) continue;
        // u is the smallest unassigned vertex, hence the smallest of its
        // pair's union; its component becomes the representative side.
        ComponentPair cp;
        cp.members = members[uf.find(u)];
        cp.mirror.reserve(cp.members.size());
        for (int w : cp.members) cp.mirror.push_back(mirror_index(w, g.n));
        std::sort(cp.mirror.begin(), cp.mirror.end());
        if (members[uf.find(cp.mirror.front())] != cp.mirror)
            throw internal_error("complement of a component is not a component");
        cp.singleton = cp.members.size() == 1;
        int id = static_cast<int>(part.pairs.size());
        for (int w : cp.members) part.pair_of_vertex[w] = id;
        for (int w : cp.mirror) part.pair_of_vertex[w] = id;
        part.pairs.push_back(std::move(cp));
    }
    return part;
}

}  // namespace psc

#endif
