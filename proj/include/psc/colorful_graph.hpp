#ifndef PSC_COLORFUL_GRAPH_HPP
#define PSC_COLORFUL_GRAPH_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psc/formula_graph.hpp"

namespace psc {

// Directed edge-colored graph on the voters. Each color's edge set is the
// representative component of one non-singleton complementary pair, read as
// ordered pairs; that reading is the base orientation. Colors are ordered by
// their lexicographically smallest edge. No self-loops and, across all
// colors, neither parallel nor anti-parallel edges.
struct ColorfulGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> colors;  // colors[c] sorted
    std::vector<std::pair<int, int>> singleton_pairs;      // representative pairs, sorted

    int color_count() const { return static_cast<int>(colors.size()); }
};

// Per-color flip decision; flipping reverses all edges of that color.
struct Orientation {
    std::vector<bool> flip;
};

struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

inline ColorfulGraph build_colorful_graph(const ComplementaryPartition& part) {
    ColorfulGraph g;
    g.n = part.n;
    for (const auto& cp : part.pairs) {
        if (cp.singleton) {
            g.singleton_pairs.push_back(index_to_pair(cp.members.front(), part.n));
            continue;
        }
        std::vector<std::pair<int, int>> edges;
        edges.reserve(cp.members.size());
        for (int idx : cp.members) edges.push_back(index_to_pair(idx, part.n));
        g.colors.push_back(std::move(edges));
    }
    // pair indices are lexicographic in (i, j) and pairs come ordered by their
    // smallest member, so colors are already sorted by smallest edge
    return g;
}

// For hand-built graphs (tests, experiments). Validates the structural
// invariants that partition-derived graphs get by construction.
inline ColorfulGraph colorful_from_colors(int n,
                                          std::vector<std::vector<std::pair<int, int>>> colors) {
    std::vector<std::vector<char>> seen(n + 1, std::vector<char>(n + 1, 0));
    for (auto& edges : colors) {
        std::sort(edges.begin(), edges.end());
        for (auto [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("colorful graph: vertex out of range");
            if (u == v) throw std::invalid_argument("colorful graph: self-loop");
            if (seen[u][v] || seen[v][u])
                throw std::invalid_argument("colorful graph: parallel or anti-parallel edges");
            seen[u][v] = 1;
        }
    }
    std::sort(colors.begin(), colors.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    ColorfulGraph g;
    g.n = n;
    g.colors = std::move(colors);
    return g;
}

namespace detail {
// Deterministic directed cycle search: roots and neighbors in ascending
// order. Returns the cycle as a vertex sequence v0 -> v1 -> ... -> v0.
inline std::optional<std::vector<int>> find_cycle_impl(int n,
                                                       const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : edges) adj[u].push_back(v);
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<signed char> state(n + 1, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> next(n + 1, 0);
    std::vector<int> stack;
    for (int root = 1; root <= n; ++root) {
        if (state[root] != 0) continue;
        stack.push_back(root);
        state[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            if (next[u] == adj[u].size()) {
                state[u] = 2;
                stack.pop_back();
                continue;
            }
            int w = adj[u][next[u]++];
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                return std::vector<int>(it, stack.end());
            }
            if (state[w] == 0) {
                state[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return std::nullopt;
}
}  // namespace detail

inline std::optional<std::vector<int>> find_cycle(const Digraph& g) {
    return detail::find_cycle_impl(g.n, g.edges);
}

inline bool is_acyclic(const Digraph& g) { return !find_cycle(g).has_value(); }

// A cycle within a single color certifies unsatisfiability: flipping the
// color reverses the whole cycle, so no orientation removes it.
inline std::optional<std::pair<int, std::vector<int>>> has_monochromatic_cycle(
    const ColorfulGraph& g) {
    for (int c = 0; c < g.color_count(); ++c)
        if (auto cycle = detail::find_cycle_impl(g.n, g.colors[c]))
            return std::make_pair(c, *cycle);
    return std::nullopt;
}

struct ColoredEdge {
    int from = 0;
    int to = 0;
    int color = 0;
};

using Triangle = std::array<ColoredEdge, 3>;

// All voter triples whose three mutual edges exist and bear three distinct
// colors, in ascending vertex order; edges reported in base orientation.
inline std::vector<Triangle> three_colored_triangles(const ColorfulGraph& g) {
    std::map<std::pair<int, int>, ColoredEdge> by_pair;  // key (min, max)
    for (int c = 0; c < g.color_count(); ++c)
        for (auto [u, v] : g.colors[c])
            by_pair[{std::min(u, v), std::max(u, v)}] = ColoredEdge{u, v, c};

    std::vector<Triangle> out;
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v) {
            auto uv = by_pair.find({u, v});
            if (uv == by_pair.end()) continue;
            for (int w = v + 1; w <= g.n; ++w) {
                auto vw = by_pair.find({v, w});
                if (vw == by_pair.end()) continue;
                auto uw = by_pair.find({u, w});
                if (uw == by_pair.end()) continue;
                int a = uv->second.color, b = vw->second.color, c = uw->second.color;
                if (a != b && b != c && a != c)
                    out.push_back({uv->second, vw->second, uw->second});
            }
        }
    return out;
}

// A color whose edges form a full cartesian product A x B of disjoint voter
// sets. Not an error when absent: general constraint sets legitimately
// produce non-biclique colors.
struct Biclique {
    int color = 0;
    std::vector<int> a;  // sources, ascending
    std::vector<int> b;  // targets, ascending
};

inline std::optional<Biclique> biclique_decomposition(const ColorfulGraph& g, int color) {
    if (color < 0 || color >= g.color_count())
        throw std::invalid_argument("biclique_decomposition: color out of range");
    const auto& edges = g.colors[color];
    std::vector<int> a, b;
    for (auto [u, v] : edges) {
        a.push_back(u);
        b.push_back(v);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (edges.size() != a.size() * b.size()) return std::nullopt;
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) return std::nullopt;
    return Biclique{color, std::move(a), std::move(b)};
}

inline Digraph apply_orientation(const ColorfulGraph& g, const Orientation& o) {
    if (static_cast<int>(o.flip.size()) != g.color_count())
        throw std::invalid_argument("apply_orientation: length mismatch");
    Digraph d;
    d.n = g.n;
    for (int c = 0; c < g.color_count(); ++c)
        for (auto [u, v] : g.colors[c])
            d.edges.emplace_back(o.flip[c] ? v : u, o.flip[c] ? u : v);
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

}  // namespace psc

#endif
