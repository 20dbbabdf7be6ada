#ifndef PSC_ORIENT_HPP
#define PSC_ORIENT_HPP

#include <optional>
#include <queue>
#include <set>
#include <variant>
#include <vector>

#include "psc/colorful_graph.hpp"

namespace psc {

// The min-rule failed: either a color in a three-colored triangle is not a
// biclique, or the resulting orientation has a cycle. Cannot happen for
// graphs induced by approval ballots; signals a non-approval constraint set
// or a bug.
struct StructureViolation {
    std::optional<int> color;
    std::vector<int> cycle;
};

// Orients every color that takes part in a three-colored triangle by its
// biclique decomposition (A, B): forward iff min A < min B. All other colors
// keep the base orientation.
inline std::variant<Orientation, StructureViolation> min_rule_orientation(
    const ColorfulGraph& g) {
    if (has_monochromatic_cycle(g))
        throw std::invalid_argument("min_rule_orientation: monochromatic cycle present");
    std::set<int> triangle_colors;
    for (const auto& tri : three_colored_triangles(g))
        for (const auto& e : tri) triangle_colors.insert(e.color);

    Orientation o;
    o.flip.assign(g.color_count(), false);
    for (int c : triangle_colors) {
        auto bd = biclique_decomposition(g, c);
        if (!bd) return StructureViolation{c, {}};
        o.flip[c] = bd->a.front() > bd->b.front();  // sets disjoint, minima differ
    }
    if (auto cycle = find_cycle(apply_orientation(g, o)))
        return StructureViolation{std::nullopt, *cycle};
    return o;
}

// Exhaustive search over the 2^colors orientations, in binary counting order
// with keep before flip. Decides satisfiability for arbitrary constraint
// sets; exponential only in the number of colors.
inline std::optional<Orientation> fpt_solve(const ColorfulGraph& g, int max_colors = 20) {
    const int k = g.color_count();
    if (k > max_colors) throw std::invalid_argument("fpt_solve: too many colors");
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        Orientation o;
        o.flip.resize(k);
        for (int c = 0; c < k; ++c) o.flip[c] = (mask >> c) & 1;
        if (is_acyclic(apply_orientation(g, o))) return o;
    }
    return std::nullopt;
}

// Topological order of the oriented edges, smallest voter id first among the
// available vertices. Singleton pairs need no handling: they constrain
// nothing beyond antisymmetry, which any linear order provides.
inline Axis orientation_to_axis(const ColorfulGraph& g, const Orientation& o) {
    Digraph d = apply_orientation(g, o);
    std::vector<std::vector<int>> adj(d.n + 1);
    std::vector<int> indegree(d.n + 1, 0);
    for (auto [u, v] : d.edges) {
        adj[u].push_back(v);
        ++indegree[v];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 1; v <= d.n; ++v)
        if (indegree[v] == 0) ready.push(v);
    Axis axis;
    axis.order.reserve(d.n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        axis.order.push_back(v);
        for (int w : adj[v])
            if (--indegree[w] == 0) ready.push(w);
    }
    if (static_cast<int>(axis.order.size()) != d.n)
        throw std::invalid_argument("orientation_to_axis: oriented graph has a cycle");
    return axis;
}

// Full solve path for arbitrary constraint sets: formula graph, partition
// (clash means unsatisfiable), then orientation search.
inline std::optional<Axis> fpt_solve_instance(const NbInstance& inst, int max_colors = 20) {
    auto fg = build_formula_graph(inst);
    auto part = complementary_pairs_partition(fg);
    if (std::holds_alternative<ComplementClash>(part)) return std::nullopt;
    auto cg = build_colorful_graph(std::get<ComplementaryPartition>(part));
    auto o = fpt_solve(cg, max_colors);
    if (!o) return std::nullopt;
    return orientation_to_axis(cg, *o);
}

}  // namespace psc

#endif
