#ifndef PSC_LEMMA_LAB_HPP
#define PSC_LEMMA_LAB_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "psc/colorful_graph.hpp"
#include "psc/pipeline.hpp"

namespace psc {

// Case-exhaustion experiments over two 4x5 approval-matrix skeletons with
// eight free cells each. For every assignment of the free cells the induced
// formula graph is built and a structural implication is checked: whenever
// the scenario's hypotheses hold, its concluded edges must be present. The
// templates come in two flavors: L13/L14 assume color conditions on the
// induced graphs, L15/L16 replace them by required/forbidden formula-graph
// edges.

enum class LemmaId { L13, L14, L15, L16 };

inline const char* to_string(LemmaId id) {
    switch (id) {
        case LemmaId::L13: return "L13";
        case LemmaId::L14: return "L14";
        case LemmaId::L15: return "L15";
        case LemmaId::L16: return "L16";
    }
    return "?";
}

inline std::optional<LemmaId> parse_lemma_id(const std::string& s) {
    if (s == "L13") return LemmaId::L13;
    if (s == "L14") return LemmaId::L14;
    if (s == "L15") return LemmaId::L15;
    if (s == "L16") return LemmaId::L16;
    return std::nullopt;
}

using PairEdge = std::pair<std::pair<int, int>, std::pair<int, int>>;

struct LemmaTemplate {
    LemmaId id;
    std::array<std::array<int, 5>, 4> skeleton;  // -1 marks a free cell
    std::array<std::pair<int, int>, 8> free_cells;  // (row, col), 1-based, tuple order
    std::vector<PairEdge> required_edges;
    std::vector<PairEdge> forbidden_edges;  // empty for the color-condition flavor
    bool color_conditions = false;          // different colors on {1,2}, {2,3}; {1,3} neither
    std::vector<PairEdge> conclusion_edges;
};

inline LemmaTemplate lemma_template(LemmaId id) {
    LemmaTemplate t;
    t.id = id;
    const bool first_skeleton = id == LemmaId::L13 || id == LemmaId::L15;
    if (first_skeleton) {
        t.skeleton = {{{0, 1, -1, 1, -1},
                       {1, 0, -1, 0, -1},
                       {-1, 0, 1, -1, 1},
                       {-1, 1, 0, -1, 0}}};
        t.required_edges = {{{1, 2}, {1, 4}}, {{2, 3}, {2, 5}}};
    } else {
        t.skeleton = {{{0, 1, -1, 0, -1},
                       {1, 0, -1, 1, -1},
                       {-1, 0, 1, -1, 1},
                       {-1, 1, 0, -1, 0}}};
        t.required_edges = {{{1, 2}, {4, 2}}, {{2, 3}, {2, 5}}};
    }
    // free cells x, y, z, t, u, v, p, q
    t.free_cells = {{{1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 1}, {4, 1}, {3, 4}, {4, 4}}};
    if (id == LemmaId::L13) {
        t.color_conditions = true;
        t.conclusion_edges = {
            {{1, 3}, {1, 5}}, {{4, 3}, {4, 5}}, {{2, 3}, {4, 3}}, {{2, 5}, {4, 5}}};
    } else if (id == LemmaId::L14) {
        t.color_conditions = true;
        t.conclusion_edges = {
            {{4, 3}, {1, 3}}, {{4, 3}, {4, 5}}, {{1, 3}, {1, 5}}, {{4, 5}, {1, 5}}};
    } else if (id == LemmaId::L15) {
        t.forbidden_edges = {{{1, 2}, {3, 2}}, {{1, 2}, {5, 2}}};
        t.conclusion_edges = {{{1, 3}, {1, 5}}};
    } else {
        // the second skeleton needs one more forbidden edge for the same
        // conclusion; its scenario is self-symmetric under relabeling
        // voters (1 3)(4 5), so an equivalent form forbids
        // (1,2)--(3,2), (3,2)--(4,2), (1,3)--(5,3) and concludes (1,3)--(4,3)
        t.forbidden_edges = {{{1, 2}, {3, 2}}, {{1, 2}, {5, 2}}, {{1, 3}, {1, 4}}};
        t.conclusion_edges = {{{1, 3}, {1, 5}}};
    }
    return t;
}

struct CaseReport {
    LemmaId id;
    int total = 256;
    std::vector<int> consistent_cases;  // case indices in binary counting order
    int violation_count = 0;            // hypotheses held but a concluded edge was missing

    int consistent_count() const { return static_cast<int>(consistent_cases.size()); }
};

namespace detail {
inline bool lemma_hypotheses_hold(const LemmaTemplate& t, const FormulaGraph& fg) {
    for (const auto& [a, b] : t.required_edges)
        if (!fg.has_pair_edge(a, b)) return false;
    for (const auto& [a, b] : t.forbidden_edges)
        if (fg.has_pair_edge(a, b)) return false;
    if (!t.color_conditions) return true;

    auto partitioned = complementary_pairs_partition(fg);
    if (std::holds_alternative<ComplementClash>(partitioned)) return false;
    const auto& part = std::get<ComplementaryPartition>(partitioned);
    auto pair_id = [&](int i, int j) { return part.pair_of_vertex[pair_to_index(i, j, fg.n)]; };
    auto in_colorful = [&](int i, int j) { return !part.pairs[pair_id(i, j)].singleton; };

    if (!in_colorful(1, 2) || !in_colorful(2, 3)) return false;
    int c12 = pair_id(1, 2), c23 = pair_id(2, 3);
    if (c12 == c23) return false;
    if (in_colorful(1, 3)) {
        int c13 = pair_id(1, 3);
        if (c13 == c12 || c13 == c23) return false;
    }
    return true;
}
}  // namespace detail

// Tries all 2^8 assignments of the free cells (x the most significant bit,
// q the least) and tallies how many are consistent with the hypotheses and
// whether any consistent case misses a concluded edge.
inline CaseReport enumerate_lemma_cases(const LemmaTemplate& t) {
    CaseReport report;
    report.id = t.id;
    for (int c = 0; c < 256; ++c) {
        ApprovalProfile p;
        p.m = 4;
        p.n = 5;
        p.rows.assign(4, std::vector<std::uint8_t>(5, 0));
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 5; ++col)
                if (t.skeleton[row][col] >= 0)
                    p.rows[row][col] = static_cast<std::uint8_t>(t.skeleton[row][col]);
        for (int bit = 0; bit < 8; ++bit) {
            auto [row, col] = t.free_cells[bit];
            p.rows[row - 1][col - 1] = static_cast<std::uint8_t>((c >> (7 - bit)) & 1);
        }
        auto fg = build_formula_graph(extract_nb_constraints(p));
        if (!detail::lemma_hypotheses_hold(t, fg)) continue;
        report.consistent_cases.push_back(c);
        for (const auto& [a, b] : t.conclusion_edges)
            if (!fg.has_pair_edge(a, b)) {
                ++report.violation_count;
                break;
            }
    }
    return report;
}

inline CaseReport enumerate_lemma_cases(LemmaId id) {
    return enumerate_lemma_cases(lemma_template(id));
}

}  // namespace psc

#endif
