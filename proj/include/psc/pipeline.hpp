#ifndef PSC_PIPELINE_HPP
#define PSC_PIPELINE_HPP

#include <optional>
#include <variant>
#include <vector>

#include "psc/extend.hpp"
#include "psc/orient.hpp"

namespace psc {

struct MonochromaticCycle {
    int color = 0;
    std::vector<int> cycle;
};

struct RecognitionAccept {
    Axis axis;
    LinearProfile linear;
};

struct RecognitionReject {
    std::variant<ComplementClash, MonochromaticCycle> reason;
};

using RecognitionOutcome = std::variant<RecognitionAccept, RecognitionReject>;

inline bool accepted(const RecognitionOutcome& outcome) {
    return std::holds_alternative<RecognitionAccept>(outcome);
}

struct structure_violation_error : internal_error {
    explicit structure_violation_error(const std::string& msg) : internal_error(msg) {}
};

namespace detail {
inline void validate_clash(const FormulaGraph& fg, const ComplementClash& clash) {
    if (clash.path.empty()) throw internal_error("clash witness: empty path");
    auto front = clash.path.front(), back = clash.path.back();
    if (front.first != back.second || front.second != back.first)
        throw internal_error("clash witness: endpoints are not complementary");
    for (std::size_t i = 0; i + 1 < clash.path.size(); ++i)
        if (!fg.has_pair_edge(clash.path[i], clash.path[i + 1]))
            throw internal_error("clash witness: path step is not an edge");
}

inline void validate_mono_cycle(const ColorfulGraph& g, int color,
                                const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw internal_error("monochromatic cycle witness: too short");
    const auto& edges = g.colors[color];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::pair<int, int> e{cycle[i], cycle[(i + 1) % cycle.size()]};
        if (!std::binary_search(edges.begin(), edges.end(), e))
            throw internal_error("monochromatic cycle witness: step not in color");
    }
}

inline bool ballot_extends(const std::vector<int>& ballot, const WeakOrderProfile& p, int voter) {
    std::vector<int> pos(p.m + 1, 0);
    for (std::size_t i = 0; i < ballot.size(); ++i) pos[ballot[i]] = static_cast<int>(i);
    for (int a = 1; a <= p.m; ++a)
        for (int b = 1; b <= p.m; ++b)
            if (p.prefers(voter, a, b) && pos[a] >= pos[b]) return false;
    return true;
}
}  // namespace detail

// End-to-end recognition: constraint extraction, formula graph, complementary
// partition (reject on clash), colorful graph, monochromatic cycle check
// (reject if found), min-rule orientation, topological axis, extension.
// Rejections carry machine-checked witnesses. A min-rule failure is escalated
// as an error: it cannot occur when the input is a profile of approval
// ballots, and is an expected possibility only for wider weak orders, for
// which no recognition guarantee is made.
inline RecognitionOutcome recognize_psc(const WeakOrderProfile& p) {
    auto inst = extract_nb_constraints(p);
    auto fg = build_formula_graph(inst);
    auto partitioned = complementary_pairs_partition(fg);
    if (auto* clash = std::get_if<ComplementClash>(&partitioned)) {
        detail::validate_clash(fg, *clash);
        return RecognitionReject{*clash};
    }
    auto cg = build_colorful_graph(std::get<ComplementaryPartition>(partitioned));
    if (auto mono = has_monochromatic_cycle(cg)) {
        detail::validate_mono_cycle(cg, mono->first, mono->second);
        return RecognitionReject{MonochromaticCycle{mono->first, mono->second}};
    }
    auto oriented = min_rule_orientation(cg);
    if (auto* violation = std::get_if<StructureViolation>(&oriented)) {
        if (violation->color)
            throw structure_violation_error("color " + std::to_string(*violation->color) +
                                            " lies in a three-colored triangle but is not a "
                                            "biclique");
        throw structure_violation_error("min-rule orientation is cyclic");
    }
    Axis axis = orientation_to_axis(cg, std::get<Orientation>(oriented));

    if (find_ssc_violation(p, axis))
        throw internal_error("recognize: computed axis fails the direct check");
    LinearProfile linear = extend_to_single_crossing(p, axis);
    if (find_sc_violation(linear, axis))
        throw internal_error("recognize: extension is not single-crossing");
    for (int v = 1; v <= p.n; ++v)
        if (!detail::ballot_extends(linear.ranking[v - 1], p, v))
            throw internal_error("recognize: extension drops a stated preference");
    return RecognitionAccept{std::move(axis), std::move(linear)};
}

inline RecognitionOutcome recognize_psc(const ApprovalProfile& p) {
    return recognize_psc(to_weak_order(p));
}

// Testing oracle: searches all n! axes for one witnessing the
// seemingly-single-crossing property, lexicographically smallest first.
inline std::optional<Axis> brute_force_psc(const WeakOrderProfile& p, int cap = 8) {
    if (p.n > cap) throw std::invalid_argument("brute_force_psc: voter count exceeds cap");
    Axis axis = identity_axis(p.n);
    do {
        if (is_ssc(p, axis)) return axis;
    } while (std::next_permutation(axis.order.begin(), axis.order.end()));
    return std::nullopt;
}

inline std::optional<Axis> brute_force_psc(const ApprovalProfile& p, int cap = 8) {
    return brute_force_psc(to_weak_order(p), cap);
}

}  // namespace psc

#endif
