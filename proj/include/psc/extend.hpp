#ifndef PSC_EXTEND_HPP
#define PSC_EXTEND_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psc/nb.hpp"

namespace psc {

// Voters i < j < k on the axis and candidates a, b with
// a >_i b, b >_j a, a >_k b. Voter ids are original, not axis positions.
struct SscWitness {
    int i = 0, j = 0, k = 0;
    int a = 0, b = 0;
};

// Seemingly-single-crossing check: along the axis, no candidate pair's
// strict preference may flip back.
inline std::optional<SscWitness> find_ssc_violation(const WeakOrderProfile& p, const Axis& axis) {
    check_axis(axis, p.n);
    for (int a = 1; a <= p.m; ++a) {
        for (int b = a + 1; b <= p.m; ++b) {
            int first_voter = 0, mid_voter = 0;
            int first_sign = 0;
            for (int v : axis.order) {
                int s = p.score(v, a) - p.score(v, b);
                if (s == 0) continue;
                s = s > 0 ? 1 : -1;
                if (first_sign == 0) {
                    first_sign = s;
                    first_voter = v;
                } else if (mid_voter == 0) {
                    if (s != first_sign) mid_voter = v;
                } else if (s == first_sign) {
                    // first_sign at first_voter, opposite at mid_voter, back again
                    if (first_sign > 0) return SscWitness{first_voter, mid_voter, v, a, b};
                    return SscWitness{first_voter, mid_voter, v, b, a};
                }
            }
        }
    }
    return std::nullopt;
}

inline bool is_ssc(const WeakOrderProfile& p, const Axis& axis) {
    return !find_ssc_violation(p, axis).has_value();
}

// For fully-ranked profiles single-crossing and seemingly-single-crossing
// coincide.
inline std::optional<SscWitness> find_sc_violation(const LinearProfile& p, const Axis& axis) {
    return find_ssc_violation(p.to_weak_order(), axis);
}

inline bool is_sc(const LinearProfile& p, const Axis& axis) {
    return !find_sc_violation(p, axis).has_value();
}

struct not_ssc_error : std::invalid_argument {
    SscWitness witness;
    explicit not_ssc_error(const SscWitness& w)
        : std::invalid_argument("profile is not seemingly single-crossing with respect to the "
                                "axis: voters " +
                                std::to_string(w.i) + ", " + std::to_string(w.j) + ", " +
                                std::to_string(w.k) + " flip back on candidates " +
                                std::to_string(w.a) + ", " + std::to_string(w.b)),
          witness(w) {}
};

// Extends a weak-order profile into fully-ranked ballots that are
// single-crossing with respect to the given axis, which must witness the
// seemingly-single-crossing property.
//
// Per candidate pair, each voter copies the verdict of the nearest
// non-indifferent voter to its left on the axis (itself included), falling
// back to the nearest to the right. Candidate groups that every voter is
// indifferent between are collapsed to their smallest id first and reinserted
// at the end, directly below the representative in increasing id order.
inline LinearProfile extend_to_single_crossing(const WeakOrderProfile& p, const Axis& axis) {
    if (auto w = find_ssc_violation(p, axis)) throw not_ssc_error(*w);

    // relabel voters so the axis reads 1 < 2 < ... < n
    std::vector<const std::vector<int>*> score_at(p.n);
    for (int t = 0; t < p.n; ++t) score_at[t] = &p.scores[axis.order[t] - 1];

    // collapse candidates with identical score rows
    std::map<std::vector<int>, std::vector<int>> groups;  // score column -> candidate ids
    for (int c = 1; c <= p.m; ++c) {
        std::vector<int> column(p.n);
        for (int t = 0; t < p.n; ++t) column[t] = (*score_at[t])[c - 1];
        groups[std::move(column)].push_back(c);
    }
    std::vector<int> reps;
    std::vector<std::vector<int>> clones_of;  // parallel to reps, ascending ids
    for (auto& [column, ids] : groups) {
        (void)column;
        reps.push_back(ids.front());  // ids ascend by construction
        clones_of.push_back(std::vector<int>(ids.begin() + 1, ids.end()));
    }
    const int r = static_cast<int>(reps.size());
    // beats[t][x][y]: on the reduced candidate set, voter at axis position t
    // ranks reps[x] above reps[y]
    std::vector<std::vector<std::vector<char>>> beats(
        p.n, std::vector<std::vector<char>>(r, std::vector<char>(r, 0)));
    for (int x = 0; x < r; ++x) {
        for (int y = x + 1; y < r; ++y) {
            int a = reps[x], b = reps[y];
            // nearest non-indifferent voter at or left of each position
            std::vector<int> verdict(p.n, 0);  // +1 a above b, -1 below, 0 unresolved
            int last = 0;
            for (int t = 0; t < p.n; ++t) {
                int s = (*score_at[t])[a - 1] - (*score_at[t])[b - 1];
                if (s != 0) last = s > 0 ? 1 : -1;
                verdict[t] = last;
            }
            int next = 0;
            for (int t = p.n - 1; t >= 0; --t) {
                int s = (*score_at[t])[a - 1] - (*score_at[t])[b - 1];
                if (s != 0) next = s > 0 ? 1 : -1;
                if (verdict[t] == 0) verdict[t] = next;
            }
            for (int t = 0; t < p.n; ++t) {
                if (verdict[t] == 0)
                    throw internal_error("extend: candidate pair indifferent everywhere after "
                                         "collapse");
                beats[t][x][y] = verdict[t] > 0;
                beats[t][y][x] = verdict[t] < 0;
            }
        }
    }

    LinearProfile out;
    out.m = p.m;
    out.n = p.n;
    out.ranking.assign(p.n, {});
    for (int t = 0; t < p.n; ++t) {
        // a transitive tournament sorts by win count, which is then a
        // permutation of 0..r-1; anything else is a broken guarantee
        std::vector<int> wins(r, 0);
        for (int x = 0; x < r; ++x)
            for (int y = 0; y < r; ++y) wins[x] += beats[t][x][y];
        std::vector<char> seen(r, 0);
        for (int w : wins) {
            if (seen[w]) throw internal_error("extend: pairwise verdicts are not transitive");
            seen[w] = 1;
        }
        std::vector<std::size_t> by_rank(r);
        for (int x = 0; x < r; ++x) by_rank[r - 1 - wins[x]] = x;

        auto& ballot = out.ranking[axis.order[t] - 1];
        ballot.reserve(p.m);
        for (std::size_t gi : by_rank) {
            ballot.push_back(reps[gi]);
            for (int clone : clones_of[gi]) ballot.push_back(clone);
        }
    }
    return out;
}

}  // namespace psc

#endif
