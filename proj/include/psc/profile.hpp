#ifndef PSC_PROFILE_HPP
#define PSC_PROFILE_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "psc/common.hpp"

namespace psc {

// Candidates are rows, voters are columns. All public ids are 1-based.

struct ApprovalProfile {
    int m = 0;  // candidates
    int n = 0;  // voters
    std::vector<std::vector<std::uint8_t>> rows;  // rows[c-1][v-1] in {0,1}

    bool approves(int candidate, int voter) const {
        return rows[candidate - 1][voter - 1] != 0;
    }
};

// Weak orders induced by per-voter scores: a >_i b iff score_i(a) > score_i(b).
struct WeakOrderProfile {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> scores;  // scores[v-1][c-1]

    int score(int voter, int candidate) const { return scores[voter - 1][candidate - 1]; }
    bool prefers(int voter, int a, int b) const { return score(voter, a) > score(voter, b); }
    bool indifferent(int voter, int a, int b) const { return score(voter, a) == score(voter, b); }
};

// Fully-ranked ballots: ranking[v-1] lists candidate ids best first.
struct LinearProfile {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> ranking;

    WeakOrderProfile to_weak_order() const {
        WeakOrderProfile w;
        w.m = m;
        w.n = n;
        w.scores.assign(n, std::vector<int>(m, 0));
        for (int v = 0; v < n; ++v)
            for (int pos = 0; pos < m; ++pos)
                w.scores[v][ranking[v][pos] - 1] = m - pos;
        return w;
    }
};

inline WeakOrderProfile to_weak_order(const ApprovalProfile& p) {
    WeakOrderProfile w;
    w.m = p.m;
    w.n = p.n;
    w.scores.assign(p.n, std::vector<int>(p.m, 0));
    for (int c = 0; c < p.m; ++c)
        for (int v = 0; v < p.n; ++v) w.scores[v][c] = p.rows[c][v];
    return w;
}

// File format: first line "m n", then m lines of n whitespace-separated 0/1
// tokens. '#' starts a comment. Voters are columns; transposed input is a
// hard parse error via the dimension checks, never auto-detected.
inline ApprovalProfile parse_approval_matrix(std::istream& in) {
    ApprovalProfile p;
    std::string line;
    int line_no = 0;
    int row = 0;  // matrix rows consumed
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string tok;
        std::vector<std::string> toks;
        while (tokens >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2)
                throw parse_error("header: expected \"m n\"", line_no, 1);
            try {
                p.m = std::stoi(toks[0]);
                p.n = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw parse_error("header: expected two integers", line_no, 1);
            }
            if (p.m < 1 || p.n < 1)
                throw parse_error("header: dimensions must be at least 1", line_no, 1);
            p.rows.assign(p.m, std::vector<std::uint8_t>(p.n, 0));
            have_header = true;
            continue;
        }
        if (row >= p.m)
            throw parse_error("unexpected content after " + std::to_string(p.m) + " matrix rows",
                              line_no, 1);
        if (static_cast<int>(toks.size()) != p.n)
            throw parse_error("row " + std::to_string(row + 1) + ": expected " +
                                  std::to_string(p.n) + " tokens, got " +
                                  std::to_string(toks.size()),
                              line_no, 1);
        for (int v = 0; v < p.n; ++v) {
            if (toks[v] == "0")
                p.rows[row][v] = 0;
            else if (toks[v] == "1")
                p.rows[row][v] = 1;
            else
                throw parse_error("row " + std::to_string(row + 1) + " token " +
                                      std::to_string(v + 1) + ": expected 0 or 1, got '" +
                                      toks[v] + "'",
                                  line_no, v + 1);
        }
        ++row;
    }
    if (!have_header) throw parse_error("empty input", line_no == 0 ? 1 : line_no, 1);
    if (row != p.m)
        throw parse_error("expected " + std::to_string(p.m) + " matrix rows, got " +
                              std::to_string(row),
                          line_no, 1);
    return p;
}

inline ApprovalProfile parse_approval_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_approval_matrix(in);
}

inline std::string format_approval_matrix(const ApprovalProfile& p) {
    std::string out = std::to_string(p.m) + " " + std::to_string(p.n) + "\n";
    for (int c = 0; c < p.m; ++c) {
        for (int v = 0; v < p.n; ++v) {
            if (v) out += ' ';
            out += p.rows[c][v] ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

namespace detail {
inline void check_id_subset(const std::vector<int>& ids, int limit, const char* what) {
    if (ids.empty()) throw std::invalid_argument(std::string(what) + ": empty selection");
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 1 || ids[i] > limit)
            throw std::invalid_argument(std::string(what) + ": id " + std::to_string(ids[i]) +
                                        " out of range");
        if (i > 0 && ids[i] <= ids[i - 1])
            throw std::invalid_argument(std::string(what) + ": ids must be strictly increasing");
    }
}
}  // namespace detail

// Restriction to the given voters and candidates, relative order preserved.
inline ApprovalProfile subprofile(const ApprovalProfile& p, const std::vector<int>& voters,
                                  const std::vector<int>& candidates) {
    detail::check_id_subset(voters, p.n, "voters");
    detail::check_id_subset(candidates, p.m, "candidates");
    ApprovalProfile q;
    q.m = static_cast<int>(candidates.size());
    q.n = static_cast<int>(voters.size());
    q.rows.assign(q.m, std::vector<std::uint8_t>(q.n, 0));
    for (int c = 0; c < q.m; ++c)
        for (int v = 0; v < q.n; ++v) q.rows[c][v] = p.rows[candidates[c] - 1][voters[v] - 1];
    return q;
}

// n voters over n candidates, voter v approving candidates v and v-1
// (1-based, wrapping so that 0 means n). The preference graph is a single
// cycle, which makes these profiles useful negative fixtures for n >= 4.
inline ApprovalProfile generate_cycle_profile(int n) {
    if (n < 2) throw std::invalid_argument("generate_cycle_profile: n must be >= 2");
    ApprovalProfile p;
    p.m = p.n = n;
    p.rows.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int v = 1; v <= n; ++v) {
        int prev = v == 1 ? n : v - 1;
        p.rows[v - 1][v - 1] = 1;
        p.rows[prev - 1][v - 1] = 1;
    }
    return p;
}

namespace detail {
// Random linear-order profile that is single-crossing with respect to the
// voter order 1 < 2 < ... < n: walk a random adjacent-swap trajectory between
// two permutations (each candidate pair crosses at most once along it) and
// sample voters at increasing trajectory positions.
inline std::vector<std::vector<int>> random_sc_linear(int n, int m, splitmix64& rng) {
    std::vector<int> start(m), target(m);
    std::iota(start.begin(), start.end(), 1);
    std::iota(target.begin(), target.end(), 1);
    for (int i = m - 1; i > 0; --i) std::swap(start[i], start[rng.below(i + 1)]);
    for (int i = m - 1; i > 0; --i) std::swap(target[i], target[rng.below(i + 1)]);

    std::vector<int> target_pos(m + 1);
    for (int i = 0; i < m; ++i) target_pos[target[i]] = i;

    std::vector<std::vector<int>> trajectory{start};
    std::vector<int> cur = start;
    for (;;) {
        std::vector<int> swappable;
        for (int i = 0; i + 1 < m; ++i)
            if (target_pos[cur[i]] > target_pos[cur[i + 1]]) swappable.push_back(i);
        if (swappable.empty()) break;
        int i = swappable[rng.below(swappable.size())];
        std::swap(cur[i], cur[i + 1]);
        trajectory.push_back(cur);
    }

    std::vector<std::size_t> cuts(n);
    for (int v = 0; v < n; ++v) cuts[v] = rng.below(trajectory.size());
    std::sort(cuts.begin(), cuts.end());

    std::vector<std::vector<int>> rankings(n);
    for (int v = 0; v < n; ++v) rankings[v] = trajectory[cuts[v]];
    return rankings;
}
}  // namespace detail

// Positive fixture generator: thresholds a random single-crossing linear
// profile, so the result always admits a single-crossing extension.
// Deterministic for a fixed seed.
inline ApprovalProfile generate_sc_positive(int n, int m, std::uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("generate_sc_positive: n, m must be >= 1");
    splitmix64 rng(seed);
    auto rankings = detail::random_sc_linear(n, m, rng);
    ApprovalProfile p;
    p.m = m;
    p.n = n;
    p.rows.assign(m, std::vector<std::uint8_t>(n, 0));
    for (int v = 0; v < n; ++v) {
        int approved = static_cast<int>(rng.below(m + 1));  // approve top [0, m] candidates
        for (int pos = 0; pos < approved; ++pos) p.rows[rankings[v][pos] - 1][v] = 1;
    }
    return p;
}

}  // namespace psc

#endif
