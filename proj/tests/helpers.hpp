#ifndef PSC_TESTS_HELPERS_HPP
#define PSC_TESTS_HELPERS_HPP

#include <numeric>
#include <vector>

#include "psc/colorful_graph.hpp"
#include "psc/nb.hpp"
#include "psc/profile.hpp"

namespace fixtures {

// Six-element instance whose formula graph splits into two non-singleton
// complementary pairs (sizes 5 and 2) plus singletons.
inline psc::NbInstance two_color_instance() {
    return psc::make_nb_instance(
        6, {{1, 2, 3}, {2, 3, 4}, {2, 4, 3}, {4, 2, 5}, {1, 5, 6}});
}

// Five-element instance with no clash whose single color carries the
// directed cycle 1 -> 2 -> 3; unsatisfiable, but only the cycle shows it.
inline psc::NbInstance mono_cycle_instance() {
    return psc::make_nb_instance(
        5, {{1, 2, 4}, {2, 4, 3}, {2, 3, 4}, {2, 3, 5}, {1, 5, 3}, {3, 1, 5}});
}

// Three-valued profile rejected through the monochromatic-cycle branch
// rather than a clash (approval profiles have not been observed to reach it).
inline psc::WeakOrderProfile mono_cycle_weak_profile() {
    psc::WeakOrderProfile p;
    p.m = 7;
    p.n = 6;
    p.scores = {{2, 1, 1, 1, 2, 2, 2}, {2, 0, 0, 1, 0, 2, 1}, {0, 0, 1, 0, 0, 0, 1},
                {1, 0, 2, 2, 0, 2, 2}, {2, 2, 1, 1, 0, 2, 2}, {2, 1, 0, 1, 1, 1, 2}};
    return p;
}

// 5x5 profile whose colorful graph has exactly one biclique color.
inline psc::ApprovalProfile one_biclique_profile() {
    return psc::parse_approval_matrix(std::string("5 5\n"
                                                  "0 1 0 1 0\n"
                                                  "0 0 0 0 1\n"
                                                  "0 0 1 1 0\n"
                                                  "1 1 0 1 0\n"
                                                  "1 0 0 0 0\n"));
}

// 7x7 profile whose colorful graph has four colors, all bicliques:
// {1,4,7}x{2}, {2}x{3,5,6}, {3,5}x{6} and {1,4,7}x{3,5,6}.
inline psc::ApprovalProfile all_biclique_profile() {
    return psc::parse_approval_matrix(std::string("7 7\n"
                                                  "0 0 0 0 0 1 0\n"
                                                  "1 0 0 1 0 0 0\n"
                                                  "0 1 0 0 0 0 0\n"
                                                  "0 0 1 0 1 0 0\n"
                                                  "1 0 0 0 0 0 0\n"
                                                  "0 0 1 0 0 1 0\n"
                                                  "1 0 0 0 0 0 1\n"));
}

inline std::vector<int> ids_upto(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    return ids;
}

inline std::vector<int> ids_without(int n, int removed) {
    std::vector<int> ids;
    for (int i = 1; i <= n; ++i)
        if (i != removed) ids.push_back(i);
    return ids;
}

inline psc::ApprovalProfile random_approval(psc::splitmix64& rng, int m, int n) {
    psc::ApprovalProfile p;
    p.m = m;
    p.n = n;
    p.rows.assign(m, std::vector<std::uint8_t>(n, 0));
    for (int c = 0; c < m; ++c)
        for (int v = 0; v < n; ++v) p.rows[c][v] = static_cast<std::uint8_t>(rng.below(2));
    return p;
}

inline psc::WeakOrderProfile random_weak_order(psc::splitmix64& rng, int m, int n, int classes) {
    psc::WeakOrderProfile p;
    p.m = m;
    p.n = n;
    p.scores.assign(n, std::vector<int>(m, 0));
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c) p.scores[v][c] = static_cast<int>(rng.below(classes));
    return p;
}

inline psc::Orientation orientation_from_mask(unsigned long mask, int colors) {
    psc::Orientation o;
    o.flip.resize(colors);
    for (int c = 0; c < colors; ++c) o.flip[c] = (mask >> c) & 1;
    return o;
}

// Whether some three-colored triangle becomes a directed cycle under o.
// A triangle is a directed cycle iff each of its vertices has in- and
// out-degree one within the triangle.
inline bool has_directed_three_colored_triangle(const psc::ColorfulGraph& g,
                                                const psc::Orientation& o) {
    for (const auto& tri : psc::three_colored_triangles(g)) {
        int from[3], to[3];
        for (int i = 0; i < 3; ++i) {
            from[i] = o.flip[tri[i].color] ? tri[i].to : tri[i].from;
            to[i] = o.flip[tri[i].color] ? tri[i].from : tri[i].to;
        }
        bool cyclic = true;
        for (int i = 0; i < 3 && cyclic; ++i) {
            int outdeg = 0, indeg = 0;
            for (int j = 0; j < 3; ++j) {
                if (from[j] == from[i]) ++outdeg;
                if (to[j] == from[i]) ++indeg;
            }
            cyclic = outdeg == 1 && indeg == 1;
        }
        if (cyclic) return true;
    }
    return false;
}

}  // namespace fixtures

#endif
