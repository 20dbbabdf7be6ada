#include <algorithm>

#include "doctest.h"

#include "helpers.hpp"
#include "psc/orient.hpp"

using namespace psc;

namespace {

ColorfulGraph colorful_of(const NbInstance& inst) {
    auto part = complementary_pairs_partition(build_formula_graph(inst));
    REQUIRE(std::holds_alternative<ComplementaryPartition>(part));
    return build_colorful_graph(std::get<ComplementaryPartition>(part));
}

NbInstance random_instance(splitmix64& rng, int n, int max_triples) {
    std::vector<std::array<int, 3>> triples;
    for (int t = rng.range(0, max_triples); t > 0; --t) {
        int i = rng.range(1, n), j, k;
        do { j = rng.range(1, n); } while (j == i);
        do { k = rng.range(1, n); } while (k == i || k == j);
        triples.push_back({i, j, k});
    }
    return make_nb_instance(n, triples);
}

}  // namespace

TEST_SUITE_BEGIN("orient");

TEST_CASE("min-rule on the all-biclique profile") {
    auto g = colorful_of(extract_nb_constraints(fixtures::all_biclique_profile()));
    auto result = min_rule_orientation(g);
    REQUIRE(std::holds_alternative<Orientation>(result));
    const auto& o = std::get<Orientation>(result);
    // every color's sources already hold the smaller minimum, so nothing flips
    CHECK(o.flip == std::vector<bool>(4, false));
    CHECK(is_acyclic(apply_orientation(g, o)));
    CHECK(orientation_to_axis(g, o).order == std::vector<int>{1, 4, 7, 2, 3, 5, 6});
}

TEST_CASE("min-rule with no colors") {
    auto g = colorful_from_colors(3, {});
    auto result = min_rule_orientation(g);
    REQUIRE(std::holds_alternative<Orientation>(result));
    CHECK(std::get<Orientation>(result).flip.empty());
    CHECK(orientation_to_axis(g, std::get<Orientation>(result)).order ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("min-rule orients a cyclically arranged triangle acyclically") {
    auto g = colorful_from_colors(3, {{{1, 2}}, {{2, 3}}, {{3, 1}}});
    auto result = min_rule_orientation(g);
    REQUIRE(std::holds_alternative<Orientation>(result));
    auto d = apply_orientation(g, std::get<Orientation>(result));
    CHECK(is_acyclic(d));
    CHECK(d.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("min-rule requires the monochromatic check to have passed") {
    auto g = colorful_from_colors(3, {{{1, 2}, {2, 3}, {3, 1}}});
    CHECK_THROWS_AS(min_rule_orientation(g), std::invalid_argument);
}

TEST_CASE("a non-biclique triangle color is a structure violation") {
    auto g = colorful_from_colors(
        7, {{{1, 2}, {4, 2}, {4, 5}}, {{2, 3}, {2, 6}}, {{3, 1}, {3, 7}}});
    auto result = min_rule_orientation(g);
    REQUIRE(std::holds_alternative<StructureViolation>(result));
    CHECK(std::get<StructureViolation>(result).color == 0);
}

TEST_CASE("a cycle through freely oriented colors is a structure violation") {
    // triangle colors are bicliques, but the base orientation of the
    // non-triangle color closes the cycle 1 -> 2 -> 6 -> 1
    auto g = colorful_from_colors(
        6, {{{1, 2}}, {{2, 3}}, {{3, 1}}, {{2, 6}, {6, 1}}});
    auto result = min_rule_orientation(g);
    REQUIRE(std::holds_alternative<StructureViolation>(result));
    const auto& violation = std::get<StructureViolation>(result);
    CHECK_FALSE(violation.color.has_value());
    CHECK_FALSE(violation.cycle.empty());
}

TEST_CASE("exhaustive orientation search") {
    SUBCASE("the two-color instance has exactly two acyclic orientations") {
        auto g = colorful_of(fixtures::two_color_instance());
        REQUIRE(g.color_count() == 2);
        int acyclic = 0;
        for (unsigned long mask = 0; mask < 4; ++mask)
            acyclic += is_acyclic(apply_orientation(g, fixtures::orientation_from_mask(mask, 2)));
        CHECK(acyclic == 2);
        auto o = fpt_solve(g);
        REQUIRE(o.has_value());
        CHECK(o->flip == std::vector<bool>{false, false});  // first in counting order
        auto axis = orientation_to_axis(g, *o);
        CHECK(axis.order == std::vector<int>{1, 3, 2, 4, 6, 5});
        CHECK(order_satisfies(fixtures::two_color_instance(), axis));
    }
    SUBCASE("no colors yields the empty orientation") {
        auto o = fpt_solve(colorful_from_colors(2, {}));
        REQUIRE(o.has_value());
        CHECK(o->flip.empty());
    }
    SUBCASE("an already acyclic single color is kept") {
        auto o = fpt_solve(colorful_from_colors(3, {{{1, 2}, {3, 2}}}));
        REQUIRE(o.has_value());
        CHECK(o->flip == std::vector<bool>{false});
    }
    SUBCASE("color cap") {
        std::vector<std::vector<std::pair<int, int>>> colors;
        for (int c = 0; c < 21; ++c) colors.push_back({{2 * c + 1, 2 * c + 2}});
        auto g = colorful_from_colors(42, colors);
        CHECK_THROWS_AS(fpt_solve(g), std::invalid_argument);
        CHECK(fpt_solve(g, 21).has_value());
    }
}

TEST_CASE("unsatisfiability via a monochromatic cycle, not a clash") {
    auto inst = fixtures::mono_cycle_instance();
    CHECK_FALSE(fpt_solve_instance(inst));
    CHECK_FALSE(brute_force_solve(inst));
}

TEST_CASE("orientation search agrees with the permutation search") {
    splitmix64 rng(23);
    for (int it = 0; it < 60; ++it) {
        int n = rng.range(3, 6);
        auto inst = random_instance(rng, n, 7);
        auto brute = brute_force_solve(inst);
        auto fpt = fpt_solve_instance(inst);
        CHECK(brute.has_value() == fpt.has_value());
        if (fpt) CHECK(order_satisfies(inst, *fpt));
        if (brute) CHECK(order_satisfies(inst, *brute));
    }
}

TEST_CASE("topological axis is deterministic and respects edges") {
    auto g = colorful_of(fixtures::two_color_instance());
    auto o = fixtures::orientation_from_mask(0, 2);
    auto a = orientation_to_axis(g, o);
    auto b = orientation_to_axis(g, o);
    CHECK(a.order == b.order);
    auto pos = a.positions();
    for (auto [u, v] : apply_orientation(g, o).edges) CHECK(pos[u - 1] < pos[v - 1]);
    CHECK_THROWS_AS(
        orientation_to_axis(colorful_from_colors(3, {{{1, 2}, {2, 3}, {3, 1}}}),
                            fixtures::orientation_from_mask(0, 1)),
        std::invalid_argument);
}

TEST_CASE("an orientation is acyclic iff no three-colored triangle is directed") {
    splitmix64 rng(41);
    int graphs = 0;
    for (std::uint64_t seed = 1; graphs < 25 && seed < 200; ++seed) {
        auto p = generate_sc_positive(rng.range(3, 7), rng.range(3, 7), seed);
        auto part = complementary_pairs_partition(build_formula_graph(extract_nb_constraints(p)));
        if (!std::holds_alternative<ComplementaryPartition>(part)) continue;
        auto g = build_colorful_graph(std::get<ComplementaryPartition>(part));
        if (g.color_count() > 6 || has_monochromatic_cycle(g)) continue;
        ++graphs;
        for (unsigned long mask = 0; mask < (1UL << g.color_count()); ++mask) {
            auto o = fixtures::orientation_from_mask(mask, g.color_count());
            CHECK(is_acyclic(apply_orientation(g, o)) ==
                  !fixtures::has_directed_three_colored_triangle(g, o));
        }
    }
    CHECK(graphs == 25);
}

TEST_SUITE_END();
