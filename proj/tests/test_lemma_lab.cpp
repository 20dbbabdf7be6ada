#include <algorithm>

#include "doctest.h"

#include "psc/lemma_lab.hpp"

using namespace psc;

TEST_SUITE_BEGIN("lemma_lab");

TEST_CASE("case counts") {
    SUBCASE("L15") {
        auto r = enumerate_lemma_cases(LemmaId::L15);
        CHECK(r.consistent_count() == 68);
        CHECK(r.violation_count == 0);
    }
    SUBCASE("L16") {
        auto r = enumerate_lemma_cases(LemmaId::L16);
        CHECK(r.consistent_count() == 59);
        CHECK(r.violation_count == 0);
    }
    SUBCASE("L13") {
        auto r = enumerate_lemma_cases(LemmaId::L13);
        CHECK(r.violation_count == 0);
        CHECK(r.consistent_cases == std::vector<int>{0, 1, 253, 255});
    }
    SUBCASE("L14") {
        auto r = enumerate_lemma_cases(LemmaId::L14);
        CHECK(r.violation_count == 0);
        CHECK(r.consistent_cases == std::vector<int>{0, 255});
    }
}

TEST_CASE("weakened hypotheses keep every consistent case") {
    auto l13 = enumerate_lemma_cases(LemmaId::L13);
    auto l15 = enumerate_lemma_cases(LemmaId::L15);
    CHECK(std::includes(l15.consistent_cases.begin(), l15.consistent_cases.end(),
                        l13.consistent_cases.begin(), l13.consistent_cases.end()));
    auto l14 = enumerate_lemma_cases(LemmaId::L14);
    auto l16 = enumerate_lemma_cases(LemmaId::L16);
    CHECK(std::includes(l16.consistent_cases.begin(), l16.consistent_cases.end(),
                        l14.consistent_cases.begin(), l14.consistent_cases.end()));
}

TEST_CASE("templates have eight free cells and their fixed entries force the base edges") {
    for (auto id : {LemmaId::L13, LemmaId::L14, LemmaId::L15, LemmaId::L16}) {
        auto t = lemma_template(id);
        int free_cells = 0;
        for (const auto& row : t.skeleton)
            for (int cell : row) free_cells += cell < 0;
        CHECK(free_cells == 8);
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
            for (const auto& [a, b] : t.required_edges) REQUIRE(fg.has_pair_edge(a, b));
        }
    }
}

TEST_CASE("ids parse and print") {
    for (auto id : {LemmaId::L13, LemmaId::L14, LemmaId::L15, LemmaId::L16}) {
        auto parsed = parse_lemma_id(to_string(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK_FALSE(parse_lemma_id("L17"));
    CHECK_FALSE(parse_lemma_id("l15"));
}

TEST_SUITE_END();
