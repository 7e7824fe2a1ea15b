#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bk/cactus.hpp"
#include "bk/classic.hpp"
#include "bk/enumerate.hpp"
#include "bk/growth.hpp"

using namespace bk;

TEST_CASE("diamond rule worked values") {
    CHECK(diamond_rule(Partition(), Partition({1}), Partition({2, 1})) == Partition({2}));
    CHECK(diamond_rule(Partition({1}), Partition({2}), Partition({2, 1})) ==
          Partition({1, 1}));
    // Standard special case: two boxes in distinct rows and columns swap.
    CHECK(diamond_rule(Partition({2}), Partition({2, 1}), Partition({3, 1})) ==
          Partition({3}));
    // Degenerate chains pass through.
    CHECK(diamond_rule(Partition({1}), Partition({1}), Partition({1})) == Partition({1}));
    CHECK_THROWS(diamond_rule(Partition({2, 1}), Partition({1}), Partition({1})));
}

TEST_CASE("diamond rule is the two-letter bender-knuth move") {
    // A chain nu <= mu <= lambda encodes a two-row filling of lambda/nu with
    // 1's up to mu and 2's beyond; the rule must match t_1 on that filling.
    for (const auto& lambda : partitions_up_to(5))
        for (const auto& mu : partitions_up_to(5)) {
            if (!lambda.contains(mu) || !is_horizontal_strip(mu, lambda)) continue;
            for (const auto& nu : partitions_up_to(5)) {
                if (!mu.contains(nu) || !is_horizontal_strip(nu, mu)) continue;
                std::vector<std::vector<int>> rows;
                for (int r = 0; r < lambda.rows(); ++r) {
                    std::vector<int> row;
                    for (int c = nu.part(r); c < mu.part(r); ++c) row.push_back(1);
                    for (int c = mu.part(r); c < lambda.part(r); ++c) row.push_back(2);
                    rows.push_back(std::move(row));
                }
                SemistandardTableau skew(nu, rows);
                SemistandardTableau moved = bender_knuth(skew, 1);
                std::vector<Partition> chain = moved.chain(2);
                // chain = nu <= mu' <= lambda with mu' counting the 1's.
                Partition via_tableau = chain[1];
                CHECK(diamond_rule(nu, mu, lambda) == via_tableau);
                CHECK(diamond_rule(nu, via_tableau, lambda) == mu);
            }
        }
}

TEST_CASE("evac template geometry") {
    CenterSet evac4 = evac_centers(4);
    CHECK(evac4 == CenterSet{{2, 1}, {4, 1}, {6, 1}, {3, 2}, {5, 2}, {4, 3}});
    CHECK(evac_centers(1).empty());
    CHECK(evac_centers(2) == CenterSet{{2, 1}});
}

TEST_CASE("evacuation growth diagram matches the worked example") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 4}, {2}, {3}});
    DiagramResult run = run_evac(t, 4, 4);
    CHECK(run.output == SemistandardTableau::straight({{1, 2}, {3}, {4}}));
    CHECK(run.grid.at(3, 1) == Partition({1}));
    CHECK(run.grid.at(5, 1) == Partition({1}));
    CHECK(run.grid.at(7, 1) == Partition({1}));
    CHECK(run.grid.at(4, 2) == Partition({1, 1}));
    CHECK(run.grid.at(6, 2) == Partition({2}));
    CHECK(run.grid.at(5, 3) == Partition({2, 1}));
    for (int x = 0; x <= 8; x += 2) CHECK(run.grid.at(x, 0) == Partition());
}

TEST_CASE("growth evacuation equals the bender-knuth word everywhere small") {
    for (const auto& shape : partitions_up_to(5))
        for (const auto& t : enumerate_ssyt(SkewShape(shape, Partition()), 4))
            for (int j = 1; j <= 4; ++j)
                CHECK(run_evac(t, j, 4).output == evacuation(t, j));
}

TEST_CASE("growth rectification matches slides") {
    for (const auto& outer : partitions_up_to(5))
        for (const auto& inner : partitions_up_to(3)) {
            if (inner.empty() || inner == outer || !outer.contains(inner)) continue;
            for (const auto& order : enumerate_syt(SkewShape(inner, Partition())))
                for (const auto& t : enumerate_ssyt(SkewShape(outer, inner), 3)) {
                    RectResult growth = run_rect(t, order);
                    Rectification slides = jdt_rectify(t, order);
                    CHECK(growth.straight == slides.straight);
                    CHECK(growth.record_chain == slides.record.chain());
                }
        }
}

TEST_CASE("interval growth diagram matches the worked example") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 2, 4}, {2, 3}, {5}});
    DiagramResult run = run_evac_interval(t, 2, 4, 5);
    CHECK(run.output == SemistandardTableau::straight({{1, 3, 4}, {2, 4}, {5}}));
    CHECK(run.grid.at(3, 1) == Partition({2}));
    CHECK(run.grid.at(4, 2) == Partition({2, 1}));
    CHECK(run.grid.at(8, 2) == Partition({1, 1}));
    CHECK(run.grid.at(5, 3) == Partition({3, 1}));
    CHECK(run.grid.at(6, 4) == Partition({3, 2}));
    CHECK(run.grid.at(5, 5) == Partition({3, 2, 1}));
}

TEST_CASE("boom diagram reproduces the worked hexagon") {
    Word w = Word::parse("215324", 5);
    DiagramResult run = run_boom(tau_staircase_input(w), 2, 4, 5);
    CHECK(tau_staircase_output(run.output, 5) == Word::parse("215434", 5));
    CHECK(run.grid.at(3, 3) == Partition({3, 2, 1}));
    CHECK(run.grid.at(9, 3) == Partition({3, 1}));
    CHECK(run.grid.at(0, 6) == Partition({5, 4, 3, 2, 2}));
    CHECK(run.grid.at(18, 6) == Partition({5, 4, 3, 2, 2}));
    CHECK(run.grid.at(5, 7) == Partition({6, 4, 2, 1, 1}));
    CHECK(run.grid.at(4, 10) == Partition({6, 5, 4, 3, 2, 1}));
    CHECK(run.grid.at(14, 10) == Partition({6, 5, 4, 3, 2, 1}));
}

TEST_CASE("boom equals its evacuation conjugation") {
    for (const auto& w : words_of_length(3, 3)) {
        SemistandardTableau s = tau_staircase_input(w);
        for (int j = 2; j <= 3; ++j)
            for (int i = 1; i < j; ++i)
                CHECK(boom_apply(s, i, j, 3) == run_boom(s, i, j, 3).output);
    }
}

TEST_CASE("growth runs reject malformed input") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 3}});
    CHECK_THROWS(run_evac(t, 2, 2));  // entry above the alphabet bound
    SemistandardTableau skew(Partition({1}), {{1}});
    CHECK_THROWS(run_evac(skew, 1, 1));  // not straight
}

TEST_CASE("grid rendering mentions every labeled vertex") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 2}, {2}});
    DiagramResult run = run_evac(t, 2, 2);
    std::string text = run.grid.render();
    CHECK(text.find("21") != std::string::npos);
    CHECK(text.find('-') != std::string::npos);
}
