#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bk/classic.hpp"
#include "bk/enumerate.hpp"
#include "bk/tableau.hpp"

using namespace bk;

namespace {

std::vector<SemistandardTableau> small_space(int max_cells, int max_entry) {
    std::vector<SemistandardTableau> out;
    for (const auto& shape : partitions_up_to(max_cells))
        for (auto& t : enumerate_ssyt(SkewShape(shape, Partition()), max_entry))
            out.push_back(std::move(t));
    return out;
}

}  // namespace

TEST_CASE("bender-knuth worked example") {
    SemistandardTableau s(Partition({6, 2}), {{3, 3, 4}, {3, 3, 4, 4, 4}, {3, 3, 4}});
    SemistandardTableau expected(Partition({6, 2}),
                                 {{3, 3, 4}, {3, 3, 3, 4, 4}, {4, 4, 4}});
    CHECK(bender_knuth(s, 3) == expected);
    CHECK(bender_knuth(expected, 3) == s);
}

TEST_CASE("bender-knuth small cases") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 2}, {2}});
    CHECK(bender_knuth(t, 1) == SemistandardTableau::straight({{1, 1}, {2}}));
    // A tableau without i or i+1 is fixed; a free 1 becomes a 2.
    SemistandardTableau u = SemistandardTableau::straight({{3, 4}, {5}});
    CHECK(bender_knuth(u, 1) == u);
    CHECK(bender_knuth(u, 6) == u);
    CHECK(bender_knuth(SemistandardTableau::straight({{1, 3}, {4}}), 1) ==
          SemistandardTableau::straight({{2, 3}, {4}}));
}

TEST_CASE("bender-knuth involution and distant commutation") {
    for (const auto& t : small_space(5, 4)) {
        for (int i = 1; i <= 4; ++i) CHECK(bender_knuth(bender_knuth(t, i), i) == t);
        CHECK(bender_knuth(bender_knuth(t, 1), 3) == bender_knuth(bender_knuth(t, 3), 1));
    }
}

TEST_CASE("evacuation word structure") {
    CHECK(evacuation_bk_word(1).empty());
    CHECK(evacuation_bk_word(2) == std::vector<int>{1});
    CHECK(evacuation_bk_word(3) == std::vector<int>{1, 2, 1});
    CHECK(evacuation_bk_word(4) == std::vector<int>{1, 2, 1, 3, 2, 1});
}

TEST_CASE("evacuation examples") {
    CHECK(evacuation(SemistandardTableau::straight({{1, 4}, {2}, {3}}), 4) ==
          SemistandardTableau::straight({{1, 2}, {3}, {4}}));
    CHECK(evacuation(SemistandardTableau::straight({{1, 2}, {3}}), 3) ==
          SemistandardTableau::straight({{1, 3}, {2}}));
    CHECK(evacuation(SemistandardTableau::straight({{1}}), 1) ==
          SemistandardTableau::straight({{1}}));
    CHECK(evacuation(SemistandardTableau::straight({{1, 1}, {2}}), 2) ==
          SemistandardTableau::straight({{1, 2}, {2}}));
    for (const auto& t : small_space(5, 4)) CHECK(evacuation(evacuation(t, 4), 4) == t);
}

TEST_CASE("jdt rectification is confluent over slide orders") {
    for (const auto& outer : partitions_up_to(6))
        for (const auto& inner : partitions_up_to(3)) {
            if (inner.empty() || inner == outer || !outer.contains(inner)) continue;
            auto orders = enumerate_syt(SkewShape(inner, Partition()));
            for (const auto& t : enumerate_ssyt(SkewShape(outer, inner), 3)) {
                Rectification canonical = jdt_rectify(t);
                for (const auto& order : orders) {
                    Rectification r = jdt_rectify(t, order);
                    CHECK(r.straight == canonical.straight);
                    CHECK(jdt_unrectify(r.straight, r.record) == t);
                }
            }
        }
}

TEST_CASE("rectifying a straight tableau is a no-op") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 2}, {2}});
    Rectification r = jdt_rectify(t);
    CHECK(r.straight == t);
    CHECK(r.record.entries() == 0);
}

TEST_CASE("single slides invert each other") {
    SemistandardTableau t(Partition({1}), {{2}, {1}});
    SlideResult in = jdt_slide_in(t, 0, 0);
    CHECK(in.tableau == SemistandardTableau::straight({{1, 2}}));
    CHECK(in.vacated_row == 1);
    CHECK(in.vacated_col == 0);
    CHECK(jdt_slide_out(in.tableau, in.vacated_row, in.vacated_col) == t);
}

TEST_CASE("rsk worked examples") {
    RskPair p132 = rsk(Word::parse("132", 3));
    CHECK(p132.insertion == SemistandardTableau::straight({{1, 2}, {3}}));
    CHECK(p132.recording.to_grid() == SemistandardTableau::straight({{1, 2}, {3}}));
    RskPair p = rsk(Word::parse("215324", 5));
    CHECK(p.insertion == SemistandardTableau::straight({{1, 2, 4}, {2, 3}, {5}}));
    CHECK(p.insertion.outer() == Partition({3, 2, 1}));
    RskPair row = rsk(Word::parse("1234", 4));
    CHECK(row.insertion.outer() == Partition({4}));
    CHECK(row.recording.shape() == Partition({4}));
}

TEST_CASE("rsk inverse worked example") {
    SemistandardTableau p = SemistandardTableau::straight({{1, 2}, {3}});
    StandardTableau q = StandardTableau::from_grid(SemistandardTableau::straight({{1, 3}, {2}}));
    CHECK(rsk_inverse(p, q, 3) == Word::parse("312", 3));
    CHECK_THROWS(rsk_inverse(p, StandardTableau::from_grid(
                                    SemistandardTableau::straight({{1}, {2}, {3}}))));
}

TEST_CASE("rsk round trip and rectification agreement") {
    for (int len = 0; len <= 5; ++len)
        for (const auto& w : words_of_length(len, 3)) {
            RskPair pair = rsk(w);
            CHECK(rsk_inverse(pair.insertion, pair.recording, 3) == w);
            if (len > 0)
                CHECK(jdt_rectify(staircase_tableau(w)).straight == pair.insertion);
        }
}
