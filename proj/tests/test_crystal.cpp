#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bk/classic.hpp"
#include "bk/crystal.hpp"
#include "bk/enumerate.hpp"

using namespace bk;

TEST_CASE("lowering operator worked example") {
    Word w = Word::parse("12442313423211243", 4);
    auto moved = crystal_f(w, 2);
    REQUIRE(moved.has_value());
    CHECK(*moved == Word::parse("12443313423211243", 4));
    auto back = crystal_e(*moved, 2);
    REQUIRE(back.has_value());
    CHECK(*back == w);
}

TEST_CASE("operators on extreme words") {
    CHECK_FALSE(crystal_f(Word::parse("22", 2), 1).has_value());
    CHECK(crystal_f(Word::parse("11", 2), 1) == Word::parse("12", 2));
    CHECK(crystal_f(Word::parse("12", 2), 1) == Word::parse("22", 2));
    CHECK_FALSE(crystal_e(Word::parse("11", 2), 1).has_value());
    // Matched pairs are frozen: in 21 the 2 opens and the 1 closes.
    CHECK_FALSE(crystal_f(Word::parse("21", 2), 1).has_value());
    CHECK_FALSE(crystal_e(Word::parse("21", 2), 1).has_value());
    CHECK_THROWS(crystal_f(Word::parse("11", 2), 2));
}

TEST_CASE("string lengths") {
    Word w = Word::parse("11", 2);
    CHECK(crystal_phi(w, 1) == 2);
    CHECK(crystal_epsilon(w, 1) == 0);
    Word mid = Word::parse("12", 2);
    CHECK(crystal_phi(mid, 1) == 1);
    CHECK(crystal_epsilon(mid, 1) == 1);
    CHECK(crystal_phi(Word::parse("21", 2), 1) == 0);
    CHECK(crystal_epsilon(Word::parse("21", 2), 1) == 0);
}

TEST_CASE("e and f are mutually inverse everywhere small") {
    for (int len = 1; len <= 5; ++len)
        for (const auto& w : words_of_length(len, 3))
            for (int i = 1; i <= 2; ++i) {
                if (auto down = crystal_f(w, i)) CHECK(crystal_e(*down, i) == w);
                if (auto up = crystal_e(w, i)) CHECK(crystal_f(*up, i) == w);
            }
}

TEST_CASE("tableau operator worked example") {
    SemistandardTableau t(Partition({8, 5, 5, 4, 3, 2}),
                          {{3},
                           {1, 1, 2, 4},
                           {2},
                           {2, 3},
                           {1, 3, 4},
                           {2, 3},
                           {1, 2, 4, 4}});
    auto moved = crystal_f(t, 2);
    REQUIRE(moved.has_value());
    SemistandardTableau expected(Partition({8, 5, 5, 4, 3, 2}),
                                 {{3},
                                  {1, 1, 2, 4},
                                  {2},
                                  {2, 3},
                                  {1, 3, 4},
                                  {3, 3},
                                  {1, 2, 4, 4}});
    CHECK(*moved == expected);
    CHECK(crystal_e(expected, 2) == t);
}

TEST_CASE("tableau operators agree with the reading word") {
    for (const auto& shape : partitions_up_to(4))
        for (const auto& t : enumerate_ssyt(SkewShape(shape, Partition()), 3))
            for (int i = 1; i <= 2; ++i) {
                auto moved = crystal_f(t, i);
                auto word_moved = crystal_f(
                    Word(reading_word(t).letters(), 3), i);
                CHECK(moved.has_value() == word_moved.has_value());
                if (moved) CHECK(reading_word(*moved).letters() == word_moved->letters());
            }
}

TEST_CASE("crystal operators can raise the alphabet ceiling") {
    SemistandardTableau t = SemistandardTableau::straight({{1}});
    auto moved = crystal_f(t, 1);
    REQUIRE(moved.has_value());
    CHECK(*moved == SemistandardTableau::straight({{2}}));
}

TEST_CASE("components and highest weight words") {
    Word w = Word::parse("21", 2);
    std::vector<Word> comp = crystal_component(w, 1, 2);
    CHECK(comp.size() == 1);  // 21 is killed by e_1 and f_1
    Word v = Word::parse("12", 2);
    comp = crystal_component(v, 1, 2);
    CHECK(comp.size() == 3);
    CHECK(std::is_sorted(comp.begin(), comp.end()));
    CHECK(crystal_highest(Word::parse("22", 2), 1, 2) == Word::parse("11", 2));
    // Every member of a component shares the rsk insertion shape.
    for (const auto& u : crystal_component(Word::parse("12231", 3), 1, 3))
        CHECK(rsk(u).insertion.outer() == rsk(Word::parse("12231", 3)).insertion.outer());
}

TEST_CASE("components partition each length and weight space") {
    std::set<Word> seen;
    int total = 0;
    for (const auto& w : words_of_length(4, 3)) {
        ++total;
        if (seen.count(w)) continue;
        for (const auto& u : crystal_component(w, 1, 3)) CHECK(seen.insert(u).second);
    }
    CHECK(static_cast<int>(seen.size()) == total);
}
