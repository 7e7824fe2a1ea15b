#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bk/cactus.hpp"
#include "bk/classic.hpp"
#include "bk/enumerate.hpp"

using namespace bk;

TEST_CASE("interval word structure") {
    // q_[1,j] is plain evacuation: the middle factor repeats the outer one and
    // the composite reduces to a single q_{j-1} application on tableaux.
    SemistandardTableau t = SemistandardTableau::straight({{1, 4}, {2}, {3}});
    CHECK(q_interval(t, 1, 4) == evacuation(t, 4));
    CHECK(q_interval_bk_word(2, 3) == std::vector<int>{1, 2, 1, 1, 1, 2, 1});
    CHECK_THROWS(q_interval_bk_word(3, 2));
}

TEST_CASE("interval evacuation worked example") {
    SemistandardTableau t = SemistandardTableau::straight({{1, 2, 4}, {2, 3}, {5}});
    SemistandardTableau expected = SemistandardTableau::straight({{1, 3, 4}, {2, 4}, {5}});
    CHECK(q_interval(t, 2, 4) == expected);
    CHECK(q_interval_growth(t, 2, 4, 5) == expected);
    CHECK(q_interval(expected, 2, 4) == t);
}

TEST_CASE("interval evacuation via both routes everywhere small") {
    for (const auto& shape : partitions_up_to(5))
        for (const auto& t : enumerate_ssyt(SkewShape(shape, Partition()), 4))
            for (int j = 2; j <= 4; ++j)
                for (int i = 1; i < j; ++i)
                    CHECK(q_interval(t, i, j) == q_interval_growth(t, i, j, 4));
}

TEST_CASE("staircase extension round trip") {
    Word w = Word::parse("215324", 5);
    SemistandardTableau s = tau_staircase_input(w);
    CHECK(s.outer() == Partition::staircase(6));
    CHECK(s.inner().empty());
    CHECK(s.at(5, 0) == 2 + 5);   // w_1 + (m-1) on the antidiagonal
    CHECK(s.at(1, 0) == 2);       // r + c + 1 below it
    CHECK(tau_staircase_output(s, 5) == w);
    CHECK_THROWS(tau_staircase_input(Word({}, 3)));
}

TEST_CASE("word action worked example") {
    Word w = Word::parse("215324", 5);
    CHECK(tau_interval(w, 2, 4) == Word::parse("215434", 5));
    CHECK(tau_interval_jdt(w, 2, 4) == Word::parse("215434", 5));
    CHECK(tau_interval(Word::parse("215434", 5), 2, 4) == w);
}

TEST_CASE("word action routes agree everywhere small") {
    for (int len = 1; len <= 4; ++len)
        for (const auto& w : words_of_length(len, 3))
            for (int j = 2; j <= 3; ++j)
                for (int i = 1; i < j; ++i)
                    CHECK(tau_interval(w, i, j) == tau_interval_jdt(w, i, j));
}

TEST_CASE("full-interval word action evacuates P and preserves Q") {
    for (int len = 1; len <= 5; ++len)
        for (const auto& w : words_of_length(len, 3)) {
            Word moved = tau_interval(w, 1, 3);
            RskPair before = rsk(w);
            RskPair after = rsk(moved);
            CHECK(after.insertion == evacuation(before.insertion, 3));
            CHECK(after.recording == before.recording);
        }
}

TEST_CASE("position action worked example") {
    CHECK(tau_positions(Word::parse("132", 3), 1, 3) == Word::parse("312", 3));
    CHECK(tau_positions(Word::parse("312", 3), 1, 3) == Word::parse("132", 3));
    CHECK_THROWS(tau_positions(Word::parse("12", 2), 1, 3));
}

TEST_CASE("position action is an involution on windows") {
    for (const auto& w : words_of_length(4, 3))
        for (int j = 1; j <= 4; ++j)
            for (int i = 1; i <= j; ++i)
                CHECK(tau_positions(tau_positions(w, i, j), i, j) == w);
}

TEST_CASE("position and value actions are conjugate by inversion") {
    std::vector<int> perm = {1, 2, 3, 4};
    do {
        Word w(perm, 4);
        std::vector<int> inv(4);
        for (int k = 0; k < 4; ++k) inv[static_cast<size_t>(w.at(k) - 1)] = k + 1;
        for (int j = 2; j <= 4; ++j)
            for (int i = 1; i < j; ++i) {
                Word moved = tau_positions(Word(inv, 4), i, j);
                std::vector<int> back(4);
                for (int k = 0; k < 4; ++k)
                    back[static_cast<size_t>(moved.at(k) - 1)] = k + 1;
                CHECK(tau_interval(w, i, j) == Word(back, 4));
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("empty and single-letter words are fixed") {
    CHECK(tau_interval(Word({}, 4), 2, 3) == Word({}, 4));
    CHECK(tau_interval(Word({2}, 4), 3, 4) == Word({2}, 4));
    CHECK(tau_interval(Word({3}, 4), 3, 4) == Word({4}, 4));
}
