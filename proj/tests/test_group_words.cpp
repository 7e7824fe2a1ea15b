#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bk/classic.hpp"
#include "bk/group_words.hpp"

using namespace bk;

TEST_CASE("generator words") {
    CHECK(to_string(t_gen(2)) == "t2");
    CHECK(to_string(t_gen(2, -1)) == "t2^-1");
    CHECK(to_string(q_gen(1, 3)) == "q[1,3]");
    CHECK(to_string(TWord{}) == "1");
    CHECK_THROWS(q_gen(3, 3));
    CHECK(p_word(3) == parse_t_word("t3 t2 t1"));
    CHECK(q_word(2) == parse_t_word("t1 t2 t1"));
    CHECK(q_word(3) == parse_t_word("t1 t2 t1 t3 t2 t1"));
    CHECK(descending_run(4, 2) == parse_t_word("t4 t3 t2"));
    CHECK(descending_run(2, 4).empty());
}

TEST_CASE("q words match the evacuation word") {
    for (int i = 1; i <= 6; ++i) {
        std::vector<int> expected = evacuation_bk_word(i + 1);
        TWord q = q_word(i);
        REQUIRE(q.size() == expected.size());
        for (size_t k = 0; k < q.size(); ++k) {
            CHECK(q[k].index == expected[k]);
            CHECK(q[k].sign == 1);
        }
    }
}

TEST_CASE("inverse and reduction") {
    TWord w = parse_t_word("t1 t2^-1");
    CHECK(inverse(w) == parse_t_word("t2 t1^-1"));
    // Generators are involutions: signs are ignored when cancelling.
    CHECK(free_reduce(parse_t_word("t1 t1^-1")).empty());
    CHECK(free_reduce(parse_t_word("t1 t1")).empty());
    CHECK(free_reduce(parse_t_word("t1 t2 t2 t1 t3")) == parse_t_word("t3"));
    CHECK(free_reduce(QWord{q_gen(1, 3)[0], q_gen(1, 3)[0]}).empty());
    CHECK(repeat(parse_t_word("t1 t2"), 2) == parse_t_word("t1 t2 t1 t2"));
}

TEST_CASE("parsing round trips") {
    for (const char* text : {"t1 t2^-1 t1", "t4"})
        CHECK(to_string(parse_t_word(text)) == text);
    for (const char* text : {"q[1,3] q[2,4]^-1", "q[2,7]"})
        CHECK(to_string(parse_q_word(text)) == text);
}

TEST_CASE("morphism images of the generators") {
    CHECK(phi(q_gen(1, 2)) == parse_t_word("t1"));
    // q_[1,j] -> q_{j-1}; q_[i,j] -> q_{j-1} q_{j-i} q_{j-1}.
    CHECK(phi(q_gen(1, 3)) == q_word(2));
    CHECK(equal_in_g1(phi(q_gen(2, 3)), q_word(2) + q_word(1) + q_word(2)));
    CHECK(psi(t_gen(1)) == q_gen(1, 2));
    CHECK(psi(t_gen(2)) == q_gen(1, 2) + q_gen(1, 3) + q_gen(1, 2));
    CHECK(psi(t_gen(3)) == q_gen(1, 3) + q_gen(1, 4) + q_gen(1, 3) + q_gen(1, 2));
}

TEST_CASE("normal form in the distant-commutation group") {
    CHECK(normal_form_g1(parse_t_word("t1 t1")).empty());
    CHECK(normal_form_g1(parse_t_word("t3 t1")) == std::vector<int>{1, 3});
    CHECK(normal_form_g1(parse_t_word("t1 t3")) == std::vector<int>{1, 3});
    CHECK(normal_form_g1(parse_t_word("t2 t1 t2")) == std::vector<int>{2, 1, 2});
    // Cancellation through a commuting letter: t1 t3 t1 = t3.
    CHECK(normal_form_g1(parse_t_word("t1 t3 t1")) == std::vector<int>{3});
    CHECK(normal_form_g1(parse_t_word("t2^-1")) == std::vector<int>{2});
}

TEST_CASE("equality oracles agree on handpicked words") {
    CHECK(equal_in_g1(parse_t_word("t1 t3"), parse_t_word("t3 t1")));
    CHECK_FALSE(equal_in_g1(parse_t_word("t1 t2"), parse_t_word("t2 t1")));
    CHECK(equal_in_g1_bfs(parse_t_word("t1 t3 t1"), parse_t_word("t3")));
    CHECK_FALSE(equal_in_g1_bfs(parse_t_word("t1"), parse_t_word("t2")));
    CHECK(equal_in_g2(q_gen(1, 2) + q_gen(1, 2), QWord{}));
    CHECK_FALSE(equal_in_g2(q_gen(1, 2), q_gen(1, 3)));
}

TEST_CASE("interval change of variables") {
    // q_i = q_{i+1} p_{i+1}^-1 = p_{i+1} q_{i+1} = q_{i-1} p_i = p_i^-1 q_{i-1}.
    for (int i = 1; i <= 5; ++i) {
        CHECK(equal_in_g1(q_word(i), q_word(i + 1) + inverse(p_word(i + 1))));
        CHECK(equal_in_g1(q_word(i), p_word(i + 1) + q_word(i + 1)));
        CHECK(equal_in_g1(q_word(i), q_word(i - 1) + p_word(i)));
        CHECK(equal_in_g1(q_word(i), inverse(p_word(i)) + q_word(i - 1)));
    }
}

TEST_CASE("generators from interval words") {
    // t_i = q_{i-1} q_i q_{i-1} q_{i-2} for i >= 3.
    for (int i = 3; i <= 7; ++i)
        CHECK(equal_in_g1(t_gen(i), q_word(i - 1) + q_word(i) + q_word(i - 1) + q_word(i - 2)));
}

TEST_CASE("identity families all pass at small bounds") {
    for (const std::string family : {"qchange", "tech1", "tech2", "comm", "rel1"}) {
        auto instances = check_identity_family(family, 5);
        CHECK_FALSE(instances.empty());
        for (const auto& inst : instances) CHECK_MESSAGE(inst.holds, inst.label);
    }
    CHECK_THROWS(check_identity_family("no-such-family", 5));
}

TEST_CASE("the extra relation is not a distant-commutation consequence") {
    for (const auto& inst : check_identity_family("newrel", 6))
        CHECK_MESSAGE(inst.holds, inst.label);
    // Smallest instance by hand: (t_1 q_3 q_1 q_3)^2 for (i,j,k) = (1,3,4).
    TWord word = repeat(t_gen(1) + q_word(3) + q_word(1) + q_word(3), 2);
    CHECK_FALSE(normal_form_g1(word).empty());
    CHECK_FALSE(equal_in_g1_bfs(word, TWord{}));
}

TEST_CASE("disjoint interval commutation is not a distant-commutation consequence") {
    for (const auto& inst : check_identity_family("rel2", 6))
        CHECK_MESSAGE(inst.holds, inst.label);
    QWord a = q_gen(1, 2), b = q_gen(3, 4);
    CHECK_FALSE(equal_in_g1(phi(a + b), phi(b + a)));
    CHECK_FALSE(equal_in_g1_bfs(phi(a + b), phi(b + a)));
}

TEST_CASE("the braid power is nontrivial in the free quotient") {
    TWord braid = repeat(parse_t_word("t1 t2"), 6);
    CHECK_FALSE(normal_form_g1(braid).empty());
    CHECK_FALSE(equal_in_g1(braid, TWord{}));
}
