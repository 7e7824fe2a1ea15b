#include "bk/crystal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bk {

namespace {

struct Brackets {
    std::vector<int> free_low;   // positions of unmatched i's, left to right
    std::vector<int> free_high;  // positions of unmatched (i+1)'s, left to right
};

// i+1 opens, i closes; matched pairs are an i+1 with a later i.
Brackets match_brackets(const Word& w, int i) {
    Brackets b;
    for (int k = 0; k < w.length(); ++k) {
        int x = w.at(k);
        if (x == i + 1) {
            b.free_high.push_back(k);
        } else if (x == i) {
            if (!b.free_high.empty())
                b.free_high.pop_back();
            else
                b.free_low.push_back(k);
        }
    }
    return b;
}

}  // namespace

std::optional<Word> crystal_f(const Word& w, int i) {
    if (i < 1 || i + 1 > w.alphabet())
        throw std::invalid_argument("crystal_f: index outside the alphabet");
    Brackets b = match_brackets(w, i);
    if (b.free_low.empty()) return std::nullopt;
    std::vector<int> letters = w.letters();
    letters[static_cast<size_t>(b.free_low.back())] = i + 1;
    return Word(std::move(letters), w.alphabet());
}

std::optional<Word> crystal_e(const Word& w, int i) {
    if (i < 1 || i + 1 > w.alphabet())
        throw std::invalid_argument("crystal_e: index outside the alphabet");
    Brackets b = match_brackets(w, i);
    if (b.free_high.empty()) return std::nullopt;
    std::vector<int> letters = w.letters();
    letters[static_cast<size_t>(b.free_high.front())] = i;
    return Word(std::move(letters), w.alphabet());
}

int crystal_phi(const Word& w, int i) {
    return static_cast<int>(match_brackets(w, i).free_low.size());
}

int crystal_epsilon(const Word& w, int i) {
    return static_cast<int>(match_brackets(w, i).free_high.size());
}

namespace {

// Rebuild a tableau of the same shape from a modified reading word.
SemistandardTableau refill(const SemistandardTableau& t, const Word& w) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(t.row_count()));
    int k = 0;
    for (int r = t.row_count() - 1; r >= 0; --r) {
        size_t len = t.rows()[static_cast<size_t>(r)].size();
        for (size_t c = 0; c < len; ++c) rows[static_cast<size_t>(r)].push_back(w.at(k++));
    }
    return SemistandardTableau(t.inner(), std::move(rows));
}

}  // namespace

namespace {

Word widened_reading_word(const SemistandardTableau& t, int i) {
    Word w = reading_word(t);
    int a = std::max(w.alphabet(), i + 1);
    return Word(w.letters(), a);
}

}  // namespace

std::optional<SemistandardTableau> crystal_f(const SemistandardTableau& t, int i) {
    auto moved = crystal_f(widened_reading_word(t, i), i);
    if (!moved) return std::nullopt;
    return refill(t, *moved);
}

std::optional<SemistandardTableau> crystal_e(const SemistandardTableau& t, int i) {
    auto moved = crystal_e(widened_reading_word(t, i), i);
    if (!moved) return std::nullopt;
    return refill(t, *moved);
}

std::vector<Word> crystal_component(const Word& w, int lo, int hi) {
    if (lo < 1 || lo > hi || hi > w.alphabet())
        throw std::invalid_argument("crystal_component: bad interval");
    std::set<Word> seen = {w};
    std::vector<Word> frontier = {w};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& u : frontier) {
            for (int i = lo; i < hi; ++i) {
                for (auto v : {crystal_f(u, i), crystal_e(u, i)}) {
                    if (v && seen.insert(*v).second) next.push_back(*v);
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Word crystal_highest(const Word& w, int lo, int hi) {
    if (lo < 1 || lo > hi || hi > w.alphabet())
        throw std::invalid_argument("crystal_highest: bad interval");
    Word cur = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = lo; i < hi; ++i) {
            if (auto up = crystal_e(cur, i)) {
                cur = *up;
                moved = true;
                break;
            }
        }
    }
    return cur;
}

}  // namespace bk
