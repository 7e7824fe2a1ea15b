#include "bk/cactus.hpp"

#include <algorithm>
#include <stdexcept>

#include "bk/classic.hpp"
#include "bk/growth.hpp"

namespace bk {

std::vector<int> q_interval_bk_word(int i, int j) {
    if (i < 1 || i > j) throw std::invalid_argument("q_interval: need 1 <= i <= j");
    std::vector<int> word = evacuation_bk_word(j);
    std::vector<int> middle = evacuation_bk_word(j - i + 1);
    word.insert(word.end(), middle.begin(), middle.end());
    std::vector<int> tail = evacuation_bk_word(j);
    word.insert(word.end(), tail.begin(), tail.end());
    return word;
}

SemistandardTableau q_interval(const SemistandardTableau& t, int i, int j) {
    return apply_bk_word(t, q_interval_bk_word(i, j));
}

SemistandardTableau q_interval_growth(const SemistandardTableau& t, int i, int j, int n) {
    return run_evac_interval(t, i, j, n).output;
}

SemistandardTableau tau_staircase_input(const Word& w) {
    int m = w.length();
    if (m == 0) throw std::invalid_argument("tau_staircase_input: empty word");
    std::vector<std::vector<int>> rows(static_cast<size_t>(m));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m - 1 - r; ++c)
            rows[static_cast<size_t>(r)].push_back(r + c + 1);
        rows[static_cast<size_t>(r)].push_back(w.at(m - 1 - r) + m - 1);
    }
    return SemistandardTableau::straight(std::move(rows));
}

Word tau_staircase_output(const SemistandardTableau& s, int alphabet) {
    int m = s.outer().rows();
    if (!s.inner().empty() || s.outer() != Partition::staircase(m))
        throw std::invalid_argument("tau_staircase_output: not a staircase tableau");
    SemistandardTableau high = restrict_interval(s, m, m - 1 + alphabet, false);
    Word shifted = staircase_word(high, m - 1 + alphabet);
    std::vector<int> letters;
    for (int x : shifted.letters()) letters.push_back(x - (m - 1));
    return Word(std::move(letters), alphabet);
}

Word tau_interval(const Word& w, int i, int j) {
    int n = w.alphabet();
    if (i < 1 || i > j || j > n) throw std::invalid_argument("tau_interval: need 1 <= i <= j <= n");
    if (w.length() == 0) return w;
    SemistandardTableau s = tau_staircase_input(w);
    SemistandardTableau out = run_boom(s, i, j, n).output;
    return tau_staircase_output(out, n);
}

Word tau_interval_jdt(const Word& w, int i, int j) {
    int n = w.alphabet();
    if (i < 1 || i > j || j > n)
        throw std::invalid_argument("tau_interval_jdt: need 1 <= i <= j <= n");
    if (w.length() == 0) return w;
    Rectification rect = jdt_rectify(staircase_tableau(w));
    SemistandardTableau moved = q_interval(rect.straight, i, j);
    SemistandardTableau back = jdt_unrectify(moved, rect.record);
    return staircase_word(back, n);
}

Word tau_positions(const Word& w, int i, int j) {
    if (i < 1 || i > j || j > w.length())
        throw std::invalid_argument("tau_positions: need 1 <= i <= j <= length");
    std::vector<int> window(w.letters().begin() + (i - 1), w.letters().begin() + j);
    RskPair pair = rsk(Word(window, w.alphabet()));
    int k = j - i + 1;
    StandardTableau flipped =
        StandardTableau::from_grid(evacuation(pair.recording.to_grid(), k));
    Word back = rsk_inverse(pair.insertion, flipped, w.alphabet());
    std::vector<int> letters = w.letters();
    std::copy(back.letters().begin(), back.letters().end(), letters.begin() + (i - 1));
    return Word(std::move(letters), w.alphabet());
}

}  // namespace bk
