#pragma once

#include <utility>

#include "bk/tableau.hpp"

namespace bk {

// Bender-Knuth move t_i: swaps, per row, the free i's and (i+1)'s.
SemistandardTableau bender_knuth(const SemistandardTableau& t, int i);

// Applies a composition of Bender-Knuth moves, first index first.
SemistandardTableau apply_bk_word(SemistandardTableau t, const std::vector<int>& indices);

// t_1 (t_2 t_1) ... (t_{j-1} ... t_1): the evacuation word q_{j-1}.
std::vector<int> evacuation_bk_word(int j);

// Schutzenberger involution on entries 1..j; entries above j are untouched.
SemistandardTableau evacuation(const SemistandardTableau& t, int j);

struct Rectification {
    SemistandardTableau straight;
    StandardTableau record;  // outward slides reconstructing the input
};

// Slide-based rectification; `order` is a standard tableau of the inner shape
// dictating the order of inward slides (largest entry first).
Rectification jdt_rectify(const SemistandardTableau& t, const StandardTableau& order);

// Rectify with a canonical order (row-insertion-independent by confluence).
Rectification jdt_rectify(const SemistandardTableau& t);

// Inverse of jdt_rectify: replays the recorded outward slides.
SemistandardTableau jdt_unrectify(const SemistandardTableau& straight,
                                  const StandardTableau& record);

// Single inward slide into the inner corner (r, c); returns the slid tableau
// and the outer cell vacated.
struct SlideResult {
    SemistandardTableau tableau;
    int vacated_row;
    int vacated_col;
};
SlideResult jdt_slide_in(const SemistandardTableau& t, int r, int c);

// Single outward slide targeting the addable outer cell (r, c).
SemistandardTableau jdt_slide_out(const SemistandardTableau& t, int r, int c);

struct RskPair {
    SemistandardTableau insertion;  // P
    StandardTableau recording;      // Q
};

RskPair rsk(const Word& w);
Word rsk_inverse(const SemistandardTableau& p, const StandardTableau& q, int alphabet = 0);

}  // namespace bk
