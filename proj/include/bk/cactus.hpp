#pragma once

#include <vector>

#include "bk/tableau.hpp"

namespace bk {

// Bender-Knuth word for the interval evacuation q_{[i,j]}: the palindrome
// q_{j-1} q_{j-i} q_{j-1}.  q_{[1,j]} is plain evacuation on entries <= j.
std::vector<int> q_interval_bk_word(int i, int j);

// q_{[i,j]} on straight semistandard tableaux, via Bender-Knuth moves.
SemistandardTableau q_interval(const SemistandardTableau& t, int i, int j);

// The same operator via the doubled-triangle growth diagram (entries <= n).
SemistandardTableau q_interval_growth(const SemistandardTableau& t, int i, int j, int n);

// Canonical staircase extension of a word: the staircase shape with r+c+1 in
// box (r, c) below the antidiagonal and w_{m-r} + (m-1) on the antidiagonal.
SemistandardTableau tau_staircase_input(const Word& w);

// Reads the word back off the antidiagonal of such an extension.
Word tau_staircase_output(const SemistandardTableau& s, int alphabet);

// tau_{[i,j]} on words over {1..n}, 1 <= i <= j <= n: the hexagon route
// (staircase extension pushed through the Boom growth diagram).
Word tau_interval(const Word& w, int i, int j);

// The same operator through slides: rectify the word's column tableau, apply
// q_{[i,j]}, and un-rectify along the recorded shape chain.
Word tau_interval_jdt(const Word& w, int i, int j);

// Position-window action: RSK the factor w_i..w_j, replace the recording
// tableau by its evacuation, and reverse-insert.
Word tau_positions(const Word& w, int i, int j);

}  // namespace bk
