#pragma once

#include <optional>
#include <vector>

#include "bk/tableau.hpp"

namespace bk {

// Crystal raising/lowering operators on words via the bracket rule: read the
// word treating i+1 as '(' and i as ')'; f_i turns the leftmost unmatched ')'
// ... rightmost unmatched i into i+1, e_i the leftmost unmatched i+1 into i.
std::optional<Word> crystal_f(const Word& w, int i);
std::optional<Word> crystal_e(const Word& w, int i);

// The same operators on straight semistandard tableaux, acting through the
// row reading word.
std::optional<SemistandardTableau> crystal_f(const SemistandardTableau& t, int i);
std::optional<SemistandardTableau> crystal_e(const SemistandardTableau& t, int i);

// Number of times f_i (resp. e_i) applies before hitting the end of the string.
int crystal_phi(const Word& w, int i);
int crystal_epsilon(const Word& w, int i);

// All words reachable from w by e_i/f_i with i in [lo, hi-1], sorted.
std::vector<Word> crystal_component(const Word& w, int lo, int hi);

// True if all words of the component have the same rsk insertion shape (they
// do; exposed for property checks) -- returns the common component highest
// weight word, the unique one killed by every e_i, i in [lo, hi-1].
Word crystal_highest(const Word& w, int lo, int hi);

}  // namespace bk
