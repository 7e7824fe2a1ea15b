#pragma once

#include <vector>

#include "bk/tableau.hpp"

namespace bk {

// All semistandard fillings of the shape with entries <= max_entry,
// ordered lexicographically by row-reading word.
std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

// All standard Young tableaux of the (possibly skew) shape, ordered by chain.
std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);
inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    return enumerate_syt(SkewShape(shape, Partition()));
}

// All partitions of exactly n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

// All partitions with 1..max_cells cells plus the empty one.
std::vector<Partition> partitions_up_to(int max_cells);

// All words of the given length over {1..alphabet}, lexicographic.
std::vector<Word> words_of_length(int length, int alphabet);

}  // namespace bk
