#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bk/partition.hpp"

namespace bk {

// Finite sequence over the alphabet {1, ..., n}.
class Word {
public:
    Word() = default;
    Word(std::vector<int> letters, int alphabet);

    const std::vector<int>& letters() const { return letters_; }
    int alphabet() const { return alphabet_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int at(int k) const { return letters_[static_cast<size_t>(k)]; }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    // Contiguous digits when the alphabet fits, else space separated.
    std::string to_string() const;
    static Word parse(const std::string& text, int alphabet = 0);

private:
    std::vector<int> letters_;
    int alphabet_ = 0;
};

// Straight or skew semistandard filling.  Row r occupies columns
// inner[r] .. inner[r] + rows[r].size() - 1; the outer shape is implied.
class SemistandardTableau {
public:
    SemistandardTableau() = default;
    SemistandardTableau(Partition inner, std::vector<std::vector<int>> rows);
    static SemistandardTableau straight(std::vector<std::vector<int>> rows);

    const Partition& inner() const { return inner_; }
    Partition outer() const;
    SkewShape shape() const { return SkewShape(outer(), inner_); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }

    bool has_cell(int r, int c) const;
    int at(int r, int c) const;  // requires has_cell(r, c)
    SemistandardTableau with_entry(int r, int c, int value) const;

    int cell_count() const;
    int max_entry() const;  // 0 for the empty tableau
    bool empty() const { return cell_count() == 0; }

    // chain(n)[k] = inner shape plus all cells with entry <= k, k = 0..n.
    // Consecutive shapes differ by horizontal strips.
    std::vector<Partition> chain(int n) const;
    static SemistandardTableau from_chain(const std::vector<Partition>& shapes);

    bool operator==(const SemistandardTableau&) const = default;
    auto operator<=>(const SemistandardTableau&) const = default;

    std::string to_string() const;

private:
    Partition inner_;
    std::vector<std::vector<int>> rows_;
};

// Saturated chain of shapes; the base shape may be nonempty (skew case).
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<Partition> shape_chain);

    const std::vector<Partition>& chain() const { return chain_; }
    int entries() const { return static_cast<int>(chain_.size()) - 1; }
    const Partition& base() const { return chain_.front(); }
    const Partition& shape() const { return chain_.back(); }

    // Row of the box added at step k (1-based entry).
    int row_of(int k) const;

    SemistandardTableau to_grid() const;
    static StandardTableau from_grid(const SemistandardTableau& grid);

    bool operator==(const StandardTableau&) const = default;
    auto operator<=>(const StandardTableau&) const = default;

private:
    std::vector<Partition> chain_;
};

// Validation used by constructors and the enumeration oracles.
bool is_semistandard(const Partition& inner, const std::vector<std::vector<int>>& rows);

// T(w): the staircase word tableau of shape delta_m / delta_{m-1} with w_1 in
// the bottom-left box, reading upward along the antidiagonal.
SemistandardTableau staircase_tableau(const Word& w);

// Inverse of staircase_tableau on tableaux of shape delta_m / delta_{m-1}.
Word staircase_word(const SemistandardTableau& t, int alphabet);

// Row reading word: rows bottom to top, each left to right.
Word reading_word(const SemistandardTableau& t);

// Subtableau of entries in [i, j]; entries are decreased by i-1 unless
// shift is false.
SemistandardTableau restrict_interval(const SemistandardTableau& t, int i, int j,
                                      bool shift = true);

}  // namespace bk
