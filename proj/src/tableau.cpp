#include "bk/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bk {

Word::Word(std::vector<int> letters, int alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
    for (int x : letters_)
        if (x < 1 || x > alphabet_)
            throw std::invalid_argument("word letter out of alphabet range");
}

std::string Word::to_string() const {
    std::ostringstream out;
    bool digits = alphabet_ <= 9;
    for (size_t k = 0; k < letters_.size(); ++k) {
        if (!digits && k > 0) out << ' ';
        out << letters_[k];
    }
    return out.str();
}

Word Word::parse(const std::string& text, int alphabet) {
    std::vector<int> letters;
    if (text.find(' ') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad word digit");
            letters.push_back(c - '0');
        }
    } else {
        std::istringstream in(text);
        int x;
        while (in >> x) letters.push_back(x);
    }
    int n = alphabet;
    for (int x : letters) n = std::max(n, x);
    return Word(std::move(letters), n);
}

bool is_semistandard(const Partition& inner, const std::vector<std::vector<int>>& rows) {
    int nrows = static_cast<int>(rows.size());
    std::vector<int> outer(rows.size());
    for (int r = 0; r < nrows; ++r)
        outer[static_cast<size_t>(r)] =
            inner.part(r) + static_cast<int>(rows[static_cast<size_t>(r)].size());
    for (int r = 0; r + 1 < nrows; ++r)
        if (outer[static_cast<size_t>(r)] < outer[static_cast<size_t>(r + 1)]) return false;
    if (inner.rows() > nrows) return false;
    auto entry = [&](int r, int c) -> int {  // 0 when (r,c) is not a filled cell
        if (r < 0 || r >= nrows) return 0;
        int lo = inner.part(r);
        if (c < lo || c >= outer[static_cast<size_t>(r)]) return 0;
        return rows[static_cast<size_t>(r)][static_cast<size_t>(c - lo)];
    };
    for (int r = 0; r < nrows; ++r) {
        int lo = inner.part(r), hi = outer[static_cast<size_t>(r)];
        for (int c = lo; c < hi; ++c) {
            int x = entry(r, c);
            if (x < 1) return false;
            if (c + 1 < hi && x > entry(r, c + 1)) return false;
            int below = entry(r + 1, c);
            if (below != 0 && x >= below) return false;
        }
    }
    return true;
}

SemistandardTableau::SemistandardTableau(Partition inner, std::vector<std::vector<int>> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
    // Trailing rows with no cells and no inner part carry no information.
    while (!rows_.empty() && rows_.back().empty() && inner_.part(static_cast<int>(rows_.size()) - 1) == 0)
        rows_.pop_back();
    if (static_cast<int>(rows_.size()) < inner_.rows())
        rows_.resize(static_cast<size_t>(inner_.rows()));
    if (!is_semistandard(inner_, rows_))
        throw std::invalid_argument("not a semistandard filling");
}

SemistandardTableau SemistandardTableau::straight(std::vector<std::vector<int>> rows) {
    return SemistandardTableau(Partition(), std::move(rows));
}

Partition SemistandardTableau::outer() const {
    std::vector<int> p;
    for (int r = 0; r < row_count(); ++r)
        p.push_back(inner_.part(r) + static_cast<int>(rows_[static_cast<size_t>(r)].size()));
    return Partition(std::move(p));
}

bool SemistandardTableau::has_cell(int r, int c) const {
    if (r < 0 || r >= row_count()) return false;
    int lo = inner_.part(r);
    return c >= lo && c < lo + static_cast<int>(rows_[static_cast<size_t>(r)].size());
}

int SemistandardTableau::at(int r, int c) const {
    if (!has_cell(r, c)) throw std::out_of_range("tableau cell out of range");
    return rows_[static_cast<size_t>(r)][static_cast<size_t>(c - inner_.part(r))];
}

SemistandardTableau SemistandardTableau::with_entry(int r, int c, int value) const {
    if (!has_cell(r, c)) throw std::out_of_range("tableau cell out of range");
    auto rows = rows_;
    rows[static_cast<size_t>(r)][static_cast<size_t>(c - inner_.part(r))] = value;
    return SemistandardTableau(inner_, std::move(rows));
}

int SemistandardTableau::cell_count() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

int SemistandardTableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int x : row) m = std::max(m, x);
    return m;
}

std::vector<Partition> SemistandardTableau::chain(int n) const {
    if (n < max_entry()) throw std::invalid_argument("chain: n below max entry");
    std::vector<Partition> shapes;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> p;
        for (int r = 0; r < row_count(); ++r) {
            const auto& row = rows_[static_cast<size_t>(r)];
            int len = inner_.part(r);
            for (int x : row)
                if (x <= k) ++len;
            p.push_back(len);
        }
        shapes.push_back(Partition(std::move(p)));
    }
    return shapes;
}

SemistandardTableau SemistandardTableau::from_chain(const std::vector<Partition>& shapes) {
    if (shapes.empty()) throw std::invalid_argument("from_chain: empty chain");
    const Partition& inner = shapes.front();
    const Partition& outer = shapes.back();
    std::vector<std::vector<int>> rows(static_cast<size_t>(outer.rows()));
    for (size_t m = 1; m < shapes.size(); ++m) {
        if (!is_horizontal_strip(shapes[m - 1], shapes[m]))
            throw std::invalid_argument("from_chain: step is not a horizontal strip");
        for (int r = 0; r < shapes[m].rows(); ++r)
            for (int c = shapes[m - 1].part(r); c < shapes[m].part(r); ++c)
                rows[static_cast<size_t>(r)].push_back(static_cast<int>(m));
    }
    return SemistandardTableau(inner, std::move(rows));
}

std::string SemistandardTableau::to_string() const {
    std::ostringstream out;
    if (!inner_.empty()) {
        out << "inner:";
        for (int p : inner_.parts()) out << ' ' << p;
        out << '\n';
    }
    for (const auto& row : rows_) {
        for (size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
        out << '\n';
    }
    return out.str();
}

StandardTableau::StandardTableau(std::vector<Partition> shape_chain)
    : chain_(std::move(shape_chain)) {
    if (chain_.empty()) throw std::invalid_argument("standard tableau: empty chain");
    for (size_t k = 1; k < chain_.size(); ++k) {
        if (chain_[k].size() != chain_[k - 1].size() + 1 || !chain_[k].contains(chain_[k - 1]))
            throw std::invalid_argument("standard tableau: chain step must add one box");
    }
}

int StandardTableau::row_of(int k) const {
    if (k < 1 || k > entries()) throw std::out_of_range("row_of: bad entry");
    const Partition& a = chain_[static_cast<size_t>(k - 1)];
    const Partition& b = chain_[static_cast<size_t>(k)];
    for (int r = 0; r < b.rows(); ++r)
        if (b.part(r) != a.part(r)) return r;
    throw std::logic_error("row_of: chain invariant violated");
}

SemistandardTableau StandardTableau::to_grid() const {
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape().rows()));
    for (int r = 0; r < shape().rows(); ++r)
        rows[static_cast<size_t>(r)].resize(
            static_cast<size_t>(shape().part(r) - base().part(r)));
    for (int k = 1; k <= entries(); ++k) {
        int r = row_of(k);
        int c = chain_[static_cast<size_t>(k - 1)].part(r);  // column of the new box
        rows[static_cast<size_t>(r)][static_cast<size_t>(c - base().part(r))] = k;
    }
    return SemistandardTableau(base(), std::move(rows));
}

StandardTableau StandardTableau::from_grid(const SemistandardTableau& grid) {
    int n = grid.cell_count();
    if (grid.max_entry() != n && n != 0)
        throw std::invalid_argument("from_grid: entries must be 1..n");
    auto shapes = grid.chain(n);
    return StandardTableau(std::move(shapes));
}

SemistandardTableau staircase_tableau(const Word& w) {
    int m = w.length();
    if (m == 0) throw std::invalid_argument("staircase_tableau: empty word");
    std::vector<std::vector<int>> rows(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k)
        rows[static_cast<size_t>(m - k)] = {w.at(k - 1)};
    return SemistandardTableau(Partition::staircase(m - 1), std::move(rows));
}

Word staircase_word(const SemistandardTableau& t, int alphabet) {
    int m = t.row_count();
    if (t.inner() != Partition::staircase(m - 1) || t.outer() != Partition::staircase(m))
        throw std::invalid_argument("staircase_word: not a staircase word tableau");
    std::vector<int> letters;
    for (int k = 1; k <= m; ++k)
        letters.push_back(t.at(m - k, k - 1));
    return Word(std::move(letters), alphabet);
}

Word reading_word(const SemistandardTableau& t) {
    std::vector<int> letters;
    for (int r = t.row_count() - 1; r >= 0; --r)
        for (int x : t.rows()[static_cast<size_t>(r)]) letters.push_back(x);
    int n = 0;
    for (int x : letters) n = std::max(n, x);
    return Word(std::move(letters), n);
}

SemistandardTableau restrict_interval(const SemistandardTableau& t, int i, int j, bool shift) {
    if (i < 1 || i > j) throw std::invalid_argument("restrict_interval: need 1 <= i <= j");
    int delta = shift ? i - 1 : 0;
    std::vector<int> inner_parts;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < t.row_count(); ++r) {
        int len = t.inner().part(r);
        std::vector<int> row;
        for (int x : t.rows()[static_cast<size_t>(r)]) {
            if (x < i)
                ++len;
            else if (x <= j)
                row.push_back(x - delta);
        }
        inner_parts.push_back(len);
        rows.push_back(std::move(row));
    }
    return SemistandardTableau(Partition(std::move(inner_parts)), std::move(rows));
}

}  // namespace bk
