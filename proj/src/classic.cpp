#include "bk/classic.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

namespace {

// Dense working grid for slides; 0 marks an absent cell.
struct Grid {
    std::vector<int> inner;
    std::vector<int> outer;
    std::vector<std::vector<int>> cells;

    explicit Grid(const SemistandardTableau& t) {
        int nr = t.row_count();
        inner.resize(static_cast<size_t>(nr + 2), 0);
        outer.resize(static_cast<size_t>(nr + 2), 0);
        int width = nr > 0 ? t.outer().part(0) + 2 : 2;
        cells.assign(static_cast<size_t>(nr + 2), std::vector<int>(static_cast<size_t>(width), 0));
        for (int r = 0; r < nr; ++r) {
            inner[static_cast<size_t>(r)] = t.inner().part(r);
            outer[static_cast<size_t>(r)] = t.outer().part(r);
            for (int c = t.inner().part(r); c < t.outer().part(r); ++c)
                cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = t.at(r, c);
        }
    }

    int at(int r, int c) const {
        if (r < 0 || c < 0 || r >= static_cast<int>(cells.size())) return 0;
        if (c >= static_cast<int>(cells[static_cast<size_t>(r)].size())) return 0;
        return cells[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    void set(int r, int c, int v) { cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = v; }

    SemistandardTableau to_tableau() const {
        std::vector<int> in;
        std::vector<std::vector<int>> rows;
        for (size_t r = 0; r < cells.size(); ++r) {
            if (outer[r] == 0 && inner[r] == 0) continue;
            in.push_back(inner[r]);
            std::vector<int> row;
            for (int c = inner[r]; c < outer[r]; ++c) row.push_back(at(static_cast<int>(r), c));
            rows.push_back(std::move(row));
        }
        return SemistandardTableau(Partition(std::move(in)), std::move(rows));
    }

    // Inward slide; returns the vacated outer cell.
    std::pair<int, int> slide_in(int r, int c) {
        if (inner[static_cast<size_t>(r)] != c + 1 ||
            inner[static_cast<size_t>(r + 1)] > c)
            throw std::invalid_argument("slide_in: not a removable inner corner");
        --inner[static_cast<size_t>(r)];
        while (true) {
            int right = at(r, c + 1);
            int below = (c < outer[static_cast<size_t>(r + 1)]) ? at(r + 1, c) : 0;
            if (right == 0 && below == 0) break;
            if (below != 0 && (right == 0 || below <= right)) {
                set(r, c, below);
                set(r + 1, c, 0);
                ++r;
            } else {
                set(r, c, right);
                set(r, c + 1, 0);
                ++c;
            }
        }
        --outer[static_cast<size_t>(r)];
        return {r, c};
    }

    // Outward slide; the hole ends on an addable inner corner.
    void slide_out(int r, int c) {
        if (outer[static_cast<size_t>(r)] != c ||
            (r > 0 && outer[static_cast<size_t>(r - 1)] < c + 1))
            throw std::invalid_argument("slide_out: not an addable outer cell");
        if (static_cast<int>(cells[static_cast<size_t>(r)].size()) <= c + 1)
            for (auto& row : cells) row.resize(static_cast<size_t>(c + 2), 0);
        ++outer[static_cast<size_t>(r)];
        while (true) {
            int left = (c - 1 >= inner[static_cast<size_t>(r)]) ? at(r, c - 1) : 0;
            int above = (r > 0 && c >= inner[static_cast<size_t>(r - 1)] &&
                         c < outer[static_cast<size_t>(r - 1)])
                            ? at(r - 1, c)
                            : 0;
            if (left == 0 && above == 0) break;
            if (above != 0 && (left == 0 || above >= left)) {
                set(r, c, above);
                set(r - 1, c, 0);
                --r;
            } else {
                set(r, c, left);
                set(r, c - 1, 0);
                --c;
            }
        }
        ++inner[static_cast<size_t>(r)];
    }
};

}  // namespace

SemistandardTableau bender_knuth(const SemistandardTableau& t, int i) {
    if (i < 1) throw std::invalid_argument("bender_knuth: need i >= 1");
    auto rows = t.rows();
    auto entry = [&](int r, int c) -> int {
        return t.has_cell(r, c) ? t.at(r, c) : 0;
    };
    for (int r = 0; r < t.row_count(); ++r) {
        int lo = t.inner().part(r);
        int a = 0, d = 0, ones = 0, twos = 0;
        int first = -1;
        for (size_t k = 0; k < rows[static_cast<size_t>(r)].size(); ++k) {
            int x = rows[static_cast<size_t>(r)][k];
            if (x != i && x != i + 1) continue;
            int c = lo + static_cast<int>(k);
            if (first < 0) first = c;
            if (x == i) {
                ++ones;
                if (entry(r + 1, c) == i + 1) ++a;
            } else {
                ++twos;
                if (entry(r - 1, c) == i) ++d;
            }
        }
        if (ones + twos == 0) continue;
        int cc = twos - d;  // free (i+1)'s become i's; free i's become (i+1)'s
        for (int k = 0; k < ones + twos; ++k) {
            int c = first + k;
            int v = (k < a + cc) ? i : i + 1;
            rows[static_cast<size_t>(r)][static_cast<size_t>(c - lo)] = v;
        }
    }
    return SemistandardTableau(t.inner(), std::move(rows));
}

SemistandardTableau apply_bk_word(SemistandardTableau t, const std::vector<int>& indices) {
    for (int i : indices) t = bender_knuth(t, i);
    return t;
}

std::vector<int> evacuation_bk_word(int j) {
    std::vector<int> word;
    for (int block = 1; block <= j - 1; ++block)
        for (int i = block; i >= 1; --i) word.push_back(i);
    return word;
}

SemistandardTableau evacuation(const SemistandardTableau& t, int j) {
    return apply_bk_word(t, evacuation_bk_word(j));
}

SlideResult jdt_slide_in(const SemistandardTableau& t, int r, int c) {
    Grid g(t);
    auto [vr, vc] = g.slide_in(r, c);
    return {g.to_tableau(), vr, vc};
}

SemistandardTableau jdt_slide_out(const SemistandardTableau& t, int r, int c) {
    Grid g(t);
    g.slide_out(r, c);
    return g.to_tableau();
}

Rectification jdt_rectify(const SemistandardTableau& t, const StandardTableau& order) {
    if (order.shape() != t.inner() || !order.base().empty())
        throw std::invalid_argument("jdt_rectify: order must be a straight SYT of the inner shape");
    Grid g(t);
    int m = order.entries();
    std::vector<Partition> removed_chain;  // shapes after 0, 1, ..., m removals
    {
        std::vector<int> outer;
        for (size_t r = 0; r < g.outer.size(); ++r)
            if (g.outer[r] > 0) outer.push_back(g.outer[r]);
        removed_chain.push_back(Partition(std::move(outer)));
    }
    for (int k = m; k >= 1; --k) {
        int r = order.row_of(k);
        int c = order.chain()[static_cast<size_t>(k)].part(r) - 1;
        g.slide_in(r, c);
        std::vector<int> outer;
        for (size_t rr = 0; rr < g.outer.size(); ++rr)
            if (g.outer[rr] > 0) outer.push_back(g.outer[rr]);
        removed_chain.push_back(Partition(std::move(outer)));
    }
    std::reverse(removed_chain.begin(), removed_chain.end());
    return {g.to_tableau(), StandardTableau(std::move(removed_chain))};
}

Rectification jdt_rectify(const SemistandardTableau& t) {
    // Row-by-row standard tableau of the inner shape.
    std::vector<Partition> chain = {Partition()};
    const Partition mu = t.inner();
    for (int r = 0; r < mu.rows(); ++r)
        for (int c = 0; c < mu.part(r); ++c) chain.push_back(chain.back().with_box(r));
    return jdt_rectify(t, StandardTableau(std::move(chain)));
}

SemistandardTableau jdt_unrectify(const SemistandardTableau& straight,
                                  const StandardTableau& record) {
    if (record.base() != straight.outer())
        throw std::invalid_argument("jdt_unrectify: record base must match the straight shape");
    Grid g(straight);
    for (int k = 1; k <= record.entries(); ++k) {
        int r = record.row_of(k);
        int c = record.chain()[static_cast<size_t>(k)].part(r) - 1;
        if (static_cast<int>(g.outer.size()) <= r + 2) {
            g.outer.resize(static_cast<size_t>(r + 3), 0);
            g.inner.resize(static_cast<size_t>(r + 3), 0);
            g.cells.resize(static_cast<size_t>(r + 3),
                           std::vector<int>(g.cells.front().size(), 0));
        }
        g.slide_out(r, c);
    }
    return g.to_tableau();
}

RskPair rsk(const Word& w) {
    std::vector<std::vector<int>> p;
    std::vector<Partition> qchain = {Partition()};
    for (int k = 0; k < w.length(); ++k) {
        int x = w.at(k);
        size_t r = 0;
        while (true) {
            if (r == p.size()) p.emplace_back();
            auto& row = p[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);
            ++r;
        }
        qchain.push_back(qchain.back().with_box(static_cast<int>(r)));
    }
    return {SemistandardTableau::straight(std::move(p)), StandardTableau(std::move(qchain))};
}

Word rsk_inverse(const SemistandardTableau& p, const StandardTableau& q, int alphabet) {
    if (!p.inner().empty() || !q.base().empty() || p.outer() != q.shape())
        throw std::invalid_argument("rsk_inverse: need straight tableaux of equal shape");
    auto rows = p.rows();
    int n = q.entries();
    std::vector<int> letters(static_cast<size_t>(n), 0);
    for (int k = n; k >= 1; --k) {
        int r = q.row_of(k);
        auto& row = rows[static_cast<size_t>(r)];
        int v = row.back();
        row.pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& up = rows[static_cast<size_t>(rr)];
            // rightmost entry strictly less than v
            auto it = std::lower_bound(up.begin(), up.end(), v);
            if (it == up.begin())
                throw std::invalid_argument("rsk_inverse: pair is not in the image of rsk");
            --it;
            std::swap(*it, v);
        }
        letters[static_cast<size_t>(k - 1)] = v;
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    for (const auto& row : rows)
        if (!row.empty())
            throw std::invalid_argument("rsk_inverse: pair is not in the image of rsk");
    int a = alphabet;
    for (int x : letters) a = std::max(a, x);
    return Word(std::move(letters), a);
}

}  // namespace bk
