#include "bk/enumerate.hpp"

#include <algorithm>

namespace bk {

namespace {

void fill_ssyt(const SkewShape& shape, int max_entry, int r, int c,
               std::vector<std::vector<int>>& rows,
               std::vector<SemistandardTableau>& out) {
    const Partition& outer = shape.outer();
    const Partition& inner = shape.inner();
    while (r < outer.rows() && c >= outer.part(r)) {
        ++r;
        c = r < outer.rows() ? inner.part(r) : 0;
    }
    if (r >= outer.rows()) {
        out.emplace_back(inner, rows);
        return;
    }
    int left = c > inner.part(r) ? rows[static_cast<size_t>(r)][static_cast<size_t>(c - inner.part(r) - 1)] : 1;
    int above = 0;
    if (r > 0 && c >= inner.part(r - 1) && c < outer.part(r - 1))
        above = rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c - inner.part(r - 1))];
    for (int x = std::max(left, above + 1); x <= max_entry; ++x) {
        rows[static_cast<size_t>(r)].push_back(x);
        fill_ssyt(shape, max_entry, r, c + 1, rows, out);
        rows[static_cast<size_t>(r)].pop_back();
    }
}

}  // namespace

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<SemistandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.outer().rows()));
    fill_ssyt(shape, max_entry, 0, shape.outer().rows() > 0 ? shape.inner().part(0) : 0, rows, out);
    std::sort(out.begin(), out.end(),
              [](const SemistandardTableau& a, const SemistandardTableau& b) {
                  return reading_word(a).letters() < reading_word(b).letters();
              });
    return out;
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape) {
    std::vector<StandardTableau> out;
    std::vector<Partition> chain = {shape.inner()};
    const Partition& outer = shape.outer();
    auto recurse = [&](auto&& self) -> void {
        const Partition cur = chain.back();  // copy: chain reallocates below
        if (cur == outer) {
            out.emplace_back(chain);
            return;
        }
        for (int r = 0; r <= cur.rows(); ++r) {
            if (cur.part(r) >= outer.part(r)) continue;
            if (r > 0 && cur.part(r) + 1 > cur.part(r - 1)) continue;
            chain.push_back(cur.with_box(r));
            self(self);
            chain.pop_back();
        }
    };
    recurse(recurse);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out = {Partition()};
    for (int n = 1; n <= max_cells; ++n)
        for (auto& p : partitions_of(n)) out.push_back(std::move(p));
    return out;
}

std::vector<Word> words_of_length(int length, int alphabet) {
    std::vector<Word> out;
    std::vector<int> letters(static_cast<size_t>(length), 1);
    if (length == 0) {
        out.emplace_back(letters, alphabet);
        return out;
    }
    while (true) {
        out.emplace_back(letters, alphabet);
        int k = length - 1;
        while (k >= 0 && letters[static_cast<size_t>(k)] == alphabet) {
            letters[static_cast<size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++letters[static_cast<size_t>(k)];
    }
    return out;
}

}  // namespace bk
