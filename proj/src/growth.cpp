#include "bk/growth.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace bk {

const Partition& GrowthGrid::at(int x, int y) const {
    auto it = shapes_.find({x, y});
    if (it == shapes_.end()) {
        std::ostringstream msg;
        msg << "growth grid has no vertex at (" << x << ", " << y << ")";
        throw std::invalid_argument(msg.str());
    }
    return it->second;
}

std::vector<Partition> GrowthGrid::chain_along(const std::vector<Vertex>& path) const {
    std::vector<Partition> chain;
    chain.reserve(path.size());
    for (const auto& [x, y] : path) chain.push_back(at(x, y));
    return chain;
}

std::string GrowthGrid::render() const {
    if (shapes_.empty()) return "";
    int minx = INT_MAX, maxx = INT_MIN;
    size_t width = 1;
    for (const auto& [v, p] : shapes_) {
        minx = std::min(minx, v.first);
        maxx = std::max(maxx, v.first);
        width = std::max(width, p.to_string().size());
    }
    size_t cw = width + 1;
    std::ostringstream out;
    for (int y = height_; y >= 0; --y) {
        std::string line;
        bool any = false;
        for (int x = minx; x <= maxx; ++x) {
            auto it = shapes_.find({x, y});
            if (it == shapes_.end()) continue;
            any = true;
            size_t col = static_cast<size_t>(x - minx) * cw;
            if (line.size() < col) line.resize(col, ' ');
            line += it->second.to_string();
            line.resize(col + cw, ' ');
        }
        if (!any) continue;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

Partition diamond_rule(const Partition& bottom, const Partition& left, const Partition& top) {
    if (!is_horizontal_strip(bottom, left) || !is_horizontal_strip(left, top))
        throw std::invalid_argument("diamond_rule: chain must be two horizontal strips");
    auto overlap = [](int a1, int a2, int b1, int b2) {
        return std::max(0, std::min(a2, b2) - std::max(a1, b1));
    };
    // Encode the diamond as the two-letter skew tableau with 1's on left/bottom
    // and 2's on top/left and apply the first Bender-Knuth move row by row:
    // a = 1's with a 2 directly below (pinned), d = 2's with a 1 directly above
    // (pinned), the rest trade places.
    std::vector<int> parts;
    for (int r = 0; r < top.rows(); ++r) {
        int a = overlap(bottom.part(r), left.part(r), left.part(r + 1), top.part(r + 1));
        int d = r == 0 ? 0
                       : overlap(left.part(r), top.part(r), bottom.part(r - 1), left.part(r - 1));
        int c = (top.part(r) - left.part(r)) - d;
        parts.push_back(bottom.part(r) + a + c);
    }
    Partition right{std::move(parts)};
    if (!is_horizontal_strip(bottom, right) || !is_horizontal_strip(right, top))
        throw std::logic_error("diamond_rule: produced an invalid chain");
    return right;
}

CenterSet evac_centers(int j, int offset) {
    CenterSet centers;
    for (int y = 1; y <= j - 1; ++y)
        for (int x = y + 1; x <= 2 * j - 1 - y; x += 2) centers.insert({offset + x, y});
    return centers;
}

CenterSet rect_centers(int i, int j) {
    CenterSet centers;
    for (int y = 1; y <= i + j - 1; ++y) {
        int left = y <= i ? -y : y - 2 * i;
        int right = y <= j ? y : 2 * j - y;
        for (int x = left + 1; x <= right - 1; x += 2) centers.insert({x, y});
    }
    return centers;
}

CenterSet evac_interval_centers(int i, int j) {
    CenterSet centers = evac_centers(j, 0);
    CenterSet shifted = evac_centers(j, 2 * (i - 1));
    centers.insert(shifted.begin(), shifted.end());
    return centers;
}

CenterSet boom_centers(int i, int j, int m, int height) {
    int big = m + i - 2;       // L: length of the NW input leg
    int wide = j - i + 1;      // W: width of the hexagon
    CenterSet centers;
    for (int y = 1; y <= height - 1; ++y) {
        int inx = std::abs(y - big);
        int outx = y <= big ? big + 2 * wide + y : 3 * big + 2 * wide - y;
        for (int x = inx + 1; x <= big + 2 * wide - 1 - y; x += 2) centers.insert({x, y});
        for (int x = big + y + 1; x <= outx - 1; x += 2) centers.insert({x, y});
    }
    return centers;
}

GrowthGrid run_growth(int height, const CenterSet& centers,
                      const std::vector<PathLabel>& input, int x_max) {
    if (input.empty()) throw std::invalid_argument("run_growth: empty input path");
    int parity = (input.front().vertex.first + input.front().vertex.second) & 1;
    std::vector<int> inputx(static_cast<size_t>(height) + 1, INT_MIN);
    GrowthGrid grid(height);
    int minx = INT_MAX;
    for (const auto& label : input) {
        auto [x, y] = label.vertex;
        if (y < 0 || y > height || ((x + y) & 1) != parity)
            throw std::invalid_argument("run_growth: input vertex off the lattice");
        if (inputx[static_cast<size_t>(y)] != INT_MIN)
            throw std::invalid_argument("run_growth: two input labels in one row");
        inputx[static_cast<size_t>(y)] = x;
        minx = std::min(minx, x);
        grid.set(x, y, label.shape);
    }
    for (int y = 0; y <= height; ++y)
        if (inputx[static_cast<size_t>(y)] == INT_MIN)
            throw std::invalid_argument("run_growth: input path must touch every row");
    if (!grid.at(inputx[0], 0).empty())
        throw std::invalid_argument("run_growth: row 0 must carry the empty shape");
    for (int x = minx; x <= x_max; ++x) {
        for (int y = 0; y <= height; ++y) {
            if (((x + y) & 1) != parity) continue;
            if (x <= inputx[static_cast<size_t>(y)]) continue;
            if (y == 0) {
                grid.set(x, 0, Partition());
                continue;
            }
            if (centers.count({x - 1, y})) {
                if (y + 1 > height || !grid.has(x - 1, y - 1) || !grid.has(x - 2, y) ||
                    !grid.has(x - 1, y + 1))
                    throw std::invalid_argument("run_growth: diamond is missing a neighbor");
                grid.set(x, y,
                         diamond_rule(grid.at(x - 1, y - 1), grid.at(x - 2, y),
                                      grid.at(x - 1, y + 1)));
            } else if (grid.has(x - 2, y)) {
                grid.set(x, y, grid.at(x - 2, y));
            }
        }
    }
    return grid;
}

namespace {

std::vector<PathLabel> straight_input(const SemistandardTableau& t, int n) {
    if (!t.inner().empty())
        throw std::invalid_argument("growth diagram input must be a straight tableau");
    if (t.max_entry() > n)
        throw std::invalid_argument("growth diagram input has entries above the alphabet");
    std::vector<Partition> chain = t.chain(n);
    std::vector<PathLabel> input;
    for (int y = 0; y <= n; ++y)
        input.push_back({{y, y}, chain[static_cast<size_t>(y)]});
    return input;
}

SemistandardTableau read_mirror_output(const GrowthGrid& grid, int apex_x, int n) {
    // The output path descends NW from (apex_x, 0) until it meets the input
    // diagonal, then follows it.
    std::vector<Partition> chain;
    for (int y = 0; y <= n; ++y)
        chain.push_back(2 * y <= apex_x ? grid.at(apex_x - y, y) : grid.at(y, y));
    return SemistandardTableau::from_chain(chain);
}

}  // namespace

DiagramResult run_evac(const SemistandardTableau& t, int j, int n) {
    if (j < 0 || j > n) throw std::invalid_argument("run_evac: need 0 <= j <= n");
    GrowthGrid grid = run_growth(n, evac_centers(j), straight_input(t, n), 2 * j);
    return {read_mirror_output(grid, 2 * j, n), std::move(grid)};
}

DiagramResult run_evac_interval(const SemistandardTableau& t, int i, int j, int n) {
    if (i < 1 || i > j || j > n)
        throw std::invalid_argument("run_evac_interval: need 1 <= i <= j <= n");
    int apex = 2 * (i - 1) + 2 * j;
    GrowthGrid grid = run_growth(n, evac_interval_centers(i, j), straight_input(t, n), apex);
    return {read_mirror_output(grid, apex, n), std::move(grid)};
}

RectResult run_rect(const SemistandardTableau& t, const StandardTableau& order) {
    if (order.shape() != t.inner() || !order.base().empty())
        throw std::invalid_argument("run_rect: order must be a straight SYT of the inner shape");
    int m = order.entries();
    int n = t.max_entry();
    std::vector<PathLabel> input;
    for (int y = 0; y <= m; ++y)
        input.push_back({{-y, y}, order.chain()[static_cast<size_t>(y)]});
    std::vector<Partition> tchain = t.chain(n);
    for (int k = 1; k <= n; ++k)
        input.push_back({{k - m, m + k}, tchain[static_cast<size_t>(k)]});
    GrowthGrid grid = run_growth(m + n, rect_centers(m, n), input, n);
    std::vector<Partition> uchain;
    for (int y = 0; y <= n; ++y) uchain.push_back(grid.at(y, y));
    std::vector<Partition> record;
    for (int y = n; y <= n + m; ++y) record.push_back(grid.at(2 * n - y, y));
    return {SemistandardTableau::from_chain(uchain), std::move(record), std::move(grid)};
}

namespace {

int staircase_rows(const SemistandardTableau& s) {
    int m = s.outer().rows();
    if (!s.inner().empty() || s.outer() != Partition::staircase(m))
        throw std::invalid_argument("hexagon input must have staircase shape");
    return m;
}

}  // namespace

DiagramResult run_boom(const SemistandardTableau& s, int i, int j, int alphabet) {
    int m = staircase_rows(s);
    if (i < 1 || i > j || j > alphabet)
        throw std::invalid_argument("run_boom: need 1 <= i <= j <= alphabet");
    int height = m - 1 + alphabet;
    if (s.max_entry() > height)
        throw std::invalid_argument("run_boom: entries exceed the hexagon height");
    int big = m + i - 2;
    int wide = j - i + 1;
    std::vector<Partition> chain = s.chain(height);
    std::vector<PathLabel> input;
    for (int y = 0; y <= height; ++y)
        input.push_back({{std::abs(y - big), y}, chain[static_cast<size_t>(y)]});
    GrowthGrid grid =
        run_growth(height, boom_centers(i, j, m, height), input, 2 * big + 2 * wide);
    std::vector<Partition> out;
    for (int y = 0; y <= height; ++y) {
        // Rightward leg, then the downslope; past y = 2*big + wide the
        // downslope has met the input diagonal and the chains coincide.
        int x = y <= big ? big + 2 * wide + y : 3 * big + 2 * wide - y;
        if (y > 2 * big + wide) x = y - big;
        out.push_back(grid.at(x, y));
    }
    return {SemistandardTableau::from_chain(out), std::move(grid)};
}

SemistandardTableau boom_apply(const SemistandardTableau& s, int i, int j, int alphabet) {
    int m = staircase_rows(s);
    if (i < 1 || i > j || j > alphabet)
        throw std::invalid_argument("boom_apply: need 1 <= i <= j <= alphabet");
    int height = m - 1 + alphabet;
    int big = m + i - 2;
    SemistandardTableau cur = s;
    if (big >= 2) cur = run_evac(cur, big, height).output;
    cur = run_evac_interval(cur, m - 1 + i, m - 1 + j, height).output;
    if (big >= 2) cur = run_evac(cur, big, height).output;
    return cur;
}

}  // namespace bk
