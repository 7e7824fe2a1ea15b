#include "bk/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int r = 0; r < inner.rows(); ++r)
        if (inner.part(r) > part(r)) return false;
    return true;
}

Partition Partition::with_box(int row) const {
    std::vector<int> p = parts_;
    if (row == rows())
        p.push_back(1);
    else if (row >= 0 && row < rows())
        ++p[static_cast<size_t>(row)];
    else
        throw std::invalid_argument("with_box: bad row");
    return Partition(std::move(p));
}

Partition Partition::without_box(int row) const {
    if (row < 0 || row >= rows()) throw std::invalid_argument("without_box: bad row");
    std::vector<int> p = parts_;
    --p[static_cast<size_t>(row)];
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    bool digits = true;
    for (int p : parts_)
        if (p > 9) digits = false;
    std::ostringstream out;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (!digits && k > 0) out << ' ';
        out << parts_[k];
    }
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<int> parts;
    if (text.find(' ') == std::string::npos &&
        text.find_first_not_of("0123456789") == std::string::npos) {
        for (char c : text) parts.push_back(c - '0');
    } else {
        std::istringstream in(text);
        int p;
        while (in >> p) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Partition Partition::staircase(int m) {
    std::vector<int> p;
    for (int k = m; k >= 1; --k) p.push_back(k);
    return Partition(std::move(p));
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner)) return false;
    // At most one box per column: row r of the strip must not start left of
    // where row r-1 of the inner shape ends.
    for (int r = 1; r <= outer.rows(); ++r)
        if (inner.part(r - 1) < outer.part(r)) return false;
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw std::invalid_argument("skew shape: inner not inside outer");
}

}  // namespace bk
