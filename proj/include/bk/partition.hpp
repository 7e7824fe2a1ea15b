#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bk {

// Integer partition: weakly decreasing positive parts, stored without
// trailing zeros so that equality is plain sequence equality.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    // Row length, with rows past the end read as 0.
    int part(int r) const {
        return (r >= 0 && r < rows()) ? parts_[static_cast<size_t>(r)] : 0;
    }
    int size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(const Partition& inner) const;
    Partition with_box(int row) const;
    Partition without_box(int row) const;

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition&) const = default;

    // "54321" when every part is a single digit, else "10 9 2".
    std::string to_string() const;
    static Partition parse(const std::string& text);

    static Partition staircase(int m);  // (m, m-1, ..., 1)

private:
    std::vector<int> parts_;
};

// True when outer/inner is a horizontal strip (at most one box per column).
bool is_horizontal_strip(const Partition& inner, const Partition& outer);

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int cell_count() const { return outer_.size() - inner_.size(); }

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

}  // namespace bk
