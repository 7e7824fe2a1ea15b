#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bk/tableau.hpp"

namespace bk {

// Checkerboard lattice vertex (x, y), x + y even, 0 <= y <= height.
using Vertex = std::pair<int, int>;
using CenterSet = std::set<Vertex>;

class GrowthGrid {
public:
    GrowthGrid() = default;
    explicit GrowthGrid(int height) : height_(height) {}

    int height() const { return height_; }
    bool has(int x, int y) const { return shapes_.count({x, y}) > 0; }
    const Partition& at(int x, int y) const;
    void set(int x, int y, Partition p) { shapes_[{x, y}] = std::move(p); }
    const std::map<Vertex, Partition>& shapes() const { return shapes_; }

    std::vector<Partition> chain_along(const std::vector<Vertex>& path) const;

    // Text rendering of the labeled lattice, apex row on top.
    std::string render() const;

private:
    int height_ = 0;
    std::map<Vertex, Partition> shapes_;
};

// The primitive semistandard diamond rule: given the bottom, left and top
// shapes of a diamond (each step a horizontal strip), returns the right
// shape.  Involutive: applying it to (bottom, result, top) gives back left.
Partition diamond_rule(const Partition& bottom, const Partition& left, const Partition& top);

// Diamond center sets for the diagram templates.
CenterSet evac_centers(int j, int offset = 0);
CenterSet rect_centers(int i, int j);          // a at the origin, input path a->b->d
CenterSet evac_interval_centers(int i, int j);
CenterSet boom_centers(int i, int j, int m, int height);

struct PathLabel {
    Vertex vertex;
    Partition shape;
};

// Left-to-right sweep: every vertex strictly right of the input path and with
// x <= x_max is filled, by the diamond rule where a center is present and by
// copying the label two columns left otherwise.  Row 0 is always empty.
GrowthGrid run_growth(int height, const CenterSet& centers,
                      const std::vector<PathLabel>& input, int x_max);

struct DiagramResult {
    SemistandardTableau output;
    GrowthGrid grid;
};

// Evac_j acting on tableaux with entries <= n (n >= j).
DiagramResult run_evac(const SemistandardTableau& t, int j, int n);

// Evac_{[i,j]} (the growth-diagram route for q_{[i,j]}).
DiagramResult run_evac_interval(const SemistandardTableau& t, int i, int j, int n);

struct RectResult {
    SemistandardTableau straight;          // U = jdt(T)
    std::vector<Partition> record_chain;   // chain of V, from sh(U) up to outer(T)
    GrowthGrid grid;
};

// Rect_{|inner|, cells}: growth-diagram jeu-de-taquin.
RectResult run_rect(const SemistandardTableau& t, const StandardTableau& order);

// The Boom_{[i,j]} hexagon run directly on the lattice (oracle route).
DiagramResult run_boom(const SemistandardTableau& s, int i, int j, int alphabet);

// Boom_{[i,j]} via conjugation: Evac_{m+i-2} then Evac_{[m-1+i,m-1+j]} then
// Evac_{m+i-2}, all as growth diagrams.  Input must have shape delta_m.
SemistandardTableau boom_apply(const SemistandardTableau& s, int i, int j, int alphabet);

}  // namespace bk
