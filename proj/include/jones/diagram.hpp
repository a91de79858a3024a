#pragma once

#include "jones/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jones {

// One transversal crossing between two edges of the projected curve.
// sign is the 2D cross product sign of (over-edge direction, under-edge
// direction): +1 when the under strand runs left to right as seen along the
// over strand.
struct CrossingRec {
    int over_edge = 0;
    int under_edge = 0;
    int sign = 0;  // +1 or -1

    bool operator==(const CrossingRec&) const = default;
};

// Edge-indexed combinatorial diagram of a projected curve. Edge i joins
// vertex i to vertex i+1 (mod n for closed curves), succ(i) = i+1.
//
// Beyond the crossing/over/sign relations the diagram keeps, per edge, the
// order in which crossings occur along the edge. That order is what makes
// the state-sum loop count well defined when an edge carries several
// crossings, and Reidemeister moves maintain it.
class Diagram {
public:
    Diagram() = default;

    // Validates all structural invariants: distinct non-adjacent edges per
    // crossing, at most one crossing per edge pair, slot lists consistent
    // with the crossing list.
    static Diagram from_crossings(int n_edges, bool closed, std::vector<CrossingRec> crossings,
                                  std::vector<std::vector<int>> edge_slots);

    int n_edges() const { return n_edges_; }
    bool closed() const { return closed_; }

    // Next edge along the curve; empty for the last edge of an open curve.
    std::optional<int> succ(int edge) const {
        if (closed_) return (edge + 1) % n_edges_;
        if (edge + 1 < n_edges_) return edge + 1;
        return std::nullopt;
    }

    bool cross(int i, int j) const { return find_crossing(i, j) >= 0; }
    // True when edge i passes over edge j at their crossing.
    bool over(int i, int j) const;
    int sign(int i, int j) const;

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const std::vector<CrossingRec>& crossings() const { return crossings_; }
    // Crossing ids in traversal order along each edge.
    const std::vector<std::vector<int>>& edge_slots() const { return edge_slots_; }

    // Crossing id for the pair {i, j}, or -1.
    int find_crossing(int i, int j) const;

    // Copy with the given crossings removed (ids recompacted).
    Diagram without_crossings(const std::vector<int>& ids) const;

    // JSON object with n_edges, closed, and the cross/over/sign matrices as
    // nested arrays.
    std::string debug_json() const;

    bool operator==(const Diagram&) const = default;

private:
    int n_edges_ = 0;
    bool closed_ = false;
    std::vector<CrossingRec> crossings_;
    std::vector<std::vector<int>> edge_slots_;
};

// Converts a regular planar polyline into its crossing diagram. The input is
// re-screened at the given eps; an irregular projection is a contract
// violation and throws std::invalid_argument.
Diagram build_diagram(const PlanarPolyline& p, double eps = kDefaultRegularityEps);

// Algebraic sum of crossing signs.
int writhe(const Diagram& d);

// One of the two parts of a split diagram: a subset of arcs together with
// the crossings lying wholly inside it. Edge and vertex labels stay global
// so the two parts can be glued back together.
struct SubTangle {
    int n_edges = 0;  // edge count of the parent diagram
    bool closed = false;
    std::vector<int> arcs;  // sorted global edge indices of this part
    std::vector<CrossingRec> crossings;
    std::vector<std::vector<int>> edge_slots;  // full-size; empty for foreign arcs

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

}  // namespace jones
