#pragma once

#include <functional>
#include <optional>

#include "pseudotri/polygon.hpp"

namespace pseudotri {

// Input for the tower reconstruction: apex implicit (u_0 = v_0), chains given
// by their vertex counts, cross edges as 0-based (upper, lower) index pairs.
// The base pair (m-1, n-1) is treated as present even when not listed.
struct TowerInput {
    int upper_count = 0;  // m >= 1
    int lower_count = 0;  // n >= 1
    std::vector<std::pair<int, int>> cross_edges;
};

struct StrongOrderingViolation {
    int u, u_later, w, w_later;  // (u,w_later) and (u_later,w) present, a closure edge missing
};

// Strong-ordering test by definition: for u < u', w < w' with (u,w') and
// (u',w) present, both (u,w) and (u',w') must be present. Returns the first
// violating quadruple in scan order, or nullopt.
std::optional<StrongOrderingViolation> strong_ordering(int upper_count, int lower_count,
                                                       const std::vector<std::pair<int, int>>& edges);

struct NotStronglyOrderedError : std::runtime_error {
    StrongOrderingViolation violation;
    explicit NotStronglyOrderedError(StrongOrderingViolation v)
        : std::runtime_error("bipartite graph is not strongly ordered"), violation(v) {}
};
struct DisconnectedError : std::runtime_error {
    DisconnectedError() : std::runtime_error("bipartite graph is not connected") {}
};
struct TowerGeometryError : std::runtime_error {
    explicit TowerGeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Anchor bookkeeping shared with the full reconstruction: anchors are points
// on chain edges, identified by kind and paper index, resolved lazily as a
// fraction of their hosting edge measured from its upper endpoint.
//   kind 's': aims u_index's placement ray; hosted on the lower chain
//   kind 'r': same for the lower chain, hosted on the upper chain
using AnchorFraction = std::function<Scalar(char kind, int index)>;

struct TowerBuild {
    Point apex;
    std::vector<Point> upper;  // u_1 .. u_m
    std::vector<Point> lower;  // v_1 .. v_n

    // resolved anchor points (index 1-based as in the input order, slot 0 unused)
    std::vector<std::optional<Point>> s_points;
    std::vector<std::optional<Point>> r_points;
    // hosting edge of each anchor: index c meaning the edge (x_{c-1}, x_c)
    // on the opposite chain, with x_0 the apex
    std::vector<int> s_edge;
    std::vector<int> r_edge;

    Polygon polygon() const;  // cycle: apex, u_1..u_m, v_n..v_1
};

// Colley-style tower construction. `fraction` overrides the anchor spacing
// (used when the caller pre-plans shared edges); by default each edge is
// subdivided evenly among the anchors it hosts.
// `extra_drop` deepens the placement of one chain vertex (side 0 = upper,
// paper index i), which lengthens the edge above it along its supporting
// line; the floating-edge extension of the full reconstruction uses this.
struct TowerOptions {
    AnchorFraction fraction;
    int drop_side = -1;
    int drop_index = -1;
    Scalar drop_amount = 0;
};

TowerBuild build_tower(const TowerInput& input, const TowerOptions& options = {});

// Convenience wrapper matching the spec surface: validates strong ordering
// and connectivity, then builds and returns the polygon.
Polygon reconstruct_tower(const TowerInput& input);

}  // namespace pseudotri
