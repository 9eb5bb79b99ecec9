#pragma once

#include "pseudotri/graph.hpp"
#include "pseudotri/polygon.hpp"

namespace pseudotri {

// Ground-truth visibility of a vertex pair by exhaustive exact testing.
bool sees(const Polygon& p, int i, int j);

// Naive O(n * m) per-pair oracle; the reference for every round-trip.
BoundaryGraph compute_visibility_graph(const Polygon& p);

}  // namespace pseudotri
