#pragma once

#include <pseudotri/graph.hpp>
#include <pseudotri/polygon.hpp>

// Shared reference fixture: a six-vertex pseudo-triangle with corners at
// indices 0, 2, 4. The chord set below is re-derived from the oracle in
// test_oracle.cpp before anything else relies on it.
namespace testsupport {

inline pseudotri::Polygon hex6() {
    using pseudotri::Point;
    return pseudotri::Polygon{{
        Point(0, 6),    // 0: corner A
        Point(1, 1),    // 1: v1
        Point(6, -3),   // 2: corner C
        Point(0, -1),   // 3: w1
        Point(-6, -3),  // 4: corner B
        Point(-1, 1),   // 5: u1
    }};
}

inline const std::vector<std::pair<int, int>>& hex6_chords() {
    static const std::vector<std::pair<int, int>> chords = {
        {0, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}};
    return chords;
}

inline pseudotri::BoundaryGraph hex6_graph() {
    return pseudotri::BoundaryGraph(6, hex6_chords());
}

}  // namespace testsupport
