#pragma once

#include <string>
#include <vector>

#include "pseudotri/geometry.hpp"

namespace pseudotri {

// Simple polygon given by its boundary vertices (index 0..n-1).
struct Polygon {
    std::vector<Point> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    const Point& operator[](int i) const { return vertices[static_cast<std::size_t>(i)]; }
    int next(int i) const { return (i + 1) % size(); }
    int prev(int i) const { return (i + size() - 1) % size(); }
};

enum class PolygonViolation {
    none,
    too_few_vertices,
    repeated_vertex,
    consecutive_collinear,
    self_intersection,
};

struct ValidationReport {
    PolygonViolation violation = PolygonViolation::none;
    std::vector<int> witnesses;
    std::string message;

    bool ok() const { return violation == PolygonViolation::none; }
};

// Checks n >= 3, distinct vertices, no three consecutive collinear vertices,
// and simplicity; reports the first violation found.
ValidationReport validate_polygon(const Polygon& p);

struct InvalidPolygonError : std::runtime_error {
    ValidationReport report;
    explicit InvalidPolygonError(ValidationReport r)
        : std::runtime_error("invalid polygon: " + r.message), report(std::move(r)) {}
};

// Closed containment test (boundary counts as inside).
bool point_in_polygon(const Polygon& p, const Point& q);

// True iff the closed segment lies inside the closed polygon region.
// Both endpoints must lie on the boundary. Throws InvalidPolygonError.
bool segment_inside_test(const Point& a, const Point& b, const Polygon& p);

// Internal variant that skips re-validation (for bulk callers).
bool segment_inside_unchecked(const Point& a, const Point& b, const Polygon& p);

// Reflex / convex classification of a vertex. Works for either boundary
// orientation; `ccw` is the polygon's signed-area orientation.
bool vertex_is_reflex(const Polygon& p, int i);
int polygon_orientation_sign(const Polygon& p);  // +1 ccw, -1 cw

}  // namespace pseudotri
