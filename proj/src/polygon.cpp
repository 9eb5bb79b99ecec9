#include "pseudotri/polygon.hpp"

#include <algorithm>
#include <set>

namespace pseudotri {

ValidationReport validate_polygon(const Polygon& p) {
    const int n = p.size();
    if (n < 3) {
        return {PolygonViolation::too_few_vertices, {}, "polygon needs at least 3 vertices"};
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p[i] == p[j]) {
                return {PolygonViolation::repeated_vertex,
                        {i, j},
                        "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide"};
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        int a = p.prev(i), b = i, c = p.next(i);
        if (orient(p[a], p[b], p[c]) == 0) {
            return {PolygonViolation::consecutive_collinear,
                    {a, b, c},
                    "three consecutive collinear vertices around vertex " + std::to_string(b)};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // skip edges sharing a vertex
            if (j == i || j == p.next(i) || p.next(j) == i) continue;
            if (segments_touch(p[i], p[p.next(i)], p[j], p[p.next(j)])) {
                return {PolygonViolation::self_intersection,
                        {i, j},
                        "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect"};
            }
        }
    }
    return {};
}

int polygon_orientation_sign(const Polygon& p) {
    Scalar twice_area(0);
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        twice_area += cross(p[i], p[p.next(i)]);
    }
    return sign_of(twice_area);
}

bool vertex_is_reflex(const Polygon& p, int i) {
    int turn = orient(p[p.prev(i)], p[i], p[p.next(i)]);
    return turn != polygon_orientation_sign(p);
}

bool point_in_polygon(const Polygon& p, const Point& q) {
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        if (point_on_segment(q, p[i], p[p.next(i)])) return true;
    }
    // Crossing count along the ray x -> +inf, with the usual half-open rule
    // on edge endpoints. No boundary cases remain after the check above.
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& b = p[p.next(i)];
        bool a_below = a.y <= q.y;
        bool b_below = b.y <= q.y;
        if (a_below == b_below) continue;
        // edge straddles the horizontal line through q; x of crossing vs q.x
        int side = orient(a, b, q);
        if ((b.y > a.y && side > 0) || (b.y < a.y && side < 0)) inside = !inside;
    }
    return inside;
}

namespace {

// Collect the parameters (as exact rationals in [0,1]) at which the segment
// meets polygon edges or vertices, then test the midpoint of every piece.
bool segment_inside_impl(const Point& a, const Point& b, const Polygon& p) {
    const int n = p.size();
    Point d = b - a;
    std::set<Scalar> cuts;
    cuts.insert(Scalar(0));
    cuts.insert(Scalar(1));

    auto param_of = [&](const Point& q) -> Scalar {
        // q assumed on line(a,b)
        if (d.x != 0) return (q.x - a.x) / d.x;
        return (q.y - a.y) / d.y;
    };

    // Any contact that is not a proper crossing happens at a polygon vertex
    // lying on the segment (including collinear-overlap ends), so vertices
    // are the only cut events.
    for (int i = 0; i < n; ++i) {
        if (segments_properly_cross(a, b, p[i], p[p.next(i)])) return false;
        if (point_on_segment(p[i], a, b)) cuts.insert(param_of(p[i]));
    }

    Scalar prev;
    bool first = true;
    for (const Scalar& t : cuts) {
        if (!first) {
            Scalar mid = (prev + t) / 2;
            if (!point_in_polygon(p, a + d * mid)) return false;
        }
        prev = t;
        first = false;
    }
    return true;
}

}  // namespace

bool segment_inside_unchecked(const Point& a, const Point& b, const Polygon& p) {
    if (a == b) return point_in_polygon(p, a);
    return segment_inside_impl(a, b, p);
}

bool segment_inside_test(const Point& a, const Point& b, const Polygon& p) {
    ValidationReport report = validate_polygon(p);
    if (!report.ok()) throw InvalidPolygonError(std::move(report));
    return segment_inside_unchecked(a, b, p);
}

}  // namespace pseudotri
