#pragma once

#include <set>

#include <pseudotri/polygon.hpp>

// Independent segment-in-polygon oracle used to cross-check the library
// implementation. Differences from the library path: the segment is split at
// its intersections with every edge-supporting LINE (not just edge contacts),
// and containment of the probe points uses the winding number instead of
// crossing parity.
namespace testsupport {

using pseudotri::Point;
using pseudotri::Polygon;
using pseudotri::Scalar;

inline int winding_number(const Polygon& p, const Point& q) {
    int wn = 0;
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& b = p[p.next(i)];
        if (a.y <= q.y) {
            if (b.y > q.y && pseudotri::orient(a, b, q) > 0) ++wn;
        } else {
            if (b.y <= q.y && pseudotri::orient(a, b, q) < 0) --wn;
        }
    }
    return wn;
}

inline bool on_boundary(const Polygon& p, const Point& q) {
    for (int i = 0; i < p.size(); ++i) {
        if (pseudotri::point_on_segment(q, p[i], p[p.next(i)])) return true;
    }
    return false;
}

inline bool contains_closed(const Polygon& p, const Point& q) {
    if (on_boundary(p, q)) return true;
    return winding_number(p, q) != 0;
}

inline bool segment_inside_reference(const Point& a, const Point& b, const Polygon& p) {
    Point d = b - a;
    std::set<Scalar> cuts{Scalar(0), Scalar(1)};
    for (int i = 0; i < p.size(); ++i) {
        const Point& c = p[i];
        const Point& e = p[p.next(i)];
        Scalar denom = pseudotri::cross(d, e - c);
        if (denom == 0) continue;
        Scalar t = pseudotri::cross(c - a, e - c) / denom;
        if (t > 0 && t < 1) cuts.insert(t);
    }
    Scalar prev;
    bool first = true;
    for (const Scalar& t : cuts) {
        if (!first) {
            Scalar mid = (prev + t) / 2;
            if (!contains_closed(p, a + d * mid)) return false;
        }
        if (!contains_closed(p, a + d * t)) return false;
        prev = t;
        first = false;
    }
    return true;
}

}  // namespace testsupport
