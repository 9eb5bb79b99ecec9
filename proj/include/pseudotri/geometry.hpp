#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pseudotri/scalar.hpp"

namespace pseudotri {

struct Point {
    Scalar x;
    Scalar y;

    Point() : x(0), y(0) {}
    Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Scalar& k) const { return {x * k, y * k}; }
};

inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// Sign of the turn p -> q -> r: +1 when r lies strictly left of the
// directed line p->q, 0 when collinear, -1 otherwise.
int orient(const Point& p, const Point& q, const Point& r);

struct Ray {
    Point origin;
    Point dir;  // must be nonzero

    Ray(Point o, Point d) : origin(std::move(o)), dir(std::move(d)) {
        if (dir.x == 0 && dir.y == 0) throw std::invalid_argument("Ray: zero direction");
    }

    static Ray through(const Point& from, const Point& towards) {
        return Ray(from, towards - from);
    }

    Point at(const Scalar& t) const { return origin + dir * t; }
};

struct CollinearOverlapError : std::runtime_error {
    CollinearOverlapError() : std::runtime_error("collinear rays overlap in more than one point") {}
};

// Unique crossing point of two rays (parameter >= 0 on both), nullopt when
// disjoint or parallel. Collinear rays sharing more than one point raise
// CollinearOverlapError; sharing exactly one point returns it.
std::optional<Point> ray_intersect(const Ray& a, const Ray& b);

// Closed half-plane a*x + b*y >= c with (a,b) != 0.
struct HalfPlane {
    Scalar a;
    Scalar b;
    Scalar c;

    // Side of line(p,q) that strictly contains `inside`.
    static HalfPlane containing(const Point& p, const Point& q, const Point& inside);
    // Side of line(p,q) that strictly avoids `outside`.
    static HalfPlane avoiding(const Point& p, const Point& q, const Point& outside);
    // Points left of the directed line p->q.
    static HalfPlane left_of(const Point& p, const Point& q);
    static HalfPlane right_of(const Point& p, const Point& q);

    Scalar eval(const Point& pt) const { return a * pt.x + b * pt.y - c; }
    bool contains(const Point& pt) const { return eval(pt) >= 0; }
    bool strictly_contains(const Point& pt) const { return eval(pt) > 0; }
};

struct EmptyRegionError : std::runtime_error {
    EmptyRegionError() : std::runtime_error("region is empty") {}
};

struct RegionSample {
    Point point;
    bool strict;  // true when the point satisfies every half-plane strictly
};

// Intersection of closed half-planes; the whole plane when empty of constraints.
class ConvexRegion {
public:
    ConvexRegion() = default;
    explicit ConvexRegion(std::vector<HalfPlane> hs) : halfplanes_(std::move(hs)) {}

    const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
    ConvexRegion intersect(const HalfPlane& h) const;
    ConvexRegion intersect(const ConvexRegion& other) const;

    bool contains(const Point& p) const;
    bool strictly_contains(const Point& p) const;

    bool empty() const;
    bool has_interior() const;

    // Deterministic witness point; strict interior whenever one exists.
    RegionSample sample() const;

    // Clip a ray against the region: parameter interval [lo, hi] of points
    // inside, hi empty when unbounded. nullopt when the ray misses the region.
    struct RayInterval {
        Scalar lo;
        std::optional<Scalar> hi;
    };
    std::optional<RayInterval> clip_ray(const Ray& r) const;

private:
    std::vector<HalfPlane> halfplanes_;
};

inline ConvexRegion region_intersect(const ConvexRegion& r, const HalfPlane& h) {
    return r.intersect(h);
}
inline RegionSample region_sample(const ConvexRegion& r) { return r.sample(); }

// --- segment predicates used by the oracle and validators ---

bool point_on_segment(const Point& p, const Point& a, const Point& b);

// Strict interior-to-interior crossing of two segments.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// Any contact between the closed segments.
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace pseudotri
