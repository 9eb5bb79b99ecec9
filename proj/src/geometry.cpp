#include "pseudotri/geometry.hpp"

#include <algorithm>

namespace pseudotri {

int orient(const Point& p, const Point& q, const Point& r) {
    return sign_of(cross(q - p, r - p));
}

std::optional<Point> ray_intersect(const Ray& a, const Ray& b) {
    Scalar denom = cross(a.dir, b.dir);
    Point diff = b.origin - a.origin;
    if (denom == 0) {
        if (cross(a.dir, diff) != 0) return std::nullopt;  // parallel, distinct lines
        // Collinear: compare the two parameter ranges on a's line.
        Scalar d2 = dot(a.dir, a.dir);
        Scalar tb0 = dot(diff, a.dir) / d2;  // b.origin in a-parameters
        Scalar step = dot(b.dir, a.dir) / d2;
        bool same_dir = step > 0;
        if (same_dir) {
            // overlap is [max(0, tb0), inf): always infinite
            throw CollinearOverlapError();
        }
        // b points backwards along a: overlap is [0, tb0]
        if (tb0 < 0) return std::nullopt;
        if (tb0 == 0) return a.origin;  // touch in exactly one point
        throw CollinearOverlapError();
    }
    Scalar t = cross(diff, b.dir) / denom;
    Scalar u = cross(diff, a.dir) / denom;
    if (t < 0 || u < 0) return std::nullopt;
    return a.at(t);
}

HalfPlane HalfPlane::left_of(const Point& p, const Point& q) {
    if (p == q) throw std::invalid_argument("HalfPlane: defining points coincide");
    Scalar a = -(q.y - p.y);
    Scalar b = q.x - p.x;
    return HalfPlane{a, b, a * p.x + b * p.y};
}

HalfPlane HalfPlane::right_of(const Point& p, const Point& q) {
    HalfPlane h = left_of(p, q);
    return HalfPlane{-h.a, -h.b, -h.c};
}

HalfPlane HalfPlane::containing(const Point& p, const Point& q, const Point& inside) {
    HalfPlane h = left_of(p, q);
    Scalar e = h.eval(inside);
    if (e == 0) throw std::invalid_argument("HalfPlane: witness lies on the line");
    return e > 0 ? h : HalfPlane{-h.a, -h.b, -h.c};
}

HalfPlane HalfPlane::avoiding(const Point& p, const Point& q, const Point& outside) {
    HalfPlane h = containing(p, q, outside);
    return HalfPlane{-h.a, -h.b, -h.c};
}

namespace {

// Row of the linear system px*x + py*y + ps*s >= rhs.
struct Row {
    Scalar px, py, ps, rhs;
};

// Eliminate the variable selected by `get` from the system by pairing
// opposite-sign rows (Fourier-Motzkin step).
template <typename Getter>
std::vector<Row> eliminate(const std::vector<Row>& rows, Getter get) {
    std::vector<Row> pos, neg, out;
    for (const Row& r : rows) {
        int s = sign_of(get(r));
        if (s > 0) pos.push_back(r);
        else if (s < 0) neg.push_back(r);
        else out.push_back(r);
    }
    for (const Row& p : pos) {
        for (const Row& n : neg) {
            Scalar wp = -get(n);
            Scalar wn = get(p);
            out.push_back(Row{p.px * wp + n.px * wn, p.py * wp + n.py * wn,
                              p.ps * wp + n.ps * wn, p.rhs * wp + n.rhs * wn});
        }
    }
    return out;
}

struct SlackAnalysis {
    bool feasible = false;   // some (x,y,s) satisfies the system
    Scalar s_max = 0;        // max slack, capped at 1
    std::vector<Row> rows;   // original rows with slack
    std::vector<Row> rows_y; // after eliminating x (variables y, s)
};

SlackAnalysis analyze(const std::vector<HalfPlane>& hs) {
    SlackAnalysis an;
    for (const HalfPlane& h : hs) {
        Scalar w = abs(h.a) + abs(h.b);
        an.rows.push_back(Row{h.a, h.b, -w, h.c});
    }
    an.rows.push_back(Row{Scalar(0), Scalar(0), Scalar(-1), Scalar(-1)});  // s <= 1

    an.rows_y = eliminate(an.rows, [](const Row& r) -> Scalar { return r.px; });
    std::vector<Row> rows_s = eliminate(an.rows_y, [](const Row& r) -> Scalar { return r.py; });

    bool have_upper = false;
    Scalar upper(0);
    for (const Row& r : rows_s) {
        if (r.ps == 0) {
            if (r.rhs > 0) return an;  // contradictory constants: empty for all s
            continue;
        }
        // all slack coefficients are <= 0, so every row is an upper bound
        Scalar bound = r.rhs / r.ps;
        if (!have_upper || bound < upper) {
            upper = bound;
            have_upper = true;
        }
    }
    an.feasible = true;
    an.s_max = have_upper ? upper : Scalar(1);
    return an;
}

struct Interval {
    bool has_lo = false, has_hi = false;
    Scalar lo, hi;

    void add_lower(const Scalar& v) {
        if (!has_lo || v > lo) { lo = v; has_lo = true; }
    }
    void add_upper(const Scalar& v) {
        if (!has_hi || v < hi) { hi = v; has_hi = true; }
    }
    bool valid() const { return !(has_lo && has_hi) || lo <= hi; }

    // Deterministic pick, preferring short rationals and the strict interior.
    Scalar pick(bool& strict) const {
        if (has_lo && has_hi) {
            if (lo == hi) { strict = false; return lo; }
            strict = true;
            return simplest_rational_between(lo, hi);
        }
        strict = true;
        if (has_lo) return simplest_rational_between(lo, lo + 2);
        if (has_hi) return simplest_rational_between(hi - 2, hi);
        return Scalar(0);
    }
};

// Bounds for the variable selected by `get` once the later variables are fixed.
template <typename Getter, typename Evaluator>
Interval bounds_for(const std::vector<Row>& rows, Getter get, Evaluator rest) {
    Interval iv;
    for (const Row& r : rows) {
        Scalar coeff = get(r);
        if (coeff == 0) continue;
        Scalar bound = (r.rhs - rest(r)) / coeff;
        if (coeff > 0) iv.add_lower(bound);
        else iv.add_upper(bound);
    }
    return iv;
}

}  // namespace

ConvexRegion ConvexRegion::intersect(const HalfPlane& h) const {
    std::vector<HalfPlane> hs = halfplanes_;
    hs.push_back(h);
    return ConvexRegion(std::move(hs));
}

ConvexRegion ConvexRegion::intersect(const ConvexRegion& other) const {
    std::vector<HalfPlane> hs = halfplanes_;
    hs.insert(hs.end(), other.halfplanes_.begin(), other.halfplanes_.end());
    return ConvexRegion(std::move(hs));
}

bool ConvexRegion::contains(const Point& p) const {
    return std::all_of(halfplanes_.begin(), halfplanes_.end(),
                       [&](const HalfPlane& h) { return h.contains(p); });
}

bool ConvexRegion::strictly_contains(const Point& p) const {
    return std::all_of(halfplanes_.begin(), halfplanes_.end(),
                       [&](const HalfPlane& h) { return h.strictly_contains(p); });
}

bool ConvexRegion::empty() const {
    SlackAnalysis an = analyze(halfplanes_);
    return !an.feasible || an.s_max < 0;
}

bool ConvexRegion::has_interior() const {
    SlackAnalysis an = analyze(halfplanes_);
    return an.feasible && an.s_max > 0;
}

RegionSample ConvexRegion::sample() const {
    SlackAnalysis an = analyze(halfplanes_);
    if (!an.feasible || an.s_max < 0) throw EmptyRegionError();

    bool strict = an.s_max > 0;
    Scalar s = strict ? simplest_rational_between(Scalar(0), an.s_max) : Scalar(0);

    bool dummy = true;
    Interval yiv = bounds_for(
        an.rows_y, [](const Row& r) -> Scalar { return r.py; },
        [&](const Row& r) -> Scalar { return r.ps * s; });
    Scalar y = yiv.pick(dummy);

    Interval xiv = bounds_for(
        an.rows, [](const Row& r) -> Scalar { return r.px; },
        [&](const Row& r) -> Scalar { return r.py * y + r.ps * s; });
    Scalar x = xiv.pick(dummy);

    return RegionSample{Point(x, y), strict};
}

std::optional<ConvexRegion::RayInterval> ConvexRegion::clip_ray(const Ray& r) const {
    Scalar lo(0);
    std::optional<Scalar> hi;
    for (const HalfPlane& h : halfplanes_) {
        Scalar k = h.a * r.dir.x + h.b * r.dir.y;
        Scalar e = h.eval(r.origin);
        if (k == 0) {
            if (e < 0) return std::nullopt;
            continue;
        }
        Scalar bound = -e / k;
        if (k > 0) {
            if (bound > lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    if (hi && *hi < lo) return std::nullopt;
    return RayInterval{lo, hi};
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_properly_cross(a, b, c, d)) return true;
    return point_on_segment(c, a, b) || point_on_segment(d, a, b) ||
           point_on_segment(a, c, d) || point_on_segment(b, c, d);
}

}  // namespace pseudotri
