#include "pseudotri/generator.hpp"

#include <algorithm>
#include <set>

#include "pseudotri/oracle.hpp"

namespace pseudotri {

namespace {

constexpr int kMaxAttempts = 64;

// Sorted distinct chain parameters in (0,1) with denominator 1000.
std::vector<Scalar> chain_params(SplitMix64& rng, int k) {
    std::set<long> picks;
    while (static_cast<int>(picks.size()) < k) picks.insert(rng.range(20, 980));
    std::vector<Scalar> out;
    for (long p : picks) out.push_back(make_scalar(p, 1000));
    return out;
}

struct CornerTriangle {
    Point a, b, c;
    Point centroid() const {
        return Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3);
    }
};

CornerTriangle sample_corners(SplitMix64& rng) {
    auto jitter = [&]() { return make_scalar(rng.range(-80, 80), 1000); };
    CornerTriangle t;
    t.a = Point(Scalar(0) + jitter(), Scalar(1) + jitter());
    t.b = Point(Scalar(-1) + jitter(), Scalar(-1) + jitter());
    t.c = Point(Scalar(1) + jitter(), Scalar(-1) + jitter());
    return t;
}

// Interior vertices of one side-chain on an inward-bulging concave arc.
// depth scales the bulge as a fraction of the distance to the centroid.
std::vector<Point> chain_arc(SplitMix64& rng, const Point& from, const Point& to,
                             const Point& centroid, int k, const Scalar& depth) {
    std::vector<Point> pts;
    if (k == 0) return pts;
    std::vector<Scalar> ts = chain_params(rng, k);
    Point mid((from.x + to.x) / 2, (from.y + to.y) / 2);
    Point inward = centroid - mid;
    Scalar amp = depth * make_scalar(rng.range(700, 1000), 1000);
    for (const Scalar& t : ts) {
        // concave bump profile 4t(1-t) with a small per-vertex wobble
        Scalar bump = t * (1 - t) * 4;
        Scalar wobble = make_scalar(rng.range(-50, 50), 1000);
        Scalar d = amp * bump * (1 + wobble);
        Point base = from + (to - from) * t;
        pts.push_back(base + inward * d);
    }
    return pts;
}

Polygon assemble(const CornerTriangle& tri, const std::vector<Point>& ab,
                 const std::vector<Point>& ac, const std::vector<Point>& bc,
                 const Scalar& scale) {
    // Hamiltonian order A .. C .. B .. A: A, AC interior, C, BC interior
    // (towards B), B, AB interior (towards A).
    Polygon p;
    p.vertices.push_back(tri.a);
    p.vertices.insert(p.vertices.end(), ac.begin(), ac.end());
    p.vertices.push_back(tri.c);
    for (auto it = bc.rbegin(); it != bc.rend(); ++it) p.vertices.push_back(*it);
    p.vertices.push_back(tri.b);
    for (auto it = ab.rbegin(); it != ab.rend(); ++it) p.vertices.push_back(*it);
    if (scale != 1) {
        for (Point& q : p.vertices) q = q * scale;
    }
    return p;
}

// Chains must be concave: every interior chain vertex reflex, corners convex.
bool shape_ok(const Polygon& p, int ac_count, int bc_count, int ab_count) {
    if (!validate_polygon(p).ok()) return false;
    int n = p.size();
    std::set<int> corners = {0, 1 + ac_count, 2 + ac_count + bc_count};
    for (int i = 0; i < n; ++i) {
        bool reflex = vertex_is_reflex(p, i);
        if (corners.count(i) ? reflex : !reflex) return false;
    }
    return true;
}

bool corner_candidates_ok(const Polygon& p, int ac_count, int bc_count) {
    int n = p.size();
    auto pair_visible = [&](int v) {
        return segment_inside_unchecked(p[(v + n - 1) % n], p[(v + 1) % n], p);
    };
    return pair_visible(0) && pair_visible(1 + ac_count) && pair_visible(2 + ac_count + bc_count);
}

}  // namespace

Polygon random_pseudo_triangle_with_depth(const GenSpec& spec, const Scalar& depth) {
    SplitMix64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 17);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        CornerTriangle tri = sample_corners(rng);
        Point centroid = tri.centroid();
        std::vector<Point> ab = chain_arc(rng, tri.a, tri.b, centroid, spec.ab_interior, depth);
        std::vector<Point> ac = chain_arc(rng, tri.a, tri.c, centroid, spec.ac_interior, depth);
        std::vector<Point> bc = chain_arc(rng, tri.b, tri.c, centroid, spec.bc_interior, depth);
        Polygon p = assemble(tri, ab, ac, bc, spec.scale);
        if (!shape_ok(p, spec.ac_interior, spec.bc_interior, spec.ab_interior)) continue;
        if (!corner_candidates_ok(p, spec.ac_interior, spec.bc_interior)) continue;
        return p;
    }
    throw GenerationFailedError();
}

Polygon random_pseudo_triangle(const GenSpec& spec) {
    return random_pseudo_triangle_with_depth(spec, make_scalar(1, 3));
}

Polygon random_blocked_pseudo_triangle(const GenSpec& spec) {
    if (spec.ab_interior < 1 || spec.ac_interior < 1 || spec.bc_interior < 1)
        throw std::invalid_argument("blocked generation needs interior vertices on every chain");
    SplitMix64 rng(spec.seed * 0x2545f4914f6cdd1dULL + 29);

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        CornerTriangle tri = sample_corners(rng);
        Point centroid = tri.centroid();
        Scalar shallow = make_scalar(1, 6);
        std::vector<Point> ab = chain_arc(rng, tri.a, tri.b, centroid, spec.ab_interior, shallow);
        std::vector<Point> ac = chain_arc(rng, tri.a, tri.c, centroid, spec.ac_interior, shallow);

        // BC rises steeply towards A so the whole upper pocket is blocked;
        // raise the spike until every AB-AC pair is invisible
        bool done = false;
        Polygon result;
        for (int raise = 0; raise < 8 && !done; ++raise) {
            SplitMix64 sub(rng.next());
            Scalar peak = Scalar(1) + make_scalar(raise, 4);
            std::vector<Point> bc =
                chain_arc(sub, tri.b, tri.c, centroid, spec.bc_interior, peak);
            Polygon p = assemble(tri, ab, ac, bc, spec.scale);
            if (!shape_ok(p, spec.ac_interior, spec.bc_interior, spec.ab_interior)) continue;

            int n = p.size();
            int c_idx = 1 + spec.ac_interior;
            int b_idx = 2 + spec.ac_interior + spec.bc_interior;
            auto pair_visible = [&](int v) {
                return segment_inside_unchecked(p[(v + n - 1) % n], p[(v + 1) % n], p);
            };
            if (!pair_visible(c_idx) || !pair_visible(b_idx) || pair_visible(0)) continue;

            // no AB-AC chord at all (corner A included)
            bool any_cross = false;
            std::vector<int> ab_side{0}, ac_side{0};
            for (int i = 1; i <= spec.ac_interior; ++i) ac_side.push_back(i);
            for (int i = b_idx + 1; i < n; ++i) ab_side.push_back(i);
            for (int x : ab_side) {
                for (int y : ac_side) {
                    if (x == y || std::abs(x - y) == 1 || std::abs(x - y) == n - 1) continue;
                    if (segment_inside_unchecked(p[x], p[y], p)) {
                        any_cross = true;
                        break;
                    }
                }
                if (any_cross) break;
            }
            if (any_cross) continue;
            result = p;
            done = true;
        }
        if (done) return result;
    }
    throw GenerationFailedError();
}

Polygon random_tower(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("random_tower: chains must be nonempty");
    GenSpec spec;
    spec.ab_interior = m - 1;
    spec.ac_interior = n - 1;
    spec.bc_interior = 0;
    spec.seed = seed;
    Polygon p = random_pseudo_triangle(spec);
    // reverse the boundary order so the cycle reads apex, u_1..u_m, v_n..v_1
    Polygon out;
    out.vertices.push_back(p[0]);
    for (int i = p.size() - 1; i >= 1; --i) out.vertices.push_back(p[i]);
    return out;
}

BoundaryGraph mutate_graph(const BoundaryGraph& g, std::uint64_t seed) {
    const int n = g.size();
    if (n < 4) throw std::invalid_argument("mutate_graph: needs at least 4 vertices");
    SplitMix64 rng(seed * 0xda942042e4dd58b5ULL + 3);
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2 - n;
    std::uint64_t pick = rng.below(pairs);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (pick == 0) return g.with_chord_toggled(i, j);
            --pick;
        }
    }
    throw std::logic_error("mutate_graph: pair enumeration exhausted");
}

}  // namespace pseudotri
