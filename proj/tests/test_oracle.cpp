#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pseudotri/oracle.hpp>

#include "support/fixtures.hpp"
#include "support/geom_oracle.hpp"
#include "support/rng.hpp"

using namespace pseudotri;

TEST_CASE("fixture chord set is derived from the oracle") {
    Polygon hex = testsupport::hex6();
    BoundaryGraph g = compute_visibility_graph(hex);
    CHECK(g.chords() == testsupport::hex6_chords());

    CHECK(sees(hex, 0, 3));
    CHECK(!sees(hex, 0, 2));
    CHECK(sees(hex, 0, 1));  // cycle edge
}

TEST_CASE("triangle and convex quadrilateral") {
    Polygon tri{{Point(0, 0), Point(4, 0), Point(1, 3)}};
    BoundaryGraph gt = compute_visibility_graph(tri);
    CHECK(gt.chords().empty());
    CHECK(sees(tri, 0, 1));
    CHECK(sees(tri, 1, 2));

    Polygon quad{{Point(0, 0), Point(4, 1), Point(5, 4), Point(-1, 3)}};
    BoundaryGraph gq = compute_visibility_graph(quad);
    CHECK(gq.chords() == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
}

TEST_CASE("oracle symmetry") {
    Polygon hex = testsupport::hex6();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(sees(hex, i, j) == sees(hex, j, i));
}

namespace {

// Random strictly-convex polygon with exact rational coordinates: take
// points on a coarse integer circle-ish hull and keep the hull.
Polygon random_convex(test_rng& rng, int target_n) {
    std::vector<Point> pts;
    long R = 1000;
    for (int i = 0; i < 3 * target_n; ++i) {
        pts.emplace_back(Point(rng.small_int(-R, R), rng.small_int(-R, R)));
    }
    // convex hull (monotone chain), dropping collinear points
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto half = [&](auto begin, auto end) {
        std::vector<Point> h;
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= 2 && orient(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
            h.push_back(*it);
        }
        return h;
    };
    std::vector<Point> lower = half(pts.begin(), pts.end());
    std::vector<Point> upper = half(pts.rbegin(), pts.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return Polygon{lower};
}

}  // namespace

TEST_CASE("convex polygons give complete graphs") {
    test_rng rng(31);
    for (int iter = 0; iter < 8; ++iter) {
        Polygon p = random_convex(rng, 10 + iter * 5);
        if (p.size() < 4 || p.size() > 50) continue;
        REQUIRE(validate_polygon(p).ok());
        BoundaryGraph g = compute_visibility_graph(p);
        std::size_t n = static_cast<std::size_t>(p.size());
        CHECK(g.chords().size() == n * (n - 1) / 2 - n);
    }
}

TEST_CASE("segment test agrees with the independent reference implementation") {
    // all vertex pairs of assorted polygons, fixture included
    std::vector<Polygon> polys = {testsupport::hex6(),
                                  Polygon{{Point(0, 0), Point(4, 0), Point(1, 3)}},
                                  Polygon{{Point(0, 0), Point(4, 1), Point(5, 4), Point(-1, 3)}}};
    test_rng rng(8);
    while (polys.size() < 20) {
        Polygon p = random_convex(rng, 6);
        if (p.size() >= 4 && validate_polygon(p).ok()) polys.push_back(p);
    }
    for (const Polygon& p : polys) {
        for (int i = 0; i < p.size(); ++i) {
            for (int j = i + 1; j < p.size(); ++j) {
                bool lib = segment_inside_unchecked(p[i], p[j], p);
                bool ref = testsupport::segment_inside_reference(p[i], p[j], p);
                CHECK(lib == ref);
            }
        }
    }
}
