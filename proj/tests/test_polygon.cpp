#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pseudotri/graph.hpp>
#include <pseudotri/polygon.hpp>

#include "support/fixtures.hpp"

using namespace pseudotri;

namespace {

Polygon unit_square() {
    return Polygon{{Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}};
}

}  // namespace

TEST_CASE("validate_polygon") {
    CHECK(validate_polygon(unit_square()).ok());

    Polygon bowtie{{Point(0, 0), Point(1, 1), Point(1, 0), Point(0, 1)}};
    ValidationReport r = validate_polygon(bowtie);
    CHECK(r.violation == PolygonViolation::self_intersection);

    Polygon collinear{{Point(0, 0), Point(1, 0), Point(2, 0), Point(1, 1)}};
    ValidationReport c = validate_polygon(collinear);
    CHECK(c.violation == PolygonViolation::consecutive_collinear);
    REQUIRE(c.witnesses.size() == 3);
    CHECK(c.witnesses[1] == 1);

    Polygon tiny{{Point(0, 0), Point(1, 0)}};
    CHECK(validate_polygon(tiny).violation == PolygonViolation::too_few_vertices);

    Polygon dup{{Point(0, 0), Point(1, 0), Point(0, 0), Point(0, 1)}};
    CHECK(validate_polygon(dup).violation == PolygonViolation::repeated_vertex);
}

TEST_CASE("segment_inside_test basics") {
    Polygon sq = unit_square();
    CHECK(segment_inside_test(Point(0, 0), Point(1, 1), sq));

    Polygon hex = testsupport::hex6();
    CHECK(!segment_inside_test(hex[0], hex[2], hex));

    // boundary edges of a valid polygon are always inside
    for (int i = 0; i < hex.size(); ++i) {
        CHECK(segment_inside_test(hex[i], hex[hex.next(i)], hex));
    }

    Polygon bad{{Point(0, 0), Point(1, 1), Point(1, 0), Point(0, 1)}};
    CHECK_THROWS_AS(segment_inside_test(Point(0, 0), Point(1, 1), bad), InvalidPolygonError);
}

TEST_CASE("reflex classification on the fixture") {
    Polygon hex = testsupport::hex6();
    for (int i : {0, 2, 4}) CHECK(!vertex_is_reflex(hex, i));
    for (int i : {1, 3, 5}) CHECK(vertex_is_reflex(hex, i));
}

TEST_CASE("labeling and navigation on the fixture") {
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    CHECK(lab.ab == std::vector<int>{0, 5, 4});
    CHECK(lab.ac == std::vector<int>{0, 1, 2});
    CHECK(lab.bc == std::vector<int>{4, 3, 2});
    CHECK(lab.alpha() == 2);
    CHECK(lab.delta() == 2);

    CHECK(navigate(lab, Chain::AC, 0, 0, 1) == 1);
    CHECK(navigate(lab, Chain::AC, 2, 0, -1) == 1);
    CHECK_THROWS_AS(navigate(lab, Chain::AC, 0, 0, -1), OutOfChainError);

    // N/P round-trip whenever both hops stay inside the chain
    for (Chain c : {Chain::AB, Chain::AC, Chain::BC}) {
        auto [origin, far] = lab.endpoints(c);
        for (int v : lab.chain(c)) {
            for (int j = -3; j <= 3; ++j) {
                auto mid = try_navigate(lab, c, v, origin, j);
                if (!mid) continue;
                auto back = try_navigate(lab, c, *mid, origin, -j);
                REQUIRE(back.has_value());
                CHECK(*back == v);
            }
        }
    }

    // Ind^X(v) + Ind^Y(v) = chain length - 1
    for (Chain c : {Chain::AB, Chain::AC, Chain::BC}) {
        auto [origin, far] = lab.endpoints(c);
        int len = static_cast<int>(lab.chain(c).size());
        for (int v : lab.chain(c)) {
            CHECK(chain_index(lab, c, v, origin) + chain_index(lab, c, v, far) == len - 1);
        }
    }
}

TEST_CASE("first/last visible on the fixture") {
    BoundaryGraph g = testsupport::hex6_graph();
    ChainLabeling lab = make_labeling(6, 0, 2, 4);

    // FV^A(C, AB) = u1 (index 5)
    auto fv = first_visible(g, lab, 2, Chain::AB, 0);
    REQUIRE(fv.has_value());
    CHECK(*fv == 5);

    // FV^A(w1, AB) = A
    auto fv_w = first_visible(g, lab, 3, Chain::AB, 0);
    REQUIRE(fv_w.has_value());
    CHECK(*fv_w == 0);

    // LV^A(u1, AC) = C,  LV^A(B, AC) = v1
    auto lv_u = last_visible(g, lab, 5, Chain::AC, 0);
    REQUIRE(lv_u.has_value());
    CHECK(*lv_u == 2);
    auto lv_b = last_visible(g, lab, 4, Chain::AC, 0);
    REQUIRE(lv_b.has_value());
    CHECK(*lv_b == 1);

    // FV <= LV by chain index whenever both exist
    for (int u = 0; u < 6; ++u) {
        for (Chain c : {Chain::AB, Chain::AC, Chain::BC}) {
            if (lab.on_chain(c, u) && !lab.is_corner(u)) continue;
            if (lab.on_chain(c, u)) continue;  // corner of this chain: skip own chain
            auto [origin, far] = lab.endpoints(c);
            auto f = first_visible(g, lab, u, c, origin);
            auto l = last_visible(g, lab, u, c, origin);
            CHECK(f.has_value() == l.has_value());
            if (f && l) {
                CHECK(chain_index(lab, c, *f, origin) <= chain_index(lab, c, *l, origin));
            }
        }
    }
}

TEST_CASE("complete graph visibility lookups") {
    // convex-polygon style complete graph on 6 vertices
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 2; j < 6; ++j)
            if (!(i == 0 && j == 5)) chords.emplace_back(i, j);
    BoundaryGraph g(6, chords);
    ChainLabeling lab = make_labeling(6, 0, 2, 4);

    // FV from any vertex to any chain is the chain's origin corner itself
    auto fv = first_visible(g, lab, 3, Chain::AB, 0);
    REQUIRE(fv.has_value());
    CHECK(*fv == 0);
    auto lv = last_visible(g, lab, 3, Chain::AB, 0);
    REQUIRE(lv.has_value());
    CHECK(*lv == 4);
}
