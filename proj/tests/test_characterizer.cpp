#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pseudotri/characterizer.hpp>
#include <pseudotri/oracle.hpp>

#include "support/fixtures.hpp"

using namespace pseudotri;

namespace {

BoundaryGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
    return BoundaryGraph(n, chords);
}

}  // namespace

TEST_CASE("detect_corners") {
    BoundaryGraph hex = testsupport::hex6_graph();
    CornerReport r = detect_corners(hex);
    CHECK(r.candidates == std::vector<int>{0, 2, 4});
    CHECK(r.status == CornerStatus::three_corners);

    BoundaryGraph tri(3, {});
    CornerReport rt = detect_corners(tri);
    CHECK(rt.candidates == std::vector<int>{0, 1, 2});
    CHECK(rt.status == CornerStatus::three_corners);

    BoundaryGraph spoiled = hex.with_chord_toggled(0, 2);
    CornerReport rs = detect_corners(spoiled);
    CHECK(rs.candidates == std::vector<int>{0, 1, 2, 4});
    CHECK(rs.status == CornerStatus::invalid);
}

TEST_CASE("hex6 passes the full battery") {
    BoundaryGraph g = testsupport::hex6_graph();
    CharacterizeResult res = characterize(g);
    CHECK(res.verdict.accepted);
    REQUIRE(res.labeling.has_value());
    CHECK(res.labeling->corner_a == 0);
    CHECK(res.labeling->corner_c == 2);
    CHECK(res.labeling->corner_b == 4);

    ChainLabeling lab = *res.labeling;
    CHECK(check_interval_visibility(g, lab).accepted);
    CHECK(check_first_visible_laws(g, lab).accepted);
    CHECK(check_tower_substructure(g, lab).accepted);
    CHECK(check_pocket_conditions(g, lab).accepted);
    CHECK(check_cross_first_visible(g, lab).accepted);
    CHECK(check_base_window(g, lab).accepted);
    CHECK(check_blocking_side(g, lab).accepted);
}

TEST_CASE("interval check catches a removed chord") {
    BoundaryGraph g = testsupport::hex6_graph().with_chord_toggled(1, 3);
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    Verdict v = check_interval_visibility(g, lab);
    CHECK(!v.accepted);
    REQUIRE(!v.diagnostics.empty());
    CHECK(v.diagnostics[0].property == "property-2");
    // both v1 ({B,C} on BC) and w1 ({A,C} on AC) lose contiguity
    REQUIRE(v.diagnostics[0].witnesses.size() == 1);
    int w = v.diagnostics[0].witnesses[0];
    CHECK((w == 1 || w == 3));

    // the full run rejects too; dropping (1,3) also costs C its candidacy,
    // so corner detection already fails
    CharacterizeResult res = characterize(g);
    CHECK(!res.verdict.accepted);
}

TEST_CASE("complete graph with synthetic labels keeps intervals contiguous") {
    BoundaryGraph g = complete_graph(6);
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    CHECK(check_interval_visibility(g, lab).accepted);
    CHECK(check_first_visible_laws(g, lab).accepted);
    // full characterize rejects: every vertex becomes a corner candidate
    CHECK(!characterize(g).verdict.accepted);
}

TEST_CASE("first-visible law catches a removed chord") {
    // On the fixture, FV^A(C, AB) = u1 and P^A(C) = v1 with chord (1,5)
    // present; dropping (1,5) must trip property 3 (or an earlier law).
    BoundaryGraph g = testsupport::hex6_graph().with_chord_toggled(1, 5);
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    Verdict v = check_first_visible_laws(g, lab);
    CHECK(!v.accepted);
    CHECK(!characterize(g).verdict.accepted);
}

TEST_CASE("tower substructure at corner A of the fixture") {
    BoundaryGraph g = testsupport::hex6_graph();
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    CHECK(check_tower_substructure(g, lab).accepted);

    // crossing windows: on 12 vertices with corners 0/7/8 the AB chain is
    // [0,11,10,9,8]; deep AB vertices whose AC windows step back violate
    // the strong ordering even though every window is contiguous
    ChainLabeling lab12 = make_labeling(12, 0, 7, 8);
    BoundaryGraph crossing(12, std::vector<std::pair<int, int>>{
                                   {1, 11}, {2, 11}, {2, 10}, {3, 10}, {1, 9}, {2, 9}});
    Verdict v = check_tower_substructure(crossing, lab12);
    CHECK(!v.accepted);
    REQUIRE(!v.diagnostics.empty());
    CHECK(v.diagnostics[0].property == "strong-ordering");

    // valley pattern in the last-visible sequence
    BoundaryGraph valley(12, std::vector<std::pair<int, int>>{
                                 {1, 11}, {2, 11}, {3, 11}, {1, 10}, {2, 10}, {2, 9}, {3, 9}});
    Verdict v2 = check_tower_substructure(valley, lab12);
    CHECK(!v2.accepted);
}

TEST_CASE("pocket conditions on the fixture and a mutilated variant") {
    BoundaryGraph g = testsupport::hex6_graph();
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    CHECK(check_pocket_conditions(g, lab).accepted);

    // removing both chords (1,3) and (3,5) strips the corner candidacies of
    // C and B, so the full run dies at corner detection
    BoundaryGraph bad = g.with_chord_toggled(1, 3).with_chord_toggled(3, 5);
    CharacterizeResult res = characterize(bad);
    CHECK(!res.verdict.accepted);
    CHECK(res.corners.status == CornerStatus::invalid);

    // synthetic corollary-4 failure: with no chords at all on 8 vertices,
    // no interior vertex of any chain sees both other chains
    BoundaryGraph lonely(8, {});
    ChainLabeling lab8 = make_labeling(8, 0, 3, 6);
    Verdict v = check_pocket_conditions(lonely, lab8);
    CHECK(!v.accepted);
    REQUIRE(!v.diagnostics.empty());
    CHECK(v.diagnostics[0].property == "corollary-4");
}

TEST_CASE("property 7 and the base window on the fixture") {
    BoundaryGraph g = testsupport::hex6_graph();
    ChainLabeling lab = make_labeling(6, 0, 2, 4);
    // w1's first visible vertices coincide (both A): no constraint
    CHECK(check_cross_first_visible(g, lab).accepted);
    // u = v = A; the window is w1, seen from both
    CHECK(check_base_window(g, lab).accepted);
    CHECK(check_blocking_side(g, lab).accepted);
}

TEST_CASE("characterize with two detected corners takes the tower path") {
    // hidden-corner layout on 6 vertices: corners 2 and 4 detected, vertex 0
    // plays the blocked corner inside the upper pocket {5, 0, 1}
    BoundaryGraph g(6, std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {3, 5}});
    CornerReport rep = detect_corners(g);
    REQUIRE(rep.status == CornerStatus::two_corners_tower);
    CHECK(rep.candidates == std::vector<int>{2, 4});
    CHECK(rep.hidden_corners == std::vector<int>{2, 4});

    std::optional<TowerDecomposition> deco;
    Verdict v = check_tower_fallback(g, rep, &deco);
    CHECK(v.accepted);
    REQUIRE(deco.has_value());
    CHECK((deco->apex == 2 || deco->apex == 4));

    CharacterizeResult res = characterize(g);
    CHECK(res.verdict.accepted);
    CHECK(res.tower.has_value());
}

TEST_CASE("tower fallback on small two-corner graphs") {
    // complete bipartite pocket pair: accepted
    BoundaryGraph ok(5, std::vector<std::pair<int, int>>{{0, 2}, {2, 4}});
    CornerReport rep = detect_corners(ok);
    REQUIRE(rep.status == CornerStatus::two_corners_tower);
    CHECK(check_tower_fallback(ok, rep, nullptr).accepted);

    // windowed and connected: accepted
    BoundaryGraph conn(6, std::vector<std::pair<int, int>>{{1, 5}, {1, 4}, {2, 4}});
    CornerReport repc = detect_corners(conn);
    REQUIRE(repc.status == CornerStatus::two_corners_tower);
    CHECK(check_tower_fallback(conn, repc, nullptr).accepted);

    // same but with the linking chord gone: windows no longer chain, so the
    // bipartite graph is disconnected and the fallback rejects
    BoundaryGraph split(6, std::vector<std::pair<int, int>>{{1, 5}, {2, 4}});
    CornerReport reps = detect_corners(split);
    REQUIRE(reps.status == CornerStatus::two_corners_tower);
    Verdict vs = check_tower_fallback(split, reps, nullptr);
    CHECK(!vs.accepted);
    REQUIRE(!vs.diagnostics.empty());
    CHECK(vs.diagnostics[0].message.find("connected") != std::string::npos);
}

TEST_CASE("triangle graph is accepted") {
    BoundaryGraph tri(3, {});
    CharacterizeResult res = characterize(tri);
    CHECK(res.verdict.accepted);
}

TEST_CASE("probe accounting stays linear in the edge count") {
    BoundaryGraph g = testsupport::hex6_graph();
    g.reset_probe_count();
    characterize(g);
    std::uint64_t probes = g.probe_count();
    std::uint64_t edges = g.chords().size() + static_cast<std::uint64_t>(g.size());
    CHECK(probes <= 3 * edges + 10 * static_cast<std::uint64_t>(g.size()));
}
