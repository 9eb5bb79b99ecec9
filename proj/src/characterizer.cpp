#include "pseudotri/characterizer.hpp"

#include <algorithm>

namespace pseudotri {

namespace {

constexpr std::array<Chain, 3> kChains = {Chain::AB, Chain::AC, Chain::BC};

std::string chain_name(Chain c) {
    switch (c) {
        case Chain::AB: return "AB";
        case Chain::AC: return "AC";
        default: return "BC";
    }
}

// Shared per-run context: labeling plus single-scan summaries.
struct Ctx {
    const BoundaryGraph& g;
    const ChainLabeling& lab;
    VisibilitySummaries sums;

    Ctx(const BoundaryGraph& graph, const ChainLabeling& labeling)
        : g(graph), lab(labeling), sums(VisibilitySummaries::build(graph, labeling)) {}

    int len(Chain c) const { return static_cast<int>(lab.chain(c).size()); }
    int vertex_at(Chain c, int pos) const { return lab.chain(c)[static_cast<std::size_t>(pos)]; }

    // Run of v on chain c, re-oriented so positions are measured from `origin`.
    ChainRun run_from(int v, Chain c, int origin) const {
        ChainRun r = sums.run(v, c);
        auto [canonical, far] = lab.endpoints(c);
        if (origin == canonical || r.empty()) return r;
        ChainRun f;
        f.count = r.count;
        f.lo = len(c) - 1 - r.hi;
        f.hi = len(c) - 1 - r.lo;
        return f;
    }
    int vertex_from(Chain c, int origin, int pos) const {
        auto [canonical, far] = lab.endpoints(c);
        int p = (origin == canonical) ? pos : len(c) - 1 - pos;
        return vertex_at(c, p);
    }
};

// The corner every pair of distinct chains shares.
int shared_corner(const ChainLabeling& lab, Chain a, Chain b) {
    if ((a == Chain::AB && b == Chain::AC) || (a == Chain::AC && b == Chain::AB))
        return lab.corner_a;
    if ((a == Chain::AB && b == Chain::BC) || (a == Chain::BC && b == Chain::AB))
        return lab.corner_b;
    return lab.corner_c;
}

Chain third_chain(Chain a, Chain b) {
    for (Chain c : kChains)
        if (c != a && c != b) return c;
    return Chain::BC;
}

bool same_chain_pair(const ChainLabeling& lab, int x, int y) {
    for (Chain c : kChains)
        if (lab.on_chain(c, x) && lab.on_chain(c, y)) return true;
    return false;
}

// Chords joining two vertices of one concave side-chain cannot be realized.
Verdict check_chain_membership(const Ctx& ctx) {
    Verdict v;
    for (const auto& [x, y] : ctx.g.chords()) {
        if (same_chain_pair(ctx.lab, x, y)) {
            v.reject("chain-membership", {x, y},
                     "chord joins two vertices of one side-chain");
            return v;
        }
    }
    return v;
}

}  // namespace

VisibilitySummaries VisibilitySummaries::build(const BoundaryGraph& g,
                                               const ChainLabeling& lab) {
    VisibilitySummaries s;
    s.runs.assign(static_cast<std::size_t>(g.size()), {});

    auto add = [&](int from, int to) {
        for (Chain c : kChains) {
            if (!lab.on_chain(c, to) || lab.on_chain(c, from)) continue;
            ChainRun& r = s.runs[static_cast<std::size_t>(from)][static_cast<std::size_t>(c)];
            int pos = lab.pos(c, to);
            if (r.empty()) {
                r.lo = r.hi = pos;
                r.count = 1;
            } else {
                r.lo = std::min(r.lo, pos);
                r.hi = std::max(r.hi, pos);
                ++r.count;
            }
        }
    };

    for (const auto& [x, y] : g.chords()) {
        add(x, y);
        add(y, x);
    }
    for (int i = 0; i < g.size(); ++i) {
        int j = (i + 1) % g.size();
        add(i, j);
        add(j, i);
    }
    return s;
}

CornerReport detect_corners(const BoundaryGraph& g) {
    CornerReport report;
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
        int prev = (v + n - 1) % n;
        int next = (v + 1) % n;
        if (g.sees(prev, next)) report.candidates.push_back(v);
    }
    if (static_cast<int>(report.candidates.size()) == 3) {
        report.status = CornerStatus::three_corners;
        return report;
    }
    if (static_cast<int>(report.candidates.size()) == 2) {
        // Lemma-1 recovery: with a corner hidden there is no chord across the
        // hidden pocket and both detected corners are isolated once the cycle
        // edges are removed.
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (const auto& [x, y] : g.chords()) {
            ++degree[static_cast<std::size_t>(x)];
            ++degree[static_cast<std::size_t>(y)];
        }
        for (int v = 0; v < n; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 0) report.hidden_corners.push_back(v);
        }
        bool both_isolated = true;
        for (int c : report.candidates) {
            if (degree[static_cast<std::size_t>(c)] != 0) both_isolated = false;
        }
        report.status = both_isolated ? CornerStatus::two_corners_tower : CornerStatus::invalid;
        return report;
    }
    report.status = CornerStatus::invalid;
    return report;
}

namespace {

struct TowerConfigResult {
    bool ok = false;
    std::string reason;
    std::vector<int> witnesses;
};

// Validates one (apex, base, chain assignment) interpretation: apex isolated,
// all chords crossing between the two pocket chains, every upper window
// contiguous, windows strongly ordered, and the bipartite graph connected.
TowerConfigResult try_tower_config(const BoundaryGraph& g, int apex,
                                   const std::vector<int>& upper,
                                   const std::vector<int>& lower,
                                   std::vector<std::pair<int, int>>* cross_out) {
    const int nu = static_cast<int>(upper.size());
    const int nw = static_cast<int>(lower.size());
    std::vector<int> upos(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> wpos(static_cast<std::size_t>(g.size()), -1);
    for (int i = 0; i < nu; ++i) upos[static_cast<std::size_t>(upper[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < nw; ++i) wpos[static_cast<std::size_t>(lower[static_cast<std::size_t>(i)])] = i;

    std::vector<std::pair<int, int>> cross;
    for (const auto& [x, y] : g.chords()) {
        if (x == apex || y == apex) return {false, "apex is not isolated", {x, y}};
        int ux = upos[static_cast<std::size_t>(x)], wx = wpos[static_cast<std::size_t>(x)];
        int uy = upos[static_cast<std::size_t>(y)], wy = wpos[static_cast<std::size_t>(y)];
        if (ux >= 0 && wy >= 0) cross.emplace_back(ux, wy);
        else if (uy >= 0 && wx >= 0) cross.emplace_back(uy, wx);
        else return {false, "chord inside one pocket chain", {x, y}};
    }
    cross.emplace_back(0, 0);  // boundary edge closing the base

    std::vector<ChainRun> uruns(static_cast<std::size_t>(nu));
    std::vector<int> wdeg(static_cast<std::size_t>(nw), 0);
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(nu),
                                        std::vector<bool>(static_cast<std::size_t>(nw), false));
    for (const auto& [ui, wi] : cross) {
        ChainRun& r = uruns[static_cast<std::size_t>(ui)];
        if (r.empty()) { r.lo = r.hi = wi; r.count = 1; }
        else { r.lo = std::min(r.lo, wi); r.hi = std::max(r.hi, wi); ++r.count; }
        ++wdeg[static_cast<std::size_t>(wi)];
        seen[static_cast<std::size_t>(ui)][static_cast<std::size_t>(wi)] = true;
    }
    for (int i = 0; i < nu; ++i) {
        const ChainRun& r = uruns[static_cast<std::size_t>(i)];
        if (r.empty())
            return {false, "bipartite graph not connected", {upper[static_cast<std::size_t>(i)]}};
        for (int w = r.lo; w <= r.hi; ++w) {
            if (!seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)])
                return {false, "visible window not contiguous", {upper[static_cast<std::size_t>(i)]}};
        }
    }
    for (int w = 0; w < nw; ++w) {
        if (wdeg[static_cast<std::size_t>(w)] == 0)
            return {false, "bipartite graph not connected", {lower[static_cast<std::size_t>(w)]}};
    }
    for (int i = 0; i + 1 < nu; ++i) {
        const ChainRun& a = uruns[static_cast<std::size_t>(i)];
        const ChainRun& b = uruns[static_cast<std::size_t>(i + 1)];
        if (b.lo < a.lo || b.hi < a.hi)
            return {false,
                    "windows not strongly ordered",
                    {upper[static_cast<std::size_t>(i)], upper[static_cast<std::size_t>(i + 1)]}};
        if (b.lo > a.hi)
            return {false,
                    "bipartite graph not connected",
                    {upper[static_cast<std::size_t>(i)], upper[static_cast<std::size_t>(i + 1)]}};
    }
    if (uruns[0].lo != 0 || uruns[static_cast<std::size_t>(nu - 1)].hi != nw - 1)
        return {false, "bipartite graph not connected", {upper[0]}};

    if (cross_out) *cross_out = std::move(cross);
    return {true, "", {}};
}

}  // namespace

Verdict check_tower_fallback(const BoundaryGraph& g, const CornerReport& report,
                             std::optional<TowerDecomposition>* decomposition) {
    Verdict verdict;
    if (report.status != CornerStatus::two_corners_tower) {
        verdict.reject("property-1", report.candidates,
                       "tower fallback requires exactly two detected corners");
        return verdict;
    }
    const int n = g.size();
    int x = report.candidates[0];
    int y = report.candidates[1];

    auto arc = [&](int from, int to) {  // exclusive endpoints, forward direction
        std::vector<int> out;
        for (int v = (from + 1) % n; v != to; v = (v + 1) % n) out.push_back(v);
        return out;
    };
    std::vector<int> forward = arc(x, y);   // x+1 .. y-1
    std::vector<int> backward = arc(y, x);  // y+1 .. x-1
    if (forward.empty() || backward.empty()) {
        verdict.reject("property-1", {x, y}, "a pocket between the two corners is empty");
        return verdict;
    }

    TowerConfigResult last;
    for (int apex : {y, x}) {
        int base = apex == y ? x : y;
        for (const std::vector<int>* upper_arc : {&forward, &backward}) {
            const std::vector<int>& other = (upper_arc == &forward) ? backward : forward;
            std::vector<int> upper = *upper_arc;
            if (!g.cycle_adjacent(upper.front(), base)) std::reverse(upper.begin(), upper.end());
            std::vector<int> lower_tail = other;
            if (!g.cycle_adjacent(lower_tail.front(), base))
                std::reverse(lower_tail.begin(), lower_tail.end());
            std::vector<int> lower;
            lower.push_back(base);
            lower.insert(lower.end(), lower_tail.begin(), lower_tail.end());

            std::vector<std::pair<int, int>> cross;
            TowerConfigResult r = try_tower_config(g, apex, upper, lower, &cross);
            if (r.ok) {
                if (decomposition) {
                    TowerDecomposition d;
                    d.apex = apex;
                    d.base_corner = base;
                    d.upper_chain = std::move(upper);
                    d.lower_chain = std::move(lower);
                    d.cross_edges = std::move(cross);
                    *decomposition = std::move(d);
                }
                return verdict;
            }
            last = r;
        }
    }
    verdict.reject("property-1", last.witnesses,
                   last.reason.empty() ? "no tower interpretation fits" : last.reason);
    return verdict;
}

namespace {

// Contiguity of every visible run. Corners are included: a corner's visible
// part of the opposite chain is one interval too, since the shadows of its
// own two chains are anchored at that chain's ends.
Verdict interval_visibility_impl(const Ctx& ctx) {
    Verdict v;
    for (int vert = 0; vert < ctx.g.size(); ++vert) {
        for (Chain c : kChains) {
            if (ctx.lab.on_chain(c, vert)) continue;
            const ChainRun& r = ctx.sums.run(vert, c);
            if (!r.contiguous()) {
                v.reject("property-2", {vert},
                         "visible set on chain " + chain_name(c) + " is not contiguous");
                return v;
            }
        }
    }
    return v;
}

struct PairSpec {
    Chain source, target;
    int corner;
};

std::array<PairSpec, 6> ordered_pairs(const ChainLabeling& lab) {
    return {{
        {Chain::AC, Chain::AB, lab.corner_a},
        {Chain::AB, Chain::AC, lab.corner_a},
        {Chain::AB, Chain::BC, lab.corner_b},
        {Chain::BC, Chain::AB, lab.corner_b},
        {Chain::AC, Chain::BC, lab.corner_c},
        {Chain::BC, Chain::AC, lab.corner_c},
    }};
}

// Property 3 plus corollaries 1 and 2, per ordered chain pair at each corner.
Verdict first_visible_laws_impl(const Ctx& ctx) {
    Verdict v;
    const ChainLabeling& lab = ctx.lab;
    for (const PairSpec& ps : ordered_pairs(lab)) {
        int slen = ctx.len(ps.source);
        int prev_fv = -1;
        bool seen_empty = false;
        for (int pos = 1; pos < slen; ++pos) {
            int vert = ctx.vertex_from(ps.source, ps.corner, pos);
            ChainRun r = ctx.run_from(vert, ps.target, ps.corner);
            if (r.empty()) {
                seen_empty = true;
                continue;
            }
            if (seen_empty) {
                v.reject("corollary-2", {vert},
                         "vertex sees chain " + chain_name(ps.target) +
                             " although a predecessor saw nothing");
                return v;
            }
            if (r.lo < prev_fv) {
                v.reject("corollary-1", {vert},
                         "first visible vertex on " + chain_name(ps.target) +
                             " moved back towards the corner");
                return v;
            }
            prev_fv = r.lo;

            // Property 3: the first visible vertex is also seen one step back.
            int fv_vertex = ctx.vertex_from(ps.target, ps.corner, r.lo);
            auto pred = try_navigate(lab, ps.source, vert, ps.corner, -1);
            if (!pred || *pred == fv_vertex) continue;
            if (lab.on_chain(ps.target, *pred)) continue;  // predecessor is the corner
            if (!ctx.g.sees(*pred, fv_vertex)) {
                v.reject("property-3", {vert, fv_vertex, *pred},
                         "predecessor does not see the first visible vertex");
                return v;
            }
        }
    }
    return v;
}

// Strong ordering inside every tower cut off by a cross chord (corollaries
// 2:2 and 2:3). With contiguous windows this reduces to: first-visible
// positions never move back towards the corner, and the last-visible
// sequence has no valley (a strict drop is never followed by a rise past
// any since-dropped level).
Verdict tower_substructure_impl(const Ctx& ctx) {
    Verdict v;
    for (const PairSpec& ps : ordered_pairs(ctx.lab)) {
        int slen = ctx.len(ps.source);
        int prev_lo = -1, prev_hi = -1, prev_vert = -1;
        bool falling = false;
        for (int pos = 1; pos < slen; ++pos) {
            int vert = ctx.vertex_from(ps.source, ps.corner, pos);
            ChainRun r = ctx.run_from(vert, ps.target, ps.corner);
            // drop the shared corner itself from the window
            if (!r.empty() && r.lo == 0) {
                if (r.hi == 0) r = ChainRun{};
                else { r.lo = 1; --r.count; }
            }
            if (r.empty()) continue;
            if (prev_vert >= 0) {
                if (r.lo < prev_lo || (falling && r.hi > prev_hi)) {
                    v.reject("strong-ordering", {prev_vert, vert},
                             "cross-edge windows at corner " + std::to_string(ps.corner) +
                                 " are not strongly ordered");
                    return v;
                }
                if (r.hi < prev_hi) falling = true;
            }
            prev_lo = r.lo;
            prev_hi = r.hi;
            prev_vert = vert;
        }
    }
    return v;
}

Verdict pocket_conditions_impl(const Ctx& ctx) {
    Verdict v;
    const ChainLabeling& lab = ctx.lab;

    struct Orientation {
        Chain cu, cv;  // u's chain, v's chain
        int corner;    // corner shared by cu and cv
        Chain ct;      // third chain
        int torigin;   // corner of ct shared with cu
    };
    auto check_oriented = [&](int u, int vv, const Orientation& sc) -> bool {
        auto nu = try_navigate(lab, sc.cu, u, sc.corner, +1);
        auto nv = try_navigate(lab, sc.cv, vv, sc.corner, +1);
        if (!nu || !nv) return true;
        if (ctx.g.sees(*nu, vv) || ctx.g.sees(u, *nv)) return true;

        ChainRun ru = ctx.run_from(u, sc.ct, sc.torigin);
        ChainRun rv = ctx.run_from(vv, sc.ct, sc.torigin);
        if (ru.empty() || rv.empty() || std::max(ru.lo, rv.lo) > std::min(ru.hi, rv.hi)) {
            v.reject("property-6a", {u, vv},
                     "no common visible subchain on " + chain_name(sc.ct));
            return false;
        }
        int w_far = std::min(ru.hi, rv.hi);
        ChainRun rnu = ctx.run_from(*nu, sc.ct, sc.torigin);
        if (!rnu.empty() && w_far < rnu.hi) {
            v.reject("property-6b", {u, vv, *nu},
                     "common subchain ends before the successor's last visible vertex");
            return false;
        }
        ChainRun rnv = ctx.run_from(*nv, sc.ct, sc.torigin);
        if (!rnu.empty() && !rnv.empty() && rnv.lo < rnu.hi) {
            v.reject("property-6c", {u, vv, *nu, *nv},
                     "successor windows on " + chain_name(sc.ct) + " cross the wrong way");
            return false;
        }
        return true;
    };

    for (const auto& [x, y] : ctx.g.chords()) {
        for (Chain cu : kChains) {
            if (!lab.on_chain(cu, x)) continue;
            for (Chain cv : kChains) {
                if (cv == cu || !lab.on_chain(cv, y)) continue;
                Chain ct = third_chain(cu, cv);
                Orientation fwd{cu, cv, shared_corner(lab, cu, cv), ct,
                                shared_corner(lab, cu, ct)};
                if (!check_oriented(x, y, fwd)) return v;
                Orientation rev{cv, cu, fwd.corner, ct, shared_corner(lab, cv, ct)};
                if (!check_oriented(y, x, rev)) return v;
            }
        }
    }

    // Corollary 4, per chain and orientation: some vertex sees both other
    // chains, and everything between it and the near corner sees the near
    // neighbour chain. A corner of the target chain always sees at least its
    // cycle neighbour inside that chain, which is how the paper counts it.
    auto sees_chain = [&](int w, Chain c) {
        return lab.on_chain(c, w) || !ctx.sums.run(w, c).empty();
    };
    for (Chain ct : kChains) {
        Chain ca = (ct == Chain::BC) ? Chain::AB : Chain::AB == ct ? Chain::AC : Chain::AB;
        Chain cb = third_chain(ct, ca);
        auto [o1, o2] = lab.endpoints(ct);
        for (int origin : {o1, o2}) {
            Chain near_chain = shared_corner(lab, ca, ct) == origin ? ca : cb;
            int tlen = ctx.len(ct);
            int first_both = -1;
            for (int pos = 0; pos < tlen; ++pos) {
                int w = ctx.vertex_from(ct, origin, pos);
                if (sees_chain(w, ca) && sees_chain(w, cb)) {
                    first_both = pos;
                    break;
                }
            }
            if (first_both < 0) {
                v.reject("corollary-4", {},
                         "no vertex of " + chain_name(ct) + " sees both other chains");
                return v;
            }
            for (int pos = 1; pos < first_both; ++pos) {
                int w = ctx.vertex_from(ct, origin, pos);
                if (!sees_chain(w, near_chain)) {
                    v.reject("corollary-4", {w},
                             "vertex before the double-seeing witness sees nothing on " +
                                 chain_name(near_chain));
                    return v;
                }
            }
        }
    }
    return v;
}

Verdict cross_first_visible_impl(const Ctx& ctx) {
    Verdict v;
    for (int w : ctx.lab.bc) {
        const ChainRun& rab = ctx.sums.run(w, Chain::AB);
        const ChainRun& rac = ctx.sums.run(w, Chain::AC);
        if (rab.empty() || rac.empty()) continue;
        int u = ctx.lab.ab[static_cast<std::size_t>(rab.lo)];
        int vv = ctx.lab.ac[static_cast<std::size_t>(rac.lo)];
        if (u == vv) continue;
        if (!ctx.g.sees(u, vv)) {
            v.reject("property-7", {w, u, vv},
                     "first visible vertices on AB and AC do not see each other");
            return v;
        }
    }
    return v;
}

struct BaseWindow {
    bool defined = false;
    int u = -1, v = -1;    // closest-to-A vertices of AB / AC seen from BC
    int lo = -1, hi = -1;  // window positions on BC, measured from B
};

BaseWindow base_window(const Ctx& ctx) {
    BaseWindow bw;
    int best_ab = -1, best_ac = -1;
    for (int w : ctx.lab.bc) {
        const ChainRun& rab = ctx.sums.run(w, Chain::AB);
        const ChainRun& rac = ctx.sums.run(w, Chain::AC);
        if (!rab.empty() && (best_ab < 0 || rab.lo < best_ab)) best_ab = rab.lo;
        if (!rac.empty() && (best_ac < 0 || rac.lo < best_ac)) best_ac = rac.lo;
    }
    // corner B always sees its own AB neighbour, and C its AC neighbour
    int implicit_ab = ctx.lab.alpha() - 1;
    int implicit_ac = ctx.lab.delta() - 1;
    if (best_ab < 0 || implicit_ab < best_ab) best_ab = implicit_ab;
    if (best_ac < 0 || implicit_ac < best_ac) best_ac = implicit_ac;
    if (best_ab < 0 || best_ac < 0) return bw;
    bw.defined = true;
    bw.u = ctx.lab.ab[static_cast<std::size_t>(best_ab)];
    bw.v = ctx.lab.ac[static_cast<std::size_t>(best_ac)];

    const ChainRun& su = ctx.sums.run(bw.u, Chain::BC);
    const ChainRun& sv = ctx.sums.run(bw.v, Chain::BC);
    if (!su.empty() && !sv.empty()) {
        int lo = std::max(su.lo, sv.lo);
        int hi = std::min(su.hi, sv.hi);
        if (lo <= hi) {
            bw.lo = lo;
            bw.hi = hi;
            return bw;
        }
    }
    for (int p = 0; p + 1 < ctx.len(Chain::BC); ++p) {
        if (sv.contains(p) && su.contains(p + 1)) {  // w sees v, its successor sees u
            bw.lo = p;
            bw.hi = p + 1;
            return bw;
        }
    }
    return bw;  // defined but lo = -1: no window
}

Verdict base_window_impl(const Ctx& ctx) {
    Verdict v;
    BaseWindow bw = base_window(ctx);
    if (!bw.defined) return v;  // no BC vertex sees either chain: vacuous
    if (bw.u != bw.v && !ctx.g.sees(bw.u, bw.v)) {
        v.reject("property-10", {bw.u, bw.v},
                 "topmost chain vertices seen from BC are not visible to each other");
        return v;
    }
    if (bw.lo < 0) {
        v.reject("property-10", {bw.u, bw.v},
                 "no window on BC is visible from both topmost vertices");
        return v;
    }

    // Corollary 5: first-visible positions are unimodal around the window.
    auto fv_at = [&](int pos, Chain target) -> int {
        const ChainRun& r = ctx.sums.run(ctx.lab.bc[static_cast<std::size_t>(pos)], target);
        return r.empty() ? -1 : r.lo;
    };
    struct Leg { Chain target; int from, to; bool rising; };
    const std::array<Leg, 4> legs = {{
        {Chain::AB, 0, bw.hi, false},
        {Chain::AC, 0, bw.lo, false},
        {Chain::AC, bw.lo, ctx.len(Chain::BC) - 1, true},
        {Chain::AB, bw.hi, ctx.len(Chain::BC) - 1, true},
    }};
    for (const Leg& leg : legs) {
        int prev = -1, prev_pos = -1;
        for (int p = leg.from; p <= leg.to; ++p) {
            int f = fv_at(p, leg.target);
            if (f < 0) continue;
            if (prev >= 0 && (leg.rising ? f < prev : f > prev)) {
                v.reject("corollary-5",
                         {ctx.lab.bc[static_cast<std::size_t>(prev_pos)],
                          ctx.lab.bc[static_cast<std::size_t>(p)]},
                         "first visible vertex on " + chain_name(leg.target) +
                             " is not monotone along BC");
                return v;
            }
            prev = f;
            prev_pos = p;
        }
    }
    return v;
}

Verdict blocking_side_impl(const Ctx& ctx) {
    Verdict v;
    BaseWindow bw = base_window(ctx);
    if (!bw.defined || bw.lo < 0) return v;  // check_base_window reports these
    const ChainLabeling& lab = ctx.lab;
    const int blen = ctx.len(Chain::BC);

    // State of a blocking pair at a BC position: -1 undefined, 0 invisible,
    // 1 visible. first_pair is (N(u), P(v)); the other is (P(u), N(v)).
    auto pair_state = [&](int pos, bool first_pair) -> int {
        int w = lab.bc[static_cast<std::size_t>(pos)];
        const ChainRun& rab = ctx.sums.run(w, Chain::AB);
        const ChainRun& rac = ctx.sums.run(w, Chain::AC);
        if (rab.empty() || rac.empty()) return -1;
        int u = lab.ab[static_cast<std::size_t>(rab.lo)];
        int vv = lab.ac[static_cast<std::size_t>(rac.lo)];
        auto a = try_navigate(lab, Chain::AB, u, lab.corner_a, first_pair ? +1 : -1);
        auto b = try_navigate(lab, Chain::AC, vv, lab.corner_a, first_pair ? -1 : +1);
        if (!a || !b || *a == *b) return -1;
        return ctx.g.sees(*a, *b) ? 1 : 0;
    };

    for (int p = std::max(1, bw.lo); p <= std::min(bw.hi, blen - 2); ++p) {
        if (pair_state(p, true) == 1 && pair_state(p, false) == 1) {
            v.reject("property-11a", {lab.bc[static_cast<std::size_t>(p)]},
                     "both candidate blocking pairs are visible inside the window");
            return v;
        }
    }
    for (int p = 1; p < bw.lo; ++p) {
        if (pair_state(p, true) == 1) {
            v.reject("property-11c", {lab.bc[static_cast<std::size_t>(p)]},
                     "vertex below the window lacks the forced AB-side blocking");
            return v;
        }
    }
    for (int p = bw.hi + 1; p <= blen - 2; ++p) {
        if (pair_state(p, false) == 1) {
            v.reject("property-11c", {lab.bc[static_cast<std::size_t>(p)]},
                     "vertex above the window lacks the forced AC-side blocking");
            return v;
        }
    }
    // (b): the AB-side blocking states form a prefix from B, with the last
    // visible vertex on AC advancing inside it; symmetric towards C.
    {
        bool seen_visible = false;
        for (int p = 1; p <= std::min(bw.hi, blen - 2); ++p) {
            int s = pair_state(p, true);
            if (s < 0) continue;
            if (s == 1) {
                seen_visible = true;
                continue;
            }
            if (seen_visible) {
                v.reject("property-11b", {lab.bc[static_cast<std::size_t>(p)]},
                         "AB-side blocking does not hold on a prefix from B");
                return v;
            }
            if (p + 1 <= bw.hi) {
                const ChainRun& cur = ctx.sums.run(lab.bc[static_cast<std::size_t>(p)], Chain::AC);
                const ChainRun& nxt =
                    ctx.sums.run(lab.bc[static_cast<std::size_t>(p + 1)], Chain::AC);
                if (!cur.empty() && !nxt.empty() && cur.hi > nxt.hi) {
                    v.reject("property-11b",
                             {lab.bc[static_cast<std::size_t>(p)],
                              lab.bc[static_cast<std::size_t>(p + 1)]},
                             "last visible vertex on AC recedes inside the blocked prefix");
                    return v;
                }
            }
        }
    }
    {
        bool seen_visible = false;
        for (int p = blen - 2; p >= std::max(1, bw.lo); --p) {
            int s = pair_state(p, false);
            if (s < 0) continue;
            if (s == 1) {
                seen_visible = true;
                continue;
            }
            if (seen_visible) {
                v.reject("property-11b", {lab.bc[static_cast<std::size_t>(p)]},
                         "AC-side blocking does not hold on a suffix towards C");
                return v;
            }
            if (p - 1 >= bw.lo) {
                const ChainRun& cur = ctx.sums.run(lab.bc[static_cast<std::size_t>(p)], Chain::AB);
                const ChainRun& prv =
                    ctx.sums.run(lab.bc[static_cast<std::size_t>(p - 1)], Chain::AB);
                if (!cur.empty() && !prv.empty() && cur.hi > prv.hi) {
                    v.reject("property-11b",
                             {lab.bc[static_cast<std::size_t>(p)],
                              lab.bc[static_cast<std::size_t>(p - 1)]},
                             "last visible vertex on AB recedes inside the blocked suffix");
                    return v;
                }
            }
        }
    }
    return v;
}

}  // namespace

Verdict check_interval_visibility(const BoundaryGraph& g, const ChainLabeling& lab) {
    return interval_visibility_impl(Ctx(g, lab));
}
Verdict check_first_visible_laws(const BoundaryGraph& g, const ChainLabeling& lab) {
    return first_visible_laws_impl(Ctx(g, lab));
}
Verdict check_tower_substructure(const BoundaryGraph& g, const ChainLabeling& lab) {
    return tower_substructure_impl(Ctx(g, lab));
}
Verdict check_pocket_conditions(const BoundaryGraph& g, const ChainLabeling& lab) {
    return pocket_conditions_impl(Ctx(g, lab));
}
Verdict check_cross_first_visible(const BoundaryGraph& g, const ChainLabeling& lab) {
    return cross_first_visible_impl(Ctx(g, lab));
}
Verdict check_base_window(const BoundaryGraph& g, const ChainLabeling& lab) {
    return base_window_impl(Ctx(g, lab));
}
Verdict check_blocking_side(const BoundaryGraph& g, const ChainLabeling& lab) {
    return blocking_side_impl(Ctx(g, lab));
}

CharacterizeResult characterize(const BoundaryGraph& g) {
    CharacterizeResult res;
    res.corners = detect_corners(g);

    if (res.corners.status == CornerStatus::invalid) {
        res.verdict.reject("lemma-1", res.corners.candidates,
                           "corner candidates do not match any pseudo-triangle");
        return res;
    }
    if (res.corners.status == CornerStatus::two_corners_tower) {
        std::optional<TowerDecomposition> deco;
        res.verdict = check_tower_fallback(g, res.corners, &deco);
        res.tower = std::move(deco);
        return res;
    }

    int a = res.corners.candidates[0];
    int c = res.corners.candidates[1];
    int b = res.corners.candidates[2];
    ChainLabeling lab = make_labeling(g.size(), a, c, b);
    Ctx ctx(g, lab);

    res.verdict.merge(check_chain_membership(ctx));
    if (res.verdict.accepted) {
        res.verdict.merge(interval_visibility_impl(ctx));
        res.verdict.merge(first_visible_laws_impl(ctx));
        res.verdict.merge(tower_substructure_impl(ctx));
        res.verdict.merge(pocket_conditions_impl(ctx));
        res.verdict.merge(cross_first_visible_impl(ctx));
        res.verdict.merge(base_window_impl(ctx));
        res.verdict.merge(blocking_side_impl(ctx));
    }
    res.labeling = std::move(lab);
    return res;
}

}  // namespace pseudotri
