#include "pseudotri/tower.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pseudotri {

std::optional<StrongOrderingViolation> strong_ordering(
    int upper_count, int lower_count, const std::vector<std::pair<int, int>>& edges) {
    const int m = upper_count, n = lower_count;
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(m),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const auto& [u, w] : edges) {
        if (u < 0 || u >= m || w < 0 || w >= n)
            throw std::invalid_argument("strong_ordering: edge out of range");
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = true;
    }
    // prefix/suffix occupancy per row and column
    auto row_after = [&](int u, int w) {  // first set column > w in row u
        for (int x = w + 1; x < n; ++x)
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)]) return x;
        return -1;
    };
    auto row_before = [&](int u, int w) {
        for (int x = w - 1; x >= 0; --x)
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)]) return x;
        return -1;
    };
    auto col_after = [&](int u, int w) {
        for (int y = u + 1; y < m; ++y)
            if (adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)]) return y;
        return -1;
    };
    auto col_before = [&](int u, int w) {
        for (int y = u - 1; y >= 0; --y)
            if (adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)]) return y;
        return -1;
    };
    for (int u = 0; u < m; ++u) {
        for (int w = 0; w < n; ++w) {
            if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) continue;
            // (u,w) missing as the low closure corner
            int w2 = row_after(u, w), u2 = col_after(u, w);
            if (w2 >= 0 && u2 >= 0) return StrongOrderingViolation{u, u2, w, w2};
            // (u,w) missing as the high closure corner
            int w1 = row_before(u, w), u1 = col_before(u, w);
            if (w1 >= 0 && u1 >= 0) return StrongOrderingViolation{u1, u, w1, w};
        }
    }
    return std::nullopt;
}

namespace {

struct SideData {
    int count = 0;                       // vertices on this chain (apex excluded)
    std::vector<int> fv, lv;             // 1-based windows on the other chain
    std::vector<Scalar> frac;            // anchor fraction for vertex x (x >= 2)
    std::vector<std::optional<Point>> pts;  // [0] = apex, [1..count]
    std::vector<std::optional<Point>> anchors;  // resolved s/r points
    Point first_dir;                     // apex ray for vertex 1
    int next = 1;                        // next index to place
};

}  // namespace

Polygon TowerBuild::polygon() const {
    Polygon p;
    p.vertices.push_back(apex);
    p.vertices.insert(p.vertices.end(), upper.begin(), upper.end());
    p.vertices.insert(p.vertices.end(), lower.rbegin(), lower.rend());
    return p;
}

TowerBuild build_tower(const TowerInput& input, const TowerOptions& options) {
    const int m = input.upper_count, n = input.lower_count;
    if (m < 1 || n < 1) throw std::invalid_argument("build_tower: chains must be nonempty");

    std::set<std::pair<int, int>> edges(input.cross_edges.begin(), input.cross_edges.end());
    edges.insert({m - 1, n - 1});  // base pair is always visible
    for (const auto& [u, w] : edges) {
        if (u < 0 || u >= m || w < 0 || w >= n)
            throw std::invalid_argument("build_tower: edge out of range");
    }

    std::array<SideData, 2> side;
    side[0].count = m;
    side[1].count = n;
    side[0].first_dir = Point(-1, -1);
    side[1].first_dir = Point(1, -1);
    for (int s = 0; s < 2; ++s) {
        side[s].fv.assign(static_cast<std::size_t>(side[s].count) + 1, 0);
        side[s].lv.assign(static_cast<std::size_t>(side[s].count) + 1, 0);
        side[s].frac.assign(static_cast<std::size_t>(side[s].count) + 1, Scalar(0));
        side[s].pts.assign(static_cast<std::size_t>(side[s].count) + 1, std::nullopt);
        side[s].anchors.assign(static_cast<std::size_t>(side[s].count) + 1, std::nullopt);
        side[s].pts[0] = Point(0, 0);
    }
    for (const auto& [u, w] : edges) {
        int ux = u + 1, wx = w + 1;  // 1-based
        if (side[0].fv[static_cast<std::size_t>(ux)] == 0) side[0].fv[static_cast<std::size_t>(ux)] = wx;
        side[0].fv[static_cast<std::size_t>(ux)] = std::min(side[0].fv[static_cast<std::size_t>(ux)], wx);
        side[0].lv[static_cast<std::size_t>(ux)] = std::max(side[0].lv[static_cast<std::size_t>(ux)], wx);
        if (side[1].fv[static_cast<std::size_t>(wx)] == 0) side[1].fv[static_cast<std::size_t>(wx)] = ux;
        side[1].fv[static_cast<std::size_t>(wx)] = std::min(side[1].fv[static_cast<std::size_t>(wx)], ux);
        side[1].lv[static_cast<std::size_t>(wx)] = std::max(side[1].lv[static_cast<std::size_t>(wx)], ux);
    }
    for (int s = 0; s < 2; ++s) {
        for (int x = 1; x <= side[s].count; ++x) {
            if (side[s].fv[static_cast<std::size_t>(x)] == 0) throw DisconnectedError();
        }
    }

    // anchor fractions: even subdivision of each hosting edge by default
    for (int s = 0; s < 2; ++s) {
        std::map<int, std::vector<int>> hosted;  // edge index on other chain -> anchor owners
        for (int x = 2; x <= side[s].count; ++x)
            hosted[side[s].fv[static_cast<std::size_t>(x)]].push_back(x);
        for (const auto& [edge_c, owners] : hosted) {
            for (std::size_t k = 0; k < owners.size(); ++k) {
                char kind = (s == 0) ? 's' : 'r';
                int x = owners[k];
                Scalar f = options.fraction
                               ? options.fraction(kind, x)
                               : Scalar(static_cast<long>(k + 1),
                                        static_cast<long>(owners.size() + 1));
                if (!(f > 0 && f < 1)) throw TowerGeometryError("anchor fraction outside (0,1)");
                side[s].frac[static_cast<std::size_t>(x)] = f;
            }
        }
    }

    auto ycoord = [](const Point& p) { return p.y; };
    auto anchor_point = [&](int s, int x) -> Point {
        int other = 1 - s;
        int c = side[s].fv[static_cast<std::size_t>(x)];
        const Point& top = *side[other].pts[static_cast<std::size_t>(c - 1)];
        const Point& bot = *side[other].pts[static_cast<std::size_t>(c)];
        Scalar f = side[s].frac[static_cast<std::size_t>(x)];
        return top + (bot - top) * f;
    };

    auto place = [&](int s) {
        int other = 1 - s;
        int x = side[s].next;

        bool have_ub = false, have_lb = false;
        Scalar ub(0), lb(0);
        auto add_ub = [&](const Scalar& v) {
            if (!have_ub || v < ub) { ub = v; have_ub = true; }
        };
        auto add_lb = [&](const Scalar& v) {
            if (!have_lb || v > lb) { lb = v; have_lb = true; }
        };

        add_ub(ycoord(*side[s].pts[static_cast<std::size_t>(x - 1)]));
        // descent of this side's next anchor, whose ray passes through x
        if (x + 1 <= side[s].count) {
            int c = side[s].fv[static_cast<std::size_t>(x + 1)];
            if (side[other].next > c) add_ub(ycoord(anchor_point(s, x + 1)));
            else if (side[other].next > c - 1)
                add_ub(ycoord(*side[other].pts[static_cast<std::size_t>(c - 1)]));
        }
        // completing the edge (x-1, x) hosting anchors of the other chain
        for (int z = 2; z <= side[other].count; ++z) {
            int c = side[other].fv[static_cast<std::size_t>(z)];
            const Scalar& f = side[other].frac[static_cast<std::size_t>(z)];
            if (c == x && side[other].pts[static_cast<std::size_t>(z - 1)]) {
                Scalar ytop = ycoord(*side[s].pts[static_cast<std::size_t>(x - 1)]);
                Scalar yray = ycoord(*side[other].pts[static_cast<std::size_t>(z - 1)]);
                add_lb(ytop - (ytop - yray) / f);
            }
            // becoming the upper endpoint of the next edge
            if (c == x + 1 && side[other].pts[static_cast<std::size_t>(z - 1)]) {
                add_lb(ycoord(*side[other].pts[static_cast<std::size_t>(z - 1)]));
            }
        }

        if (have_lb && !(lb < ub)) throw TowerGeometryError("height interval pinched");
        Scalar y = have_lb ? simplest_rational_between(lb, ub)
                           : simplest_rational_between(ub - 2, ub);
        if (options.drop_side == s && options.drop_index == x) {
            y -= options.drop_amount;
            if (have_lb && !(y > lb)) throw TowerGeometryError("extension conflicts with anchors");
        }

        Point placed;
        if (x == 1) {
            // on the fixed apex ray; dir.y = -1, so the parameter equals -y
            placed = Point(side[s].first_dir.x * -y, y);
        } else {
            Point s_pt = anchor_point(s, x);
            const Point& prev = *side[s].pts[static_cast<std::size_t>(x - 1)];
            if (!(s_pt.y > prev.y)) throw TowerGeometryError("anchor ray does not descend");
            Scalar t = (s_pt.y - y) / (s_pt.y - prev.y);
            placed = s_pt + (prev - s_pt) * t;
            side[s].anchors[static_cast<std::size_t>(x)] = s_pt;
        }
        side[s].pts[static_cast<std::size_t>(x)] = placed;
        ++side[s].next;
    };

    while (side[0].next <= m || side[1].next <= n) {
        bool progressed = false;
        for (int s = 0; s < 2 && !progressed; ++s) {
            int x = side[s].next;
            if (x > side[s].count) continue;
            int c = (x == 1) ? 0 : side[s].fv[static_cast<std::size_t>(x)];
            if (side[1 - s].next > c) {
                place(s);
                progressed = true;
            }
        }
        if (!progressed) throw TowerGeometryError("placement deadlock");
    }

    TowerBuild out;
    out.apex = Point(0, 0);
    for (int x = 1; x <= m; ++x) out.upper.push_back(*side[0].pts[static_cast<std::size_t>(x)]);
    for (int x = 1; x <= n; ++x) out.lower.push_back(*side[1].pts[static_cast<std::size_t>(x)]);
    out.s_points = side[0].anchors;
    out.r_points = side[1].anchors;
    out.s_edge.assign(static_cast<std::size_t>(m) + 1, 0);
    out.r_edge.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 2; x <= m; ++x) out.s_edge[static_cast<std::size_t>(x)] = side[0].fv[static_cast<std::size_t>(x)];
    for (int x = 2; x <= n; ++x) out.r_edge[static_cast<std::size_t>(x)] = side[1].fv[static_cast<std::size_t>(x)];
    return out;
}

Polygon reconstruct_tower(const TowerInput& input) {
    std::vector<std::pair<int, int>> aug = input.cross_edges;
    aug.emplace_back(input.upper_count - 1, input.lower_count - 1);
    if (auto violation = strong_ordering(input.upper_count, input.lower_count, aug))
        throw NotStronglyOrderedError(*violation);

    // connectivity over the augmented bipartite graph
    {
        int m = input.upper_count, n = input.lower_count;
        std::vector<std::vector<int>> nbr(static_cast<std::size_t>(m + n));
        for (const auto& [u, w] : aug) {
            nbr[static_cast<std::size_t>(u)].push_back(m + w);
            nbr[static_cast<std::size_t>(m + w)].push_back(u);
        }
        std::vector<bool> seen(static_cast<std::size_t>(m + n), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int visited = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++visited;
            for (int w : nbr[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        if (visited != m + n) throw DisconnectedError();
    }

    TowerBuild build = build_tower(input);
    Polygon poly = build.polygon();
    ValidationReport report = validate_polygon(poly);
    if (!report.ok()) throw TowerGeometryError("constructed tower is not simple: " + report.message);
    return poly;
}

}  // namespace pseudotri
