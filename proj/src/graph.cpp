#include "pseudotri/graph.hpp"

namespace pseudotri {

BoundaryGraph::BoundaryGraph(int n, std::vector<std::pair<int, int>> chords) : n_(n) {
    if (n < 3) throw std::invalid_argument("BoundaryGraph: need at least 3 vertices");
    for (auto& [i, j] : chords) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n || i == j) throw std::invalid_argument("BoundaryGraph: chord out of range");
        if (cycle_adjacent(i, j)) throw std::invalid_argument("BoundaryGraph: chord duplicates a cycle edge");
    }
    std::sort(chords.begin(), chords.end());
    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
    chords_ = std::move(chords);
    for (const auto& [i, j] : chords_) chord_set_.insert(key(i, j));
}

BoundaryGraph BoundaryGraph::with_chord_toggled(int i, int j) const {
    if (i > j) std::swap(i, j);
    std::vector<std::pair<int, int>> chords = chords_;
    auto it = std::find(chords.begin(), chords.end(), std::make_pair(i, j));
    if (it == chords.end()) chords.emplace_back(i, j);
    else chords.erase(it);
    return BoundaryGraph(n_, std::move(chords));
}

ChainLabeling make_labeling(int n, int corner_a, int corner_c, int corner_b) {
    ChainLabeling lab;
    lab.n = n;
    lab.corner_a = corner_a;
    lab.corner_b = corner_b;
    lab.corner_c = corner_c;

    auto walk = [n](int from, int to, int step) {
        std::vector<int> out;
        for (int v = from;; v = (v + step + n) % n) {
            out.push_back(v);
            if (v == to) break;
        }
        return out;
    };
    // Hamiltonian order reads A..C..B..A, so AC runs forward from A,
    // BC backward from B, and AB backward from A (through n-1).
    lab.ac = walk(corner_a, corner_c, +1);
    lab.bc = walk(corner_b, corner_c, -1);
    lab.ab = walk(corner_a, corner_b, -1);

    lab.pos_ab.assign(static_cast<std::size_t>(n), -1);
    lab.pos_ac.assign(static_cast<std::size_t>(n), -1);
    lab.pos_bc.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < lab.ab.size(); ++k) lab.pos_ab[static_cast<std::size_t>(lab.ab[k])] = static_cast<int>(k);
    for (std::size_t k = 0; k < lab.ac.size(); ++k) lab.pos_ac[static_cast<std::size_t>(lab.ac[k])] = static_cast<int>(k);
    for (std::size_t k = 0; k < lab.bc.size(); ++k) lab.pos_bc[static_cast<std::size_t>(lab.bc[k])] = static_cast<int>(k);
    return lab;
}

namespace {

int oriented_pos(const ChainLabeling& lab, Chain chain, int v, int origin) {
    int p = lab.pos(chain, v);
    if (p < 0) throw OutOfChainError();
    auto [canonical_origin, far] = lab.endpoints(chain);
    if (origin == canonical_origin) return p;
    if (origin == far) return static_cast<int>(lab.chain(chain).size()) - 1 - p;
    throw std::invalid_argument("origin is not a corner of the chain");
}

}  // namespace

int chain_index(const ChainLabeling& lab, Chain chain, int v, int origin) {
    return oriented_pos(lab, chain, v, origin);
}

std::optional<int> try_navigate(const ChainLabeling& lab, Chain chain, int v, int origin,
                                int offset) {
    int p = oriented_pos(lab, chain, v, origin);
    int q = p + offset;
    int len = static_cast<int>(lab.chain(chain).size());
    if (q < 0 || q >= len) return std::nullopt;
    auto [canonical_origin, far] = lab.endpoints(chain);
    int canonical = (origin == canonical_origin) ? q : len - 1 - q;
    return lab.chain(chain)[static_cast<std::size_t>(canonical)];
}

int navigate(const ChainLabeling& lab, Chain chain, int v, int origin, int offset) {
    auto r = try_navigate(lab, chain, v, origin, offset);
    if (!r) throw OutOfChainError();
    return *r;
}

namespace {

std::optional<int> scan_visible(const BoundaryGraph& g, const ChainLabeling& lab, int u,
                                Chain chain, int origin, bool first) {
    const std::vector<int>& verts = lab.chain(chain);
    int len = static_cast<int>(verts.size());
    auto [canonical_origin, far] = lab.endpoints(chain);
    bool forward = (origin == canonical_origin);
    if (!forward && origin != far) throw std::invalid_argument("origin is not a corner of the chain");

    for (int step = 0; step < len; ++step) {
        int k = first == forward ? step : len - 1 - step;
        int v = verts[static_cast<std::size_t>(k)];
        if (v == u) continue;
        if (g.sees(u, v)) return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> first_visible(const BoundaryGraph& g, const ChainLabeling& lab, int u,
                                 Chain chain, int origin) {
    return scan_visible(g, lab, u, chain, origin, true);
}

std::optional<int> last_visible(const BoundaryGraph& g, const ChainLabeling& lab, int u,
                                Chain chain, int origin) {
    return scan_visible(g, lab, u, chain, origin, false);
}

}  // namespace pseudotri
