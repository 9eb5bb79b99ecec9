#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace pseudotri {

// Visibility graph of a polygon boundary: n vertices in Hamiltonian order
// plus the chord set. Cycle edges (i, i+1 mod n) are implicit and always
// count as visible. Adjacency probes are counted for the complexity tests.
class BoundaryGraph {
public:
    BoundaryGraph() = default;
    BoundaryGraph(int n, std::vector<std::pair<int, int>> chords);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& chords() const { return chords_; }

    bool cycle_adjacent(int i, int j) const {
        int d = std::abs(i - j);
        return d == 1 || d == n_ - 1;
    }
    bool has_chord(int i, int j) const {
        ++probes_;
        return chord_set_.count(key(i, j)) > 0;
    }
    // Visibility including the implicit Hamiltonian edges.
    bool sees(int i, int j) const {
        if (i == j) return false;
        if (cycle_adjacent(i, j)) {
            ++probes_;
            return true;
        }
        return has_chord(i, j);
    }

    BoundaryGraph with_chord_toggled(int i, int j) const;

    std::uint64_t probe_count() const { return probes_; }
    void reset_probe_count() const { probes_ = 0; }

    bool operator==(const BoundaryGraph& o) const {
        return n_ == o.n_ && chords_ == o.chords_;
    }
    bool operator!=(const BoundaryGraph& o) const { return !(*this == o); }

private:
    std::uint64_t key(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n_) +
               static_cast<std::uint64_t>(j);
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> chords_;  // canonical: i < j, sorted
    std::unordered_set<std::uint64_t> chord_set_;
    mutable std::uint64_t probes_ = 0;
};

enum class Chain { AB, AC, BC };

struct OutOfChainError : std::runtime_error {
    OutOfChainError() : std::runtime_error("navigation left the side-chain") {}
};

// Corner indices plus the derived side-chain slices. Corners appear in
// Hamiltonian order A..C..B..A; each chain slice includes both corners.
struct ChainLabeling {
    int n = 0;
    int corner_a = -1, corner_b = -1, corner_c = -1;
    std::vector<int> ab;  // A .. B
    std::vector<int> ac;  // A .. C
    std::vector<int> bc;  // B .. C

    // position of each vertex within its chain, -1 when absent
    std::vector<int> pos_ab, pos_ac, pos_bc;

    int alpha() const { return static_cast<int>(ab.size()) - 1; }
    int delta() const { return static_cast<int>(ac.size()) - 1; }
    int bc_last() const { return static_cast<int>(bc.size()) - 1; }

    const std::vector<int>& chain(Chain c) const {
        switch (c) {
            case Chain::AB: return ab;
            case Chain::AC: return ac;
            default: return bc;
        }
    }
    int pos(Chain c, int v) const {
        switch (c) {
            case Chain::AB: return pos_ab[static_cast<std::size_t>(v)];
            case Chain::AC: return pos_ac[static_cast<std::size_t>(v)];
            default: return pos_bc[static_cast<std::size_t>(v)];
        }
    }
    bool on_chain(Chain c, int v) const { return pos(c, v) >= 0; }
    bool is_corner(int v) const { return v == corner_a || v == corner_b || v == corner_c; }

    // chain endpoints in canonical orientation (origin, far corner)
    std::pair<int, int> endpoints(Chain c) const {
        switch (c) {
            case Chain::AB: return {corner_a, corner_b};
            case Chain::AC: return {corner_a, corner_c};
            default: return {corner_b, corner_c};
        }
    }
};

// Builds the labeling from three corner vertices given in Hamiltonian order
// A..C..B..A (corner_a < corner_c < corner_b is not required; positions are
// taken along the cycle).
ChainLabeling make_labeling(int n, int corner_a, int corner_c, int corner_b);

// Ind^origin(v) on the given chain.
int chain_index(const ChainLabeling& lab, Chain chain, int v, int origin);

// Vertex u on the chain with Ind^origin(u) = Ind^origin(v) + offset.
// Throws OutOfChainError when the offset leaves the chain.
int navigate(const ChainLabeling& lab, Chain chain, int v, int origin, int offset);
std::optional<int> try_navigate(const ChainLabeling& lab, Chain chain, int v, int origin,
                                int offset);

// First / last visible vertex of `chain` from u, ordered by Ind^origin.
// u must not be an interior vertex of the target chain.
std::optional<int> first_visible(const BoundaryGraph& g, const ChainLabeling& lab, int u,
                                 Chain chain, int origin);
std::optional<int> last_visible(const BoundaryGraph& g, const ChainLabeling& lab, int u,
                                Chain chain, int origin);

}  // namespace pseudotri
