#pragma once

#include <array>
#include <optional>
#include <string>

#include "pseudotri/graph.hpp"

namespace pseudotri {

enum class CornerStatus { three_corners, two_corners_tower, invalid };

// Corner detection per the neighbor-pair rule, with the isolated-vertex
// analysis applied when only two candidates show up.
struct CornerReport {
    std::vector<int> candidates;      // vertices whose cycle neighbors see each other
    std::vector<int> hidden_corners;  // vertices isolated after removing cycle edges
    CornerStatus status = CornerStatus::invalid;
};

struct Diagnostic {
    std::string property;
    std::vector<int> witnesses;
    std::string message;
};

struct Verdict {
    bool accepted = true;
    std::vector<Diagnostic> diagnostics;

    static Verdict ok() { return {}; }
    void reject(std::string property, std::vector<int> witnesses, std::string message) {
        accepted = false;
        diagnostics.push_back({std::move(property), std::move(witnesses), std::move(message)});
    }
    void merge(const Verdict& other) {
        accepted = accepted && other.accepted;
        diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                           other.diagnostics.end());
    }
};

// Contiguous run of visible chain positions (canonical orientation:
// AB and AC from A, BC from B). count may disagree with hi-lo+1 on
// invalid inputs; that is what the interval check looks for.
struct ChainRun {
    int lo = -1;
    int hi = -1;
    int count = 0;

    bool empty() const { return count == 0; }
    bool contains(int pos) const { return !empty() && lo <= pos && pos <= hi; }
    bool contiguous() const { return empty() || count == hi - lo + 1; }
};

// Per-vertex visible-position summaries, built in a single scan of the
// chord list plus the cycle edges; no adjacency probes are spent here.
struct VisibilitySummaries {
    std::vector<std::array<ChainRun, 3>> runs;

    static VisibilitySummaries build(const BoundaryGraph& g, const ChainLabeling& lab);

    const ChainRun& run(int v, Chain c) const {
        return runs[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
    }
    // Positions measured from the chain's far corner instead of the origin.
    static int flip(const ChainLabeling& lab, Chain c, int pos) {
        return static_cast<int>(lab.chain(c).size()) - 1 - pos;
    }
};

CornerReport detect_corners(const BoundaryGraph& g);

// Tower interpretation of a two-corner graph (Property 1): one candidate is
// the isolated apex, the other closes the base with its side-chain neighbor.
struct TowerDecomposition {
    int apex = -1;
    int base_corner = -1;
    std::vector<int> upper_chain;  // base side-neighbor .. apex side-neighbor
    std::vector<int> lower_chain;  // base corner, then its pocket arc
    std::vector<std::pair<int, int>> cross_edges;  // indices into the two chains
};

Verdict check_tower_fallback(const BoundaryGraph& g, const CornerReport& report,
                             std::optional<TowerDecomposition>* decomposition = nullptr);

Verdict check_interval_visibility(const BoundaryGraph& g, const ChainLabeling& lab);
Verdict check_first_visible_laws(const BoundaryGraph& g, const ChainLabeling& lab);
Verdict check_tower_substructure(const BoundaryGraph& g, const ChainLabeling& lab);
Verdict check_pocket_conditions(const BoundaryGraph& g, const ChainLabeling& lab);
Verdict check_cross_first_visible(const BoundaryGraph& g, const ChainLabeling& lab);
Verdict check_base_window(const BoundaryGraph& g, const ChainLabeling& lab);
Verdict check_blocking_side(const BoundaryGraph& g, const ChainLabeling& lab);

struct CharacterizeResult {
    Verdict verdict;
    CornerReport corners;
    std::optional<ChainLabeling> labeling;           // set on the three-corner path
    std::optional<TowerDecomposition> tower;         // set on the two-corner path
};

// Full decision procedure: corner detection, then either the tower fallback
// or the three-corner property battery over shared single-scan summaries.
CharacterizeResult characterize(const BoundaryGraph& g);

}  // namespace pseudotri
