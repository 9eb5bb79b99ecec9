#pragma once

#include <cstdint>

#include "pseudotri/graph.hpp"
#include "pseudotri/polygon.hpp"

namespace pseudotri {

// Deterministic splitmix64 stream; all sampling goes through this so a seed
// pins the full construction.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct GenSpec {
    int ab_interior = 0;  // vertices strictly inside chain AB
    int ac_interior = 0;
    int bc_interior = 0;
    std::uint64_t seed = 0;
    Scalar scale = Scalar(1);
};

struct GenerationFailedError : std::runtime_error {
    GenerationFailedError() : std::runtime_error("generation failed after bounded resampling") {}
};

// Random pseudo-triangle: three convex corners, three concave side-chains,
// simple, general position, deterministic per spec.
Polygon random_pseudo_triangle(const GenSpec& spec);

// Variant whose apex corner is blocked: no AB-AC chord exists, so only the
// two base corners are detectable (the Property-1 fallback shape).
Polygon random_blocked_pseudo_triangle(const GenSpec& spec);

// Tower polygon: apex plus chains of m and n vertices closed by a single
// base edge (a pseudo-triangle whose third chain has no interior vertex).
Polygon random_tower(int m, int n, std::uint64_t seed);

// Toggles exactly one non-cycle vertex pair, chosen uniformly.
BoundaryGraph mutate_graph(const BoundaryGraph& g, std::uint64_t seed);

// Lens-depth control shared with the scaling tests: depth in (0,1) is the
// fraction of the way towards the centroid that chain bulges may reach.
Polygon random_pseudo_triangle_with_depth(const GenSpec& spec, const Scalar& depth);

}  // namespace pseudotri
