#pragma once

#include <cstdint>

#include <pseudotri/geometry.hpp>

// Deterministic splitmix64 stream for test inputs; independent of the
// library's generator module so oracle tests stay self-contained.
class test_rng {
public:
    explicit test_rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    long small_int(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    pseudotri::Scalar scalar() {
        long num = small_int(-400, 400);
        long den = small_int(1, 20);
        return pseudotri::make_scalar(num, den);
    }

    pseudotri::Scalar scalar_positive() {
        long num = small_int(1, 400);
        long den = small_int(1, 20);
        return pseudotri::make_scalar(num, den);
    }

    pseudotri::Point point() { return {scalar(), scalar()}; }

    pseudotri::Point nonzero_vector() {
        for (;;) {
            pseudotri::Point v = point();
            if (!(v.x == 0 && v.y == 0)) return v;
        }
    }

private:
    std::uint64_t state_;
};
