#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace pseudotri {

// Exact rational coordinate type. All geometry in this library is exact;
// mpq_class keeps values in canonical reduced form, so == is structural.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

// Parses "3", "-3/4" or a decimal like "1.25" (converted exactly).
std::optional<Scalar> scalar_from_string(const std::string& text);

// Canonical serialization: "p/q" with q > 1, plain integer otherwise.
std::string scalar_to_string(const Scalar& s);

// Decimal rendering with a fixed number of fractional digits (lossy).
std::string scalar_to_decimal(const Scalar& s, int digits = 6);

int sign_of(const Scalar& s);

// Rational with the smallest denominator strictly between lo and hi
// (lo < hi required). Keeps constructed coordinates short.
Scalar simplest_rational_between(const Scalar& lo, const Scalar& hi);

}  // namespace pseudotri
