#pragma once

namespace qsep {

/// Numeric tolerances used across the library and its verification suites.
/// Exact-integer code paths (residues, strategy enumeration) use none of
/// these; they apply to floating-point identities only.
struct Tolerances {
    double identity = 1e-12;    // algebraic identities, normalization sums
    double cross_path = 1e-10;  // closed-form vs generic table evaluation
    double table = 5e-5;        // regression against published 4-decimal values
};

inline constexpr Tolerances default_tolerances{};

// Probability-table validation thresholds.
inline constexpr double distribution_sum_tolerance = 1e-9;
inline constexpr double distribution_negative_tolerance = 1e-12;

// Custom measurement phases are rejected when a probability denominator's
// sine falls below this in magnitude; the canonical phases stay well above
// it for every settings/rank combination the library exposes.
inline constexpr double degenerate_sine_threshold = 1e-9;

} // namespace qsep
