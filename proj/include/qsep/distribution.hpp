#pragma once

#include <cstdint>
#include <vector>

#include "qsep/residue.hpp"

namespace qsep {

/// D x D joint outcome probability table p(a,b) for one observable pair,
/// row index a = Alice outcome, column index b = Bob outcome.
struct JointDistribution {
    int outcomes = 0;      // D
    std::vector<double> p; // row-major, size D*D

    JointDistribution() = default;
    JointDistribution(int outcomes, std::vector<double> table);

    double at(int a, int b) const { return p[static_cast<std::size_t>(a) * outcomes + b]; }
    double& at(int a, int b) { return p[static_cast<std::size_t>(a) * outcomes + b]; }

    static JointDistribution uniform(int outcomes);
    static JointDistribution point_mass(int outcomes, int a, int b);

    /// Throws std::invalid_argument if an entry is below the negative
    /// tolerance or the total misses 1 by more than the sum tolerance.
    /// Entries in (-1e-12, 0) are treated as rounding noise, not errors.
    void validate() const;
};

/// Term direction: S(A,B) averages d(a,b); S(B,A) averages d(b,a).
enum class Direction { AliceToBob, BobToAlice };

/// Statistical quasi-separation: mean quasi-distance over the joint table,
/// in the given direction. Result lies in [0, s_max].
double quasi_separation(const JointDistribution& dist, const QuasiDistanceSpec& spec,
                        Direction direction);

/// Exact integer ratio num/den with den > 0.
struct ExactRatio {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

/// S_r, the quasi-separation of the uniform (white-noise) distribution, as the
/// exact ratio [ (sum_f n(f))^2 - sum_f n(f)^2 ] / (2D), where n(f) counts
/// outcomes x with f(x) ≡ f (mod D).
ExactRatio white_noise_separation_exact(const QuasiDistanceSpec& spec);

/// S_r as a double: (D-1)/2 for the linear map, (D-1)/D for the indicator map.
double white_noise_separation(const QuasiDistanceSpec& spec);

/// Scaled quasi-separation for white noise, S_r / s_max, in [0,1].
/// Throws std::domain_error for a degenerate spec with s_max == 0.
double ssr(const QuasiDistanceSpec& spec);

} // namespace qsep
