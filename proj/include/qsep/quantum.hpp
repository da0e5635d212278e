#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsep/distribution.hpp"

namespace qsep {

/// Thrown when a custom measurement phase makes a probability denominator
/// vanish. Cannot occur for the canonical phases.
struct DegeneratePhases : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact rational, used for measurement phases so that phase differences and
/// probability arguments stay exact until the final sin^2 evaluation.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0

    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational operator-(const Rational& other) const;

    /// Best rational approximation with denominator <= max_den (continued
    /// fractions). Exact for values that came from such a rational.
    static Rational from_double(double x, std::int64_t max_den = 1'000'000);

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Phase offsets alpha_{2n-1} = -(n-1)/N and beta_{2n} = -(2n-1)/(2N),
/// n = 1..N. All lie in (-1, 0].
std::pair<std::vector<Rational>, std::vector<Rational>> canonical_phases(int settings);

/// Two-party measurement scenario: N Fourier-basis settings per site on a
/// D-dimensional system, shared state of Schmidt rank R <= D (equal
/// coefficients 1/sqrt(R), standard-basis tail for outcomes >= R).
struct QuantumScenario {
    int settings = 2;  // N
    int dimension = 2; // D
    int rank = 2;      // R
    std::vector<Rational> alphas; // one per Alice setting, index n-1 for A_{2n-1}
    std::vector<Rational> betas;  // one per Bob setting, index n-1 for B_{2n}

    static QuantumScenario canonical(int settings, int dimension, int rank);

    const Rational& alpha(int alice_index) const; // by odd label index
    const Rational& beta(int bob_index) const;    // by even label index

    void validate() const;
};

/// Closed-form joint probability p(a,b | A_n, B_m) for the three adjacent
/// pair classes used in chained expressions: (2k-1,2k), (2k+1,2k) and (1,2N).
/// Zero whenever a >= R or b >= R. Throws std::invalid_argument for a
/// non-adjacent pair and DegeneratePhases when custom phases put a zero (or
/// a sine below degenerate_sine_threshold) in the denominator.
double joint_probability_closed(const QuantumScenario& sc, int alice_index, int bob_index,
                                int a, int b);

/// Independent check of the closed form: assembles both measurement kets and
/// takes the squared inner product with the Schmidt expansion directly.
/// Supports arbitrary (possibly non-adjacent) pairs.
double joint_probability_oracle(const QuantumScenario& sc, int alice_index, int bob_index,
                                int a, int b);

/// Full D x D table from the closed form.
JointDistribution joint_distribution_closed(const QuantumScenario& sc, int alice_index,
                                            int bob_index);

/// Full D x D table from the inner-product route.
JointDistribution joint_distribution_oracle(const QuantumScenario& sc, int alice_index,
                                            int bob_index);

/// Distribution of the correlation variable c = [a - b]_R under the canonical
/// scenario: p_R(c) = sin^2(pi/2N) / (R^2 sin^2[(pi/R)(c + 1/2N)]).
struct CorrelationMarginal {
    int rank = 0;     // R
    int settings = 0; // N
    std::vector<double> values; // p_R(c) for c = 0..R-1

    /// Periodic lookup, p_R(c) = p_R(c mod R); accepts negative c.
    double at(std::int64_t c) const;
};

CorrelationMarginal correlation_marginal(int rank, int settings);

/// Mean correlation: sum_{c=0}^{R-1} c p_R(c).
double correlation_mean(int rank, int settings);

} // namespace qsep
