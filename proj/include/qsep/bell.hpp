#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsep/bell_expression.hpp"
#include "qsep/distribution.hpp"
#include "qsep/lhv.hpp"
#include "qsep/quantum.hpp"
#include "qsep/residue.hpp"

namespace qsep {

/// Thrown by critical-visibility computations when the quantum value does not
/// violate the inequality (I_q >= 0). Never silently mapped to v_c = 1.
struct NoViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Supplies the joint table for a physical (Alice, Bob) observable pair.
/// Implementations may throw for pairs they cannot produce.
using PairProvider =
    std::function<JointDistribution(const ObservableLabel& alice, const ObservableLabel& bob)>;

PairProvider quantum_provider(const QuantumScenario& sc);     // closed form, adjacent pairs
PairProvider oracle_provider(const QuantumScenario& sc);      // inner product, any pair
PairProvider white_noise_provider(int dimension);             // uniform 1/D^2
PairProvider model_provider(const FullJointModel& model);     // local realistic marginals
PairProvider strategy_provider(const DeterministicStrategy&); // single extreme point

/// Generic Bell value: sum of sign * quasi_separation(table, spec, direction)
/// with the direction taken from each term's label order.
double evaluate(const BellExpression& expr, const PairProvider& provider,
                const QuasiDistanceSpec& spec);

/// Per-term quasi-separations (without signs), in term order.
std::vector<double> term_values(const BellExpression& expr, const PairProvider& provider,
                                const QuasiDistanceSpec& spec);

/// xi = 1 - (2N/(D-1)) C_bar_D for the chained type-I expression at R = D.
double xi_type1(int settings, int dimension);

/// Closed-form chained type-I quantum Bell value, -(D-1) xi. Requires R = D.
double bell_quantum_type1(int settings, int dimension);

/// xi'_R = (1/R) [ (1 - p_R(-1)) - (2N-1)(1 - p_R(0)) ]; independent of D.
double xi_prime_type2(int settings, int rank);

/// Closed-form chained type-II quantum Bell value, -D xi'_R, for any R <= D.
double bell_quantum_type2(int settings, int dimension, int rank);

/// White-noise value of the chained expression: (N-1)(D-1) for type I,
/// 2(N-1)(D-1)/D for type II. Equals (N+ - N-) S_r.
double bell_white_noise(OutcomeMapKind kind, int settings, int dimension);

/// Noisy mixture v rho + (1-v) white noise, after Schmidt-rank-R pure state.
struct NoisyStateModel {
    QuantumScenario scenario;
    double visibility = 1.0; // v in [0,1]

    void validate() const;
};

/// Bell value of the noisy state: v I_N(rho) + (1-v) I_N(white noise).
/// Affine in v; zero at v = v_c. Throws std::invalid_argument for v outside
/// [0,1].
double noisy_bell(const BellExpression& expr, const QuantumScenario& sc,
                  const QuasiDistanceSpec& spec, double visibility);

/// v_c = I_r / (I_r - I_q), defined only for a violation (I_q < 0) against
/// positive noise value I_r. Throws NoViolation when I_q >= 0.
double critical_visibility(double quantum_value, double noise_value);

/// Closed form 1/(1 + xi/(N-1)) for chained type I at R = D.
double critical_visibility_type1(int settings, int dimension);

/// Closed form 1/(1 + (D^2/(2(D-1))) xi'_R/(N-1)) for chained type II.
/// Throws NoViolation when xi'_R <= 0.
double critical_visibility_type2(int settings, int dimension, int rank);

/// Large-D limit of the type-I critical visibility at N = 2:
/// pi^2 / (16 * Catalan) ~= 0.67344.
double asymptote_type1();

/// First order in 1/N:
/// xi ~= 1 - (1/N) (pi^2/(2(D-1))) sum_{x=1}^{D-1} x / (D^2 sin^2(pi x/D)).
double xi_type1_large_n(int settings, int dimension);

/// First order in 1/N:
/// xi'_R ~= 1/R + (pi^3/2) sum cos(pi x/R)/(R^4 sin^3(pi x/R))
///          - (1/N) (pi^2/2) sum 1/(R^3 sin^2(pi x/R)).
double xi_prime_type2_large_n(int settings, int rank);

/// Conventional CGLMP value for the canonical N=2, R=D scenario, recovered by
/// rescaling the four type-I quasi-separations by 2/(D-1): equals
/// 2 - (2/(D-1)) I_2q, so D=2 gives 2 sqrt(2).
double cglmp_standard_value(int dimension);

/// Violation summary for one scenario/expression.
struct VisibilityReport {
    double quantum_value = 0.0; // I_q
    double noise_value = 0.0;   // I_r
    std::optional<double> critical; // v_c, absent when there is no violation
    double ssr = 0.0;
    double s_max = 0.0;
};

/// Report for the chained expression with N settings at (D, R), canonical
/// phases. Type I at R < D has no closed form and is evaluated generically
/// over the rank-R probability tables.
VisibilityReport scenario_report(OutcomeMapKind kind, int settings, int dimension, int rank);

} // namespace qsep
