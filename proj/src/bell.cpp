#include "qsep/bell.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsep/tolerances.hpp"

namespace qsep {

namespace {

constexpr double pi = std::numbers::pi;
// Catalan's constant, sum (-1)^k / (2k+1)^2.
constexpr double catalan = 0.9159655941772190150546035149323841107741;

} // namespace

PairProvider quantum_provider(const QuantumScenario& sc) {
    return [sc](const ObservableLabel& alice, const ObservableLabel& bob) {
        return joint_distribution_closed(sc, alice.index, bob.index);
    };
}

PairProvider oracle_provider(const QuantumScenario& sc) {
    return [sc](const ObservableLabel& alice, const ObservableLabel& bob) {
        return joint_distribution_oracle(sc, alice.index, bob.index);
    };
}

PairProvider white_noise_provider(int dimension) {
    return [dimension](const ObservableLabel&, const ObservableLabel&) {
        return JointDistribution::uniform(dimension);
    };
}

PairProvider model_provider(const FullJointModel& model) {
    return [model](const ObservableLabel& alice, const ObservableLabel& bob) {
        return pair_marginal(model, alice, bob);
    };
}

PairProvider strategy_provider(const DeterministicStrategy& strategy) {
    return [model = FullJointModel::deterministic(strategy)](const ObservableLabel& alice,
                                                             const ObservableLabel& bob) {
        return pair_marginal(model, alice, bob);
    };
}

namespace {

/// Physical (alice, bob) pair and traversal direction of one term.
struct OrientedTerm {
    ObservableLabel alice;
    ObservableLabel bob;
    Direction direction;
};

OrientedTerm orient(const BellTerm& term) {
    if (term.first.site == term.second.site) {
        throw std::invalid_argument("evaluate: term S(" + term.first.name() + "," +
                                    term.second.name() + ") pairs two observables of one site");
    }
    if (term.first.site == Site::Alice) {
        return {term.first, term.second, Direction::AliceToBob};
    }
    return {term.second, term.first, Direction::BobToAlice};
}

} // namespace

std::vector<double> term_values(const BellExpression& expr, const PairProvider& provider,
                                const QuasiDistanceSpec& spec) {
    std::vector<double> values;
    values.reserve(expr.terms.size());
    for (const BellTerm& term : expr.terms) {
        const OrientedTerm ot = orient(term);
        const JointDistribution table = provider(ot.alice, ot.bob);
        values.push_back(quasi_separation(table, spec, ot.direction));
    }
    return values;
}

double evaluate(const BellExpression& expr, const PairProvider& provider,
                const QuasiDistanceSpec& spec) {
    const std::vector<double> values = term_values(expr, provider, spec);
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        total += expr.terms[i].sign * values[i];
    }
    return total;
}

double xi_type1(int settings, int dimension) {
    if (settings < 2) {
        throw std::invalid_argument("xi_type1: need settings >= 2");
    }
    if (dimension < 2) {
        throw std::invalid_argument("xi_type1: need dimension >= 2");
    }
    const double mean = correlation_mean(dimension, settings);
    return 1.0 - 2.0 * settings * mean / (dimension - 1.0);
}

double bell_quantum_type1(int settings, int dimension) {
    return -(dimension - 1.0) * xi_type1(settings, dimension);
}

double xi_prime_type2(int settings, int rank) {
    const CorrelationMarginal cm = correlation_marginal(rank, settings);
    return ((1.0 - cm.at(-1)) - (2.0 * settings - 1.0) * (1.0 - cm.at(0))) / rank;
}

double bell_quantum_type2(int settings, int dimension, int rank) {
    if (rank > dimension) {
        throw std::invalid_argument("bell_quantum_type2: rank exceeds dimension");
    }
    return -static_cast<double>(dimension) * xi_prime_type2(settings, rank);
}

double bell_white_noise(OutcomeMapKind kind, int settings, int dimension) {
    if (settings < 2) {
        throw std::invalid_argument("bell_white_noise: need settings >= 2");
    }
    const QuasiDistanceSpec spec = QuasiDistanceSpec::of_kind(kind, dimension);
    // Chained expression: 2N-1 positive terms, 1 negative.
    const double net_terms = 2.0 * (settings - 1.0);
    return net_terms * white_noise_separation(spec);
}

void NoisyStateModel::validate() const {
    scenario.validate();
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("NoisyStateModel: visibility outside [0, 1]");
    }
}

double noisy_bell(const BellExpression& expr, const QuantumScenario& sc,
                  const QuasiDistanceSpec& spec, double visibility) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw std::invalid_argument("noisy_bell: visibility outside [0, 1]");
    }
    if (spec.modulus() != sc.dimension) {
        throw std::invalid_argument("noisy_bell: spec modulus does not match scenario dimension");
    }
    const double quantum = evaluate(expr, quantum_provider(sc), spec);
    const double noise = evaluate(expr, white_noise_provider(sc.dimension), spec);
    return visibility * quantum + (1.0 - visibility) * noise;
}

double critical_visibility(double quantum_value, double noise_value) {
    if (noise_value <= 0.0) {
        throw std::invalid_argument("critical_visibility: noise value must be positive");
    }
    if (quantum_value >= 0.0) {
        throw NoViolation("critical_visibility: quantum value " +
                          std::to_string(quantum_value) + " does not violate the bound");
    }
    return noise_value / (noise_value - quantum_value);
}

double critical_visibility_type1(int settings, int dimension) {
    const double xi = xi_type1(settings, dimension);
    if (xi <= 0.0) {
        throw NoViolation("critical_visibility_type1: no violation at N=" +
                          std::to_string(settings) + ", D=" + std::to_string(dimension));
    }
    return 1.0 / (1.0 + xi / (settings - 1.0));
}

double critical_visibility_type2(int settings, int dimension, int rank) {
    if (rank > dimension) {
        throw std::invalid_argument("critical_visibility_type2: rank exceeds dimension");
    }
    const double xi = xi_prime_type2(settings, rank);
    if (xi <= 0.0) {
        throw NoViolation("critical_visibility_type2: no violation at N=" +
                          std::to_string(settings) + ", R=" + std::to_string(rank));
    }
    const double d = dimension;
    return 1.0 / (1.0 + (d * d / (2.0 * (d - 1.0))) * xi / (settings - 1.0));
}

double asymptote_type1() { return pi * pi / (16.0 * catalan); }

double xi_type1_large_n(int settings, int dimension) {
    if (settings < 2) {
        throw std::invalid_argument("xi_type1_large_n: need settings >= 2");
    }
    if (dimension < 2) {
        throw std::invalid_argument("xi_type1_large_n: need dimension >= 2");
    }
    const double d = dimension;
    double sum = 0.0;
    for (int x = 1; x < dimension; ++x) {
        const double s = std::sin(pi * x / d);
        sum += x / (d * d * s * s);
    }
    return 1.0 - (pi * pi / (2.0 * (d - 1.0))) * sum / settings;
}

double xi_prime_type2_large_n(int settings, int rank) {
    if (settings < 2) {
        throw std::invalid_argument("xi_prime_type2_large_n: need settings >= 2");
    }
    if (rank < 2) {
        throw std::invalid_argument("xi_prime_type2_large_n: need rank >= 2");
    }
    const double r = rank;
    double constant = 0.0;
    double slope = 0.0;
    for (int x = 1; x < rank; ++x) {
        const double s = std::sin(pi * x / r);
        constant += std::cos(pi * x / r) / (r * r * r * r * s * s * s);
        slope += 1.0 / (r * r * r * s * s);
    }
    return 1.0 / r + (pi * pi * pi / 2.0) * constant - (pi * pi / 2.0) * slope / settings;
}

double cglmp_standard_value(int dimension) {
    const QuantumScenario sc = QuantumScenario::canonical(2, dimension, dimension);
    const double i2q = evaluate(quadrangle(), quantum_provider(sc),
                                QuasiDistanceSpec::type_i(dimension));
    return 2.0 - 2.0 / (dimension - 1.0) * i2q;
}

VisibilityReport scenario_report(OutcomeMapKind kind, int settings, int dimension, int rank) {
    if (kind == OutcomeMapKind::Custom) {
        throw std::invalid_argument("scenario_report: custom outcome maps have no noise model "
                                    "shortcut; use evaluate() directly");
    }
    const QuasiDistanceSpec spec = QuasiDistanceSpec::of_kind(kind, dimension);
    const QuantumScenario sc = QuantumScenario::canonical(settings, dimension, rank);
    const BellExpression expr = chained(settings);

    VisibilityReport report;
    if (kind == OutcomeMapKind::TypeII) {
        report.quantum_value = bell_quantum_type2(settings, dimension, rank);
    } else if (rank == dimension) {
        report.quantum_value = bell_quantum_type1(settings, dimension);
    } else {
        // Type I below full rank has no closed form; use the probability
        // tables directly.
        report.quantum_value = evaluate(expr, quantum_provider(sc), spec);
    }
    report.noise_value = bell_white_noise(kind, settings, dimension);
    report.ssr = ssr(spec);
    report.s_max = spec.s_max();
    try {
        report.critical = critical_visibility(report.quantum_value, report.noise_value);
    } catch (const NoViolation&) {
        report.critical = std::nullopt;
    }
    return report;
}

} // namespace qsep
