#include "qsep/quantum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "qsep/tolerances.hpp"

namespace qsep {

namespace {

constexpr double pi = std::numbers::pi;

/// sin(pi * num / den) with the argument reduced to [0, pi) first, so the
/// result is nonnegative and loses no precision to large angles. sin^2 of the
/// original argument equals the square of this.
double sin_pi_ratio_folded(std::int64_t num, std::int64_t den) {
    std::int64_t r = num % den;
    if (r < 0) {
        r += den;
    }
    return std::sin(pi * static_cast<double>(r) / static_cast<double>(den));
}

bool is_adjacent(int settings, int alice_index, int bob_index) {
    return bob_index == alice_index + 1 || bob_index == alice_index - 1 ||
           (alice_index == 1 && bob_index == 2 * settings);
}

void check_outcomes(const QuantumScenario& sc, int a, int b) {
    if (a < 0 || a >= sc.dimension || b < 0 || b >= sc.dimension) {
        throw std::out_of_range("joint probability: outcome outside [0, D)");
    }
}

} // namespace

Rational::Rational(std::int64_t num_, std::int64_t den_) : num(num_), den(den_) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator-(const Rational& other) const {
    const std::int64_t g = std::gcd(den, other.den);
    const std::int64_t scale = other.den / g;
    return {num * scale - other.num * (den / g), den * scale};
}

Rational Rational::from_double(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("Rational::from_double: non-finite input");
    }
    if (max_den < 1) {
        throw std::invalid_argument("Rational::from_double: max_den < 1");
    }
    const bool negative = x < 0;
    const double y = negative ? -x : x;

    // Continued-fraction convergents h/k of y, stopping before the
    // denominator exceeds max_den or once the convergent reproduces y.
    std::int64_t h_prev = 0, k_prev = 1; // seed convergent h_{-2}/k_{-2}
    std::int64_t h = 1, k = 0;           // seed convergent h_{-1}/k_{-1}
    double v = y;
    for (int i = 0; i < 64; ++i) {
        const double fl = std::floor(v);
        if (fl >= 9.2e18) {
            break;
        }
        const std::int64_t a = static_cast<std::int64_t>(fl);
        if (k > 0 && a > (max_den - k_prev) / k) {
            break; // next denominator would exceed max_den
        }
        const std::int64_t h_next = a * h + h_prev;
        const std::int64_t k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        if (std::abs(static_cast<double>(h) / static_cast<double>(k) - y) <
            1e-12 / static_cast<double>(k)) {
            break;
        }
        const double rem = v - fl;
        if (rem <= 1e-15) {
            break;
        }
        v = 1.0 / rem;
    }
    if (k <= 0) {
        throw std::invalid_argument("Rational::from_double: magnitude too large");
    }
    return {negative ? -h : h, k};
}

std::pair<std::vector<Rational>, std::vector<Rational>> canonical_phases(int settings) {
    if (settings < 1) {
        throw std::invalid_argument("canonical_phases: need at least 1 setting");
    }
    std::vector<Rational> alphas;
    std::vector<Rational> betas;
    alphas.reserve(settings);
    betas.reserve(settings);
    for (int n = 1; n <= settings; ++n) {
        alphas.emplace_back(-(n - 1), settings);
        betas.emplace_back(-(2 * n - 1), 2 * settings);
    }
    return {std::move(alphas), std::move(betas)};
}

QuantumScenario QuantumScenario::canonical(int settings, int dimension, int rank) {
    QuantumScenario sc;
    sc.settings = settings;
    sc.dimension = dimension;
    sc.rank = rank;
    if (settings >= 1) {
        auto [alphas, betas] = canonical_phases(settings);
        sc.alphas = std::move(alphas);
        sc.betas = std::move(betas);
    }
    sc.validate();
    return sc;
}

const Rational& QuantumScenario::alpha(int alice_index) const {
    if (alice_index < 1 || alice_index % 2 == 0 || alice_index > 2 * settings - 1) {
        throw std::out_of_range("alpha: scenario has no Alice observable A" +
                                std::to_string(alice_index));
    }
    return alphas[(alice_index - 1) / 2];
}

const Rational& QuantumScenario::beta(int bob_index) const {
    if (bob_index < 2 || bob_index % 2 != 0 || bob_index > 2 * settings) {
        throw std::out_of_range("beta: scenario has no Bob observable B" +
                                std::to_string(bob_index));
    }
    return betas[bob_index / 2 - 1];
}

void QuantumScenario::validate() const {
    if (settings < 2) {
        throw std::invalid_argument("QuantumScenario: need at least 2 settings per site");
    }
    if (dimension < 2) {
        throw std::invalid_argument("QuantumScenario: need dimension >= 2");
    }
    if (rank < 2 || rank > dimension) {
        throw std::invalid_argument("QuantumScenario: Schmidt rank must lie in [2, dimension]");
    }
    if (alphas.size() != static_cast<std::size_t>(settings) ||
        betas.size() != static_cast<std::size_t>(settings)) {
        throw std::invalid_argument("QuantumScenario: need one phase per setting on each site");
    }
}

double joint_probability_closed(const QuantumScenario& sc, int alice_index, int bob_index,
                                int a, int b) {
    sc.validate();
    check_outcomes(sc, a, b);
    if (!is_adjacent(sc.settings, alice_index, bob_index)) {
        throw std::invalid_argument("joint_probability_closed: pair (A" +
                                    std::to_string(alice_index) + ", B" +
                                    std::to_string(bob_index) + ") is not adjacent in the chain");
    }
    const Rational diff = sc.alpha(alice_index) - sc.beta(bob_index);
    if (a >= sc.rank || b >= sc.rank) {
        return 0.0;
    }
    // p(a,b) = g_1(0) / g_R(a-b) with g_X(x) = X^3 sin^2[(pi/X)(x + diff)].
    const double num_sin = sin_pi_ratio_folded(diff.num, diff.den);
    const std::int64_t arg_num = static_cast<std::int64_t>(a - b) * diff.den + diff.num;
    const std::int64_t arg_den = diff.den * sc.rank;
    std::int64_t folded = arg_num % arg_den;
    if (folded < 0) {
        folded += arg_den;
    }
    if (folded == 0) {
        throw DegeneratePhases("joint_probability_closed: phases make g_R(" +
                               std::to_string(a - b) + ") vanish for pair (A" +
                               std::to_string(alice_index) + ", B" + std::to_string(bob_index) +
                               ")");
    }
    const double den_sin = sin_pi_ratio_folded(folded, arg_den);
    if (std::abs(den_sin) < degenerate_sine_threshold) {
        throw DegeneratePhases("joint_probability_closed: phases make g_R(" +
                               std::to_string(a - b) + ") nearly vanish for pair (A" +
                               std::to_string(alice_index) + ", B" + std::to_string(bob_index) +
                               ")");
    }
    const double r3 = static_cast<double>(sc.rank) * sc.rank * sc.rank;
    return (num_sin * num_sin) / (r3 * den_sin * den_sin);
}

double joint_probability_oracle(const QuantumScenario& sc, int alice_index, int bob_index,
                                int a, int b) {
    sc.validate();
    check_outcomes(sc, a, b);
    const double alpha = sc.alpha(alice_index).value();
    const double beta = sc.beta(bob_index).value();
    const int r = sc.rank;
    const double root_r = std::sqrt(static_cast<double>(r));
    using cd = std::complex<double>;

    // Measurement kets in the computational basis. Outcomes below R live in
    // the Fourier basis of the state's support; outcomes at or above R are
    // computational-basis vectors orthogonal to the support.
    std::vector<cd> ket_a(sc.dimension, cd{0.0, 0.0});
    std::vector<cd> ket_b(sc.dimension, cd{0.0, 0.0});
    if (a < r) {
        for (int j = 0; j < r; ++j) {
            const double phase = 2.0 * pi * j * (a + alpha) / r;
            ket_a[j] = std::polar(1.0 / root_r, phase);
        }
    } else {
        ket_a[a] = cd{1.0, 0.0};
    }
    if (b < r) {
        for (int j = 0; j < r; ++j) {
            const double phase = -2.0 * pi * j * (b + beta) / r;
            ket_b[j] = std::polar(1.0 / root_r, phase);
        }
    } else {
        ket_b[b] = cd{1.0, 0.0};
    }

    // <a| x <b| applied to (1/sqrt(R)) sum_j |jj>.
    cd amplitude{0.0, 0.0};
    for (int j = 0; j < r; ++j) {
        amplitude += std::conj(ket_a[j]) * std::conj(ket_b[j]);
    }
    amplitude /= root_r;
    return std::norm(amplitude);
}

namespace {

template <typename Prob>
JointDistribution assemble(const QuantumScenario& sc, int alice_index, int bob_index,
                           Prob&& prob) {
    const int d = sc.dimension;
    JointDistribution dist{d, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            dist.at(a, b) = prob(sc, alice_index, bob_index, a, b);
        }
    }
    dist.validate();
    return dist;
}

} // namespace

JointDistribution joint_distribution_closed(const QuantumScenario& sc, int alice_index,
                                            int bob_index) {
    return assemble(sc, alice_index, bob_index,
                    [](const QuantumScenario& s, int n, int m, int a, int b) {
                        return joint_probability_closed(s, n, m, a, b);
                    });
}

JointDistribution joint_distribution_oracle(const QuantumScenario& sc, int alice_index,
                                            int bob_index) {
    return assemble(sc, alice_index, bob_index,
                    [](const QuantumScenario& s, int n, int m, int a, int b) {
                        return joint_probability_oracle(s, n, m, a, b);
                    });
}

double CorrelationMarginal::at(std::int64_t c) const {
    std::int64_t m = c % rank;
    if (m < 0) {
        m += rank;
    }
    return values[static_cast<std::size_t>(m)];
}

CorrelationMarginal correlation_marginal(int rank, int settings) {
    if (rank < 2) {
        throw std::invalid_argument("correlation_marginal: need rank >= 2");
    }
    if (settings < 2) {
        throw std::invalid_argument("correlation_marginal: need settings >= 2");
    }
    CorrelationMarginal cm;
    cm.rank = rank;
    cm.settings = settings;
    cm.values.reserve(rank);
    const double num_sin = sin_pi_ratio_folded(1, 2 * static_cast<std::int64_t>(settings));
    const double r2 = static_cast<double>(rank) * rank;
    for (int c = 0; c < rank; ++c) {
        // (pi/R)(c + 1/2N) = pi (2Nc + 1) / (2NR), already inside [0, pi).
        const double den_sin = sin_pi_ratio_folded(
            2 * static_cast<std::int64_t>(settings) * c + 1,
            2 * static_cast<std::int64_t>(settings) * rank);
        cm.values.push_back((num_sin * num_sin) / (r2 * den_sin * den_sin));
    }
    return cm;
}

double correlation_mean(int rank, int settings) {
    const CorrelationMarginal cm = correlation_marginal(rank, settings);
    double mean = 0.0;
    for (int c = 0; c < rank; ++c) {
        mean += c * cm.values[static_cast<std::size_t>(c)];
    }
    return mean;
}

} // namespace qsep
