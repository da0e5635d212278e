#include "qsep/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsep/tolerances.hpp"

namespace qsep {

JointDistribution::JointDistribution(int outcomes_, std::vector<double> table)
    : outcomes(outcomes_), p(std::move(table)) {
    if (outcomes < 2) {
        throw std::invalid_argument("JointDistribution: need at least 2 outcomes");
    }
    if (p.size() != static_cast<std::size_t>(outcomes) * outcomes) {
        throw std::invalid_argument("JointDistribution: table size is not D*D");
    }
}

JointDistribution JointDistribution::uniform(int outcomes) {
    const double cell = 1.0 / (static_cast<double>(outcomes) * outcomes);
    return {outcomes, std::vector<double>(static_cast<std::size_t>(outcomes) * outcomes, cell)};
}

JointDistribution JointDistribution::point_mass(int outcomes, int a, int b) {
    if (a < 0 || a >= outcomes || b < 0 || b >= outcomes) {
        throw std::out_of_range("point_mass: outcome outside [0, D)");
    }
    JointDistribution dist{outcomes,
                           std::vector<double>(static_cast<std::size_t>(outcomes) * outcomes, 0.0)};
    dist.at(a, b) = 1.0;
    return dist;
}

void JointDistribution::validate() const {
    double sum = 0.0;
    for (double v : p) {
        if (v < -distribution_negative_tolerance) {
            throw std::invalid_argument("JointDistribution: negative probability " +
                                        std::to_string(v));
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > distribution_sum_tolerance) {
        throw std::invalid_argument("JointDistribution: total probability " + std::to_string(sum));
    }
}

double quasi_separation(const JointDistribution& dist, const QuasiDistanceSpec& spec,
                        Direction direction) {
    if (dist.outcomes != spec.modulus()) {
        throw std::invalid_argument("quasi_separation: distribution has " +
                                    std::to_string(dist.outcomes) + " outcomes, spec modulus is " +
                                    std::to_string(spec.modulus()));
    }
    dist.validate();
    const int d = dist.outcomes;
    double total = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            const double w = std::max(dist.at(a, b), 0.0); // clamp rounding noise
            const int dd = direction == Direction::AliceToBob ? spec.distance(a, b)
                                                              : spec.distance(b, a);
            total += dd * w;
        }
    }
    return total;
}

ExactRatio white_noise_separation_exact(const QuasiDistanceSpec& spec) {
    const int d = spec.modulus();
    // n(f): outcomes with f(x) congruent to f, counted on residues.
    std::vector<std::int64_t> counts(d, 0);
    for (int x = 0; x < d; ++x) {
        counts[residue(spec.map().table[x], d)] += 1;
    }
    std::int64_t total = 0;
    std::int64_t squares = 0;
    for (std::int64_t n : counts) {
        total += n;
        squares += n * n;
    }
    return {total * total - squares, 2 * static_cast<std::int64_t>(d)};
}

double white_noise_separation(const QuasiDistanceSpec& spec) {
    const ExactRatio r = white_noise_separation_exact(spec);
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

double ssr(const QuasiDistanceSpec& spec) {
    if (spec.s_max() == 0) {
        throw std::domain_error("ssr: constant outcome map has s_max = 0");
    }
    const ExactRatio r = white_noise_separation_exact(spec);
    // Single division keeps exact rationals (1/2, 1/D) correctly rounded.
    return static_cast<double>(r.num) / static_cast<double>(r.den * spec.s_max());
}

} // namespace qsep
