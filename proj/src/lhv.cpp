#include "qsep/lhv.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qsep/tolerances.hpp"

namespace qsep {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

void check_shape(int settings, int outcomes) {
    if (settings < 1) {
        throw std::invalid_argument("need at least 1 setting per site");
    }
    if (outcomes < 2) {
        throw std::invalid_argument("need at least 2 outcomes");
    }
    // 2N * log2(D) must fit a 64-bit rank with headroom.
    if (2.0 * settings * std::log2(static_cast<double>(outcomes)) >= 63.0) {
        throw std::invalid_argument("strategy count overflows 64-bit ranks");
    }
}

} // namespace

DeterministicStrategy DeterministicStrategy::from_rank(int settings, int outcomes,
                                                       std::uint64_t rank) {
    check_shape(settings, outcomes);
    const int slots = 2 * settings;
    if (rank >= pow_u64(static_cast<std::uint64_t>(outcomes), slots)) {
        throw std::out_of_range("from_rank: rank exceeds D^(2N)");
    }
    DeterministicStrategy s;
    s.settings = settings;
    s.outcomes = outcomes;
    s.assignment.assign(slots, 0);
    // Slot 0 is the most significant digit.
    for (int slot = slots - 1; slot >= 0; --slot) {
        s.assignment[slot] = static_cast<int>(rank % outcomes);
        rank /= outcomes;
    }
    return s;
}

std::uint64_t DeterministicStrategy::rank() const {
    std::uint64_t r = 0;
    for (int v : assignment) {
        r = r * outcomes + static_cast<std::uint64_t>(v);
    }
    return r;
}

int DeterministicStrategy::slot_of(const ObservableLabel& label) const {
    const int n = label.setting();
    if (n < 1 || n > settings) {
        throw std::invalid_argument("slot_of: " + label.name() + " needs " + std::to_string(n) +
                                    " settings, model has " + std::to_string(settings));
    }
    return label.site == Site::Alice ? n - 1 : settings + n - 1;
}

int DeterministicStrategy::outcome_of(const ObservableLabel& label) const {
    return assignment[slot_of(label)];
}

std::uint64_t FullJointModel::strategy_count() const {
    return pow_u64(static_cast<std::uint64_t>(outcomes), 2 * settings);
}

FullJointModel FullJointModel::deterministic(const DeterministicStrategy& strategy) {
    FullJointModel m;
    m.settings = strategy.settings;
    m.outcomes = strategy.outcomes;
    m.weights.assign(m.strategy_count(), 0.0);
    m.weights[strategy.rank()] = 1.0;
    return m;
}

FullJointModel FullJointModel::uniform(int settings, int outcomes) {
    check_shape(settings, outcomes);
    FullJointModel m;
    m.settings = settings;
    m.outcomes = outcomes;
    const std::uint64_t count = m.strategy_count();
    m.weights.assign(count, 1.0 / static_cast<double>(count));
    return m;
}

FullJointModel FullJointModel::random(int settings, int outcomes, std::uint64_t seed) {
    check_shape(settings, outcomes);
    FullJointModel m;
    m.settings = settings;
    m.outcomes = outcomes;
    const std::uint64_t count = m.strategy_count();
    m.weights.assign(count, 0.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double total = 0.0;
    for (double& w : m.weights) {
        w = unit(rng);
        total += w;
    }
    for (double& w : m.weights) {
        w /= total;
    }
    return m;
}

void FullJointModel::validate() const {
    check_shape(settings, outcomes);
    if (weights.size() != strategy_count()) {
        throw std::invalid_argument("FullJointModel: weight vector size is not D^(2N)");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < -distribution_negative_tolerance) {
            throw std::invalid_argument("FullJointModel: negative weight " + std::to_string(w));
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > distribution_sum_tolerance) {
        throw std::invalid_argument("FullJointModel: total weight " + std::to_string(sum));
    }
}

JointDistribution pair_marginal(const FullJointModel& model, const ObservableLabel& x,
                                const ObservableLabel& y) {
    model.validate();
    DeterministicStrategy probe;
    probe.settings = model.settings;
    probe.outcomes = model.outcomes;
    const int slot_x = probe.slot_of(x);
    const int slot_y = probe.slot_of(y);
    const int slots = 2 * model.settings;
    const int d = model.outcomes;
    // Stride of a slot in the mixed-radix rank (slot 0 most significant).
    const std::uint64_t stride_x = pow_u64(static_cast<std::uint64_t>(d), slots - 1 - slot_x);
    const std::uint64_t stride_y = pow_u64(static_cast<std::uint64_t>(d), slots - 1 - slot_y);
    JointDistribution dist{d, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0)};
    for (std::uint64_t r = 0; r < model.weights.size(); ++r) {
        const double w = model.weights[r];
        if (w == 0.0) {
            continue;
        }
        const int a = static_cast<int>((r / stride_x) % d);
        const int b = static_cast<int>((r / stride_y) % d);
        dist.at(a, b) += w;
    }
    return dist;
}

bool verify_triangle(const FullJointModel& model, const QuasiDistanceSpec& spec,
                     const ObservableLabel& x, const ObservableLabel& y,
                     const ObservableLabel& z) {
    const double sxy = quasi_separation(pair_marginal(model, x, y), spec,
                                        Direction::AliceToBob);
    const double syz = quasi_separation(pair_marginal(model, y, z), spec,
                                        Direction::AliceToBob);
    const double sxz = quasi_separation(pair_marginal(model, x, z), spec,
                                        Direction::AliceToBob);
    return sxy + syz >= sxz - default_tolerances.identity;
}

std::int64_t evaluate_on_strategy(const BellExpression& expr,
                                  const DeterministicStrategy& strategy,
                                  const QuasiDistanceSpec& spec) {
    if (strategy.outcomes != spec.modulus()) {
        throw std::invalid_argument("evaluate_on_strategy: strategy outcomes do not match spec");
    }
    std::int64_t total = 0;
    for (const BellTerm& t : expr.terms) {
        const int u = strategy.outcome_of(t.first);
        const int v = strategy.outcome_of(t.second);
        total += static_cast<std::int64_t>(t.sign) * spec.distance(u, v);
    }
    return total;
}

MinimizeResult minimize_bell(const BellExpression& expr, int settings, int outcomes,
                             const QuasiDistanceSpec& spec) {
    check_shape(settings, outcomes);
    if (expr.settings_required() > settings) {
        throw std::invalid_argument("minimize_bell: expression needs " +
                                    std::to_string(expr.settings_required()) +
                                    " settings per site, model has " + std::to_string(settings));
    }
    if (outcomes != spec.modulus()) {
        throw std::invalid_argument("minimize_bell: outcomes do not match spec modulus");
    }
    const std::uint64_t count =
        pow_u64(static_cast<std::uint64_t>(outcomes), 2 * settings);
    if (count > enumeration_budget) {
        throw BudgetExceeded("minimize_bell: " + std::to_string(count) +
                             " strategies exceed the enumeration budget of " +
                             std::to_string(enumeration_budget));
    }

    // Precompute the slot pair and a D x D signed-distance table per term,
    // then walk the mixed-radix counter in place instead of re-deriving the
    // assignment from each rank.
    const int slots = 2 * settings;
    const int d = outcomes;
    struct CompiledTerm {
        int slot_first;
        int slot_second;
        std::vector<std::int64_t> signed_distance; // d * d
    };
    DeterministicStrategy probe;
    probe.settings = settings;
    probe.outcomes = outcomes;
    std::vector<CompiledTerm> compiled;
    compiled.reserve(expr.terms.size());
    for (const BellTerm& t : expr.terms) {
        CompiledTerm ct;
        ct.slot_first = probe.slot_of(t.first);
        ct.slot_second = probe.slot_of(t.second);
        ct.signed_distance.resize(static_cast<std::size_t>(d) * d);
        for (int u = 0; u < d; ++u) {
            for (int v = 0; v < d; ++v) {
                ct.signed_distance[static_cast<std::size_t>(u) * d + v] =
                    static_cast<std::int64_t>(t.sign) * spec.distance(u, v);
            }
        }
        compiled.push_back(std::move(ct));
    }

    std::vector<int> assignment(slots, 0);
    std::int64_t best = 0;
    std::vector<int> best_assignment;
    bool first = true;
    for (std::uint64_t r = 0; r < count; ++r) {
        std::int64_t value = 0;
        for (const CompiledTerm& ct : compiled) {
            value += ct.signed_distance[static_cast<std::size_t>(assignment[ct.slot_first]) * d +
                                        assignment[ct.slot_second]];
        }
        // Strict < keeps the first (lexicographically smallest) argmin.
        if (first || value < best) {
            best = value;
            best_assignment = assignment;
            first = false;
        }
        // Increment the mixed-radix counter (slot 0 most significant).
        for (int slot = slots - 1; slot >= 0; --slot) {
            if (++assignment[slot] < d) {
                break;
            }
            assignment[slot] = 0;
        }
    }

    MinimizeResult result;
    result.minimum = best;
    result.argmin.settings = settings;
    result.argmin.outcomes = outcomes;
    result.argmin.assignment = std::move(best_assignment);
    return result;
}

} // namespace qsep
