#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsep/bell_expression.hpp"
#include "qsep/distribution.hpp"
#include "qsep/labels.hpp"
#include "qsep/residue.hpp"

namespace qsep {

/// Thrown when a requested enumeration would exceed the strategy budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest number of deterministic strategies minimize_bell will enumerate.
inline constexpr std::uint64_t enumeration_budget = 100'000'000;

/// One outcome assigned to each of the 2N observables. Slot order is
/// (A1, A3, ..., A_{2N-1}, B2, B4, ..., B_{2N}); ranks enumerate assignments
/// as a mixed-radix counter with slot 0 most significant, so rank order is
/// lexicographic order on the assignment.
struct DeterministicStrategy {
    int settings = 0; // N
    int outcomes = 0; // D
    std::vector<int> assignment;

    static DeterministicStrategy from_rank(int settings, int outcomes, std::uint64_t rank);
    std::uint64_t rank() const;

    int slot_of(const ObservableLabel& label) const;
    int outcome_of(const ObservableLabel& label) const;
};

/// Full joint probability distribution over all 2N observables, stored as a
/// weight per deterministic strategy (the extreme points of the local
/// realistic polytope). Weights are nonnegative and sum to 1.
struct FullJointModel {
    int settings = 0; // N
    int outcomes = 0; // D
    std::vector<double> weights; // indexed by strategy rank

    std::uint64_t strategy_count() const;

    static FullJointModel deterministic(const DeterministicStrategy& strategy);
    static FullJointModel uniform(int settings, int outcomes);
    /// Weights drawn uniformly then normalized; fixed seed gives a fixed model.
    static FullJointModel random(int settings, int outcomes, std::uint64_t seed);

    void validate() const;
};

/// D x D marginal table for the ordered pair (x, y): entry (i,j) is the total
/// weight of strategies assigning outcome i to x and j to y. Same-site pairs
/// are allowed; pair_marginal(x, x) is diagonal.
JointDistribution pair_marginal(const FullJointModel& model, const ObservableLabel& x,
                                const ObservableLabel& y);

/// Checks S(X,Y) + S(Y,Z) >= S(X,Z) - slack with each quasi-separation taken
/// from the model's pair marginals in term order. Holds for every model.
bool verify_triangle(const FullJointModel& model, const QuasiDistanceSpec& spec,
                     const ObservableLabel& x, const ObservableLabel& y,
                     const ObservableLabel& z);

/// Expression value for one deterministic strategy: every quasi-separation
/// collapses to a single quasi-distance, so the value is an exact integer.
std::int64_t evaluate_on_strategy(const BellExpression& expr,
                                  const DeterministicStrategy& strategy,
                                  const QuasiDistanceSpec& spec);

struct MinimizeResult {
    std::int64_t minimum = 0;
    DeterministicStrategy argmin;
};

/// Exact minimum of the expression over all D^(2N) deterministic strategies.
/// By linearity in the weights this is also the minimum over all full joint
/// models. Ties break to the lexicographically smallest assignment.
/// Throws BudgetExceeded when D^(2N) > enumeration_budget and
/// std::invalid_argument when the expression references labels beyond N
/// settings per site.
MinimizeResult minimize_bell(const BellExpression& expr, int settings, int outcomes,
                             const QuasiDistanceSpec& spec);

} // namespace qsep
