#pragma once

#include <string>
#include <vector>

#include "qsep/labels.hpp"

namespace qsep {

/// One signed quasi-separation term sign * S(first, second). The order
/// (first, second) matters: quasi-separations are direction-sensitive.
struct BellTerm {
    int sign = +1; // +1 or -1
    ObservableLabel first;
    ObservableLabel second;

    friend bool operator==(const BellTerm&, const BellTerm&) = default;
};

/// Signed sum of quasi-separations obtained by chaining triangle
/// inequalities. Every expression built by the constructors below has
/// classical lower bound 0 over local-realistic models.
struct BellExpression {
    std::vector<BellTerm> terms;

    int positive_count() const;
    int negative_count() const;
    /// Smallest number of settings per site covering all referenced labels.
    int settings_required() const;

    std::string name() const; // e.g. "S(A1,B2)+S(B2,A3)+S(A3,B4)-S(A1,B4)"

    friend bool operator==(const BellExpression&, const BellExpression&) = default;
};

/// Four-observable closed form:
///   S(A1,B2) + S(B2,A3) + S(A3,B4) - S(A1,B4).
BellExpression quadrangle();

/// Chain over 2N observables:
///   sum_{n<N} [S(A_{2n-1},B_{2n}) + S(B_{2n},A_{2n+1})]
///   + S(A_{2N-1},B_{2N}) - S(A1,B_{2N}).
/// Throws std::invalid_argument for settings < 2. chained(2) == quadrangle().
BellExpression chained(int settings);

/// Concatenation of M independent quadrangle blocks on disjoint labels,
/// block m using (A_{4m-3}, B_{4m-2}, A_{4m-1}, B_{4m}).
BellExpression sum_of_closed_forms(int blocks);

} // namespace qsep
