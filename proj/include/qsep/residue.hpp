#pragma once

#include <cstdint>
#include <vector>

namespace qsep {

/// Nonnegative residue of x modulo D: the unique r in [0, D) with r ≡ x (mod D).
/// Throws std::invalid_argument for D < 2.
std::int64_t residue(std::int64_t x, std::int64_t modulus);

/// Whether [x+y]_D <= [x]_D + [y]_D. Holds for all integers x, y.
bool check_subadditivity(std::int64_t modulus, std::int64_t x, std::int64_t y);

/// Whether [-x]_D == D - 1 - [x-1]_D. Holds for all integers x.
bool negation_identity(std::int64_t modulus, std::int64_t x);

enum class OutcomeMapKind { TypeI, TypeII, Custom };

/// Integer relabeling f of the D outcomes. Together with a modulus it fixes
/// the quasi-distance d(x,y) = [f(x) - f(y)]_D.
struct OutcomeMap {
    OutcomeMapKind kind = OutcomeMapKind::Custom;
    std::vector<std::int64_t> table; // f(x) for x = 0..D-1

    /// Linear map f(x) = x.
    static OutcomeMap type_i(int outcomes);
    /// Indicator map f(x) = 1 if x == 0, else 0.
    static OutcomeMap type_ii(int outcomes);
    static OutcomeMap custom(std::vector<std::int64_t> table);
};

/// A modulus D >= 2 plus an outcome map, defining the integer-valued,
/// direction-sensitive distance d(x,y) = [f(x) - f(y)]_D on {0,..,D-1}.
/// d is nonnegative and subadditive but generally not symmetric.
class QuasiDistanceSpec {
public:
    QuasiDistanceSpec(int modulus, OutcomeMap map);

    static QuasiDistanceSpec type_i(int outcomes);
    static QuasiDistanceSpec type_ii(int outcomes);
    static QuasiDistanceSpec of_kind(OutcomeMapKind kind, int outcomes);

    int modulus() const { return modulus_; }
    const OutcomeMap& map() const { return map_; }

    /// d(x,y) in {0,..,D-1}; zero when x == y. Throws std::out_of_range for
    /// outcomes outside [0, D).
    int distance(int x, int y) const;

    /// Algebraic upper bound of d: max over all (x,y) of d(x,y).
    /// Equals D-1 for both built-in maps, 0 for a constant map.
    int s_max() const { return s_max_; }

private:
    int modulus_;
    OutcomeMap map_;
    int s_max_;
};

} // namespace qsep
