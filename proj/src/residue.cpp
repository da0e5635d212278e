#include "qsep/residue.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsep {

std::int64_t residue(std::int64_t x, std::int64_t modulus) {
    if (modulus < 2) {
        throw std::invalid_argument("residue: modulus must be >= 2, got " +
                                    std::to_string(modulus));
    }
    std::int64_t r = x % modulus;
    return r < 0 ? r + modulus : r;
}

bool check_subadditivity(std::int64_t modulus, std::int64_t x, std::int64_t y) {
    return residue(x + y, modulus) <= residue(x, modulus) + residue(y, modulus);
}

bool negation_identity(std::int64_t modulus, std::int64_t x) {
    return residue(-x, modulus) == modulus - 1 - residue(x - 1, modulus);
}

OutcomeMap OutcomeMap::type_i(int outcomes) {
    OutcomeMap map;
    map.kind = OutcomeMapKind::TypeI;
    map.table.resize(outcomes);
    for (int x = 0; x < outcomes; ++x) map.table[x] = x;
    return map;
}

OutcomeMap OutcomeMap::type_ii(int outcomes) {
    OutcomeMap map;
    map.kind = OutcomeMapKind::TypeII;
    map.table.assign(outcomes, 0);
    if (outcomes > 0) map.table[0] = 1;
    return map;
}

OutcomeMap OutcomeMap::custom(std::vector<std::int64_t> table) {
    OutcomeMap map;
    map.kind = OutcomeMapKind::Custom;
    map.table = std::move(table);
    return map;
}

QuasiDistanceSpec::QuasiDistanceSpec(int modulus, OutcomeMap map)
    : modulus_(modulus), map_(std::move(map)) {
    if (modulus_ < 2) {
        throw std::invalid_argument("QuasiDistanceSpec: modulus must be >= 2");
    }
    if (static_cast<int>(map_.table.size()) != modulus_) {
        throw std::invalid_argument("QuasiDistanceSpec: outcome map has " +
                                    std::to_string(map_.table.size()) + " entries, expected " +
                                    std::to_string(modulus_));
    }
    s_max_ = 0;
    for (int x = 0; x < modulus_; ++x) {
        for (int y = 0; y < modulus_; ++y) {
            s_max_ = std::max(s_max_, distance(x, y));
        }
    }
}

QuasiDistanceSpec QuasiDistanceSpec::type_i(int outcomes) {
    return {outcomes, OutcomeMap::type_i(outcomes)};
}

QuasiDistanceSpec QuasiDistanceSpec::type_ii(int outcomes) {
    return {outcomes, OutcomeMap::type_ii(outcomes)};
}

QuasiDistanceSpec QuasiDistanceSpec::of_kind(OutcomeMapKind kind, int outcomes) {
    switch (kind) {
        case OutcomeMapKind::TypeI: return type_i(outcomes);
        case OutcomeMapKind::TypeII: return type_ii(outcomes);
        default: throw std::invalid_argument("of_kind: custom maps need an explicit table");
    }
}

int QuasiDistanceSpec::distance(int x, int y) const {
    if (x < 0 || x >= modulus_ || y < 0 || y >= modulus_) {
        throw std::out_of_range("quasi_distance: outcome outside [0, D)");
    }
    // Difference of raw map values first, reduction last.
    return static_cast<int>(residue(map_.table[x] - map_.table[y], modulus_));
}

} // namespace qsep
