#pragma once

#include <compare>
#include <string>

namespace qsep {

enum class Site { Alice, Bob };

/// One local observable. Alice's carry odd 1-based indices (A1, A3, ...),
/// Bob's even (B2, B4, ...); the site is redundant with index parity and the
/// constructor enforces the match.
struct ObservableLabel {
    Site site = Site::Alice;
    int index = 1;

    ObservableLabel() = default;
    ObservableLabel(Site site, int index);

    static ObservableLabel alice(int index); // index odd, >= 1
    static ObservableLabel bob(int index);   // index even, >= 2

    /// 1-based setting number n: A_{2n-1} or B_{2n}.
    int setting() const { return site == Site::Alice ? (index + 1) / 2 : index / 2; }

    std::string name() const; // "A1", "B4", ...

    friend bool operator==(const ObservableLabel&, const ObservableLabel&) = default;
    friend auto operator<=>(const ObservableLabel&, const ObservableLabel&) = default;
};

} // namespace qsep
