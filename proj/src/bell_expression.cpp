#include "qsep/bell_expression.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsep {

int BellExpression::positive_count() const {
    return static_cast<int>(
        std::count_if(terms.begin(), terms.end(), [](const BellTerm& t) { return t.sign > 0; }));
}

int BellExpression::negative_count() const {
    return static_cast<int>(terms.size()) - positive_count();
}

int BellExpression::settings_required() const {
    int n = 0;
    for (const BellTerm& t : terms) {
        n = std::max({n, t.first.setting(), t.second.setting()});
    }
    return n;
}

std::string BellExpression::name() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const BellTerm& t = terms[i];
        if (t.sign < 0) {
            out += '-';
        } else if (i != 0) {
            out += '+';
        }
        out += "S(" + t.first.name() + "," + t.second.name() + ")";
    }
    return out;
}

BellExpression quadrangle() { return chained(2); }

BellExpression chained(int settings) {
    if (settings < 2) {
        throw std::invalid_argument("chained: need at least 2 settings per site");
    }
    BellExpression expr;
    for (int n = 1; n < settings; ++n) {
        expr.terms.push_back({+1, ObservableLabel::alice(2 * n - 1), ObservableLabel::bob(2 * n)});
        expr.terms.push_back({+1, ObservableLabel::bob(2 * n), ObservableLabel::alice(2 * n + 1)});
    }
    expr.terms.push_back(
        {+1, ObservableLabel::alice(2 * settings - 1), ObservableLabel::bob(2 * settings)});
    expr.terms.push_back({-1, ObservableLabel::alice(1), ObservableLabel::bob(2 * settings)});
    return expr;
}

BellExpression sum_of_closed_forms(int blocks) {
    if (blocks < 1) {
        throw std::invalid_argument("sum_of_closed_forms: need at least 1 block");
    }
    BellExpression expr;
    for (int m = 1; m <= blocks; ++m) {
        const auto a1 = ObservableLabel::alice(4 * m - 3);
        const auto b2 = ObservableLabel::bob(4 * m - 2);
        const auto a3 = ObservableLabel::alice(4 * m - 1);
        const auto b4 = ObservableLabel::bob(4 * m);
        expr.terms.push_back({+1, a1, b2});
        expr.terms.push_back({+1, b2, a3});
        expr.terms.push_back({+1, a3, b4});
        expr.terms.push_back({-1, a1, b4});
    }
    return expr;
}

} // namespace qsep
