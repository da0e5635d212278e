// Acceptance gate: twelve end-to-end checks against frozen reference values
// and structural properties. Prints exactly one PASS/FAIL line per criterion
// and exits nonzero if any fail. Failures print the computed value, the
// reference, and the deviation so disagreements are auditable from the log.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsep/bell.hpp"
#include "qsep/serialize.hpp"
#include "qsep/tolerances.hpp"

namespace {

using namespace qsep;

std::string format(const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += why;
    }
};

struct TableEntry {
    double iq;
    double ir;
    double vc;
};

Outcome check_table(OutcomeMapKind kind, const std::vector<TableEntry>& expected) {
    Outcome out;
    const double tol = default_tolerances.table;
    double worst = 0.0;
    for (int d = 2; d <= 6; ++d) {
        const TableEntry& want = expected[static_cast<std::size_t>(d - 2)];
        const VisibilityReport rep = scenario_report(kind, 2, d, d);
        const struct {
            const char* name;
            double got;
            double want;
        } cells[] = {{"I_2q", rep.quantum_value, want.iq},
                     {"I_2r", rep.noise_value, want.ir},
                     {"v_c", rep.critical.value_or(2.0), want.vc}};
        for (const auto& cell : cells) {
            const double dev = std::abs(cell.got - cell.want);
            worst = std::max(worst, dev);
            if (dev > tol) {
                out.fail(format("D=%d %s computed %.10f reference %.4f |dev| %.3e > %.0e", d,
                                cell.name, cell.got, cell.want, dev, tol));
            }
        }
    }
    if (out.pass) {
        out.detail = format("15 values within %.0e of the 4-decimal references (worst |dev| %.3e)",
                            tol, worst);
    }
    return out;
}

Outcome criterion_table_type1() {
    return check_table(OutcomeMapKind::TypeI, {{-0.4142, 1.0000, 0.7071},
                                               {-0.8729, 2.0000, 0.6962},
                                               {-1.3444, 3.0000, 0.6906},
                                               {-1.8211, 4.0000, 0.6872},
                                               {-2.3005, 5.0000, 0.6849}});
}

Outcome criterion_table_type2() {
    return check_table(OutcomeMapKind::TypeII, {{-0.4142, 1.0000, 0.7071},
                                                {-0.3769, 1.3333, 0.7796},
                                                {-0.3620, 1.5000, 0.8056},
                                                {-0.3548, 1.6000, 0.8185},
                                                {-0.3508, 1.6667, 0.8261}});
}

Outcome criterion_asymptote() {
    Outcome out;
    const double limit = asymptote_type1();
    if (std::abs(limit - 0.67344) > 5e-6) {
        out.fail(format("limit computed %.10f reference 0.67344 |dev| %.3e > 5e-6", limit,
                        std::abs(limit - 0.67344)));
    }
    const double at4096 = critical_visibility_type1(2, 4096);
    if (std::abs(at4096 - limit) > 2e-3) {
        out.fail(format("v_c(D=4096)=%.8f is %.3e from the limit (> 2e-3)", at4096,
                        std::abs(at4096 - limit)));
    }
    double prev_gap = 1e9;
    for (int d : {64, 256, 1024, 4096}) {
        const double gap = critical_visibility_type1(2, d) - limit;
        if (!(gap > 0.0) || !(gap < prev_gap)) {
            out.fail(format("gap at D=%d is %.3e, not positive-and-decreasing", d, gap));
        }
        prev_gap = gap;
    }
    if (out.pass) {
        out.detail = format("limit %.10f; v_c(4096) gap %.2e; gaps decrease over D=64..4096",
                            limit, at4096 - limit);
    }
    return out;
}

Outcome criterion_vanishing_visibility() {
    Outcome out;
    std::vector<int> dims;
    for (int d = 2; d <= 8192; d *= 2) {
        dims.push_back(d);
    }
    dims.push_back(10000);
    double previous = 2.0;
    double last = 2.0;
    for (int dim : dims) {
        const double vc = critical_visibility_type2(2, dim, 2);
        if (!(vc < previous)) {
            out.fail(format("v_c(R=2) not strictly decreasing at D=%d (%.8f vs %.8f)", dim, vc,
                            previous));
        }
        previous = vc;
        last = vc;
    }
    if (!(last < 1e-2)) {
        out.fail(format("v_c(D=10000,R=2)=%.6f is not below 1e-2", last));
    }
    const double r2 = critical_visibility_type2(2, 20, 2);
    const double r3 = critical_visibility_type2(2, 20, 3);
    const double r4 = critical_visibility_type2(2, 20, 4);
    if (!(r2 < r3 && r3 < r4)) {
        out.fail(format("rank ordering broken at D=20: v_c(R=2)=%.6f v_c(R=3)=%.6f v_c(R=4)=%.6f",
                        r2, r3, r4));
    }
    if (out.pass) {
        out.detail = format("v_c(10^4, R=2)=%.2e, strictly decreasing; D=20 ordering "
                            "%.4f < %.4f < %.4f",
                            last, r2, r3, r4);
    }
    return out;
}

Outcome criterion_classical_minima() {
    Outcome out;
    struct Case {
        BellExpression expr;
        int settings;
        int outcomes;
        OutcomeMapKind kind;
    };
    std::vector<Case> cases;
    for (int d : {2, 3}) {
        for (const auto kind : {OutcomeMapKind::TypeI, OutcomeMapKind::TypeII}) {
            cases.push_back({quadrangle(), 2, d, kind});
            cases.push_back({chained(3), 3, d, kind});
        }
    }
    cases.push_back({quadrangle(), 2, 4, OutcomeMapKind::TypeI});
    for (const Case& c : cases) {
        const auto spec = QuasiDistanceSpec::of_kind(c.kind, c.outcomes);
        const MinimizeResult res = minimize_bell(c.expr, c.settings, c.outcomes, spec);
        if (res.minimum != 0) {
            out.fail(format("min over strategies is %lld (want exactly 0) for N=%d D=%d kind=%d",
                            static_cast<long long>(res.minimum), c.settings, c.outcomes,
                            c.kind == OutcomeMapKind::TypeI ? 1 : 2));
        }
    }
    if (out.pass) {
        out.detail = format("exact integer minimum 0 in all %zu enumerations", cases.size());
    }
    return out;
}

Outcome criterion_oracle_equivalence() {
    Outcome out;
    double worst_dev = 0.0;
    double worst_norm = 0.0;
    long checks = 0;
    for (int n = 2; n <= 3; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int k = 1; k <= n; ++k) {
            pairs.emplace_back(2 * k - 1, 2 * k);
        }
        for (int k = 1; k < n; ++k) {
            pairs.emplace_back(2 * k + 1, 2 * k);
        }
        pairs.emplace_back(1, 2 * n);
        for (int d = 2; d <= 8; ++d) {
            for (int r = 2; r <= d; ++r) {
                const auto sc = QuantumScenario::canonical(n, d, r);
                for (const auto& [ai, bi] : pairs) {
                    double total = 0.0;
                    for (int a = 0; a < d; ++a) {
                        for (int b = 0; b < d; ++b) {
                            const double closed = joint_probability_closed(sc, ai, bi, a, b);
                            const double oracle = joint_probability_oracle(sc, ai, bi, a, b);
                            const double dev = std::abs(closed - oracle);
                            worst_dev = std::max(worst_dev, dev);
                            ++checks;
                            if (dev > default_tolerances.identity) {
                                out.fail(format("closed %.17g vs oracle %.17g at N=%d D=%d R=%d "
                                                "A%d,B%d a=%d b=%d (|dev| %.3e)",
                                                closed, oracle, n, d, r, ai, bi, a, b, dev));
                            }
                            total += closed;
                        }
                    }
                    worst_norm = std::max(worst_norm, std::abs(total - 1.0));
                    if (std::abs(total - 1.0) > default_tolerances.identity) {
                        out.fail(format("normalization off by %.3e at N=%d D=%d R=%d A%d,B%d",
                                        std::abs(total - 1.0), n, d, r, ai, bi));
                    }
                }
            }
        }
    }
    if (out.pass) {
        out.detail = format("%ld probabilities, worst |closed-oracle| %.2e, worst |sum-1| %.2e",
                            checks, worst_dev, worst_norm);
    }
    return out;
}

Outcome criterion_triangle_suite() {
    Outcome out;
    const std::vector<ObservableLabel> labels = {ObservableLabel::alice(1),
                                                 ObservableLabel::alice(3),
                                                 ObservableLabel::bob(2), ObservableLabel::bob(4)};
    double worst = 0.0;
    long checks = 0;
    for (const auto kind : {OutcomeMapKind::TypeI, OutcomeMapKind::TypeII}) {
        const auto spec = QuasiDistanceSpec::of_kind(kind, 3);
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const FullJointModel model = FullJointModel::random(2, 3, seed);
            for (const auto& x : labels) {
                for (const auto& y : labels) {
                    for (const auto& z : labels) {
                        if (x == y || y == z || x == z) {
                            continue;
                        }
                        const double sxy = quasi_separation(pair_marginal(model, x, y), spec,
                                                            Direction::AliceToBob);
                        const double syz = quasi_separation(pair_marginal(model, y, z), spec,
                                                            Direction::AliceToBob);
                        const double sxz = quasi_separation(pair_marginal(model, x, z), spec,
                                                            Direction::AliceToBob);
                        const double slack = sxy + syz - sxz;
                        worst = std::min(worst, slack);
                        ++checks;
                        if (slack < -default_tolerances.identity) {
                            out.fail(format("triangle violated by %.3e at seed %llu triple "
                                            "%s,%s,%s kind=%d",
                                            -slack, static_cast<unsigned long long>(seed),
                                            x.name().c_str(), y.name().c_str(), z.name().c_str(),
                                            kind == OutcomeMapKind::TypeI ? 1 : 2));
                        }
                    }
                }
            }
        }
    }
    if (out.pass) {
        out.detail = format("%ld ordered triples over 1000 models x 2 maps, worst slack %.2e",
                            checks, worst);
    }
    return out;
}

Outcome criterion_white_noise_exact() {
    Outcome out;
    long maps_checked = 0;
    for (int d = 2; d <= 12; ++d) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(d));
        std::vector<QuasiDistanceSpec> specs = {QuasiDistanceSpec::type_i(d),
                                                QuasiDistanceSpec::type_ii(d)};
        for (int m = 0; m < 100; ++m) {
            specs.push_back(testing::random_custom_spec(d, rng));
        }
        for (const auto& spec : specs) {
            const double closed = white_noise_separation(spec);
            const double brute = testing::brute_white_noise(spec);
            ++maps_checked;
            if (closed != brute) {
                out.fail(format("closed %.17g != brute %.17g at D=%d", closed, brute, d));
            }
        }
        if (ssr(specs[0]) != 0.5) {
            out.fail(format("linear-map SSR at D=%d is %.17g, want exactly 0.5", d,
                            ssr(specs[0])));
        }
        if (ssr(specs[1]) != 1.0 / d) {
            out.fail(format("indicator-map SSR at D=%d is %.17g, want exactly 1/D", d,
                            ssr(specs[1])));
        }
    }
    if (out.pass) {
        out.detail = format("%ld outcome maps bit-exact; SSR exactly 1/2 and 1/D for D=2..12",
                            maps_checked);
    }
    return out;
}

Outcome criterion_residue_identities() {
    Outcome out;
    long checks = 0;
    for (int d = 2; d <= 10; ++d) {
        for (int x = -3 * d; x <= 3 * d; ++x) {
            if (!negation_identity(d, x)) {
                out.fail(format("negation identity fails at D=%d x=%d", d, x));
            }
            for (int y = -3 * d; y <= 3 * d; ++y) {
                ++checks;
                if (!check_subadditivity(d, x, y)) {
                    out.fail(format("subadditivity fails at D=%d x=%d y=%d", d, x, y));
                }
            }
        }
    }
    if (out.pass) {
        out.detail = format("%ld exhaustive (x,y) pairs over D=2..10", checks);
    }
    return out;
}

Outcome criterion_cross_path() {
    Outcome out;
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
        const BellExpression expr = chained(n);
        for (int d = 2; d <= 8; ++d) {
            {
                const auto sc = QuantumScenario::canonical(n, d, d);
                const double generic =
                    evaluate(expr, quantum_provider(sc), QuasiDistanceSpec::type_i(d));
                const double dev = std::abs(generic - bell_quantum_type1(n, d));
                worst = std::max(worst, dev);
                if (dev > default_tolerances.cross_path) {
                    out.fail(format("linear map N=%d D=%d closed %.15f generic %.15f |dev| %.3e",
                                    n, d, bell_quantum_type1(n, d), generic, dev));
                }
            }
            for (int r = 2; r <= d; ++r) {
                const auto sc = QuantumScenario::canonical(n, d, r);
                const double generic =
                    evaluate(expr, quantum_provider(sc), QuasiDistanceSpec::type_ii(d));
                const double dev = std::abs(generic - bell_quantum_type2(n, d, r));
                worst = std::max(worst, dev);
                if (dev > default_tolerances.cross_path) {
                    out.fail(format("indicator map N=%d D=%d R=%d closed %.15f generic %.15f "
                                    "|dev| %.3e",
                                    n, d, r, bell_quantum_type2(n, d, r), generic, dev));
                }
            }
        }
    }
    double worst_root = 0.0;
    for (int n = 2; n <= 3; ++n) {
        for (int d = 2; d <= 6; ++d) {
            const auto sc = QuantumScenario::canonical(n, d, d);
            const struct {
                OutcomeMapKind kind;
                double vc;
            } kinds[] = {{OutcomeMapKind::TypeI, critical_visibility_type1(n, d)},
                         {OutcomeMapKind::TypeII, critical_visibility_type2(n, d, d)}};
            for (const auto& k : kinds) {
                const auto spec = QuasiDistanceSpec::of_kind(k.kind, d);
                const double residual = std::abs(noisy_bell(chained(n), sc, spec, k.vc));
                worst_root = std::max(worst_root, residual);
                if (residual > default_tolerances.cross_path) {
                    out.fail(format("noisy value at v_c is %.3e (want 0) for N=%d D=%d kind=%d",
                                    residual, n, d, k.kind == OutcomeMapKind::TypeI ? 1 : 2));
                }
            }
        }
    }
    if (out.pass) {
        out.detail = format("worst closed-vs-generic |dev| %.2e; worst |value at v_c| %.2e",
                            worst, worst_root);
    }
    return out;
}

Outcome criterion_large_settings() {
    Outcome out;
    double prev_iq = 0.0;
    double prev_vc = 0.0;
    for (int n = 2; n <= 32; ++n) {
        const double iq = bell_quantum_type1(n, 3);
        const double vc = critical_visibility_type1(n, 3);
        if (!(iq < prev_iq) || !(iq > -2.0)) {
            out.fail(format("I value not strictly decreasing toward -2 at N=%d (%.10f)", n, iq));
        }
        if (!(vc > prev_vc) || !(vc < 1.0)) {
            out.fail(format("v_c not strictly increasing toward 1 at N=%d (%.10f)", n, vc));
        }
        prev_iq = iq;
        prev_vc = vc;
    }
    const double xi2 = xi_prime_type2(256, 2);
    if (std::abs(xi2 - 0.5) > 5e-3) {
        out.fail(format("indicator-map xi'_2 at N=256 is %.6f, want 0.5 within 5e-3", xi2));
    }
    const auto ratio_in_band = [&out](const char* label, double err_n, double err_2n) {
        const double ratio = err_n / err_2n;
        if (!(ratio >= 3.5 && ratio <= 4.5)) {
            out.fail(format("%s first-order error ratio err(16)/err(32)=%.3f outside [3.5,4.5]",
                            label, ratio));
        }
        return ratio;
    };
    const double ratio1 =
        ratio_in_band("linear-map", std::abs(xi_type1_large_n(16, 3) - xi_type1(16, 3)),
                      std::abs(xi_type1_large_n(32, 3) - xi_type1(32, 3)));
    const double ratio2 = ratio_in_band(
        "indicator-map", std::abs(xi_prime_type2_large_n(16, 3) - xi_prime_type2(16, 3)),
        std::abs(xi_prime_type2_large_n(32, 3) - xi_prime_type2(32, 3)));
    if (out.pass) {
        out.detail = format("monotone over N=2..32; xi'_2(256)=%.6f; error ratios %.2f, %.2f",
                            xi2, ratio1, ratio2);
    }
    return out;
}

Outcome criterion_rescaled_form() {
    Outcome out;
    const struct {
        int d;
        double reference;
    } fixtures[] = {{2, 2.8284}, {3, 2.8729}};
    for (const auto& fx : fixtures) {
        const double standard = cglmp_standard_value(fx.d);
        const double dev = std::abs(standard - fx.reference);
        if (dev > 5e-4) {
            out.fail(format("D=%d computed %.10f reference %.4f |dev| %.3e > 5e-4", fx.d,
                            standard, fx.reference, dev));
        }
        // Independent route: substitute the quantum probabilities into the
        // probability-difference form of each rescaled quasi-separation.
        const auto sc = QuantumScenario::canonical(2, fx.d, fx.d);
        double total = 0.0;
        for (const BellTerm& term : quadrangle().terms) {
            const auto& alice = term.first.site == Site::Alice ? term.first : term.second;
            const auto& bob = term.first.site == Site::Alice ? term.second : term.first;
            const Direction dir = term.first.site == Site::Alice ? Direction::AliceToBob
                                                                 : Direction::BobToAlice;
            const auto table = joint_distribution_closed(sc, alice.index, bob.index);
            total += term.sign * testing::rescaled_separation_reference(table, dir);
        }
        const double direct = 2.0 - total;
        if (std::abs(direct - standard) > default_tolerances.cross_path) {
            out.fail(format("D=%d direct substitution %.12f vs rescaled value %.12f", fx.d,
                            direct, standard));
        }
        if (out.pass) {
            out.detail += format("%sD=%d: %.6f (reference %.4f, direct %.6f)",
                                 out.detail.empty() ? "" : "; ", fx.d, standard, fx.reference,
                                 direct);
        }
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double time_limit_s; // 0 = no limit imposed
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "linear-map table regression", criterion_table_type1, 1.0},
        {2, "indicator-map table regression", criterion_table_type2, 1.0},
        {3, "large-dimension asymptote", criterion_asymptote, 5.0},
        {4, "vanishing critical visibility at fixed rank", criterion_vanishing_visibility, 5.0},
        {5, "exact classical minima", criterion_classical_minima, 30.0},
        {6, "probability oracle equivalence", criterion_oracle_equivalence, 10.0},
        {7, "triangle property suite", criterion_triangle_suite, 30.0},
        {8, "exact white-noise separations", criterion_white_noise_exact, 0.0},
        {9, "residue identities", criterion_residue_identities, 0.0},
        {10, "cross-path consistency", criterion_cross_path, 0.0},
        {11, "large-settings behavior", criterion_large_settings, 0.0},
        {12, "conventional rescaled form", criterion_rescaled_form, 0.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0 && elapsed > c.time_limit_s) {
            outcome.fail(format("runtime %.2f s exceeds the %.0f s limit", elapsed,
                                c.time_limit_s));
        }
        std::printf("criterion %d [%s]: %s — %s (%.2f s)\n", c.id, c.name,
                    outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str(), elapsed);
        if (!outcome.pass) {
            ++failures;
        }
    }
    if (failures != 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    }
    return failures == 0 ? 0 : 1;
}
