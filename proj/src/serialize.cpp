#include "qsep/serialize.hpp"

#include <string>
#include <vector>

namespace qsep {

void to_json(nlohmann::json& j, const JointDistribution& dist) {
    std::vector<std::vector<double>> rows(dist.outcomes);
    for (int a = 0; a < dist.outcomes; ++a) {
        rows[a].assign(dist.p.begin() + static_cast<std::ptrdiff_t>(a) * dist.outcomes,
                       dist.p.begin() + static_cast<std::ptrdiff_t>(a + 1) * dist.outcomes);
    }
    j = nlohmann::json{{"D", dist.outcomes}, {"p", rows}};
}

void from_json(const nlohmann::json& j, JointDistribution& dist) {
    const int d = j.at("D").get<int>();
    const auto rows = j.at("p").get<std::vector<std::vector<double>>>();
    if (rows.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("JointDistribution: expected " + std::to_string(d) +
                                    " rows, got " + std::to_string(rows.size()));
    }
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(d) * d);
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(d)) {
            throw std::invalid_argument("JointDistribution: ragged probability table");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    dist = JointDistribution{d, std::move(flat)};
}

void to_json(nlohmann::json& j, const QuantumScenario& sc) {
    std::vector<double> alphas;
    std::vector<double> betas;
    alphas.reserve(sc.alphas.size());
    betas.reserve(sc.betas.size());
    for (const Rational& r : sc.alphas) {
        alphas.push_back(r.value());
    }
    for (const Rational& r : sc.betas) {
        betas.push_back(r.value());
    }
    j = nlohmann::json{{"N", sc.settings},
                       {"D", sc.dimension},
                       {"R", sc.rank},
                       {"alphas", alphas},
                       {"betas", betas}};
}

void from_json(const nlohmann::json& j, QuantumScenario& sc) {
    sc.settings = j.at("N").get<int>();
    sc.dimension = j.at("D").get<int>();
    sc.rank = j.at("R").get<int>();
    sc.alphas.clear();
    sc.betas.clear();
    for (double x : j.at("alphas").get<std::vector<double>>()) {
        sc.alphas.push_back(Rational::from_double(x));
    }
    for (double x : j.at("betas").get<std::vector<double>>()) {
        sc.betas.push_back(Rational::from_double(x));
    }
    sc.validate();
}

void to_json(nlohmann::json& j, const VisibilityReport& report) {
    j = nlohmann::json{{"I_q", report.quantum_value},
                       {"I_r", report.noise_value},
                       {"v_c", report.critical ? nlohmann::json(*report.critical)
                                               : nlohmann::json(nullptr)},
                       {"ssr", report.ssr},
                       {"s_max", report.s_max},
                       {"violation", report.critical.has_value()}};
}

nlohmann::json minimize_report(const BellExpression& expr, int settings, int outcomes,
                               OutcomeMapKind kind, const MinimizeResult& result) {
    const char* type = kind == OutcomeMapKind::TypeI    ? "type1"
                       : kind == OutcomeMapKind::TypeII ? "type2"
                                                        : "custom";
    return nlohmann::json{{"expression", expr.name()},
                          {"N", settings},
                          {"D", outcomes},
                          {"type", type},
                          {"min", result.minimum},
                          {"argmin", result.argmin.assignment}};
}

} // namespace qsep
