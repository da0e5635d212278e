#pragma once

#include <nlohmann/json.hpp>

#include "qsep/bell.hpp"
#include "qsep/distribution.hpp"
#include "qsep/lhv.hpp"
#include "qsep/quantum.hpp"

namespace qsep {

// JointDistribution <-> {"D": int, "p": [[...], ...]}
void to_json(nlohmann::json& j, const JointDistribution& dist);
void from_json(const nlohmann::json& j, JointDistribution& dist);

// QuantumScenario <-> {"N":..,"D":..,"R":..,"alphas":[..],"betas":[..]}
// Phases are written as reals and rationalized on read.
void to_json(nlohmann::json& j, const QuantumScenario& sc);
void from_json(const nlohmann::json& j, QuantumScenario& sc);

// VisibilityReport -> {"I_q":..,"I_r":..,"v_c":..|null,"ssr":..,"s_max":..,
//                      "violation":bool}
void to_json(nlohmann::json& j, const VisibilityReport& report);

// Minimization outcome -> {"expression":..,"N":..,"D":..,"type":..,"min":..,
//                          "argmin":[..]}
nlohmann::json minimize_report(const BellExpression& expr, int settings, int outcomes,
                               OutcomeMapKind kind, const MinimizeResult& result);

} // namespace qsep
