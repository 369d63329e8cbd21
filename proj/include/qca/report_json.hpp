#ifndef QCA_REPORT_JSON_HPP
#define QCA_REPORT_JSON_HPP

#include <json.hpp>

#include "qca/decision.hpp"
#include "qca/rule.hpp"
#include "qca/tolerances.hpp"

namespace qca {

/// Serializes a decision report to the fixed schema: top-level
/// "verdict", "stages" (array of {name, pass, data}), "tolerances",
/// "timings_ms".
nlohmann::json report_to_json(const UnitarityReport& report,
                              const LocalRule& rule, const Tolerances& tol);

}  // namespace qca

#endif  // QCA_REPORT_JSON_HPP
