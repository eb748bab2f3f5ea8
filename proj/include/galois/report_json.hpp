#ifndef GALOIS_REPORT_JSON_HPP
#define GALOIS_REPORT_JSON_HPP

#include <json.hpp>

#include "galois/analysis.hpp"
#include "galois/plane.hpp"

namespace galois {

using Json = nlohmann::json;

// Scalars print as "num/den" (plain "num" for integers); complex numbers as
// [re, im] pairs; points and planes as 4-element arrays of scalar strings.
Json curve_json(const EllipticCurveModel& curve);
Json point_json(const ProjPoint& p);
Json line_json(const ProjLine& l);
Json numeric_line_json(const NumericLine& l);
Json group_json(const AutomorphismGroup& g);
Json record_json(const GaloisLineRecord& r);
Json curve_function_json(const CurveFunction& f);
Json report_json(const ArrangementReport& rep);
Json plane_record_json(const PlaneCurveRecord& rec);

} // namespace galois

#endif
