#pragma once

#include "json.hpp"

#include "repstrata/bundle.hpp"
#include "repstrata/layering.hpp"

namespace repstrata {

using json = nlohmann::json;

// {"p": 32003} or {"rationals": true}
json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

// integers for prime fields; canonical "a/b" strings over Q
json scalar_to_json(const FieldSpec& f, const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const json& j);

// {"kind":"local","n":..,"gram":[[..]],"field":{..}} or
// {"kind":"quiver","vertices":[..],"arrows":[{"id","from","to"}],
//  "relations":[{"terms":[{"c":..,"g":[..],"x":".."}]}],"m":..,"field":{..}}
json presentation_to_json(const Presentation& p);
PresentationPtr presentation_from_json(const json& j);

// {"presentation":{..},"dims":{"v":7},"arrows":{"x1":[[..]],..}}
json representation_to_json(const Representation& r);
Representation representation_from_json(const json& j);

json layering_to_json(const Layering& l);
Layering layering_from_json(const json& j);

json component_report_to_json(const ComponentReport& r);
json estimate_report_to_json(const EstimateReport& r);
json fiber_report_to_json(const FiberReport& r);

std::string save_representation(const Representation& r); // pretty JSON text
Representation load_representation(const std::string& text);

} // namespace repstrata
