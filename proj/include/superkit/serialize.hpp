#pragma once

#include "superkit/consistency.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace superkit {

using Json = nlohmann::ordered_json;

// Exact wire formats: every number is a rational rendered as "p" or "p/q";
// round trips are bit-exact.

Json to_json(const ComplexScalar& z);          // ["re", "im"]
ComplexScalar complex_from_json(const Json& j);

Json to_json(const LaurentFn& u);              // {"terms": [[m, n, "re", "im"], ...]}
LaurentFn laurent_from_json(const Json& j);

Json to_json(const CircleFn& u);               // {"terms": [[k, "re", "im"], ...]}
CircleFn circle_from_json(const Json& j);

Json to_json(const G2L& g);                    // {"c0":.., "c1":.., "c2":.., "c12":..}

Json to_json(const FieldComponents& f);
FieldComponents field_components_from_json(const Json& j);

Json to_json(const Superfield& f);

/// {"k1":.., "k2":.., "lambda1": [..], "lambda2": [..], "alpha": {...}}
Json to_json(const SplitModelSpec& spec);
SplitModelSpec model_from_json(const Json& j);

/// A field file: either one field object or {"fields": [...]}. Each field:
/// {"name": .., "charts": {"V": {...}}, "reality": {"psi1": "real", ...}}.
struct NamedField {
    std::string name;
    Superfield field;
    RealityAssignment declared;  // Free where unspecified
};

std::vector<NamedField> fields_from_json(const Json& j);

/// Infers Real/Imaginary/Zero per component of the circle restriction; Free
/// when none applies. Explicit declarations win over inference.
RealityAssignment infer_reality(const CircleField& f);

}  // namespace superkit
