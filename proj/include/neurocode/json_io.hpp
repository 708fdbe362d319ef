#pragma once

#include <string>

#include <json.hpp>

#include "neurocode/code.hpp"
#include "neurocode/dimension_bounds.hpp"
#include "neurocode/interval.hpp"
#include "neurocode/simplex_realization.hpp"

namespace neurocode {

using json = nlohmann::ordered_json;

// JSON shapes (rationals travel as strings "p" or "p/q"; infinite interval
// ends as "-inf"/"inf"):
//   code        {"n":4,"codewords":[[],[1,2],[3,4],[1,2,3]]}
//   realization {"n":4,"k":3,"ambient_dim":2,"order":[[1,2],[3,4],[1,2,3]],
//                "atoms_per_neuron":[[1,3],[1,3],[2,3],[2]],"stimulus":"whole_space"}
//   realization1d {"n":2,"stimulus":"whole_line","intervals":[
//                  {"empty":true},
//                  {"lo":"0","lo_closed":true,"hi":"1","hi_closed":true}]}
//   bounds      {"lower":3,"upper":3,"tight":true,"lower_witness":[1,2,3,4],
//                "upper_source":"theorem1"}

json code_to_json(const NeuralCode& code);
NeuralCode code_from_json(const json& j);

json realization_to_json(const ConstructedRealization& r);
ConstructedRealization realization_from_json(const json& j);

json realization1d_to_json(const Realization1D& r);
Realization1D realization1d_from_json(const json& j);

json bounds_to_json(const DimensionBounds& b);
DimensionBounds bounds_from_json(const json& j);

json openify_report_to_json(const OpenifyReport& report);
OpenifyReport openify_report_from_json(const json& j);

json verification_report_to_json(const VerificationReport& report);

/// Parses a JSON document, mapping parse failures onto this library's
/// input-error exception.
json parse_json(const std::string& text);

/// Two-space indentation plus trailing newline; the one serializer used for
/// every emitted artifact, so byte output is stable.
std::string dump_json(const json& j);

}  // namespace neurocode
