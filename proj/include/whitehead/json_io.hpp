#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "whitehead/certificate.hpp"
#include "whitehead/hypersurface.hpp"
#include "whitehead/mat3.hpp"
#include "whitehead/reconstruct.hpp"

namespace whitehead {

using json = nlohmann::json;

/// Top-level "schema" value on every document this library writes.
inline constexpr std::string_view kSchema = "whitehead-sl3/v1";

/// Malformed JSON payload or flag value.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Complex scalar: [re, im]. Matrix: three rows of three scalars.
json to_json(Cplx z);
json to_json(const Mat3& x);
json to_json(const TraceCoords& c);
json to_json(const Term& term);
json to_json(const Certificate& cert);
json to_json(const Representation& rep);
json to_json(const SolveReport& report);
json to_json(const LiftSet& lifts);

Cplx cplx_from_json(const json& j);
Mat3 mat3_from_json(const json& j);
/// Accepts the coords object itself or any document with a "coords" or
/// "target" member.
TraceCoords coords_from_json(const json& j);
/// Accepts {"y": ..., "z": ...} or a solve report (its "representation").
Representation representation_from_json(const json& j);

/// "1.5-2i", "3", "-i", "2e-3+4.5i" on the command-line surface.
Cplx parse_complex(std::string_view text);

/// "t=1,tbar=1,sbar=0,r=0" into coordinates; returns which names were set.
/// Unknown names or duplicate keys throw FormatError.
TraceCoords parse_coord_assignments(std::string_view text, std::vector<Var>* assigned = nullptr);

std::string_view var_name(Var v);

}  // namespace whitehead
