#ifndef ARDET_REPORT_HPP
#define ARDET_REPORT_HPP

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "ardet/determiner.hpp"

namespace ardet {

using ojson = nlohmann::ordered_json;

ojson quiver_to_json(const Quiver& q);

// {"n":.., "orientation":["R","L",..], "relations":[[..],..], "p":.., "q":..,
//  "r":.., "branch":"..", "predicted":.., "det_count":..,
//  "det_set":[{"interval":[a,b],"labels":["P(3)"]},..],
//  "records":[{"from":[a,b],"to":[c,d],"kind":"mono|epi",
//              "determiner":[e,f],"class":"projective|tau_inv_kernel"},..]}
ojson det_report_to_json(const Quiver& q, const DetReport& report);

// Reads the schema back; morphism supports, routes and labels are recovered
// from the quiver. Re-serializing yields the input byte for byte.
std::pair<Quiver, DetReport> det_report_from_json(const ojson& j);

ojson sequences_to_json(const ARQuiver& ar);
ojson indecomposables_to_json(const Quiver& q);

std::string det_report_text(const Quiver& q, const DetReport& report);
std::string sequences_text(const Quiver& q, const ARQuiver& ar);
std::string indecomposables_text(const Quiver& q);
std::string sink_ideals_text(const Quiver& q);

} // namespace ardet

#endif
