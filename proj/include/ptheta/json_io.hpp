#pragma once

#include "ptheta/asymptotics.hpp"
#include "ptheta/qseries.hpp"
#include "ptheta/series.hpp"

#include <json.hpp>

#include <string>

namespace ptheta {

using json = nlohmann::ordered_json;

/* Frozen report schema tag; bump on any incompatible field change. */
inline constexpr const char* kSchemaVersion = "ptheta/1";

/* { "variable": "t", "order": N, "coefficients": ["p/q", ...] }
 * Coefficients are exact strings, so a round trip loses nothing. */
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

/* { "identity", "order", "status": "ok"|"mismatch",
 *   "first_mismatch_exponent": int|null, "lhs_coeff", "rhs_coeff" } */
json report_to_json(const IdentityReport& rep);

/* { "b", "order", "a": ["p/q",...], "sign_cutoff": int|null,
 *   "stable_sign": -1|0|1, "sign_determined": bool } */
json expansion_to_json(const ExpansionResult& res);

// one row per n: "n,a_n"
std::string expansion_to_csv(const ExpansionResult& res);

}  // namespace ptheta
