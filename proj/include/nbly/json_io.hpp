#pragma once

#include <json.hpp>

#include "nbly/graph.hpp"
#include "nbly/harness.hpp"
#include "nbly/partition.hpp"
#include "nbly/series.hpp"

namespace nbly {

/* {"order":N,"coeffs":[c0,...,cN]} */
void to_json(nlohmann::json& j, const Series& s);

/* {"mu1":[...],"mu2":[...]} */
void to_json(nlohmann::json& j, const NeighborlyPartition& np);

/* {"k":..,"n":..,"cuts":[..]} */
void to_json(nlohmann::json& j, const Component& c);

/* One row per exponent: "exponent,coefficient" after a header line. */
std::string series_to_csv(const Series& s);

namespace harness {

/* {"check":...,"params":{...},"status":"PASS|FAIL",
 *  "mismatches":[{"location":..,"expected":..,"actual":..}],"counts":{...}}
 * plus a "series" object for series-producing checks and a "note" when one
 * was recorded. Timing is intentionally omitted so identical configurations
 * serialize identically. */
void to_json(nlohmann::json& j, const Mismatch& m);
void to_json(nlohmann::json& j, const Report& r);

}  // namespace harness

}  // namespace nbly
