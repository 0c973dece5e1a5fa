#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gwbinom/coefficients.hpp"
#include "gwbinom/gw_ring.hpp"
#include "gwbinom/necklace.hpp"
#include "gwbinom/partitions.hpp"

namespace gwbinom::render {

using Json = nlohmann::ordered_json;

/// {"rank": r, "disc": "square"|"nonsquare", "display": "..."}. The rank is
/// a JSON integer when it fits in int64, otherwise a decimal string.
Json to_json(const GWElem& x);
GWElem gw_from_json(const Json& j);

Json to_json(const coefficients::EnrichedCoefficient& c);

/// {"n":..., "j":..., "orbits":[{"canonical":"0101", "period":..,
///  "flip_fixed":.., "axes":[{"m":.., "type":1|2}]}]}
Json orbit_catalog(int n, int j, const std::vector<necklace::OrbitRecord>& orbits);

Json to_json(const partitions::MarkedCyclicPartition& p);

/// Centered triangle of display strings, one row per line, LF endings.
std::string triangle_text(const std::vector<std::vector<coefficients::EnrichedCoefficient>>& rows);
Json triangle_json(const std::vector<std::vector<coefficients::EnrichedCoefficient>>& rows);
/// Header "row,j,rank,disc,display" then one line per entry.
std::string triangle_csv(const std::vector<std::vector<coefficients::EnrichedCoefficient>>& rows);

}  // namespace gwbinom::render
