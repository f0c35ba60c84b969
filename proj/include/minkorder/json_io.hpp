#pragma once

#include <string>

#include <json.hpp>

#include "minkorder/arrangement.hpp"
#include "minkorder/classical.hpp"
#include "minkorder/events.hpp"
#include "minkorder/ordering.hpp"
#include "minkorder/sweep1d.hpp"

namespace minkorder {

// Wire formats. Rationals travel as strings "p/q" (or "p" when q = 1) with
// the sign on the numerator. All indices are 1-based on the wire.
//
//   EventSet: {"n": int, "events": [{"t": "<rational>", "x": ["<rational>", ...]}, ...]}
//   PointSet: {"n": int, "points": [["<rational>", ...], ...]}
//   OrderSet: {"ball_restricted": bool, "count": int, "orders": [[int, ...], ...],
//              "witnesses": [{"order": [...], "v": ["<rational>", ...]}, ...]}

using json = nlohmann::json;

EventSet events_from_json(const json& j);
EventSet events_from_string(const std::string& text);
json events_to_json(const EventSet& es);

PointSet points_from_json(const json& j);
PointSet points_from_string(const std::string& text);

json order_set_to_json(const OrderSet& os);
json poly_to_json(const IntPoly& p); // coefficient strings, lowest degree first
json poset_to_json(const IntersectionPoset& ip);
json sweep_to_json(const CriticalVelocityTable& table, const LambdaSequence& lambda,
                   const std::vector<int>& word);
json perm_to_json(const Perm& p); // 1-based

/// Canonical rendering used everywhere: two-space indent, sorted keys,
/// trailing newline. Byte-identical across runs for identical data.
std::string dump_canonical(const json& j);

} // namespace minkorder
