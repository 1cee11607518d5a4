#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pries/duality.hpp"
#include "pries/frame.hpp"
#include "pries/jt.hpp"
#include "pries/order.hpp"
#include "pries/sublocale.hpp"

namespace pries::io {

using json = nlohmann::json;

/// Parses text; malformed input throws BadInput naming line and column.
json parse(const std::string& text, const std::string& origin = "<input>");
/// Reads a whole file ("-" is stdin) and parses it.
json read_json(const std::string& path);

// Poset: {"n": int, "le": [[i, j], ...], "labels": [...]?}. Reflexive pairs
// are optional, no transitive closure is applied.
Poset poset_from_json(const json& j);
json poset_to_json(const Poset& p);

// Frames share the poset format; validation promotes it.
FramePtr frame_from_json(const json& j);
json frame_to_json(const Frame& f);

// Lattice map: {"source": <frame>, "target": <frame>, "table": [int, ...]}.
LatticeMap lattice_map_from_json(const json& j);
json lattice_map_to_json(const LatticeMap& h);

// Monotone map between posets, same layout with posets at both ends.
MonotoneMap monotone_map_from_json(const json& j);
json monotone_map_to_json(const MonotoneMap& f);

/// {"filters": [[elem, ...], ...], "le": [[i, j], ...]}
json spectrum_to_json(const DualSpace& x);

json members_to_json(const Bits& b);
json sublocale_to_json(const Sublocale& s);
json witness_pairs_to_json(const std::vector<std::pair<Elem, Elem>>& pairs);
json check_to_json(const Check& c);

json report_to_json(const JTReport& r);

}  // namespace pries::io
