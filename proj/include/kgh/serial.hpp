#pragma once

#include <json.hpp>

#include "kgh/core.hpp"
#include "kgh/reductions.hpp"
#include "kgh/solver.hpp"
#include "kgh/tverberg.hpp"

namespace kgh {

using Json = nlohmann::json;

// HypergraphSpec <-> {"family":..., "n":..., "k":..., "r":..., optional keys}
Json spec_to_json(const HypergraphSpec& spec);
HypergraphSpec spec_from_json(const Json& j);

// Coloring <-> JSON array of 1-based colors.
Json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

// ChiResult -> {"chi":..., "witness":[...], "nodes":..., "seeded_lower_bound":...}
Json chi_result_to_json(const ChiResult& res);

// Monochromatic-support witness and refutation traces.
Json mono_support_to_json(const MonoSupport& w, const Hypergraph& hg);
Json refute_result_to_json(const RefuteResult& res);

// PointConfig <-> {"d": d, "points": [["num/den", ...], ...]}
Json point_config_to_json(const PointConfig& config);
PointConfig point_config_from_json(const Json& j);

Json partition_list_to_json(const std::vector<TverbergPartition>& parts);
Json bln_verdict_to_json(const BlnVerdict& verdict);

}  // namespace kgh
