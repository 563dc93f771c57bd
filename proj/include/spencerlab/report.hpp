#pragma once

#include <string>

#include <json.hpp>

#include "spencerlab/completion.hpp"
#include "spencerlab/dmod.hpp"
#include "spencerlab/euler.hpp"
#include "spencerlab/invariants.hpp"

namespace spencerlab {

using Json = nlohmann::json;  // std::map-backed: keys come out sorted

/// {"index": {"weight": dim}}, nonzero entries only.
Json to_json(const HomologyTable& table);
Json to_json(const AcyclicityCertificate& cert);
Json to_json(const CartanReport& report);
Json to_json(const LimitReport& report);
Json to_json(const KashiwaraQuotient& q);
Json to_json(const PairingReport& report);
Json to_json(const KoszulH0Report& report);
Json to_json(const SmoothnessReport& report);
Json to_json(const MilnorTjurina& mt, const RingPtr& ring);
Json to_json(const SpencerH0& h0);

/// Plain-text grid: one row per index, one column per weight.
std::string render_table(const HomologyTable& table, const std::string& title = "");

}  // namespace spencerlab
