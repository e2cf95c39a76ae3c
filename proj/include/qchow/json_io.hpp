#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qchow/correlator.hpp"
#include "qchow/inertia.hpp"
#include "qchow/picard.hpp"
#include "qchow/quantum.hpp"

namespace qchow {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Sector& s);
Sector sector_from_json(const ordered_json& j, const Weights& w);

ordered_json to_json(const InertiaComponent& c);
ordered_json census_json(const Weights& w);
ordered_json wps_census_json(const std::vector<long>& weights);

ordered_json to_json(const BasisClass& c);
ordered_json stringy_basis_json(const Weights& w);

ordered_json to_json(const PicClass& p);
PicClass pic_from_json(const ordered_json& j);

ordered_json presentation_json(const RingPresentation& pres);
ordered_json structure_constants_json(const StructureConstants& sc);
ordered_json report_json(const RingReport& report);

ordered_json to_json(const CorrelatorKey& key);
CorrelatorKey key_from_json(const ordered_json& j, const Weights& w);

/// One JSON object per entry, suitable for JSON-lines output.
std::vector<ordered_json> table_json_lines(const CorrelatorTable& table);

}  // namespace qchow
