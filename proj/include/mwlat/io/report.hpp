#pragma once

#include "json.hpp"

#include "mwlat/base_change.hpp"
#include "mwlat/classification.hpp"
#include "mwlat/cohomology.hpp"
#include "mwlat/mordell_weil.hpp"
#include "mwlat/tables.hpp"

namespace mwlat {

// JSON views of results. Exact numbers are strings "p/q"; field elements are
// coefficient vectors over the flattened tower basis.
nlohmann::json element_json(const NFElement& a);
nlohmann::json model_json(const WeierstrassModel& m);
nlohmann::json fiber_configuration_json(const FiberConfiguration& c, long rho);
nlohmann::json configuration_json(const Configuration& c);
nlohmann::json base_change_json(const BaseChangeReport& r);
nlohmann::json h1_json(const H1Result& h);
nlohmann::json verdict_json(const StabilityVerdict& v);
nlohmann::json family_json(const FamilyReport& r);
nlohmann::json configuration_table_json(const RationalClassification& c);
nlohmann::json summary_table_json(const std::vector<SummaryRow>& rows);

// {n, rank, torsion: [ints], sigma: [[ints]]}. Throws ParseError on malformed input.
GModule gmodule_from_json(const nlohmann::json& j);

}  // namespace mwlat
