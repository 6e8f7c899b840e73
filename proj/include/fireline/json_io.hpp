#pragma once

// JSON views of the report types. Rationals serialize as "p/q" strings.

#include <json.hpp>

#include "fireline/analysis.hpp"
#include "fireline/discharging.hpp"
#include "fireline/expansion.hpp"
#include "fireline/fire.hpp"
#include "fireline/pairing.hpp"
#include "fireline/strategies.hpp"

namespace fireline {

using Json = nlohmann::json;

Json play_to_json(const PlayOutcome& out);
Json solve_to_json(const SolveResult& res);
Json classification_to_json(const ClassificationReport& rep);
Json bound_to_json(const BoundVerdict& v);
Json simplicity_to_json(const SimplicityStats& s);
Json expansion_to_json(const ExpansionReport& rep);
Json rate_to_json(const RateReport& rep);
Json recurrence_to_json(const RecurrenceTrace& tr);
Json growth_to_json(const GrowthTimeline& t);

} // namespace fireline
