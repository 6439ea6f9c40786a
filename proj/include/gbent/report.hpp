#pragma once

#include <json.hpp>

#include "gbent/classify.hpp"
#include "gbent/tables.hpp"
#include "gbent/theorems.hpp"

namespace gbent {

// JSON object form {"n":..., "k":..., "values":[...]}.
nlohmann::json table_json(const GbfTable& f);
GbfTable table_from_json(const nlohmann::json& j);

nlohmann::json plateau_json(const PlateauResult& p);
nlohmann::json boolean_class_json(const BooleanClass& c);
nlohmann::json verdict_json(const TheoremVerdict& v);

// Full analysis report: input echo, classification (gbent/plateau/regular/
// dual), Gray-image class, and the applicable theorem verdicts. All
// machine-read fields are integer-exact; with_approx adds display-only
// complex approximations of the spectrum.
nlohmann::json analyze_report(const GbfTable& f, bool gray_only = false,
                              bool with_approx = false);

// One JSONL search record: {n, k, values, classification, theorem_verdicts,
// dual?}.
nlohmann::json search_record(const GbfTable& f);

}  // namespace gbent
