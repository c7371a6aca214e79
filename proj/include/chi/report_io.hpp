#pragma once

// CSV and JSON serialisation of reports.  Decimals are fixed at 6 places and
// rationals are written as "a/b" strings so JSON round-trips exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "chi/classify.hpp"
#include "chi/experiments.hpp"
#include "chi/partition.hpp"

namespace chi {

using Json = nlohmann::ordered_json;

std::string fixed6(double x);

std::string comparison_csv(const std::vector<ComparisonRow>& rows);
/// Counts-only CSV for unsupported predictions: j,count,empirical.
std::string partition_csv(const PartitionReport& report);
std::string violations_csv(const CheckReport& report);

Json to_json(const PartitionReport& report);
PartitionReport partition_from_json(const Json& j);

Json to_json(const std::vector<ComparisonRow>& rows);
Json to_json(const ParamClass& c);
Json to_json(const Prediction& p);
Json to_json(const CheckReport& report);
CheckReport check_from_json(const Json& j);

}  // namespace chi
