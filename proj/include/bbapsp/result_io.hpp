#pragma once

#include <string>

#include <json.hpp>

#include "bbapsp/driver.hpp"
#include "bbapsp/oracle.hpp"

namespace bbapsp {

// Vertex ids are written 1-based; +infinity is the string "inf".
nlohmann::json weight_to_json(Weight w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json counters_to_json(const RunCounters& c);
RunCounters counters_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const ApspResult& result);
// Throws InputError on a malformed document.
ApspResult result_from_json(const nlohmann::json& j);

// One top-level key per line, values compact (matrix rows stay on one line).
std::string dump_result(const nlohmann::json& doc);

std::string matrix_to_tsv(const DistanceMatrix& dm);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace bbapsp
