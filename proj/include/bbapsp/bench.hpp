#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bbapsp/driver.hpp"
#include "bbapsp/generators.hpp"

namespace bbapsp {

enum class Family { kRandomStrong, kComplete, kDag, kCycle, kWeak, kFile };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);

struct ExperimentConfig {
  Family family = Family::kRandomStrong;
  std::vector<std::size_t> sizes;
  double m_factor = 4.0;  // m = round(m_factor * n), clamped to what the family allows
  WeightRange weights;
  std::vector<std::uint64_t> seeds{1};
  std::vector<Variant> variants{Variant::kBasic, Variant::kImproved};
  std::vector<std::string> engines{"dijkstra"};
  std::string input;  // family=file
  std::size_t oracle_cap = 500;
  unsigned threads = 1;
};

// Flat key=value text, '#' comments. Keys: family, n, m_factor, wmin, wmax,
// seeds, variants, engines, input, oracle_cap, threads. Lists are
// comma-separated. Unknown keys, engines or variants are InputErrors.
ExperimentConfig parse_config(std::string_view text);

enum class RecordStatus { kVerified, kFailed, kUnverified, kSkipped };

std::string_view to_string(RecordStatus s) noexcept;

struct ExperimentRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> mstar;
  std::string variant;
  std::string engine;
  RunCounters counters;
  RecordStatus status = RecordStatus::kUnverified;
  std::string note;  // skip reason or first violation
};

// One record per (n, seed, variant, engine) cell, in that nesting order.
std::vector<ExperimentRecord> run_suite(const ExperimentConfig& cfg);

// "csv" or "json"; anything else is an InputError.
std::string emit_report(std::span<const ExperimentRecord> records, std::string_view format);

}  // namespace bbapsp
