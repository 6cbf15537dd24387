#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qkz/param.hpp"

namespace qkz {

inline constexpr const char* kVersion = "1.0.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::string suite;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int points = 1;
  std::optional<int> kmax, lmax, m, n, N, jet_order;
  std::string out;
  std::string format = "json";
};

struct Mismatch {
  nlohmann::json location;
  std::string expected, actual;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  nlohmann::json point;   // serialized fourth roots or the scalar inputs used
  nlohmann::json orders;  // truncation orders and sizes
  std::optional<Mismatch> mismatch;
  double time_ms = 0;
};

struct Report {
  std::string suite, version;
  nlohmann::json config;
  std::vector<CheckRecord> checks;
  bool all_pass() const;
};

const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

// Throws ConfigError for an unknown id or invalid orders before computing anything.
void validate(const SuiteConfig& cfg);
Report run_suite(const SuiteConfig& cfg);

nlohmann::json config_json(const SuiteConfig& cfg);
nlohmann::json to_json(const Report& r);
std::string to_csv(const Report& r);

// Worker count from QKZ_THREADS, capped by the hardware and the task count.
unsigned worker_count(size_t tasks);
// Runs the tasks on a pool; results keep task order.
std::vector<CheckRecord> run_tasks(const std::vector<std::function<CheckRecord()>>& tasks);

// Seed of point j drawn from a configured seed.
std::uint64_t point_seed(std::uint64_t seed, int j);

}  // namespace qkz
