#pragma once
#include <json.hpp>
#include <string>
#include <vector>

#include "pv/linalg.hpp"

namespace pv::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kToolVersion = "pvlab 1.0.0";
inline constexpr int kSchemaVersion = 1;

// parse "key=value" overrides onto a config; values parse as JSON when they
// can, else as strings
nlohmann::json apply_overrides(nlohmann::json config, const std::vector<std::string>& sets);

std::string config_hash(const nlohmann::json& config);

// execute one experiment; throws ConfigError with a field-level message on
// schema violations.  The returned report embeds the config, its hash, the
// tool version, wall time and a results payload.
nlohmann::json run(const nlohmann::json& config);

bool validate_report(const nlohmann::json& report, std::string* why = nullptr);

// sweep rows: command,n,k,kt,r,quantity,value,stderr,seed
std::string csv_rows(const nlohmann::json& report);

} // namespace pv::cli
