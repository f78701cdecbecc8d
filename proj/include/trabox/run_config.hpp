#pragma once

#include <cstdint>
#include <cstddef>
#include <string>

#include "trabox/model.hpp"

namespace trabox {

struct StabilityConfig {
    double stable_tol = 1e-3;
    double unstable_tol = 1e-2;
    std::size_t n_max = 30;
};

struct OracleConfig {
    std::size_t grid_points = 16000;
    std::size_t levels = 3;
    bool richardson = true;
};

/// Parsed and validated run configuration (one JSON document).
struct RunConfig {
    PotentialParams potential;
    std::size_t basis_size = 100;
    std::size_t levels = 10;
    std::size_t grid_points = 1001;
    std::string output_dir = ".";
    StabilityConfig stability;
    OracleConfig oracle;
    double potential_clip = 100.0;  ///< |V| cap for plot output
};

/// Parses a JSON document; throws ConfigError on malformed input or
/// violated invariants.
RunConfig parse_run_config(const std::string& json_text);

/// Reads and parses the file at path.
RunConfig load_run_config(const std::string& path);

/// FNV-1a hash of the canonical serialized form; identical configurations
/// hash identically regardless of key order or formatting.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace trabox
