#ifndef CROSSCAPS_REPORT_HPP
#define CROSSCAPS_REPORT_HPP

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace crosscaps {

// Machine-readable result of one CLI invocation.  Deterministic for a fixed
// command line and seed, except for the wall-time field.
struct Report {
    std::string command;                              // argv echo
    std::string inputs_digest;                        // FNV-1a of canonical inputs
    nlohmann::json outputs = nlohmann::json::object();
    std::vector<std::pair<std::string, bool>> checks; // per-assertion pass flags
    double wall_ms = 0.0;

    bool all_passed() const;
};

// 64-bit FNV-1a, hex-encoded; used to fingerprint canonicalized inputs.
std::string digest(const std::string& data);

nlohmann::json to_json(const Report& r);

}  // namespace crosscaps

#endif
