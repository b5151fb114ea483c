#include "crosscaps/report.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace crosscaps {

bool Report::all_passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

std::string digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& [name, ok] : r.checks)
        checks.push_back(nlohmann::json{{"name", name}, {"pass", ok}});
    return nlohmann::json{{"command", r.command},
                          {"inputs_digest", r.inputs_digest},
                          {"outputs", r.outputs},
                          {"checks", checks},
                          {"wall_ms", r.wall_ms}};
}

}  // namespace crosscaps
