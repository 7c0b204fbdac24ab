#ifndef GAMMADEC_TOOLS_SUITES_HPP
#define GAMMADEC_TOOLS_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gammadec::tools {

struct SuiteRecord {
    std::string instance;
    bool pass = false;
    nlohmann::json detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    nlohmann::json params;
    std::vector<SuiteRecord> records;
    double wall_seconds = 0.0;

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

const std::vector<std::string>& suite_names();

/// Run one of the named verification suites; identical (name, seed)
/// invocations produce identical records.  Throws on unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace gammadec::tools

#endif
