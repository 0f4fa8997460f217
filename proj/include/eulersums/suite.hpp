#pragma once

#include "eulersums/identity.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersums {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);
std::string to_string(ReportFormat format);

struct SuiteConfig {
    std::vector<std::string> identities{"all"};
    int digits = 40;
    // Explicit points per identity; identities without an entry use their default grid.
    std::map<std::string, std::vector<ParamPoint>> grid_override;
    int workers = 1;
    std::string output_path;
    ReportFormat format = ReportFormat::json;
};

// Unknown keys, bad types and unknown identities raise ConfigError.
SuiteConfig parse_config(const nlohmann::json& doc);
SuiteConfig load_config(const std::string& path);
// Expands "all" to registry order and checks every field.
SuiteConfig resolve_config(const SuiteConfig& config);

struct SuiteRecord {
    std::string equation;
    VerificationResult result;
};

struct SuiteSummary {
    long total = 0;
    long passed = 0;
    long failed = 0;
    Real worst_residual;
    double total_ms = 0.0;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<SuiteRecord> records;
    SuiteSummary summary;
};

// Records follow registry order, then grid order, for any worker count.
SuiteReport run_suite(const SuiteConfig& config);

nlohmann::json report_json(const SuiteReport& report);
std::string render_report(const SuiteReport& report, ReportFormat format);
// Writes to config.output_path, or returns false when the path cannot be opened.
bool write_report(const SuiteReport& report, const std::string& path, ReportFormat format);

// One row per registry entry: id, equation label, signature, quote anchor.
std::string list_identities();

}  // namespace eulersums
