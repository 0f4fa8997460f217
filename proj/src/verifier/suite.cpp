#include "eulersums/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

namespace eulersums {

namespace {

using nlohmann::json;

const std::set<std::string> kConfigKeys{"identities", "digits", "grid_override", "workers", "output_path", "format"};

int digits_for(const PrecisionContext& ctx) { return ctx.decimal_digits + ctx.guard_digits; }

std::string number(const Real& v, int digits) { return v.str(digits); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string ms_text(double ms) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << ms;
    return out.str();
}

ParamPoint point_from_json(const json& item) {
    if (item.is_string()) return ParamPoint::parse(item.get<std::string>());
    if (item.is_object()) {
        std::string text;
        for (const auto& [key, value] : item.items()) {
            if (!text.empty()) text += ',';
            text += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
        }
        return ParamPoint::parse(text);
    }
    throw ConfigError("grid_override points must be strings like \"a=1/2,m=1\" or objects");
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw ConfigError("unknown format '" + name + "' (expected json, csv or text)");
}

std::string to_string(ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return "json";
        case ReportFormat::csv: return "csv";
        case ReportFormat::text: return "text";
    }
    return "json";
}

SuiteConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (!kConfigKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }
    SuiteConfig config;
    try {
        if (doc.contains("identities")) {
            const json& ids = doc.at("identities");
            if (ids.is_string()) {
                config.identities = {ids.get<std::string>()};
            } else if (ids.is_array()) {
                config.identities = ids.get<std::vector<std::string>>();
            } else {
                throw ConfigError("identities must be \"all\" or a list of ids");
            }
        }
        if (doc.contains("digits")) config.digits = doc.at("digits").get<int>();
        if (doc.contains("workers")) config.workers = doc.at("workers").get<int>();
        if (doc.contains("output_path")) config.output_path = doc.at("output_path").get<std::string>();
        if (doc.contains("format")) config.format = parse_format(doc.at("format").get<std::string>());
        if (doc.contains("grid_override")) {
            const json& grid = doc.at("grid_override");
            if (!grid.is_object()) throw ConfigError("grid_override must map identity ids to point lists");
            for (const auto& [id, points] : grid.items()) {
                if (!points.is_array()) throw ConfigError("grid_override." + id + " must be a list");
                auto& slot = config.grid_override[id];
                for (const auto& p : points) slot.push_back(point_from_json(p));
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return resolve_config(config);
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return parse_config(doc);
}

SuiteConfig resolve_config(const SuiteConfig& config) {
    SuiteConfig out = config;
    if (config.digits < 10) throw ConfigError("digits must be >= 10");
    if (config.workers < 1) throw ConfigError("workers must be >= 1");
    if (config.identities.empty()) throw ConfigError("identities must not be empty");
    out.identities.clear();
    std::set<std::string> seen;
    for (const auto& id : config.identities) {
        if (id == "all") {
            for (const auto& e : registry()) {
                if (seen.insert(e.id).second) out.identities.push_back(e.id);
            }
            continue;
        }
        if (find_identity(id) == nullptr) throw ConfigError("unknown identity '" + id + "'");
        if (seen.insert(id).second) out.identities.push_back(id);
    }
    for (const auto& [id, points] : config.grid_override) {
        if (find_identity(id) == nullptr) throw ConfigError("grid_override: unknown identity '" + id + "'");
        if (!seen.count(id)) throw ConfigError("grid_override: identity '" + id + "' is not selected");
    }
    // Registry order keeps reports independent of how the list was written.
    std::vector<std::string> ordered;
    for (const auto& e : registry()) {
        if (seen.count(e.id)) ordered.push_back(e.id);
    }
    out.identities = ordered;
    return out;
}

SuiteReport run_suite(const SuiteConfig& raw) {
    const SuiteConfig config = resolve_config(raw);
    const PrecisionContext ctx = make_context(config.digits);
    const auto start = std::chrono::steady_clock::now();

    struct Job {
        const IdentityEntry* entry;
        ParamPoint point;
    };
    std::vector<Job> jobs;
    for (const auto& id : config.identities) {
        const IdentityEntry* entry = find_identity(id);
        const auto it = config.grid_override.find(id);
        const std::vector<ParamPoint> grid = it != config.grid_override.end() ? it->second : default_grid(*entry);
        for (const auto& p : grid) jobs.push_back({entry, p});
    }

    SuiteReport report;
    report.config = config;
    report.records.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            report.records[i].equation = jobs[i].entry->equation;
            report.records[i].result = verify_identity(*jobs[i].entry, jobs[i].point, ctx);
        }
    };
    const int count = std::min<int>(config.workers, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    PrecisionScope scope(ctx.working_bits());
    SuiteSummary& s = report.summary;
    s.worst_residual = Real(0);
    for (const auto& r : report.records) {
        ++s.total;
        if (r.result.pass) {
            ++s.passed;
        } else {
            ++s.failed;
        }
        if (r.result.error.empty()) s.worst_residual = max(s.worst_residual, r.result.residual);
    }
    s.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json report_json(const SuiteReport& report) {
    const PrecisionContext ctx = make_context(report.config.digits);
    const int digits = digits_for(ctx);
    json config{{"identities", report.config.identities},
                {"digits", report.config.digits},
                {"workers", report.config.workers},
                {"format", to_string(report.config.format)}};
    if (!report.config.output_path.empty()) config["output_path"] = report.config.output_path;
    if (!report.config.grid_override.empty()) {
        json grid = json::object();
        for (const auto& [id, points] : report.config.grid_override) {
            for (const auto& p : points) grid[id].push_back(p.str());
        }
        config["grid_override"] = grid;
    }

    json results = json::array();
    json discrepancies = json::array();
    for (const auto& rec : report.records) {
        const VerificationResult& r = rec.result;
        json row{{"id", r.id}, {"equation", rec.equation}, {"params", r.point.str()}, {"pass", r.pass}, {"ms", ms_text(r.ms)}};
        if (r.error.empty()) {
            row["lhs"] = number(r.lhs.value, digits);
            row["rhs"] = number(r.rhs.value, digits);
            row["residual"] = number(r.residual, 6);
            row["budget"] = number(r.budget, 6);
        } else {
            row["error"] = r.error;
        }
        if (r.corrected_rhs) {
            row["corrected"] = {{"rhs", number(r.corrected_rhs->value, digits)},
                                {"residual", number(*r.corrected_residual, 6)},
                                {"pass", r.corrected_pass}};
        }
        if (!r.pass && r.error.empty()) {
            json d{{"id", r.id}, {"equation", rec.equation}, {"params", r.point.str()},
                   {"residual", number(r.residual, 6)}, {"status", "suspected typo in the printed identity"}};
            if (const IdentityEntry* e = find_identity(r.id); e && e->erratum) {
                d["erratum"] = e->erratum->description;
                d["corrected_pass"] = r.corrected_pass;
            }
            discrepancies.push_back(d);
        }
        results.push_back(row);
    }
    const SuiteSummary& s = report.summary;
    json summary{{"total", s.total},
                 {"passed", s.passed},
                 {"failed", s.failed},
                 {"worst_residual", number(s.worst_residual, 6)},
                 {"total_ms", ms_text(s.total_ms)}};
    return json{{"config", config}, {"results", results}, {"summary", summary}, {"discrepancies", discrepancies}};
}

std::string render_report(const SuiteReport& report, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::json) {
        out << report_json(report).dump(2) << '\n';
        return out.str();
    }
    if (format == ReportFormat::csv) {
        out << "id,equation,params,residual,budget,pass,ms\n";
        for (const auto& rec : report.records) {
            const VerificationResult& r = rec.result;
            out << csv_field(r.id) << ',' << csv_field(rec.equation) << ',' << csv_field(r.point.str()) << ','
                << (r.error.empty() ? number(r.residual, 6) : "") << ',' << (r.error.empty() ? number(r.budget, 6) : "")
                << ',' << (r.pass ? "true" : "false") << ',' << ms_text(r.ms) << '\n';
        }
        return out.str();
    }
    for (const auto& rec : report.records) {
        const VerificationResult& r = rec.result;
        out << std::left << std::setw(7) << r.id << ' ' << std::setw(26) << r.point.str() << ' '
            << (r.pass ? "PASS" : "FAIL");
        if (r.error.empty()) {
            out << "  residual " << number(r.residual, 3) << "  budget " << number(r.budget, 3);
        } else {
            out << "  error: " << r.error;
        }
        if (r.corrected_rhs) {
            out << "  corrected " << (r.corrected_pass ? "PASS" : "FAIL") << ' ' << number(*r.corrected_residual, 3);
        }
        out << "  " << ms_text(r.ms) << " ms\n";
    }
    const SuiteSummary& s = report.summary;
    out << "total " << s.total << "  passed " << s.passed << "  failed " << s.failed << "  worst residual "
        << number(s.worst_residual, 3) << "  time " << ms_text(s.total_ms) << " ms\n";
    return out.str();
}

bool write_report(const SuiteReport& report, const std::string& path, ReportFormat format) {
    std::ofstream out(path);
    if (!out) return false;
    out << render_report(report, format);
    return static_cast<bool>(out);
}

std::string list_identities() {
    std::ostringstream out;
    for (const auto& e : registry()) {
        out << e.id << " — " << e.equation << "  [" << e.signature << "]  \"" << e.quote << "\"\n";
    }
    return out.str();
}

}  // namespace eulersums
