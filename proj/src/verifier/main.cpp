#include "eulersums/kernel_residues.hpp"
#include "eulersums/special.hpp"
#include "eulersums/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

using namespace eulersums;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

int emit(const SuiteReport& report, ReportFormat format, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << render_report(report, format);
    } else if (!write_report(report, out_path, format)) {
        std::cerr << "error: cannot write report to '" << out_path << "'\n";
        return kConfig;
    }
    return report.summary.failed == 0 ? kPass : kFail;
}

bool writable(const std::string& path) {
    if (path.empty()) return true;
    std::ofstream probe(path, std::ios::app);
    return static_cast<bool>(probe);
}

int run_verify(const std::string& id, int digits, const std::string& param, const std::string& format) {
    SuiteConfig config;
    config.identities = {id};
    config.digits = digits;
    config.format = parse_format(format);
    if (!param.empty()) config.grid_override[id] = {ParamPoint::parse(param)};
    return emit(run_suite(config), config.format, "");
}

int run_suite_command(const std::string& path, std::optional<int> workers, const std::string& format,
                      const std::string& out) {
    SuiteConfig config = load_config(path);
    if (workers) config.workers = *workers;
    if (!format.empty()) config.format = parse_format(format);
    if (!out.empty()) config.output_path = out;
    config = resolve_config(config);
    if (!writable(config.output_path)) {
        std::cerr << "error: cannot write report to '" << config.output_path << "'\n";
        return kConfig;
    }
    return emit(run_suite(config), config.format, config.output_path);
}

std::vector<long> ladder(long N) {
    std::vector<long> out;
    for (long n = 10; n < N; n *= 10) out.push_back(n);
    out.push_back(N);
    return out;
}

int run_residues(const std::string& a_text, int m, std::optional<int> s, long N, int digits, const std::string& form_text,
                 bool as_json) {
    const PrecisionContext ctx = make_context(digits);
    PrecisionScope scope(ctx.working_bits());
    const Real a(parse_rational(a_text));
    ZeroPoleForm form = ZeroPoleForm::printed;
    if (form_text == "corrected") {
        form = ZeroPoleForm::corrected;
    } else if (form_text != "printed") {
        throw ConfigError("unknown --zero-pole form '" + form_text + "'");
    }
    const ResidueLedger ledger = s ? residue_ledger_odd(a, m, *s, N, ctx, form) : residue_ledger_even(a, m, N, ctx);
    const Approx implied = s ? implied_odd_sum(a, m, *s, ctx, form) : implied_even_sum(a, m, ctx);
    const int shown = ctx.decimal_digits;

    Real pos(0), neg(0);
    for (long i = 0; i < N; ++i) {
        pos += ledger.positive_residues[static_cast<std::size_t>(i)];
        neg += ledger.negative_residues[static_cast<std::size_t>(i)];
    }
    json doc{{"kernel", s ? "odd" : "even"},
             {"a", a_text},
             {"m", m},
             {"N", N},
             {"digits", digits},
             {"pole_at_a", ledger.pole_at_a.str(shown)},
             {"pole_at_zero", ledger.pole_at_zero.str(shown)},
             {"positive_sum", pos.str(shown)},
             {"negative_sum", neg.str(shown)},
             {"implied_sum", implied.value.str(shown)}};
    if (s) {
        doc["s"] = *s;
        doc["zero_pole"] = form_text;
    }
    json rows = json::array();
    for (long n : ladder(N)) rows.push_back({{"N", n}, {"magnitude", residue_sum_check(ledger, n).str(6)}});
    doc["ladder"] = rows;

    if (as_json) {
        std::cout << doc.dump(2) << '\n';
        return kPass;
    }
    std::cout << "kernel        " << doc["kernel"].get<std::string>() << "  a=" << a_text << "  m=" << m;
    if (s) std::cout << "  s=" << *s << "  zero pole " << form_text;
    std::cout << '\n';
    for (const char* key : {"pole_at_a", "pole_at_zero", "positive_sum", "negative_sum", "implied_sum"}) {
        std::cout << std::left << std::setw(14) << key << doc[key].get<std::string>() << '\n';
    }
    for (const auto& row : rows) {
        std::cout << "N=" << std::left << std::setw(10) << row["N"].get<long>() << "|sum| "
                  << row["magnitude"].get<std::string>() << '\n';
    }
    return kPass;
}

int run_table1(const std::string& kind_text, long n, int p, int K, int digits, bool as_json) {
    const auto kind = parse_kernel_kind(kind_text);
    if (!kind) throw ConfigError("unknown kernel kind '" + kind_text + "'");
    const PrecisionContext ctx = make_context(digits);
    PrecisionScope scope(ctx.working_bits());
    const LocalExpansion exp = expand_kernel(*kind, n, p, K, ctx);
    const ScalingFit fit = fit_expansion_scaling(*kind, n, p, K, default_radii(), ctx);

    json coeffs = json::array();
    for (int j = exp.lowest_order; j <= exp.order; ++j) {
        coeffs.push_back({{"power", j}, {"value", exp.coefficient(j).str(ctx.decimal_digits)}});
    }
    json errors = json::array();
    for (std::size_t i = 0; i < fit.radii.size(); ++i) errors.push_back({{"r", fit.radii[i]}, {"error", fit.errors[i]}});
    json doc{{"kind", kind_text}, {"center", exp.center}, {"K", K}, {"coefficients", coeffs},
             {"errors", errors}, {"slope", fit.slope}};
    if (*kind == KernelKind::polygamma_pos || *kind == KernelKind::polygamma_neg) doc["p"] = p;

    if (as_json) {
        std::cout << doc.dump(2) << '\n';
        return kPass;
    }
    std::cout << kind_text << " at s=" << exp.center << ", K=" << K << '\n';
    for (int j = exp.lowest_order; j <= exp.order; ++j) {
        std::cout << "  c[" << j << "] = " << exp.coefficient(j).str(ctx.decimal_digits) << '\n';
    }
    for (std::size_t i = 0; i < fit.radii.size(); ++i) {
        std::cout << "  r=" << fit.radii[i] << "  error " << fit.errors[i] << '\n';
    }
    std::cout << "  slope " << fit.slope << "  (K+1 = " << K + 1 << ")\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision verifier for parametric Euler sum identities"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Verify one identity at a point or over its default grid");
    std::string id, param, verify_format = "text";
    int digits = 40;
    verify->add_option("--id", id, "Identity id, e.g. E2.16")->required();
    verify->add_option("--digits", digits, "Decimal digits")->capture_default_str();
    verify->add_option("--param", param, "Parameter point k=v[,k=v...]; default grid when omitted");
    verify->add_option("--format", verify_format, "json, csv or text")->capture_default_str();

    auto* suite = app.add_subcommand("suite", "Run a configured batch of verifications");
    std::string config_path, suite_format, out_path;
    std::optional<int> workers;
    suite->add_option("--config", config_path, "JSON suite configuration")->required();
    suite->add_option("--workers", workers, "Worker threads");
    suite->add_option("--format", suite_format, "json, csv or text");
    suite->add_option("--out", out_path, "Report path; stdout when omitted");

    auto* list = app.add_subcommand("list", "List registered identities");

    auto* residues = app.add_subcommand("residues", "Residue ledger and truncated residue sums");
    std::string a_text, zero_pole = "printed";
    int m = 1;
    std::optional<int> s;
    long N = 10000;
    int residue_digits = 40;
    bool residues_json = false;
    residues->add_option("--a", a_text, "Non-integer parameter a")->required();
    residues->add_option("--m", m, "Order m")->required();
    residues->add_option("--s", s, "Odd-kernel parameter s; selects the odd ledger");
    residues->add_option("--N", N, "Largest n in the ledger")->capture_default_str();
    residues->add_option("--digits", residue_digits, "Decimal digits")->capture_default_str();
    residues->add_option("--zero-pole", zero_pole, "printed or corrected residue at 0 (odd ledger)")
        ->capture_default_str();
    residues->add_flag("--json", residues_json, "JSON output");

    auto* table1 = app.add_subcommand("table1", "Local kernel expansion and its truncation error");
    std::string kind;
    long center = 0;
    int K = kDefaultExpansionOrder, p = 2, table_digits = 40;
    bool table_json = false;
    table1->add_option("--kind", kind, "cot, psi_pos, psi_neg, polygamma_pos, polygamma_neg")->required();
    table1->add_option("--n", center, "Center magnitude")->required();
    table1->add_option("--K", K, "Truncation order")->capture_default_str();
    table1->add_option("--p", p, "Polygamma order parameter")->capture_default_str();
    table1->add_option("--digits", table_digits, "Decimal digits")->capture_default_str();
    table1->add_flag("--json", table_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kConfig;
    }

    try {
        if (*verify) return run_verify(id, digits, param, verify_format);
        if (*suite) return run_suite_command(config_path, workers, suite_format, out_path);
        if (*list) {
            std::cout << list_identities();
            return kPass;
        }
        if (*residues) return run_residues(a_text, m, s, N, residue_digits, zero_pole, residues_json);
        if (*table1) return run_table1(kind, center, p, K, table_digits, table_json);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kConfig;
}
