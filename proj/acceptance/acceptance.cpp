#include "eulersums/combinatorics.hpp"
#include "eulersums/identity.hpp"
#include "eulersums/kernel_residues.hpp"
#include "eulersums/special.hpp"
#include "eulersums/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace eulersums;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

ParamPoint point(const std::string& text) { return ParamPoint::parse(text); }

Real brute(const std::string& id, const std::string& pt, const PrecisionContext& ctx) {
    return brute_lhs(*find_identity(id), point(pt), ctx).value;
}

Real closed(const std::string& id, const std::string& pt, const PrecisionContext& ctx) {
    return closed_rhs(*find_identity(id), point(pt), ctx).value;
}

Outcome exact_combinatorics() {
    const auto t0 = Clock::now();
    Outcome out;
    long checks = 0;
    std::ostringstream bad;
    for (int n = 1; n <= 30; ++n) {
        for (int p = 1; p <= 6; ++p, ++checks) {
            if (!verify_stirling_sums(n, p)) bad << " sums(n=" << n << ",p=" << p << ")";
        }
        if (!verify_stirling_closed_forms(n)) bad << " closed(n=" << n << ")";
        if (!verify_harmonic_square_sums(n)) bad << " squares(n=" << n << ")";
        const auto poly = stirling_generating_polynomial(n);
        for (int k = 0; k <= n; ++k) {
            if (poly[static_cast<std::size_t>(k)] != stirling1(n + 1, k + 1)) bad << " poly(n=" << n << ",k=" << k << ")";
        }
        checks += 3;
    }
    for (int p = 0; p <= 6; ++p, ++checks) {
        if (!verify_log_power_series(p, 30)) bad << " log-series(p=" << p << ")";
    }
    const double t = seconds_since(t0);
    out.pass = bad.str().empty() && t < 10.0;
    std::ostringstream d;
    d << checks << " exact checks, n <= 30, p <= 6, " << t << " s";
    if (!bad.str().empty()) d << "; failed:" << bad.str();
    out.detail = d.str();
    return out;
}

Outcome classical_anchors() {
    const PrecisionContext ctx = make_context(50);
    PrecisionScope scope(ctx.working_bits());
    const Real tol = pow10(-40);
    const Real z2 = riemann_zeta(2, ctx), z3 = riemann_zeta(3, ctx), z4 = riemann_zeta(4, ctx);

    // E4.13 at a = 0: the left side is (5/2) zeta(4) - zeta(2)^2 and the right side vanishes.
    const Real r1 = abs(brute("E4.13", "a=0", ctx) - closed("E4.13", "a=0", ctx));
    const Real r1b = abs(z2 * z2 - z4 * 5 / 2);
    const Real r2 = max(abs(brute("EH.s", "s=3", ctx) - (z4 * 5 - z2 * z2) / 2),
                        abs(closed("EH.s", "s=3", ctx) - (z4 * 5 - z2 * z2) / 2));
    const Real r3 = abs(brute("E2.24", "a=1,s=2", ctx) - z3);

    Outcome out;
    out.pass = r1 < tol && r1b < tol && r2 < tol && r3 < tol;
    out.detail = "|zeta(2)^2 - 5/2 zeta(4)| " + r1b.str(3) + ", E4.13 at a=0 " + r1.str(3) + ", sum H_n/n^3 " +
                 r2.str(3) + ", sum H_n/(n+1)^2 " + r3.str(3);
    return out;
}

Outcome registry_sweep(int workers) {
    SuiteConfig config;
    config.identities = {"all"};
    config.digits = 40;
    config.workers = workers;
    const SuiteReport report = run_suite(config);
    Outcome out;
    std::ostringstream d, typos;
    long documented = 0, undocumented = 0;
    std::set<std::string> typo_ids;
    const PrecisionContext ctx = make_context(config.digits);
    PrecisionScope scope(ctx.working_bits());
    Real worst(0);
    for (const auto& rec : report.records) {
        const VerificationResult& r = rec.result;
        if (r.pass) {
            worst = max(worst, r.residual);
            continue;
        }
        if (r.error.empty() && r.corrected_rhs && r.corrected_pass) {
            ++documented;
            typo_ids.insert(r.id);
        } else {
            ++undocumented;
            typos << "\n      " << r.id << " at " << r.point.str() << ": "
                  << (r.error.empty() ? "residual " + r.residual.str(3) : r.error);
        }
    }
    const double minutes = report.summary.total_ms / 60000.0;
    out.pass = undocumented == 0 && minutes < 5.0;
    d << report.summary.passed << "/" << report.summary.total << " records pass as printed, worst passing residual "
      << worst.str(3) << ", " << report.summary.total_ms / 1000.0 << " s";
    if (documented > 0) {
        d << "; " << documented << " failures are suspected typos in the printed identity, each verified by the"
          << " documented correction:";
        for (const auto& id : typo_ids) {
            const IdentityEntry* e = find_identity(id);
            d << "\n      " << id << " (" << e->equation << "): " << e->erratum->description;
        }
    }
    if (undocumented > 0) d << "; undocumented failures:" << typos.str();
    out.detail = d.str();
    return out;
}

Outcome kernel_scaling() {
    const PrecisionContext ctx = make_context(40);
    Outcome out;
    std::ostringstream bad;
    int cases = 0;
    double lo = 1e9, hi = -1e9;
    const int K = kDefaultExpansionOrder;
    for (auto kind : {KernelKind::cot, KernelKind::psi_pos, KernelKind::psi_neg, KernelKind::polygamma_pos,
                      KernelKind::polygamma_neg}) {
        const bool poly = kind == KernelKind::polygamma_pos || kind == KernelKind::polygamma_neg;
        for (int p : poly ? std::vector<int>{2, 3} : std::vector<int>{2}) {
            for (long n : {0L, 1L, 2L, 5L}) {
                if (is_negative_center(kind) && n == 0) continue;
                const ScalingFit fit = fit_expansion_scaling(kind, n, p, K, default_radii(), ctx);
                ++cases;
                lo = std::min(lo, fit.slope);
                hi = std::max(hi, fit.slope);
                if (!(std::abs(fit.slope - (K + 1)) <= 0.2)) {
                    out.pass = false;
                    bad << "\n      " << to_string(kind) << (poly ? " p=" + std::to_string(p) : "") << " n=" << n
                        << ": slope " << fit.slope;
                }
            }
        }
    }
    std::ostringstream d;
    d << cases << " cases at K=" << K << ", slopes in [" << lo << ", " << hi << "], target " << K + 1 << " +- 0.2";
    if (!out.pass) {
        d << "; out of range:" << bad.str()
          << "\n      for n >= 1 the first omitted coefficient C(K+p, p-1)(zeta(K+p+1) - zeta_n(K+p+1)) is a zeta tail"
          << " from n+1, about 1e-3 of the next coefficient, so the error follows r^(K+2) on these radii";
    }
    out.detail = d.str();
    return out;
}

Outcome residue_vanishing() {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    Outcome out;
    std::ostringstream d;
    const std::vector<std::pair<std::string, int>> points{{"3/10", 1}, {"1/4", 2}, {"-2/5", 1}};
    for (const auto& [a, m] : points) {
        const auto t0 = Clock::now();
        const ResidueLedger ledger = residue_ledger_even(Real(parse_rational(a)), m, 10000, ctx);
        const Real at3 = residue_sum_check(ledger, 1000);
        const Real at4 = residue_sum_check(ledger);
        const double t = seconds_since(t0);
        const bool ok = at4 < pow10(-6) && at4 < at3 && t < 60.0;
        out.pass = out.pass && ok;
        d << (d.str().empty() ? "" : "; ") << "a=" << a << ",m=" << m << ": N=1e3 " << at3.str(3) << ", N=1e4 "
          << at4.str(3) << " (" << t << " s)";
    }
    out.detail = d.str();
    return out;
}

Outcome quadrature_identity() {
    SuiteConfig config;
    config.identities = {"E4.4"};
    config.digits = 40;
    auto& grid = config.grid_override["E4.4"];
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 5; ++n) {
            for (const char* a : {"0", "1/2"}) {
                for (const char* b : {"0", "1/2"}) {
                    for (const char* x : {"1/4", "3/4"}) {
                        grid.push_back(point(std::string("a=") + a + ",b=" + b + ",x=" + x + ",m=" + std::to_string(m) +
                                             ",n=" + std::to_string(n)));
                    }
                }
            }
        }
    }
    const SuiteReport report = run_suite(config);
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    Outcome out;
    Real worst(0);
    for (const auto& rec : report.records) {
        const VerificationResult& r = rec.result;
        if (!r.error.empty() || !(r.residual < pow10(-30))) out.pass = false;
        if (r.error.empty()) worst = max(worst, r.residual);
    }
    out.detail = std::to_string(report.records.size()) + " points, worst |integral - closed form| " + worst.str(3);
    return out;
}

Outcome consistency_limits() {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    Outcome out;
    Real worst(0);
    for (const char* id : {"E2.24", "E3.1", "E3.13"}) {
        for (int s : {2, 3, 4}) {
            const std::string tail = ",s=" + std::to_string(s);
            const Real near = closed(id, "a=1e-6" + tail, ctx);
            const Real at0 = closed(id, "a=0" + tail, ctx);
            const Real lhs_near = brute(id, "a=1e-6" + tail, ctx);
            const Real lhs0 = brute(id, "a=0" + tail, ctx);
            worst = max(worst, max(abs(near - at0), abs(lhs_near - lhs0)));
        }
    }
    out.pass = worst < pow10(-4);
    out.detail = "E2.24, E3.1, E3.13 for s in {2,3,4}: max difference between a=1e-6 and a=0 " + worst.str(3);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria for the Euler sum verifier"};
    std::vector<int> only;
    int workers = 1;
    app.add_option("--criterion", only, "Run only these criteria (1-7)")->check(CLI::Range(1, 7));
    app.add_option("--workers", workers, "Worker threads for the registry sweep")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact combinatorics", exact_combinatorics},
        {"classical anchors at 50 digits", classical_anchors},
        {"full registry sweep at 40 digits", [workers] { return registry_sweep(workers); }},
        {"kernel expansion error scaling", kernel_scaling},
        {"residue sum vanishing", residue_vanishing},
        {"quadrature identity E4.4", quadrature_identity},
        {"consistency limits at a = 1e-6", consistency_limits},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << "criterion " << number << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
