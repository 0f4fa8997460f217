#include "sums.hpp"

#include <algorithm>
#include <array>
#include <memory>

namespace eulersums::detail {

namespace {

Approx zc(int k, const PrecisionContext& ctx) { return zeta(k, ctx, true); }

Approx rs(RealFn f, double decay, const PrecisionContext& ctx) { return rational_series(std::move(f), decay, ctx); }

// sum [(n+a)^-j + (n-a)^-j - 2 n^-j]
Approx even_difference(int j, const Real& a, const PrecisionContext& ctx) {
    return rs([a, j](const Real& n) { return 1 / pow(n + a, j) + 1 / pow(n - a, j) - 2 / pow(n, j); }, j + 2, ctx);
}

// sum [(n-a)^-j - (n+a)^-j]
Approx odd_difference(int j, const Real& a, const PrecisionContext& ctx) {
    return rs([a, j](const Real& n) { return 1 / pow(n - a, j) - 1 / pow(n + a, j); }, j + 1, ctx);
}

// sum 1/(n^j (n^2-a^2)^k)
Approx quadratic_series(int j, int k, const Real& a, const PrecisionContext& ctx) {
    return memo("quadratic|" + std::to_string(j) + "|" + std::to_string(k) + "|" + key_of(a), ctx, [&] {
        return rs([a, j, k](const Real& n) { return 1 / (pow(n, j) * pow(n * n - a * a, k)); }, j + 2 * k, ctx);
    });
}

// sum (y^n S_n(x) + x^n S_n(y)) / (n+a)^s with S_n(x) = sum_{j<n} x^(n-j)/j
Approx mixed_polylog_sum(const Real& a, int s, const Real& x, const Real& y, const PrecisionContext& ctx) {
    const double ratio = std::max(abs(x).to_double(), abs(y).to_double());
    return geometric(
        [a, s, x, y]() -> Sequence {
            auto st = std::make_shared<std::array<Real, 4>>();
            (*st)[2] = Real(1);
            (*st)[3] = Real(1);
            return [a, s, x, y, st](long n) {
                auto& [sx, sy, xn, yn] = *st;
                xn *= x;
                yn *= y;
                Real v = (yn * sx + xn * sy) / pow(a + n, static_cast<long>(s));
                sx = x * (sx + Real(1) / n);
                sy = y * (sy + Real(1) / n);
                return v;
            };
        },
        ratio, ctx);
}

void check_a(const ParamPoint& pt, const PrecisionContext&) { require_greater(pt.real('a'), -1, "a"); }

void check_non_integer(const ParamPoint& pt, const PrecisionContext& ctx) {
    require_non_integer(pt.real('a'), ctx, "a");
}

// ---- (2.13)

Approx e213_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    return series(partial_term({hurwitz_partial(2 * m, Real(0), ctx)},
                               [a](const Real& t, const std::vector<Real>& P) { return P[0] / (t * (t * t - a * a)); },
                               3),
                  ctx);
}

Approx e213_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    const Approx a2(a * a);
    Approx r = quadratic_series(2 * m + 1, 1, a, ctx) / 2;
    r -= cot_pi(a, ctx) / (a2 * 4) * odd_difference(2 * m, a, ctx);
    Approx inner;
    for (int k = 1; k <= m; ++k) inner += zeta(2 * k, ctx) * even_difference(2 * m - 2 * k + 1, a, ctx);
    r += inner / (a2 * 2);
    r += zeta(2 * m + 1, ctx) * m / a2;
    r -= even_difference(2 * m + 1, a, ctx) / (a2 * 4);
    return r;
}

// ---- (2.14), (2.16)

Approx e214_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    const int s = pt.integer('s');
    return series(partial_term({hurwitz_partial(2 * m + 1, Real(0), ctx)},
                               [a, s](const Real& t, const std::vector<Real>& P) {
                                   return P[0] / (pow(t, 2L * s) * (t * t - a * a));
                               },
                               2 * s + 2),
                  ctx);
}

Approx e214_rhs_impl(const ParamPoint& pt, const PrecisionContext& ctx, bool corrected) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    const int s = pt.integer('s');
    auto inv_a = [&](int e) { return Approx(1) / power(a, Real(e)); };

    Approx r = quadratic_series(2 * s + 2 * m + 1, 1, a, ctx) / 2;
    for (int n = 1; n <= s; ++n) {
        for (int k = 1; k <= n; ++k) {
            const long b = corrected ? binomial(2 * m + 2 * k - 2, 2 * k - 2) : binomial(2 * m + 2 * k - 1, 2 * k - 1);
            r += zc(2 * m + 2 * k - 1, ctx) * zc(2 * n - 2 * k + 2, ctx) * b * inv_a(2 * s - 2 * n + 2);
        }
    }
    if (s > 0) {
        const Real a2s = pow(a, 2L * s);
        r += zc(2 * m + 1, ctx) *
             rs([a, s, a2s](const Real& n) { return (1 / pow(n, 2L * s) - 1 / a2s) / (n * n - a * a); }, 2, ctx);
    }
    Approx half;
    for (int k = 2; k <= s + 1; ++k) {
        half += zc(2 * m + 2 * k - 1, ctx) * binomial(2 * m + 2 * k - 2, 2 * k - 2) * inv_a(2 * s - 2 * k + 4);
    }
    r -= half / 2;
    r += cot_pi(a, ctx) * inv_a(2 * s + 1) / 4 * even_difference(2 * m + 1, a, ctx);
    half = Approx();
    for (int j = 1; j <= s; ++j) {
        half += zc(2 * m + 2 * j + 1, ctx) * binomial(2 * m + 2 * j, 2 * j - 1) * inv_a(2 * s + 2 - 2 * j);
    }
    r -= half / 2;
    for (int k = 1; k <= m; ++k) {
        for (int j = 1; j <= s; ++j) {
            r += zc(2 * k, ctx) * binomial(2 * m - 2 * k + 2 * j, 2 * j - 1) * zc(2 * m + 2 * j - 2 * k + 1, ctx) *
                 inv_a(2 * s + 2 - 2 * j);
        }
    }
    Approx last;
    for (int k = 0; k <= m; ++k) last += zc(2 * k, ctx) * odd_difference(2 * m - 2 * k + 2, a, ctx);
    r -= last * inv_a(2 * s + 1) / 2;
    return r;
}

Approx e214_rhs(const ParamPoint& pt, const PrecisionContext& ctx) { return e214_rhs_impl(pt, ctx, false); }
Approx e214_rhs_corrected(const ParamPoint& pt, const PrecisionContext& ctx) { return e214_rhs_impl(pt, ctx, true); }

Approx e216_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    return series(partial_term({hurwitz_partial(2 * m + 1, Real(0), ctx)},
                               [a](const Real& t, const std::vector<Real>& P) { return P[0] / (t * t - a * a); }, 2),
                  ctx);
}

Approx e216_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    Approx r = quadratic_series(2 * m + 1, 1, a, ctx) / 2;
    Approx inner;
    for (int k = 0; k <= m; ++k) inner += zc(2 * k, ctx) * odd_difference(2 * m - 2 * k + 2, a, ctx);
    r -= inner / (Approx(a) * 2);
    r += cot_pi(a, ctx) / (Approx(a) * 4) * even_difference(2 * m + 1, a, ctx);
    return r;
}

// ---- (2.17), (2.21)

void check_polylog(const ParamPoint& pt, const PrecisionContext& ctx) {
    check_a(pt, ctx);
    for (char f : std::string("xy")) {
        if (!pt.has(f)) continue;
        const Real v = pt.real(f);
        if (!(v >= Real(-1) && v < Real(1))) throw DomainError(std::string(1, f) + " must lie in [-1, 1)");
        if (v == Real(-1)) throw DomainError(std::string(1, f) + " = -1 is not supported by the power-series evaluator");
    }
}

Approx e217_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    return mixed_polylog_sum(pt.real('a'), pt.integer('s'), pt.real('x'), pt.real('y'), ctx);
}

Approx e217_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    const Real x = pt.real('x');
    const Real y = pt.real('y');
    Approx r = Li(s + 1, a, x * y, ctx) * s;
    for (int j = 1; j <= s; ++j) r -= Li(j, a, x, ctx) * Li(s + 1 - j, a, y, ctx);
    r += Li(s, a, x * y, ctx) * (Li1(x, ctx) + Li1(y, ctx));
    return r;
}

Approx e221_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real x = pt.real('x');
    return mixed_polylog_sum(pt.real('a'), pt.integer('s'), x, x, ctx) / 2;
}

Approx e221_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    const Real x = pt.real('x');
    Approx r = Li(s + 1, a, x * x, ctx) * s / 2;
    r += Li(s, a, x * x, ctx) * Li1(x, ctx);
    r -= Li(s, a, x, ctx) * Li(1, a, x, ctx);
    Approx inner;
    for (int j = 2; j <= s - 1; ++j) inner += Li(j, a, x, ctx) * Li(s + 1 - j, a, x, ctx);
    return r - inner / 2;
}

// ---- (2.22), (2.24) and the a = 0 displays

Approx e222_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    return series(alternating_harmonic_term(
                      [a, s](const Real& n, const Real& L) { return L / pow(n + a, static_cast<long>(s)); }, s),
                  ctx);
}

Approx e222_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    const Real q = a + 1;
    Approx inner;
    for (int j = 1; j <= s - 2; ++j) inner += alt_hurwitz(s - j, q, ctx) * alt_hurwitz(j + 1, q, ctx);
    Approx r = inner / 2;
    r -= hurwitz(s + 1, q, ctx) * s / 2;
    r += hurwitz(s, q, ctx) * log2_value();
    r += alt_hurwitz(s, q, ctx) * alt_hurwitz(1, q, ctx);
    r += rational_series([a, s](const Real& n) { return 1 / (n * pow(n + a, static_cast<long>(s))); }, s + 1, ctx,
                         true);
    return r;
}

Approx e224_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    return harmonic_sum(pt.integer('s'), pt.real('a'), ctx);
}

Approx e224_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    const Real q = a + 1;
    Approx r = hurwitz(s + 1, q, ctx) * s / 2;
    Approx inner;
    for (int j = 1; j <= s - 2; ++j) inner += hurwitz(s - j, q, ctx) * hurwitz(j + 1, q, ctx);
    r -= inner / 2;
    if (!a.is_zero()) r += Approx(a) * hurwitz(s, q, ctx) * aux(a, ctx);
    r += rs([a, s](const Real& n) { return 1 / (n * pow(n + a, static_cast<long>(s))); }, s + 1, ctx);
    return r;
}

Approx eh_lhs(const ParamPoint& pt, const PrecisionContext& ctx) { return harmonic_sum(pt.integer('s'), Real(0), ctx); }

Approx eh_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const int s = pt.integer('s');
    Approx r = zeta(s + 1, ctx) * (s + 2);
    for (int i = 1; i <= s - 2; ++i) r -= zeta(s - i, ctx) * zeta(i + 1, ctx);
    return r / 2;
}

Approx el_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const int s = pt.integer('s');
    return series(
        alternating_harmonic_term([s](const Real& n, const Real& L) { return L / pow(n, static_cast<long>(s)); }, s),
        ctx);
}

Approx el_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const int s = pt.integer('s');
    Approx r = zeta(s, ctx) * log2_value();
    r -= zeta(s + 1, ctx) * s / 2;
    r += alt_zeta_value(s + 1, ctx);
    Approx inner;
    for (int j = 1; j <= s; ++j) inner += alt_zeta_value(s - j + 1, ctx) * alt_zeta_value(j, ctx);
    return r + inner / 2;
}

// ---- (2.28), (2.30)

Approx e228_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    return series(partial_term({harmonic_partial(ctx)},
                               [a](const Real& t, const std::vector<Real>& P) { return P[0] / (t * t - a * a); }, 2),
                  ctx);
}

Approx e228_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Approx A = quadratic_series(0, 1, a, ctx);
    const Approx first = rs([a](const Real& n) { return n / pow(n * n - a * a, 2L); }, 3, ctx);
    return first + (Approx(1) - Approx(a * a) * A) * quadratic_series(1, 1, a, ctx);
}

Approx e230_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    return series(partial_term({harmonic_partial(ctx)},
                               [a](const Real& t, const std::vector<Real>& P) {
                                   return P[0] / (t * (t * t - a * a));
                               },
                               3),
                  ctx);
}

Approx e230_rhs_impl(const ParamPoint& pt, const PrecisionContext& ctx, bool corrected) {
    const Real a = pt.real('a');
    const Approx a2(a * a);
    const Approx A = quadratic_series(0, 1, a, ctx);
    const Approx B = quadratic_series(2, 1, a, ctx);
    const Approx last = corrected ? quadratic_series(1, 1, a, ctx) : B;
    Approx r = quadratic_series(0, 2, a, ctx) * 3 / 2;
    r += B;
    r -= A * A / 2;
    r -= a2 * quadratic_series(2, 2, a, ctx) / 2;
    r -= a2 * last * last / 2;
    return r;
}

Approx e230_rhs(const ParamPoint& pt, const PrecisionContext& ctx) { return e230_rhs_impl(pt, ctx, false); }
Approx e230_rhs_corrected(const ParamPoint& pt, const PrecisionContext& ctx) { return e230_rhs_impl(pt, ctx, true); }

// ---- grids

ParamPoint point(std::optional<mpq_class> a, std::optional<int> s = {}, std::optional<int> m = {}) {
    ParamPoint pt;
    pt.a = std::move(a);
    pt.s = s;
    pt.m = m;
    return pt;
}

std::vector<ParamPoint> grid_am(int m_min, bool with_s) {
    std::vector<ParamPoint> out;
    for (const auto& a : grid_a()) {
        if (!abs_below_one(a)) continue;
        for (int m : grid_m()) {
            if (m < m_min) continue;
            if (!with_s) {
                out.push_back(point(a, {}, m));
                continue;
            }
            for (int s : grid_sp()) out.push_back(point(a, s, m));
        }
    }
    return out;
}

std::vector<ParamPoint> grid_as() {
    std::vector<ParamPoint> out;
    for (const auto& a : grid_a()) {
        for (int s : grid_sp()) out.push_back(point(a, s));
    }
    return out;
}

std::vector<ParamPoint> grid_s() {
    std::vector<ParamPoint> out;
    for (int s : grid_sp()) out.push_back(point({}, s));
    return out;
}

std::vector<ParamPoint> grid_a_only(bool below_one) {
    std::vector<ParamPoint> out;
    for (const auto& a : grid_a()) {
        if (!below_one || abs_below_one(a)) out.push_back(point(a));
    }
    return out;
}

}  // namespace

void register_linear(std::vector<IdentityEntry>& out) {
    auto s_at_least = [](int lo) {
        return [lo](const ParamPoint& pt, const PrecisionContext&) { require_at_least(pt.integer('s'), lo, "s"); };
    };

    out.push_back({.id = "E2.13",
                   .equation = "Eq. (2.13), Theorem 2.3",
                   .quote = "reducible to zeta values and rational",
                   .signature = "m >= 1, a real non-integer, a > -1",
                   .fields = "am",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           require_at_least(pt.integer('m'), 1, "m");
                           check_a(pt, ctx);
                           check_non_integer(pt, ctx);
                       },
                   .lhs = e213_lhs,
                   .rhs = e213_rhs,
                   .grid = [] { return grid_am(1, false); }});

    out.push_back({.id = "E2.14",
                   .equation = "Eq. (2.14), Theorem 2.4",
                   .quote = "ζ(0)=−1/2 should be used",
                   .signature = "m >= 0, s >= 0, a non-integer, a > -1",
                   .fields = "asm",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           require_at_least(pt.integer('m'), 0, "m");
                           require_at_least(pt.integer('s'), 0, "s");
                           check_a(pt, ctx);
                           check_non_integer(pt, ctx);
                       },
                   .lhs = e214_lhs,
                   .rhs = e214_rhs,
                   .grid = [] { return grid_am(0, true); },
                   .erratum = Erratum{"first double sum: binomial C(2m+2k-1, 2k-1) replaced by C(2m+2k-2, 2k-2)",
                                      e214_rhs_corrected}});

    out.push_back({.id = "E2.16",
                   .equation = "Eq. (2.16), Corollary 2.5",
                   .quote = "Taking s=0 in Theorem 2.4",
                   .signature = "m >= 0, a non-integer, a > -1",
                   .fields = "am",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           require_at_least(pt.integer('m'), 0, "m");
                           check_a(pt, ctx);
                           check_non_integer(pt, ctx);
                       },
                   .lhs = e216_lhs,
                   .rhs = e216_rhs,
                   .grid = [] { return grid_am(0, false); }});

    out.push_back({.id = "E2.17",
                   .equation = "Eq. (2.17), Theorem 2.6",
                   .quote = "the parametric polylogarithm function",
                   .signature = "s >= 1, a > -1, x, y in (-1, 1)",
                   .fields = "axys",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           require_at_least(pt.integer('s'), 1, "s");
                           check_polylog(pt, ctx);
                       },
                   .lhs = e217_lhs,
                   .rhs = e217_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> out;
                           for (const auto& a : grid_a()) {
                               for (int s : grid_sp()) {
                                   for (const auto& x : grid_x()) {
                                       for (const auto& y : grid_x()) {
                                           ParamPoint pt = point(a, s);
                                           pt.x = x;
                                           pt.y = y;
                                           out.push_back(pt);
                                       }
                                   }
                               }
                           }
                           return out;
                       }});

    out.push_back({.id = "E2.21",
                   .equation = "Eq. (2.21)",
                   .quote = "terms j=1 and j=s were separated",
                   .signature = "s >= 2, a > -1, x in (-1, 1)",
                   .fields = "axs",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           require_at_least(pt.integer('s'), 2, "s");
                           check_polylog(pt, ctx);
                       },
                   .lhs = e221_lhs,
                   .rhs = e221_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> out;
                           for (const auto& a : grid_a()) {
                               for (int s : grid_sp()) {
                                   for (const auto& x : grid_x()) {
                                       ParamPoint pt = point(a, s);
                                       pt.x = x;
                                       out.push_back(pt);
                                   }
                               }
                           }
                           return out;
                       }});

    auto as_check = [](const ParamPoint& pt, const PrecisionContext& ctx) {
        require_at_least(pt.integer('s'), 2, "s");
        check_a(pt, ctx);
    };

    out.push_back({.id = "E2.22",
                   .equation = "Eq. (2.22)",
                   .quote = "Taking x=−1 in (2.21)",
                   .signature = "s >= 2, a > -1",
                   .fields = "as",
                   .check = as_check,
                   .lhs = e222_lhs,
                   .rhs = e222_rhs,
                   .grid = grid_as});

    out.push_back({.id = "E2.24",
                   .equation = "Eq. (2.24) (= Eq. (1.8))",
                   .quote = "letting x→1 in (2.21)",
                   .signature = "s >= 2, a > -1",
                   .fields = "as",
                   .check = as_check,
                   .lhs = e224_lhs,
                   .rhs = e224_rhs,
                   .grid = grid_as});

    out.push_back({.id = "E2.28",
                   .equation = "Eq. (2.28)",
                   .quote = "Letting x approach 1 in (2.26)",
                   .signature = "a non-integer, a > -1",
                   .fields = "a",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           check_a(pt, ctx);
                           check_non_integer(pt, ctx);
                       },
                   .lhs = e228_lhs,
                   .rhs = e228_rhs,
                   .grid = [] { return grid_a_only(true); }});

    out.push_back({.id = "E2.30",
                   .equation = "Eq. (2.30)",
                   .quote = "we can deduce the result",
                   .signature = "a non-integer, a > -1",
                   .fields = "a",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           check_a(pt, ctx);
                           check_non_integer(pt, ctx);
                       },
                   .lhs = e230_lhs,
                   .rhs = e230_rhs,
                   .grid = [] { return grid_a_only(false); },
                   .erratum = Erratum{"last term: (sum 1/(n^2(n^2-a^2)))^2 replaced by (sum 1/(n(n^2-a^2)))^2",
                                      e230_rhs_corrected}});

    out.push_back({.id = "EH.s",
                   .equation = "unnumbered display after (2.24), sum H_n/n^s",
                   .quote = "deduce the well-known identities",
                   .signature = "s >= 2",
                   .fields = "s",
                   .check = s_at_least(2),
                   .lhs = eh_lhs,
                   .rhs = eh_rhs,
                   .grid = grid_s});

    out.push_back({.id = "EL.s",
                   .equation = "unnumbered display after (2.24), sum L_n(1)/n^s",
                   .quote = "deduce the well-known identities",
                   .signature = "s >= 2",
                   .fields = "s",
                   .check = s_at_least(2),
                   .lhs = el_lhs,
                   .rhs = el_rhs,
                   .grid = grid_s});
}

}  // namespace eulersums::detail
