#include "sums.hpp"

namespace eulersums::detail {

namespace {

// sum H_n^2 / (n+a)^j
Approx harmonic_square_sum(int j, const Real& a, const PrecisionContext& ctx) {
    return memo("harmonic_square_sum|" + std::to_string(j) + "|" + key_of(a), ctx, [&] {
        return series(partial_term({harmonic_partial(ctx)},
                                   [a, j](const Real& t, const std::vector<Real>& P) {
                                       return P[0] * P[0] / pow(t + a, static_cast<long>(j));
                                   },
                                   j),
                      ctx);
    });
}

// sum H_n / (n (n+a)^j)
Approx harmonic_over_n_power_sum(int j, const Real& a, const PrecisionContext& ctx) {
    return series(partial_term({harmonic_partial(ctx)},
                               [a, j](const Real& t, const std::vector<Real>& P) {
                                   return P[0] / (t * pow(t + a, static_cast<long>(j)));
                               },
                               j + 1),
                  ctx);
}

// (3/2) sum (H_n^2 - zeta_n(2)) / (n+a)^s
Approx quadratic_lhs(const Real& a, int s, const PrecisionContext& ctx) {
    Approx v = series(partial_term({harmonic_partial(ctx), hurwitz_partial(2, Real(0), ctx)},
                                   [a, s](const Real& t, const std::vector<Real>& P) {
                                       return (P[0] * P[0] - P[1]) / pow(t + a, static_cast<long>(s));
                                   },
                                   s),
                      ctx);
    return v * 3 / 2;
}

// sum (H_n^3 - 3 H_n zeta_n(2)) / (n+a)^s
Approx cubic_lhs(const Real& a, int s, const PrecisionContext& ctx) {
    return series(partial_term({harmonic_partial(ctx), hurwitz_partial(2, Real(0), ctx)},
                               [a, s](const Real& t, const std::vector<Real>& P) {
                                   return P[0] * (P[0] * P[0] - 3 * P[1]) / pow(t + a, static_cast<long>(s));
                               },
                               s),
                  ctx);
}

Approx e31_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    return quadratic_lhs(pt.real('a'), pt.integer('s'), ctx);
}

Approx e31_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    Approx r = harmonic_sum(s + 1, a, ctx) * s;
    r += harmonic_over_n_power_sum(s, a, ctx);
    for (int j = 2; j <= s - 1; ++j) r -= harmonic_sum(j, a, ctx) * hurwitz(s + 1 - j, a + 1, ctx);
    if (!a.is_zero()) {
        r += Approx(a) * harmonic_sum(s, a, ctx) * aux(a, ctx);
        r += Approx(a) * hurwitz(s, a + 1, ctx) * harmonic_over_n_sum(a, ctx);
    }
    return r;
}

Approx e312_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    return quadratic_lhs(Real(0), pt.integer('s'), ctx);
}

Approx e312_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const int s = pt.integer('s');
    Approx r = harmonic_sum(s + 1, Real(0), ctx) * (s + 1);
    for (int j = 2; j <= s - 1; ++j) r -= harmonic_sum(j, Real(0), ctx) * zeta(s + 1 - j, ctx);
    return r;
}

Approx e313_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    return cubic_lhs(pt.real('a'), pt.integer('s'), ctx);
}

Approx e313_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int s = pt.integer('s');
    Approx r = harmonic_square_sum(s + 1, a, ctx) * s;
    for (int j = 2; j <= s - 1; ++j) r -= harmonic_sum(j, a, ctx) * harmonic_sum(s + 1 - j, a, ctx);
    if (!a.is_zero()) r += Approx(a) * harmonic_sum(s, a, ctx) * harmonic_over_n_sum(a, ctx) * 2;
    return r;
}

Approx e323_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    return cubic_lhs(Real(0), pt.integer('s'), ctx);
}

Approx e323_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    ParamPoint at_zero = pt;
    at_zero.a = mpq_class(0);
    return e313_rhs(at_zero, ctx);
}

std::vector<ParamPoint> grid_as() {
    std::vector<ParamPoint> out;
    for (const auto& a : grid_a()) {
        for (int s : grid_sp()) {
            ParamPoint pt;
            pt.a = a;
            pt.s = s;
            out.push_back(pt);
        }
    }
    return out;
}

std::vector<ParamPoint> grid_s() {
    std::vector<ParamPoint> out;
    for (int s : grid_sp()) {
        ParamPoint pt;
        pt.s = s;
        out.push_back(pt);
    }
    return out;
}

void check_as(const ParamPoint& pt, const PrecisionContext&) {
    require_at_least(pt.integer('s'), 2, "s");
    require_greater(pt.real('a'), -1, "a");
}

void check_s(const ParamPoint& pt, const PrecisionContext&) { require_at_least(pt.integer('s'), 2, "s"); }

}  // namespace

void register_cubic(std::vector<IdentityEntry>& out) {
    out.push_back({.id = "E3.1",
                   .equation = "Eq. (3.1), Theorem 3.1",
                   .quote = "method of constructing function",
                   .signature = "s >= 2, a > -1",
                   .fields = "as",
                   .check = check_as,
                   .lhs = e31_lhs,
                   .rhs = e31_rhs,
                   .grid = grid_as});

    out.push_back({.id = "E3.12",
                   .equation = "Eq. (3.12)",
                   .quote = "that well-known identity",
                   .signature = "s >= 2",
                   .fields = "s",
                   .check = check_s,
                   .lhs = e312_lhs,
                   .rhs = e312_rhs,
                   .grid = grid_s});

    out.push_back({.id = "E3.13",
                   .equation = "Eq. (3.13), Theorem 3.2",
                   .quote = "evaluate the parametric cubic Euler sums",
                   .signature = "s >= 2, a > -1",
                   .fields = "as",
                   .check = check_as,
                   .lhs = e313_lhs,
                   .rhs = e313_rhs,
                   .grid = grid_as});

    out.push_back({.id = "E3.23",
                   .equation = "Eq. (3.23)",
                   .quote = "Putting a=0 in (3.13)",
                   .signature = "s >= 2",
                   .fields = "s",
                   .check = check_s,
                   .lhs = e323_lhs,
                   .rhs = e323_rhs,
                   .grid = grid_s});
}

}  // namespace eulersums::detail
