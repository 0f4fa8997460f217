#include "sums.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>

namespace eulersums::detail {

namespace {

Approx rs(RealFn f, double decay, const PrecisionContext& ctx) { return rational_series(std::move(f), decay, ctx); }

Approx zeta_a(long s, const Real& a, const PrecisionContext& ctx) { return hurwitz(s, a + 1, ctx); }

// sum 1/((n+u)(n+v))
Approx pair_series(const Real& u, const Real& v, const PrecisionContext& ctx) {
    return memo("pair|" + key_of(u) + "|" + key_of(v), ctx,
                [&] { return rs([u, v](const Real& n) { return 1 / ((n + u) * (n + v)); }, 2, ctx); });
}

// sum 1/(n^2-a^2)^k
Approx even_power_series(int k, const Real& a, const PrecisionContext& ctx) {
    return memo("even_power|" + std::to_string(k) + "|" + key_of(a), ctx,
                [&] { return rs([a, k](const Real& n) { return 1 / pow(n * n - a * a, static_cast<long>(k)); }, 2 * k, ctx); });
}

// sum (3n^2+a^2) y^n / (n^2-a^2)^3, y = 1 gives the plain series
Approx cubed_series(const Real& a, const Real& y, const PrecisionContext& ctx) {
    if (y == Real(1)) {
        return rs([a](const Real& n) { return (3 * n * n + a * a) / pow(n * n - a * a, 3L); }, 4, ctx);
    }
    return geometric(
        [a, y]() -> Sequence {
            auto yn = std::make_shared<Real>(1);
            return [a, y, yn](long n) {
                *yn *= y;
                const Real t(n);
                return (3 * t * t + a * a) * *yn / pow(t * t - a * a, 3L);
            };
        },
        y.to_double(), ctx);
}

void check_ab(const ParamPoint& pt) {
    require_greater(pt.real('a'), -1, "a");
    require_greater(pt.real('b'), -1, "b");
    require_greater(pt.real('a') + pt.real('b'), -1, "a+b");
}

void check_x(const ParamPoint& pt) { require_unit_interval(pt.real('x'), "x"); }

// ---- (4.4)

Approx e44_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const Real x = pt.real('x');
    const int m = pt.integer('m');
    const int n = pt.integer('n');
    PrecisionScope scope(ctx.working_bits());
    const double lx = -std::log(x.to_double());
    const long kmax = static_cast<long>(std::ceil(ctx.working_bits() * std::log(2.0) / lx)) + 16;
    auto coef = std::make_shared<std::vector<Real>>();
    coef->reserve(static_cast<std::size_t>(kmax));
    for (long k = 1; k <= kmax; ++k) coef->push_back(1 / pow(a + k, static_cast<long>(m)));
    const Real expo = a + b + n;
    const long bits = ctx.working_bits();
    // H_m(t,a) t^(n+b-1) = t^(a+b+n) sum_k c_k t^(k-1)
    auto f = [coef, expo, bits](const Real& t) {
        const double lt = -std::log(t.to_double());
        long K = static_cast<long>(coef->size());
        if (lt > 0) K = std::min<long>(K, static_cast<long>(std::ceil(bits * std::log(2.0) / lt)) + 16);
        Real acc(0);
        for (long k = K; k >= 1; --k) {
            acc *= t;
            acc += (*coef)[static_cast<std::size_t>(k - 1)];
        }
        return acc * pow(t, expo);
    };
    return Approx(integrate_adaptive(f, Real(0), x, ctx));
}

Approx e44_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const Real x = pt.real('x');
    const int m = pt.integer('m');
    const int n = pt.integer('n');
    const Approx xnb = power(x, b + n);
    const Approx nb(b + n);
    Approx r;
    Approx nbk(1);
    for (int k = 1; k <= m - 1; ++k) {
        nbk = nbk * nb;
        r += xnb / nbk * Hcap(m + 1 - k, x, a, ctx) * sgn(k - 1);
    }
    Approx finite;
    for (int k = 1; k <= n; ++k) finite += power(x, a + b + k) / Approx(a + b + k);
    Approx bracket = xnb * Hcap(1, x, a, ctx) + finite - Hcap(1, x, a + b, ctx);
    r += bracket / (nbk * nb) * sgn(m - 1);
    return r;
}

// ---- (4.7), (4.9)

Approx e47_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const Real x = pt.real('x');
    const int m = pt.integer('m');
    const int p = pt.integer('p');
    const long sp = sgn(p - 1), sm = sgn(m - 1);
    const Approx total = zeta_a(m + p, a, ctx) * sp - zeta_a(m + p, b, ctx) * sm;
    return weighted_truncated_log(
        total,
        [a, b, m, p, sp, sm]() -> Sequence {
            return [a, b, m, p, sp, sm](long n) {
                return sp / pow(a + n, static_cast<long>(m + p)) - sm / pow(b + n, static_cast<long>(m + p));
            };
        },
        x, a + b, ctx);
}

Approx e47_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const Real x = pt.real('x');
    const int m = pt.integer('m');
    const int p = pt.integer('p');
    Approx r;
    for (int k = 1; k <= m - 1; ++k) r += Hcap(m + 1 - k, x, a, ctx) * Hcap(p + k, x, b, ctx) * sgn(k - 1);
    for (int k = 1; k <= p - 1; ++k) r -= Hcap(p + 1 - k, x, b, ctx) * Hcap(m + k, x, a, ctx) * sgn(k - 1);
    const Approx h1c = Hcap(1, x, a + b, ctx);
    r += (Hcap(p + m, x, b, ctx) * Hcap(1, x, a, ctx) - zeta_a(p + m, b, ctx) * h1c) * sgn(m - 1);
    r -= (Hcap(p + m, x, a, ctx) * Hcap(1, x, b, ctx) - zeta_a(p + m, a, ctx) * h1c) * sgn(p - 1);
    return r;
}

Approx e49_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const int m = pt.integer('m');
    const int p = pt.integer('p');
    const long sp = sgn(p - 1), sm = sgn(m - 1);
    return series(partial_term({hurwitz_partial(1, a + b, ctx)},
                               [a, b, m, p, sp, sm](const Real& t, const std::vector<Real>& P) {
                                   return (sp / pow(t + a, static_cast<long>(m + p)) -
                                           sm / pow(t + b, static_cast<long>(m + p))) *
                                          P[0];
                               },
                               m + p),
                  ctx);
}

Approx e49_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const int m = pt.integer('m');
    const int p = pt.integer('p');
    Approx r;
    for (int k = 1; k <= m - 1; ++k) r += zeta_a(m + 1 - k, a, ctx) * zeta_a(p + k, b, ctx) * sgn(k - 1);
    for (int k = 1; k <= p - 1; ++k) r -= zeta_a(p + 1 - k, b, ctx) * zeta_a(m + k, a, ctx) * sgn(k - 1);
    r += Approx(b) * zeta_a(m + p, b, ctx) * pair_series(a, a + b, ctx) * sgn(m - 1);
    r -= Approx(a) * zeta_a(m + p, a, ctx) * pair_series(b, a + b, ctx) * sgn(p - 1);
    return r;
}

// ---- (4.10) - (4.13)

void check_small_a(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    require_below_one(a, "a");
    require_non_integer(a, ctx, "a");
}

Approx e410_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    return series(partial_term({harmonic_partial(ctx)},
                               [a](const Real& t, const std::vector<Real>& P) {
                                   return t * P[0] / pow(t * t - a * a, 2L);
                               },
                               3),
                  ctx);
}

Approx e410_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    return (hurwitz(2, 1 + a, ctx) * aux(-a, ctx) + hurwitz(2, 1 - a, ctx) * aux(a, ctx)) / 4;
}

Approx e411_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real x = pt.real('x');
    return geometric(
        [a, x]() -> Sequence {
            auto st = std::make_shared<std::array<Real, 2>>();
            (*st)[1] = Real(1);
            return [a, x, st](long n) {
                auto& [sx, xn] = *st;
                xn *= x;
                const Real t(n);
                Real v = t * xn * sx / pow(t * t - a * a, 2L);
                sx = x * (sx + Real(1) / n);
                return v;
            };
        },
        x.to_double(), ctx);
}

Approx e411_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real x = pt.real('x');
    const Real x2 = x * x;
    const Approx l1 = Li1(x, ctx);
    const Approx minus = Li(2, -a, x2, ctx) * l1 - Li(2, -a, x, ctx) * Li(1, -a, x, ctx);
    const Approx plus = Li(2, a, x2, ctx) * l1 - Li(2, a, x, ctx) * Li(1, a, x, ctx);
    return (minus - plus) / (Approx(a) * 4) + cubed_series(a, x2, ctx) / 2;
}

Approx e412_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    Approx r = cubed_series(a, Real(1), ctx) / 2;
    r -= hurwitz(2, 1 - a, ctx) * aux(-a, ctx) / 4;
    r += even_power_series(2, a, ctx);
    r -= hurwitz(2, 1 + a, ctx) * aux(a, ctx) / 4;
    return r;
}

Approx e413_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Approx A1 = even_power_series(1, a, ctx);
    return even_power_series(2, a, ctx) * 5 / 2 - A1 * A1;
}

Approx e413_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    if (a.is_zero()) return Approx(0);
    const Approx A1 = even_power_series(1, a, ctx);
    const Approx A2 = even_power_series(2, a, ctx);
    const Approx A3 = even_power_series(3, a, ctx);
    return Approx(a * a) * (A1 * A2 - A3) * 2;
}

// ---- (4.14), (4.15)

Approx e414_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real x = pt.real('x');
    const int m = pt.integer('m');
    const long e = 2L * m + 1;
    const Approx shifted = weighted_truncated_log(
        zeta_a(e, a, ctx), [a, e]() -> Sequence { return [a, e](long n) { return 1 / pow(a + n, e); }; }, x, 2 * a,
        ctx);
    return shifted / power(x, 2 * a);
}

Approx e414_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const Real x = pt.real('x');
    const int m = pt.integer('m');
    Approx r;
    for (int k = 1; k <= m - 1; ++k) r += Li(m + 1 - k, a, x, ctx) * Li(m + 1 + k, a, x, ctx) * sgn(m + k - 1);
    r -= Li(2 * m + 1, a, x, ctx) * Li(1, a, x, ctx) - zeta_a(2 * m + 1, a, ctx) * Li(1, 2 * a, x, ctx);
    const Approx top = Li(m + 1, a, x, ctx);
    r += top * top * sgn(m - 1) / 2;
    return r;
}

Approx e415_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    return series(partial_term({hurwitz_partial(1, 2 * a, ctx)},
                               [a, m](const Real& t, const std::vector<Real>& P) {
                                   return P[0] / pow(t + a, 2L * m + 1);
                               },
                               2 * m + 1),
                  ctx);
}

Approx e415_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    Approx r;
    for (int k = 1; k <= m - 1; ++k) r += zeta_a(m + 1 - k, a, ctx) * zeta_a(m + 1 + k, a, ctx) * sgn(m + k - 1);
    r -= Approx(a) * zeta_a(2 * m + 1, a, ctx) * pair_series(a, 2 * a, ctx);
    const Approx top = zeta_a(m + 1, a, ctx);
    r += top * top * sgn(m - 1) / 2;
    return r;
}

// ---- (4.16), (4.17); odd selects (4.17) with q = p+2m+1

int q_of(const ParamPoint& pt, bool odd) { return pt.integer('p') + 2 * pt.integer('m') + (odd ? 1 : 0); }

Approx e416_lhs(const ParamPoint& pt, const PrecisionContext& ctx, bool odd) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const Real x = pt.real('x');
    const int p = pt.integer('p');
    const int q = q_of(pt, odd);
    const long sign = odd ? -1 : 1;  // coefficient of the second term is -sign
    const Approx total = hurwitz_partial_sum(q, b, p, ctx) - hurwitz_partial_sum(p, a, q, ctx) * sign;
    const Approx v = weighted_truncated_log(
        total,
        [a, b, p, q, sign]() -> Sequence {
            auto st = std::make_shared<std::array<Real, 2>>();
            return [a, b, p, q, sign, st](long n) {
                auto& [zq, zp] = *st;
                zq += 1 / pow(b + n, static_cast<long>(q));
                zp += 1 / pow(a + n, static_cast<long>(p));
                return zq / pow(b + n, static_cast<long>(p)) - sign * (zp / pow(a + n, static_cast<long>(q)));
            };
        },
        x, a + b, ctx);
    return v * sgn(p - 1);
}

Approx e416_rhs(const ParamPoint& pt, const PrecisionContext& ctx, bool odd) {
    const Real a = pt.real('a');
    const Real b = pt.real('b');
    const Real x = pt.real('x');
    const int p = pt.integer('p');
    const int q = q_of(pt, odd);
    auto G = [&](int u, const Real& c, int i) { return hurwitz_partial_power_sum(u, c, i, x, ctx); };
    auto E = [&](int u, const Real& c, int i) { return hurwitz_partial_sum(u, c, i, ctx); };
    Approx r;
    for (int i = 1; i <= q - 1; ++i) r += Hcap(q + 1 - i, x, b, ctx) * G(p, a, i) * sgn(i - 1);
    for (int i = 1; i <= p - 1; ++i) r -= Hcap(p + 1 - i, x, a, ctx) * G(q, b, i) * sgn(i - 1);
    const Approx h1c = Hcap(1, x, a + b, ctx);
    const Approx first = Hcap(1, x, b, ctx) * G(p, a, q) - h1c * E(p, a, q);
    const Approx second = Hcap(1, x, a, ctx) * G(q, b, p) - h1c * E(q, b, p);
    if (!odd) {
        r += (first - second) * sgn(p - 1);
    } else {
        r += (first + second) * sgn(p);
    }
    return r;
}

// ---- (4.21)

Approx e421_lhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    const int p = pt.integer('p');
    const Real zm = hurwitz_zeta(static_cast<long>(m), a + 1, ctx);
    const Real zp = hurwitz_zeta(static_cast<long>(p), a + 1, ctx);
    return series(partial_term({hurwitz_partial(m, a, ctx), hurwitz_partial(p, a, ctx)},
                               [a, zm, zp](const Real& t, const std::vector<Real>& P) {
                                   return (zm * P[1] - zp * P[0]) / (t + a);
                               },
                               std::min(m, p)),
                  ctx);
}

Approx e421_rhs(const ParamPoint& pt, const PrecisionContext& ctx) {
    const Real a = pt.real('a');
    const int m = pt.integer('m');
    const int p = pt.integer('p');
    Approx r = zeta_a(p, a, ctx) * hurwitz_partial_sum(1, a, m, ctx);
    r -= zeta_a(m, a, ctx) * hurwitz_partial_sum(1, a, p, ctx);
    r += zeta_a(m, a, ctx) * zeta_a(p + 1, a, ctx) - zeta_a(m + 1, a, ctx) * zeta_a(p, a, ctx);
    return r;
}

// ---- (4.22) - (4.25); odd selects q = p+2m+1

Approx e422_lhs_at(const Real& a, int p, int q, bool odd, const PrecisionContext& ctx) {
    const long sign = odd ? -1 : 1;
    const Approx v = series(partial_term({hurwitz_partial(q, a, ctx), hurwitz_partial(p, a, ctx),
                                          hurwitz_partial(1, 2 * a, ctx)},
                                         [a, p, q, sign](const Real& t, const std::vector<Real>& P) {
                                             return (P[0] / pow(t + a, static_cast<long>(p)) -
                                                     sign * (P[1] / pow(t + a, static_cast<long>(q)))) *
                                                    P[2];
                                         },
                                         p),
                            ctx);
    return v * sgn(p - 1);
}

Approx e422_rhs_at(const Real& a, int p, int q, bool odd, const PrecisionContext& ctx) {
    auto E = [&](int u, int i) { return hurwitz_partial_sum(u, a, i, ctx); };
    Approx r;
    for (int i = 2; i <= q - 1; ++i) r += zeta_a(q + 1 - i, a, ctx) * E(p, i) * sgn(i - 1);
    for (int i = 2; i <= p - 1; ++i) r -= zeta_a(p + 1 - i, a, ctx) * E(q, i) * sgn(i - 1);
    r += zeta_a(p, a, ctx) * E(1, q) - zeta_a(q, a, ctx) * E(1, p);
    r += zeta_a(q, a, ctx) * zeta_a(p + 1, a, ctx) - zeta_a(q + 1, a, ctx) * zeta_a(p, a, ctx);
    if (!a.is_zero()) {
        const Approx aQ = Approx(a) * pair_series(a, 2 * a, ctx);
        if (!odd) {
            r += aQ * (E(p, q) - E(q, p)) * sgn(p - 1);
        } else {
            r += aQ * (E(p, q) + E(q, p)) * sgn(p);
        }
    }
    return r;
}

Evaluator e422(bool lhs, bool odd, bool at_zero) {
    return [lhs, odd, at_zero](const ParamPoint& pt, const PrecisionContext& ctx) {
        const Real a = at_zero ? Real(0) : pt.real('a');
        const int p = pt.integer('p');
        const int q = p + 2 * pt.integer('m') + (odd ? 1 : 0);
        return lhs ? e422_lhs_at(a, p, q, odd, ctx) : e422_rhs_at(a, p, q, odd, ctx);
    };
}

// ---- grids

ParamPoint pt_a(const mpq_class& a) {
    ParamPoint pt;
    pt.a = a;
    return pt;
}

std::vector<mpq_class> x_positive() {
    std::vector<mpq_class> out;
    for (const auto& x : grid_x()) {
        if (x > 0) out.push_back(x);
    }
    return out;
}

std::vector<mpq_class> small_non_integer_a() {
    std::vector<mpq_class> out;
    for (const auto& a : grid_a()) {
        if (abs_below_one(a)) out.push_back(a);
    }
    return out;
}

}  // namespace

void register_parametric(std::vector<IdentityEntry>& out) {
    out.push_back({.id = "E4.4",
                   .equation = "Eq. (4.4), Theorem 4.1",
                   .quote = "Using integration by parts",
                   .signature = "m >= 1, n >= 1, a, b > -1, a+b > -1, 0 < x < 1",
                   .fields = "abxmn",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext&) {
                           require_at_least(pt.integer('m'), 1, "m");
                           require_at_least(pt.integer('n'), 1, "n");
                           check_ab(pt);
                           check_x(pt);
                       },
                   .lhs = e44_lhs,
                   .rhs = e44_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> g;
                           for (const auto& [a, b] : grid_ab()) {
                               for (const auto& x : x_positive()) {
                                   for (int m : grid_m()) {
                                       if (m < 1) continue;
                                       for (int n : grid_n()) {
                                           ParamPoint pt = pt_a(a);
                                           pt.b = b;
                                           pt.x = x;
                                           pt.m = m;
                                           pt.n_small = n;
                                           g.push_back(pt);
                                       }
                                   }
                               }
                           }
                           return g;
                       }});

    auto mp_grid = [](bool with_x) {
        std::vector<ParamPoint> g;
        std::vector<std::optional<mpq_class>> xs;
        if (with_x) {
            for (const auto& x : x_positive()) xs.emplace_back(x);
        } else {
            xs.emplace_back(std::nullopt);
        }
        for (const auto& [a, b] : grid_ab()) {
            for (const auto& x : xs) {
                for (int m : grid_m()) {
                    if (m < 1) continue;
                    for (int p : grid_sp()) {
                        ParamPoint pt = pt_a(a);
                        pt.b = b;
                        pt.x = x;
                        pt.m = m;
                        pt.p = p;
                        g.push_back(pt);
                    }
                }
            }
        }
        return g;
    };

    auto mp_check = [](bool with_x) {
        return [with_x](const ParamPoint& pt, const PrecisionContext&) {
            require_at_least(pt.integer('m'), 1, "m");
            require_at_least(pt.integer('p'), 1, "p");
            check_ab(pt);
            if (with_x) check_x(pt);
        };
    };

    out.push_back({.id = "E4.7",
                   .equation = "Eq. (4.7), Theorem 4.2",
                   .quote = "consider the following integral",
                   .signature = "m, p >= 1, a, b > -1, a+b > -1, 0 < x < 1",
                   .fields = "abxmp",
                   .check = mp_check(true),
                   .lhs = e47_lhs,
                   .rhs = e47_rhs,
                   .grid = [mp_grid] { return mp_grid(true); }});

    out.push_back({.id = "E4.9",
                   .equation = "Eq. (4.9)",
                   .quote = "Letting x→1 in (4.7)",
                   .signature = "m, p >= 1, a, b > -1, a+b > -1",
                   .fields = "abmp",
                   .check = mp_check(false),
                   .lhs = e49_lhs,
                   .rhs = e49_rhs,
                   .grid = [mp_grid] { return mp_grid(false); }});

    auto small_a_grid = [] {
        std::vector<ParamPoint> g;
        for (const auto& a : small_non_integer_a()) g.push_back(pt_a(a));
        return g;
    };

    out.push_back({.id = "E4.10",
                   .equation = "Eq. (4.10)",
                   .quote = "Taking m=p=1, b=−a in (4.7)",
                   .signature = "a non-integer, |a| < 1",
                   .fields = "a",
                   .check = check_small_a,
                   .lhs = e410_lhs,
                   .rhs = e410_rhs,
                   .grid = small_a_grid});

    out.push_back({.id = "E4.11",
                   .equation = "Eq. (4.11)",
                   .quote = "from (2.21), we can deduce",
                   .signature = "a non-integer, |a| < 1, 0 < x < 1",
                   .fields = "ax",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           check_small_a(pt, ctx);
                           check_x(pt);
                       },
                   .lhs = e411_lhs,
                   .rhs = e411_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> g;
                           for (const auto& a : small_non_integer_a()) {
                               for (const auto& x : x_positive()) {
                                   ParamPoint pt = pt_a(a);
                                   pt.x = x;
                                   g.push_back(pt);
                               }
                           }
                           return g;
                       }});

    out.push_back({.id = "E4.12",
                   .equation = "Eq. (4.12)",
                   .quote = "approach 1 in (4.11)",
                   .signature = "a non-integer, |a| < 1",
                   .fields = "a",
                   .check = check_small_a,
                   .lhs = e410_lhs,
                   .rhs = e412_rhs,
                   .grid = small_a_grid});

    out.push_back({.id = "E4.13",
                   .equation = "Eq. (4.13)",
                   .quote = "the following beautiful result",
                   .signature = "|a| < 1, a = 0 or non-integer",
                   .fields = "a",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext& ctx) {
                           const Real a = pt.real('a');
                           require_below_one(a, "a");
                           if (!a.is_zero()) require_non_integer(a, ctx, "a");
                       },
                   .lhs = e413_lhs,
                   .rhs = e413_rhs,
                   .grid =
                       [small_a_grid] {
                           auto g = small_a_grid();
                           g.push_back(pt_a(mpq_class(0)));
                           return g;
                       }});

    auto half_check = [](bool with_x) {
        return [with_x](const ParamPoint& pt, const PrecisionContext&) {
            require_at_least(pt.integer('m'), 1, "m");
            require_greater(pt.real('a'), Real(mpq_class(-1, 2)), "a");
            if (with_x) check_x(pt);
        };
    };

    out.push_back({.id = "E4.14",
                   .equation = "Eq. (4.14), Corollary 4.3",
                   .quote = "taking b=a, p=m+1",
                   .signature = "m >= 1, a > -1/2, 0 < x < 1",
                   .fields = "axm",
                   .check = half_check(true),
                   .lhs = e414_lhs,
                   .rhs = e414_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> g;
                           for (const auto& a : grid_a()) {
                               for (const auto& x : x_positive()) {
                                   for (int m : grid_m()) {
                                       if (m < 1) continue;
                                       ParamPoint pt = pt_a(a);
                                       pt.x = x;
                                       pt.m = m;
                                       g.push_back(pt);
                                   }
                               }
                           }
                           return g;
                       }});

    out.push_back({.id = "E4.15",
                   .equation = "Eq. (4.15)",
                   .quote = "Putting x=1 in (4.14)",
                   .signature = "m >= 1, a > -1/2",
                   .fields = "am",
                   .check = half_check(false),
                   .lhs = e415_lhs,
                   .rhs = e415_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> g;
                           for (const auto& a : grid_a()) {
                               for (int m : grid_m()) {
                                   if (m < 1) continue;
                                   ParamPoint pt = pt_a(a);
                                   pt.m = m;
                                   g.push_back(pt);
                               }
                           }
                           return g;
                       }});

    auto pm_x_grid = [] {
        std::vector<ParamPoint> g;
        for (const auto& [a, b] : grid_ab()) {
            for (const auto& x : x_positive()) {
                for (int p : grid_sp()) {
                    for (int m : grid_m()) {
                        ParamPoint pt = pt_a(a);
                        pt.b = b;
                        pt.x = x;
                        pt.p = p;
                        pt.m = m;
                        g.push_back(pt);
                    }
                }
            }
        }
        return g;
    };
    auto pm_x_check = [](const ParamPoint& pt, const PrecisionContext&) {
        require_at_least(pt.integer('m'), 0, "m");
        require_at_least(pt.integer('p'), 2, "p");
        check_ab(pt);
        check_x(pt);
    };

    for (bool odd : {false, true}) {
        out.push_back({.id = odd ? "E4.17" : "E4.16",
                       .equation = odd ? "Eq. (4.17), Theorem 4.4" : "Eq. (4.16), Theorem 4.4",
                       .quote = "representations for linear, quadratic parametric",
                       .signature = "m >= 0, p >= 2, a, b > -1, a+b > -1, 0 < x < 1",
                       .fields = "abxpm",
                       .check = pm_x_check,
                       .lhs = [odd](const ParamPoint& pt, const PrecisionContext& ctx) { return e416_lhs(pt, ctx, odd); },
                       .rhs = [odd](const ParamPoint& pt, const PrecisionContext& ctx) { return e416_rhs(pt, ctx, odd); },
                       .grid = pm_x_grid});
    }

    out.push_back({.id = "E4.21",
                   .equation = "Eq. (4.21)",
                   .quote = "Combining (4.19) with (4.20)",
                   .signature = "m, p >= 2, a > -1",
                   .fields = "amp",
                   .check =
                       [](const ParamPoint& pt, const PrecisionContext&) {
                           require_at_least(pt.integer('m'), 2, "m");
                           require_at_least(pt.integer('p'), 2, "p");
                           require_greater(pt.real('a'), -1, "a");
                       },
                   .lhs = e421_lhs,
                   .rhs = e421_rhs,
                   .grid =
                       [] {
                           std::vector<ParamPoint> g;
                           for (const auto& a : grid_a()) {
                               for (int p : grid_sp()) {
                                   ParamPoint pt = pt_a(a);
                                   pt.m = 2;
                                   pt.p = p;
                                   g.push_back(pt);
                               }
                           }
                           return g;
                       }});

    auto pm_grid = [](bool with_a) {
        std::vector<ParamPoint> g;
        std::vector<std::optional<mpq_class>> as;
        if (with_a) {
            for (const auto& a : grid_a()) as.emplace_back(a);
        } else {
            as.emplace_back(std::nullopt);
        }
        for (const auto& a : as) {
            for (int p : grid_sp()) {
                for (int m : grid_m()) {
                    ParamPoint pt;
                    pt.a = a;
                    pt.p = p;
                    pt.m = m;
                    g.push_back(pt);
                }
            }
        }
        return g;
    };
    auto pm_check = [](bool with_a) {
        return [with_a](const ParamPoint& pt, const PrecisionContext&) {
            require_at_least(pt.integer('p'), 2, "p");
            require_at_least(pt.integer('m'), 0, "m");
            if (with_a) require_greater(pt.real('a'), Real(mpq_class(-1, 2)), "a");
        };
    };

    for (bool odd : {false, true}) {
        out.push_back({.id = odd ? "E4.23" : "E4.22",
                       .equation = odd ? "Eq. (4.23), Corollary 4.5" : "Eq. (4.22), Corollary 4.5",
                       .quote = "For integers p≥2, m≥0",
                       .signature = "p >= 2, m >= 0, a > -1/2",
                       .fields = "apm",
                       .check = pm_check(true),
                       .lhs = e422(true, odd, false),
                       .rhs = e422(false, odd, false),
                       .grid = [pm_grid] { return pm_grid(true); }});
    }
    for (bool odd : {false, true}) {
        out.push_back({.id = odd ? "E4.25" : "E4.24",
                       .equation = odd ? "Eq. (4.25), Corollary 4.7" : "Eq. (4.24), Corollary 4.6",
                       .quote = "setting a=0 in (4.22) and (4.23)",
                       .signature = "p >= 2, m >= 0",
                       .fields = "pm",
                       .check = pm_check(false),
                       .lhs = e422(true, odd, true),
                       .rhs = e422(false, odd, true),
                       .grid = [pm_grid] { return pm_grid(false); }});
    }
}

}  // namespace eulersums::detail
