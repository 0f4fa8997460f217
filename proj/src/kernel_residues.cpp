#include "eulersums/kernel_residues.hpp"

#include "eulersums/combinatorics.hpp"
#include "eulersums/series.hpp"
#include "eulersums/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace eulersums {

namespace {

class Working {
public:
    explicit Working(const PrecisionContext& ctx) : scope_(std::max(working_precision(), ctx.working_bits())) {}

private:
    PrecisionScope scope_;
};

long sgn(long k) { return (k % 2 == 0) ? 1 : -1; }

Real binom(long n, long k) {
    if (k < 0 || k > n) return Real(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Real(r);
}

Real factorial(int k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return Real(r);
}

// Exact decimal reading of a short radius such as 0.05.
Real decimal(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", r);
    return Real(std::string_view(buf));
}

Real zeta_c(int s, const PrecisionContext& ctx) { return riemann_zeta(s, ctx, s <= 1); }

Real harmonic_real(long n, int k) { return Real(harmonic(n, k)); }

// Integer coefficients of P_k with d^k/ds^k pi cot(pi s) = pi^(k+1) P_k(cot(pi s)), lowest power first.
std::vector<mpz_class> cot_derivative_polynomial(int k) {
    std::vector<mpz_class> p{0, 1};
    for (int step = 0; step < k; ++step) {
        std::vector<mpz_class> d(p.size() > 1 ? p.size() - 1 : 1);
        for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
        std::vector<mpz_class> next(d.size() + 2);
        for (std::size_t i = 0; i < d.size(); ++i) {
            next[i] -= d[i];
            next[i + 2] -= d[i];
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        p = std::move(next);
    }
    return p;
}

// sum_{n>=1} (n+x)^-j for j >= 2
Real shifted_zeta(int j, const Real& x, const PrecisionContext& ctx) {
    return sgn(j) * polygamma_any(j - 1, 1 + x, ctx) / factorial(j - 1);
}

// sum_{n>=1} {(n-a)^-j + (n+a)^-j - 2 n^-j}
Real even_difference(int j, const Real& a, const PrecisionContext& ctx) {
    if (j == 1) return -polygamma_any(0, 1 - a, ctx) - polygamma_any(0, 1 + a, ctx) - 2 * euler_gamma(ctx);
    return shifted_zeta(j, -a, ctx) + shifted_zeta(j, a, ctx) - 2 * riemann_zeta(j, ctx);
}

// sum_{n>=1} {(n-a)^-j - (n+a)^-j}
Real odd_difference(int j, const Real& a, const PrecisionContext& ctx) {
    if (j == 1) return polygamma_any(0, 1 + a, ctx) - polygamma_any(0, 1 - a, ctx);
    return shifted_zeta(j, -a, ctx) - shifted_zeta(j, a, ctx);
}

void require_ledger_args(const Real& a, long N, const PrecisionContext& ctx) {
    if (!a.is_finite() || near_integer(a, ctx)) throw DomainError("residue ledger: a must be a non-integer real");
    if (N < 1) throw DomainError("residue ledger: N must be >= 1");
}

// Ledger formulas with zeta_n supplied by the caller; n is real so the
// zeta_n-free part can be summed as a smooth series.
struct EvenResidues {
    Real a;
    int m;
    std::vector<Real> zeta_even;  // zeta(2k), k = 0..m

    Real diff(const Real& n, int j) const {
        return pow(n + a, static_cast<long>(-j)) + pow(n - a, static_cast<long>(-j)) - 2 * pow(n, static_cast<long>(-j));
    }

    Real positive(const Real& n, const Real& zn) const {
        const Real a2 = a * a;
        Real r = (zn + zeta_even[static_cast<std::size_t>(m)]) / (n * (n * n - a2)) + diff(n, 2 * m + 1) / (2 * a2);
        for (int k = 1; k <= m; ++k) r -= zeta_even[static_cast<std::size_t>(k)] * diff(n, 2 * m - 2 * k + 1) / a2;
        return r;
    }

    Real negative(const Real& n, const Real& zn) const {
        const Real q = n * n - a * a;
        return (zn - zeta_even[static_cast<std::size_t>(m)]) / (n * q) - 1 / (pow(n, 2L * m + 1) * q);
    }
};

EvenResidues even_residues(const Real& a, int m, const PrecisionContext& ctx) {
    EvenResidues e{a, m, {}};
    e.zeta_even.push_back(Real(-1) / 2);
    for (int k = 1; k <= m; ++k) e.zeta_even.push_back(riemann_zeta(2 * k, ctx));
    return e;
}

Real even_pole_at_a(const Real& a, int m, const PrecisionContext& ctx) {
    return pi_cot_pi(a, ctx) / (2 * a * a) * odd_difference(2 * m, a, ctx);
}

Real even_pole_at_zero(const Real& a, int m, const PrecisionContext& ctx) {
    return -(2 * m) * riemann_zeta(2 * m + 1, ctx) / (a * a);
}

struct OddResidues {
    Real a;
    int m;
    int s;
    std::vector<Real> zeta_even;  // zeta(2k), k = 0..m
    Real zeta_top;                // zeta(2m+1), 0 at m = 0

    Real base(const Real& n) const { return pow(n, 2L * s) * (n * n - a * a); }

    Real positive(const Real& n, const Real& zn) const {
        const Real a_odd = pow(a, 2L * s + 1);
        Real r = (zn - zeta_top) / base(n);
        for (int k = 1; k <= m; ++k) {
            const long j = 2L * m - 2L * k + 2;
            r += zeta_even[static_cast<std::size_t>(k)] * (pow(n - a, -j) - pow(n + a, -j)) / a_odd;
            for (int i = 1; i <= s; ++i) {
                r -= 2 * zeta_even[static_cast<std::size_t>(k)] * binom(2L * m - 2 * k + 2 * i, 2L * i - 1) /
                     (pow(a, 2L * s + 2 - 2 * i) * pow(n, 2L * m + 2 * i - 2 * k + 1));
            }
        }
        r -= (pow(n - a, -(2L * m + 2)) - pow(n + a, -(2L * m + 2))) / (2 * a_odd);
        for (int i = 1; i <= s; ++i) {
            r += binom(2L * m + 2 * i, 2L * i - 1) / (pow(a, 2L * s + 2 - 2 * i) * pow(n, 2L * m + 2 * i + 1));
        }
        return r;
    }

    Real negative(const Real& n, const Real& zn) const {
        return (zn - zeta_top) / base(n) - 1 / (pow(n, 2L * s + 2 * m + 1) * (n * n - a * a));
    }
};

OddResidues odd_residues(const Real& a, int m, int s, const PrecisionContext& ctx) {
    OddResidues o{a, m, s, {}, zeta_c(2 * m + 1, ctx)};
    o.zeta_even.push_back(Real(-1) / 2);
    for (int k = 1; k <= m; ++k) o.zeta_even.push_back(riemann_zeta(2 * k, ctx));
    return o;
}

Real odd_pole_at_a(const Real& a, int m, int s, const PrecisionContext& ctx) {
    const Real bracket = even_difference(2 * m + 1, a, ctx) + 2 * zeta_c(2 * m + 1, ctx);
    return -pi_cot_pi(a, ctx) / (2 * pow(a, 2L * s + 1)) * bracket;
}

Real odd_pole_at_zero(const Real& a, int m, int s, ZeroPoleForm form, const PrecisionContext& ctx) {
    Real r(0);
    for (int k = 1; k <= s + 1; ++k) {
        r += binom(2L * m + 2 * k - 2, 2L * k - 2) * zeta_c(2 * m + 2 * k - 1, ctx) / pow(a, 2L * s - 2 * k + 4);
    }
    for (int n = 1; n <= s; ++n) {
        for (int k = 1; k <= n; ++k) {
            const Real c = form == ZeroPoleForm::printed ? binom(2L * m + 2 * k - 1, 2L * k - 1)
                                                         : binom(2L * m + 2 * k - 2, 2L * k - 2);
            r -= 2 * c * zeta_c(2 * m + 2 * k - 1, ctx) * riemann_zeta(2 * n - 2 * k + 2, ctx) /
                 pow(a, 2L * s - 2 * n + 2);
        }
    }
    return r;
}

}  // namespace

std::string to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::cot: return "cot";
        case KernelKind::psi_pos: return "psi_pos";
        case KernelKind::psi_neg: return "psi_neg";
        case KernelKind::polygamma_pos: return "polygamma_pos";
        case KernelKind::polygamma_neg: return "polygamma_neg";
    }
    return "unknown";
}

std::optional<KernelKind> parse_kernel_kind(const std::string& name) {
    for (auto k : {KernelKind::cot, KernelKind::psi_pos, KernelKind::psi_neg, KernelKind::polygamma_pos,
                   KernelKind::polygamma_neg}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

bool is_negative_center(KernelKind kind) { return kind == KernelKind::psi_neg || kind == KernelKind::polygamma_neg; }

Real LocalExpansion::coefficient(int power) const {
    if (power < lowest_order || power > order) return Real(0);
    return coefficients[static_cast<std::size_t>(power - lowest_order)];
}

Real LocalExpansion::evaluate(const Real& h) const {
    Real acc(0);
    for (int j = order; j >= 0; --j) acc = acc * h + coefficient(j);
    for (int j = lowest_order; j < 0; ++j) acc += coefficient(j) * pow(h, static_cast<long>(j));
    return acc;
}

LocalExpansion expand_kernel(KernelKind kind, long n, int p, int K, const PrecisionContext& ctx) {
    Working w(ctx);
    if (K < 1) throw DomainError("expand_kernel: K must be >= 1");
    const bool negative = is_negative_center(kind);
    if (negative && n < 1) throw DomainError("expand_kernel: n must be >= 1 for " + to_string(kind));
    if (!negative && n < 0) throw DomainError("expand_kernel: n must be >= 0 for " + to_string(kind));
    const bool poly = kind == KernelKind::polygamma_pos || kind == KernelKind::polygamma_neg;
    if (poly && p < 2) throw DomainError("expand_kernel: p must be >= 2 for " + to_string(kind));

    LocalExpansion e;
    e.center = negative ? -n : n;
    e.order = K;
    switch (kind) {
        case KernelKind::cot: e.lowest_order = -1; break;
        case KernelKind::psi_pos: e.lowest_order = -1; break;
        case KernelKind::psi_neg: e.lowest_order = 0; break;
        case KernelKind::polygamma_pos: e.lowest_order = -p; break;
        case KernelKind::polygamma_neg: e.lowest_order = 0; break;
    }
    e.coefficients.assign(static_cast<std::size_t>(K - e.lowest_order + 1), Real(0));
    auto slot = [&](int j) -> Real& { return e.coefficients[static_cast<std::size_t>(j - e.lowest_order)]; };

    switch (kind) {
        case KernelKind::cot:
            slot(-1) = 1;
            for (int k = 1; 2 * k - 1 <= K; ++k) slot(2 * k - 1) = -2 * riemann_zeta(2 * k, ctx);
            break;
        case KernelKind::psi_pos:
            slot(-1) = 1;
            slot(0) = harmonic_real(n, 1);
            for (int k = 1; k <= K; ++k) slot(k) = sgn(k) * harmonic_real(n, k + 1) - riemann_zeta(k + 1, ctx);
            break;
        case KernelKind::psi_neg:
            slot(0) = harmonic_real(n - 1, 1);
            for (int k = 1; k <= K; ++k) slot(k) = harmonic_real(n - 1, k + 1) - riemann_zeta(k + 1, ctx);
            break;
        case KernelKind::polygamma_pos:
            slot(-p) = 1;
            for (int i = p; i - p <= K; ++i) {
                slot(i - p) = sgn(p) * binom(i - 1, p - 1) * (riemann_zeta(i, ctx) + sgn(i) * harmonic_real(n, i));
            }
            break;
        case KernelKind::polygamma_neg:
            for (int i = 0; i <= K; ++i) {
                slot(i) = sgn(p) * binom(p - 1 + i, p - 1) *
                          (riemann_zeta(p + i, ctx) - harmonic_real(n - 1, p + i));
            }
            break;
    }
    return e;
}

Real polygamma_any(int k, const Real& x, const PrecisionContext& ctx) {
    Working w(ctx);
    if (k < 0) throw DomainError("polygamma_any: order must be >= 0");
    if (x.sign() > 0) return polygamma(k, x, ctx);
    if (near_integer(x, ctx)) throw DomainError("polygamma_any: argument at a pole");
    // psi^(k)(-y) = (-1)^k [psi^(k)(y) + (-1)^k k!/y^(k+1) + pi^(k+1) P_k(cot(pi y))]
    const Real y = -x;
    const Real pi = const_pi();
    const Real c = pi_cot_pi(y, ctx) / pi;
    const auto poly = cot_derivative_polynomial(k);
    Real pk(0);
    for (std::size_t i = poly.size(); i-- > 0;) pk = pk * c + Real(poly[i]);
    Real r = polygamma(k, y, ctx) + sgn(k) * factorial(k) / pow(y, static_cast<long>(k) + 1) +
             pow(pi, static_cast<long>(k) + 1) * pk;
    return sgn(k) * r;
}

Real kernel_value(KernelKind kind, int p, const Real& s, const PrecisionContext& ctx) {
    Working w(ctx);
    switch (kind) {
        case KernelKind::cot: return pi_cot_pi(s, ctx);
        case KernelKind::psi_pos:
        case KernelKind::psi_neg: return polygamma_any(0, -s, ctx) + euler_gamma(ctx);
        case KernelKind::polygamma_pos:
        case KernelKind::polygamma_neg: return polygamma_any(p - 1, -s, ctx) / factorial(p - 1);
    }
    throw DomainError("kernel_value: unknown kernel");
}

Real validate_expansion(const LocalExpansion& exp, KernelKind kind, long n, int p, const std::vector<Real>& radii,
                        const PrecisionContext& ctx) {
    Working w(ctx);
    const long center = is_negative_center(kind) ? -n : n;
    if (exp.center != center) throw DomainError("validate_expansion: expansion center does not match the kernel");
    Real worst(0);
    for (const auto& r : radii) {
        if (r.sign() <= 0 || !(r < Real(1) / 2)) {
            throw DomainError("validate_expansion: radius " + r.str(6) + " outside (0, 1/2)");
        }
        for (int side : {1, -1}) {
            const Real h = side * r;
            const Real s = center + h;
            const Real gap = abs(s - round(s));
            if (round(s).to_long() != center && gap < pow10(-(ctx.decimal_digits / 2))) {
                throw DomainError("validate_expansion: sample point too close to another pole");
            }
            worst = max(worst, abs(kernel_value(kind, p, s, ctx) - exp.evaluate(h)));
        }
    }
    return worst;
}

std::vector<double> default_radii() { return {0.05, 0.1, 0.2}; }

ScalingFit fit_expansion_scaling(KernelKind kind, long n, int p, int K, const std::vector<double>& radii,
                                 const PrecisionContext& ctx) {
    Working w(ctx);
    const LocalExpansion exp = expand_kernel(kind, n, p, K, ctx);
    ScalingFit fit;
    fit.radii = radii;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double r : radii) {
        const Real err = validate_expansion(exp, kind, n, p, {decimal(r)}, ctx);
        const double e = err.to_double();
        fit.errors.push_back(e);
        const double lx = std::log(r), ly = std::log(e);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double count = static_cast<double>(radii.size());
    const double denom = count * sxx - sx * sx;
    fit.slope = denom != 0.0 ? (count * sxy - sx * sy) / denom : std::numeric_limits<double>::quiet_NaN();
    return fit;
}

ResidueLedger residue_ledger_even(const Real& a, int m, long N, const PrecisionContext& ctx) {
    Working w(ctx);
    require_ledger_args(a, N, ctx);
    if (m < 1) throw DomainError("residue_ledger_even: m must be >= 1");
    const EvenResidues e = even_residues(a, m, ctx);
    ResidueLedger ledger;
    ledger.N = N;
    ledger.positive_residues.reserve(static_cast<std::size_t>(N));
    ledger.negative_residues.reserve(static_cast<std::size_t>(N));
    Real zn(0);
    for (long n = 1; n <= N; ++n) {
        const Real t(n);
        zn += 1 / pow(t, 2L * m);
        ledger.positive_residues.push_back(e.positive(t, zn));
        ledger.negative_residues.push_back(e.negative(t, zn));
    }
    ledger.pole_at_a = even_pole_at_a(a, m, ctx);
    ledger.pole_at_zero = even_pole_at_zero(a, m, ctx);
    return ledger;
}

ResidueLedger residue_ledger_odd(const Real& a, int m, int s, long N, const PrecisionContext& ctx, ZeroPoleForm form) {
    Working w(ctx);
    require_ledger_args(a, N, ctx);
    if (m < 0 || s < 0) throw DomainError("residue_ledger_odd: m and s must be >= 0");
    const OddResidues o = odd_residues(a, m, s, ctx);
    ResidueLedger ledger;
    ledger.N = N;
    ledger.positive_residues.reserve(static_cast<std::size_t>(N));
    ledger.negative_residues.reserve(static_cast<std::size_t>(N));
    Real zn(0);
    for (long n = 1; n <= N; ++n) {
        const Real t(n);
        zn += 1 / pow(t, 2L * m + 1);
        ledger.positive_residues.push_back(o.positive(t, zn));
        ledger.negative_residues.push_back(o.negative(t, zn));
    }
    ledger.pole_at_a = odd_pole_at_a(a, m, s, ctx);
    ledger.pole_at_zero = odd_pole_at_zero(a, m, s, form, ctx);
    return ledger;
}

Real residue_sum_check(const ResidueLedger& ledger, std::optional<long> n_max) {
    PrecisionScope scope(std::max(working_precision(), ledger.pole_at_a.precision()));
    const long limit = std::min(ledger.N, n_max.value_or(ledger.N));
    Real total = ledger.pole_at_a + ledger.pole_at_zero;
    for (long i = 0; i < limit; ++i) {
        total += ledger.positive_residues[static_cast<std::size_t>(i)] +
                 ledger.negative_residues[static_cast<std::size_t>(i)];
    }
    return abs(total);
}

Approx implied_even_sum(const Real& a, int m, const PrecisionContext& ctx) {
    Working w(ctx);
    require_ledger_args(a, 1, ctx);
    if (m < 1) throw DomainError("implied_even_sum: m must be >= 1");
    const EvenResidues e = even_residues(a, m, ctx);
    SmoothTerm term;
    term.eval = [e](const Real& t) { return e.positive(t, Real(0)) + e.negative(t, Real(0)); };
    term.decay_exponent = 3.0;
    const Approx rest = sum_series(term, ctx);
    const Approx poles = Approx(even_pole_at_a(a, m, ctx)) + Approx(even_pole_at_zero(a, m, ctx));
    return -(rest + poles) / 2;
}

Approx implied_odd_sum(const Real& a, int m, int s, const PrecisionContext& ctx, ZeroPoleForm form) {
    Working w(ctx);
    require_ledger_args(a, 1, ctx);
    if (m < 0 || s < 0) throw DomainError("implied_odd_sum: m and s must be >= 0");
    const OddResidues o = odd_residues(a, m, s, ctx);
    SmoothTerm term;
    term.eval = [o](const Real& t) { return o.positive(t, Real(0)) + o.negative(t, Real(0)); };
    term.decay_exponent = 2.0;
    const Approx rest = sum_series(term, ctx);
    const Approx poles = Approx(odd_pole_at_a(a, m, s, ctx)) + Approx(odd_pole_at_zero(a, m, s, form, ctx));
    return -(rest + poles) / 2;
}

}  // namespace eulersums
