#include "eulersums/special.hpp"

#include "eulersums/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace eulersums {

namespace {

class Working {
public:
    explicit Working(const PrecisionContext& ctx)
        : scope_(std::max(working_precision(), ctx.working_bits())) {}

private:
    PrecisionScope scope_;
};

// B_2k / (2k)! at the current precision, index k >= 1 (slot 0 unused).
const Real& bernoulli_over_factorial(int k) {
    thread_local std::map<mpfr_prec_t, std::vector<Real>> cache;
    auto& v = cache[working_precision()];
    if (v.empty()) v.emplace_back(0);
    while (static_cast<int>(v.size()) <= k) {
        const int j = static_cast<int>(v.size());
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * j));
        v.emplace_back(mpq_class(bernoulli(2 * j) / fact));
    }
    return v[static_cast<std::size_t>(k)];
}

// B_2k / (2k) at the current precision.
const Real& bernoulli_over_index(int k) {
    thread_local std::map<mpfr_prec_t, std::vector<Real>> cache;
    auto& v = cache[working_precision()];
    if (v.empty()) v.emplace_back(0);
    while (static_cast<int>(v.size()) <= k) {
        const int j = static_cast<int>(v.size());
        v.emplace_back(mpq_class(bernoulli(2 * j) / (2 * j)));
    }
    return v[static_cast<std::size_t>(k)];
}

// Shift point for the asymptotic expansions.
long asymptotic_threshold(double s) {
    return static_cast<long>(std::ceil(0.25 * static_cast<double>(working_precision()) + std::max(0.0, s)));
}

constexpr int kMaxAsymptoticTerms = 400;

// Euler-Maclaurin tail of sum_{n>=0} (X+n)^-s given Xs = X^-s.
Real hurwitz_tail(const Real& s, const Real& X, const Real& Xs) {
    const Real eps = epsilon();
    Real sum = Xs * X / (s - 1) + Xs / 2;
    const Real inv_x2 = 1 / (X * X);
    Real u = s * Xs / X;  // s (s+1) ... (s+2k-2) X^(-s-2k+1)
    Real term, f1, f2, bound;
    for (int k = 1; k <= kMaxAsymptoticTerms; ++k) {
        mpfr_mul(term.raw(), bernoulli_over_factorial(k).raw(), u.raw(), MPFR_RNDN);
        mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        mpfr_mul(bound.raw(), eps.raw(), sum.raw(), MPFR_RNDN);
        if (mpfr_cmpabs(term.raw(), bound.raw()) <= 0) return sum;
        mpfr_add_si(f1.raw(), s.raw(), 2 * k - 1, MPFR_RNDN);
        mpfr_add_si(f2.raw(), s.raw(), 2 * k, MPFR_RNDN);
        mpfr_mul(f1.raw(), f1.raw(), f2.raw(), MPFR_RNDN);
        mpfr_mul(f1.raw(), f1.raw(), inv_x2.raw(), MPFR_RNDN);
        mpfr_mul(u.raw(), u.raw(), f1.raw(), MPFR_RNDN);
    }
    throw ConvergenceError("hurwitz_zeta: asymptotic expansion did not converge");
}

void require_positive(const Real& q, const char* what) {
    if (!(q > Real(0))) throw DomainError(std::string(what) + ": argument must be positive");
}

}  // namespace

bool near_integer(const Real& a, const PrecisionContext& ctx) {
    Working w(ctx);
    Real r = abs(a - round(a));
    return r < pow10(-(ctx.decimal_digits / 2));
}

Real euler_gamma(const PrecisionContext& ctx) {
    Working w(ctx);
    thread_local std::map<mpfr_prec_t, Real> cache;
    auto it = cache.find(working_precision());
    if (it == cache.end()) it = cache.emplace(working_precision(), const_euler()).first;
    return it->second;
}

Real riemann_zeta(int s, const PrecisionContext& ctx, bool use_convention) {
    Working w(ctx);
    if (s <= 1) {
        if (!use_convention || s < 0) throw DomainError("riemann_zeta: s must be >= 2");
        return s == 0 ? ZetaConvention::zeta_zero() : ZetaConvention::zeta_one();
    }
    Real r;
    mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
    return r;
}

Real alt_zeta(int s, const PrecisionContext& ctx) {
    Working w(ctx);
    if (s < 1) throw DomainError("alt_zeta: s must be >= 1");
    if (s == 1) return const_log2();
    return (1 - ldexp(Real(1), 1 - s)) * riemann_zeta(s, ctx);
}

Real hurwitz_zeta(long s, const Real& q, const PrecisionContext& ctx) {
    Working w(ctx);
    if (s <= 1) throw DomainError("hurwitz_zeta: s must exceed 1");
    require_positive(q, "hurwitz_zeta");
    const long threshold = asymptotic_threshold(static_cast<double>(s));
    Real direct(0), x = q, t;
    while (mpfr_cmp_si(x.raw(), threshold) < 0) {
        mpfr_pow_si(t.raw(), x.raw(), -s, MPFR_RNDN);
        mpfr_add(direct.raw(), direct.raw(), t.raw(), MPFR_RNDN);
        mpfr_add_ui(x.raw(), x.raw(), 1, MPFR_RNDN);
    }
    mpfr_pow_si(t.raw(), x.raw(), -s, MPFR_RNDN);
    return direct + hurwitz_tail(Real(s), x, t);
}

Real hurwitz_zeta(const Real& s, const Real& q, const PrecisionContext& ctx) {
    Working w(ctx);
    if (!(s > Real(1))) throw DomainError("hurwitz_zeta: s must exceed 1");
    require_positive(q, "hurwitz_zeta");
    if (s.is_integer() && s < Real(1L << 30)) return hurwitz_zeta(s.to_long(), q, ctx);
    const long threshold = asymptotic_threshold(s.to_double());
    Real direct(0);
    Real x = q;
    while (x < Real(threshold)) {
        direct += pow(x, -s);
        x += 1;
    }
    return direct + hurwitz_tail(s, x, pow(x, -s));
}

Real alt_hurwitz_zeta(long s, const Real& q, const PrecisionContext& ctx) {
    Working w(ctx);
    if (s < 1) throw DomainError("alt_hurwitz_zeta: s must be >= 1");
    require_positive(q, "alt_hurwitz_zeta");
    if (s == 1) return (digamma((q + 1) / 2, ctx) - digamma(q / 2, ctx)) / 2;
    return ldexp(hurwitz_zeta(s, q / 2, ctx) - hurwitz_zeta(s, (q + 1) / 2, ctx), -s);
}

Real digamma(const Real& x0, const PrecisionContext& ctx) {
    Working w(ctx);
    require_positive(x0, "digamma");
    const long threshold = asymptotic_threshold(1.0);
    // shift = num / den = sum of 1/(x0 + j) over the recurrence steps
    Real num(0), den(1), x = x0, t;
    while (mpfr_cmp_si(x.raw(), threshold) < 0) {
        mpfr_mul(num.raw(), num.raw(), x.raw(), MPFR_RNDN);
        mpfr_add(num.raw(), num.raw(), den.raw(), MPFR_RNDN);
        mpfr_mul(den.raw(), den.raw(), x.raw(), MPFR_RNDN);
        mpfr_add_ui(x.raw(), x.raw(), 1, MPFR_RNDN);
    }
    const Real eps = epsilon();
    const Real inv_x2 = 1 / (x * x);
    Real sum = log(x) - 1 / (2 * x) - num / den;
    Real p = inv_x2, term, bound;
    for (int k = 1; k <= kMaxAsymptoticTerms; ++k) {
        mpfr_mul(term.raw(), bernoulli_over_index(k).raw(), p.raw(), MPFR_RNDN);
        mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        mpfr_mul(bound.raw(), eps.raw(), sum.raw(), MPFR_RNDN);
        if (mpfr_cmpabs(term.raw(), bound.raw()) <= 0) return sum;
        mpfr_mul(p.raw(), p.raw(), inv_x2.raw(), MPFR_RNDN);
    }
    throw ConvergenceError("digamma: asymptotic expansion did not converge");
}

Real polygamma(int m, const Real& x, const PrecisionContext& ctx) {
    Working w(ctx);
    if (m < 0) throw DomainError("polygamma: order must be >= 0");
    if (m == 0) return digamma(x, ctx);
    require_positive(x, "polygamma");
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    Real r = Real(fact) * hurwitz_zeta(static_cast<long>(m + 1), x, ctx);
    return (m % 2 == 1) ? r : -r;
}

Real pi_cot_pi(const Real& a, const PrecisionContext& ctx) {
    Working w(ctx);
    if (!a.is_finite()) throw DomainError("pi_cot_pi: argument must be finite");
    if (near_integer(a, ctx)) throw DomainError("pi_cot_pi: argument at a pole");
    Real r = a - round(a);
    const Real pi = const_pi();
    return pi * cot(pi * r);
}

Real param_polylog(int s, const Real& a, const Real& x, const PrecisionContext& ctx) {
    Working w(ctx);
    if (s < 1) throw DomainError("param_polylog: s must be >= 1");
    if (!(a > Real(-1))) throw DomainError("param_polylog: a must exceed -1");
    if (x > Real(1) || x < Real(-1)) throw DomainError("param_polylog: x must lie in [-1, 1]");
    if (x == Real(1)) {
        if (s == 1) throw DomainError("param_polylog: divergent at s = 1, x = 1");
        return hurwitz_zeta(static_cast<long>(s), a + 1, ctx);
    }
    if (x == Real(-1)) return -alt_hurwitz_zeta(s, a + 1, ctx);
    if (x.is_zero()) return Real(0);
    if (s == 1 && a.is_zero()) return -log1p(-x);

    const Real eps = epsilon();
    const Real ax = abs(x);
    Real sum(0);
    Real xn = x;
    for (long n = 1; n <= ctx.max_terms; ++n) {
        Real term = xn / pow(a + n, static_cast<long>(s));
        sum += term;
        // |tail| <= |term| |x| / (1 - |x|) since (n+a)^-s is decreasing
        if (abs(term) * ax <= eps * abs(sum) * (1 - ax)) return sum;
        xn *= x;
    }
    throw ConvergenceError("param_polylog: series did not converge within max_terms");
}

Real h_cap(int m, const Real& x, const Real& a, const PrecisionContext& ctx) {
    Working w(ctx);
    if (m < 1) throw DomainError("h_cap: m must be >= 1");
    if (!(a > Real(-1))) throw DomainError("h_cap: a must exceed -1");
    if (x > Real(1) || x < Real(-1)) throw DomainError("h_cap: x must lie in [-1, 1]");
    if (m == 1 && x == Real(1)) throw DomainError("h_cap: divergent at m = 1, x = 1");
    if (a.is_integer()) return pow(x, a.to_long()) * param_polylog(m, a, x, ctx);
    if (!(x > Real(0))) throw DomainError("h_cap: x must be positive for non-integer a");
    return pow(x, a) * param_polylog(m, a, x, ctx);
}

Real aux_sum_reciprocal(const Real& a, const PrecisionContext& ctx) {
    Working w(ctx);
    if (!(a > Real(-1))) throw DomainError("aux_sum_reciprocal: a must exceed -1");
    if (abs(a) < pow10(-(ctx.decimal_digits / 2))) {
        throw DomainError("aux_sum_reciprocal: a too close to 0, use zeta(2)");
    }
    return (digamma(a + 1, ctx) + euler_gamma(ctx)) / a;
}

}  // namespace eulersums
