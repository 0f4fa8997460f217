#include "sums.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace eulersums::detail {

namespace {

Approx special(const Real& v) { return {v, 64 * epsilon() * max(Real(1), abs(v))}; }

}  // namespace

Partial harmonic_partial(const PrecisionContext& ctx) {
    const Real gamma = euler_gamma(ctx);
    return {[ctx, gamma](const Real& t) { return digamma(t + 1, ctx) + gamma; },
            [](long k) { return Real(1) / k; }};
}

Partial hurwitz_partial(int p, const Real& c, const PrecisionContext& ctx) {
    if (p == 1) {
        const Real base = digamma(c + 1, ctx);
        return {[ctx, c, base](const Real& t) { return digamma(t + c + 1, ctx) - base; },
                [c](long k) { return 1 / (c + k); }};
    }
    const Real total = hurwitz_zeta(static_cast<long>(p), c + 1, ctx);
    return {[ctx, c, p, total](const Real& t) { return total - hurwitz_zeta(static_cast<long>(p), t + c + 1, ctx); },
            [c, p](long k) { return 1 / pow(c + k, static_cast<long>(p)); }};
}

SmoothTerm partial_term(std::vector<Partial> parts, Combine combine, double decay) {
    SmoothTerm term;
    term.decay_exponent = decay;
    term.eval = [parts, combine](const Real& t) {
        std::vector<Real> values;
        values.reserve(parts.size());
        for (const auto& part : parts) values.push_back(part.smooth(t));
        return combine(t, values);
    };
    term.sequence = [parts, combine]() -> Sequence {
        auto state = std::make_shared<std::vector<Real>>(parts.size(), Real(0));
        return [parts, combine, state](long n) {
            for (std::size_t i = 0; i < parts.size(); ++i) (*state)[i] += parts[i].increment(n);
            return combine(Real(n), *state);
        };
    };
    return term;
}

SmoothTerm alternating_harmonic_term(std::function<Real(const Real& n, const Real& L)> f, double decay) {
    SmoothTerm term;
    term.decay_exponent = decay;
    // L_{2t} = psi(2t+1) - psi(t+1), L_{2t-1} = L_{2t} + 1/(2t)
    term.eval = [f](const Real& t) {
        PrecisionContext probe;
        probe.decimal_digits = 10;
        Real even = digamma(2 * t + 1, probe) - digamma(t + 1, probe);
        Real odd = even + 1 / (2 * t);
        return f(2 * t - 1, odd) + f(2 * t, even);
    };
    term.sequence = [f]() -> Sequence {
        auto L = std::make_shared<Real>(0);
        return [f, L](long t) {
            *L += Real(1) / (2 * t - 1);
            Real odd = *L;
            *L -= Real(1) / (2 * t);
            return f(Real(2 * t - 1), odd) + f(Real(2 * t), *L);
        };
    };
    return term;
}

Approx series(const SmoothTerm& term, const PrecisionContext& ctx) { return Approx(sum_series(term, ctx)); }

Approx rational_series(RealFn f, double decay, const PrecisionContext& ctx, bool alternating) {
    SmoothTerm term;
    term.eval = std::move(f);
    term.decay_exponent = decay;
    term.alternating = alternating;
    return series(term, ctx);
}

Approx geometric(const std::function<Sequence()>& factory, double ratio, const PrecisionContext& ctx) {
    return Approx(sum_geometric(factory(), ratio, ctx));
}

std::string key_of(const Real& v) { return to_rational(v).get_str(); }

Approx memo(const std::string& key, const PrecisionContext& ctx, const std::function<Approx()>& compute) {
    static std::mutex mu;
    static std::map<std::string, Approx> cache;
    const std::string full = key + "@" + std::to_string(ctx.decimal_digits) + "/" +
                             std::to_string(ctx.guard_digits) + "/" + std::to_string(ctx.em_order) + "/" +
                             std::to_string(ctx.max_terms);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(full);
        if (it != cache.end()) return it->second;
    }
    Approx value = compute();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(full, std::move(value)).first->second;
}

Approx zeta(int s, const PrecisionContext& ctx, bool convention) {
    return special(riemann_zeta(s, ctx, convention));
}

Approx hurwitz(long s, const Real& q, const PrecisionContext& ctx) { return special(hurwitz_zeta(s, q, ctx)); }

Approx alt_hurwitz(long s, const Real& q, const PrecisionContext& ctx) {
    return special(alt_hurwitz_zeta(s, q, ctx));
}

Approx alt_zeta_value(int s, const PrecisionContext& ctx) { return special(alt_zeta(s, ctx)); }

Approx cot_pi(const Real& a, const PrecisionContext& ctx) { return special(pi_cot_pi(a, ctx)); }

Approx log2_value() { return special(const_log2()); }

Approx aux(const Real& a, const PrecisionContext& ctx) {
    if (a.is_zero()) return zeta(2, ctx);
    const Real v = aux_sum_reciprocal(a, ctx);
    return {v, 64 * epsilon() * (abs(v) + 1 / abs(a))};
}

Approx Li(int s, const Real& a, const Real& x, const PrecisionContext& ctx) {
    return special(param_polylog(s, a, x, ctx));
}

Approx Li1(const Real& x, const PrecisionContext& ctx) { return Li(1, Real(0), x, ctx); }

Approx Hcap(int m, const Real& x, const Real& a, const PrecisionContext& ctx) {
    return special(h_cap(m, x, a, ctx));
}

Approx power(const Real& x, const Real& e) {
    if (e.is_integer()) return special(pow(x, e.to_long()));
    return special(pow(x, e));
}

Approx harmonic_sum(int j, const Real& a, const PrecisionContext& ctx) {
    return memo("harmonic_sum|" + std::to_string(j) + "|" + key_of(a), ctx, [&] {
        return series(partial_term({harmonic_partial(ctx)},
                                   [a, j](const Real& t, const std::vector<Real>& P) {
                                       return P[0] / pow(t + a, static_cast<long>(j));
                                   },
                                   j),
                      ctx);
    });
}

Approx harmonic_over_n_sum(const Real& a, const PrecisionContext& ctx) {
    return memo("harmonic_over_n|" + key_of(a), ctx, [&] {
        return series(partial_term({harmonic_partial(ctx)},
                                   [a](const Real& t, const std::vector<Real>& P) { return P[0] / (t * (t + a)); },
                                   2),
                      ctx);
    });
}

Approx hurwitz_partial_sum(int u, const Real& c, int i, const PrecisionContext& ctx) {
    return memo("hurwitz_partial_sum|" + std::to_string(u) + "|" + std::to_string(i) + "|" + key_of(c), ctx, [&] {
        return series(partial_term({hurwitz_partial(u, c, ctx)},
                                   [c, i](const Real& t, const std::vector<Real>& P) {
                                       return P[0] / pow(t + c, static_cast<long>(i));
                                   },
                                   i),
                      ctx);
    });
}

Approx hurwitz_partial_power_sum(int u, const Real& c, int i, const Real& x, const PrecisionContext& ctx) {
    const std::string key = "hurwitz_partial_power|" + std::to_string(u) + "|" + std::to_string(i) + "|" +
                            key_of(c) + "|" + key_of(x);
    return memo(key, ctx, [&] {
        Approx inner = geometric(
            [u, c, i, x]() -> Sequence {
                auto z = std::make_shared<Real>(0);
                auto xn = std::make_shared<Real>(1);
                return [u, c, i, x, z, xn](long n) {
                    *z += 1 / pow(c + n, static_cast<long>(u));
                    *xn *= x;
                    return *z * *xn / pow(c + n, static_cast<long>(i));
                };
            },
            x.to_double(), ctx);
        return power(x, c) * inner;
    });
}

Approx weighted_truncated_log(const Approx& weight_total, const std::function<Sequence()>& weights,
                              const Real& x, const Real& c, const PrecisionContext& ctx) {
    const Approx h1 = Hcap(1, x, c, ctx);
    const Real head = h1.value;
    Approx tails = geometric(
        [&]() -> Sequence {
            auto w = std::make_shared<Sequence>(weights());
            auto partial = std::make_shared<Real>(0);
            auto xk = std::make_shared<Real>(power(x, c).value);
            return [w, partial, xk, head, x, c](long n) {
                *xk *= x;
                *partial += *xk / (c + n);
                return (*w)(n) * (head - *partial);
            };
        },
        x.to_double(), ctx);
    Approx result = h1 * weight_total - tails;
    result.error += h1.error * (abs(weight_total.value) + 1) * 2;
    return result;
}

void require_fields(const ParamPoint& pt, const std::string& fields) {
    for (char f : fields) {
        if (!pt.has(f)) throw DomainError(std::string("missing parameter '") + f + "'");
    }
}

void require_greater(const Real& v, long bound, const char* what) {
    if (!(v > Real(bound))) throw DomainError(std::string(what) + " must exceed " + std::to_string(bound));
}

void require_greater(const Real& v, const Real& bound, const char* what) {
    if (!(v > bound)) throw DomainError(std::string(what) + " must exceed " + bound.str(6));
}

void require_non_integer(const Real& a, const PrecisionContext& ctx, const char* what) {
    if (near_integer(a, ctx)) throw DomainError(std::string(what) + " must not be an integer");
}

void require_unit_interval(const Real& x, const char* what) {
    if (!(x > Real(0) && x < Real(1))) throw DomainError(std::string(what) + " must lie in (0, 1)");
}

void require_at_least(int v, int lo, const char* what) {
    if (v < lo) throw DomainError(std::string(what) + " must be at least " + std::to_string(lo));
}

void require_below_one(const Real& a, const char* what) {
    if (!(abs(a) < Real(1))) throw DomainError(std::string(what) + " must satisfy |" + what + "| < 1");
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r.get_si();
}

Approx exact(const mpq_class& q) { return Approx(Real(q)); }

std::vector<mpq_class> grid_a() {
    return {mpq_class(-2, 5), mpq_class(1, 4), mpq_class(1, 3), mpq_class(1, 2), mpq_class(3, 2)};
}

std::vector<mpq_class> grid_x() { return {mpq_class(-9, 10), mpq_class(-1, 2), mpq_class(1, 2), mpq_class(9, 10)}; }

std::vector<int> grid_sp() { return {2, 3, 4}; }

std::vector<int> grid_m() { return {0, 1, 2}; }

std::vector<int> grid_n() { return {1, 2, 5}; }

std::vector<std::pair<mpq_class, mpq_class>> grid_ab() {
    const auto a = grid_a();
    std::vector<std::pair<mpq_class, mpq_class>> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], a[(i + 1) % a.size()]);
    for (const auto& v : a) out.emplace_back(v, v);
    return out;
}

bool abs_below_one(const mpq_class& a) { return abs(a) < 1; }

}  // namespace eulersums::detail
