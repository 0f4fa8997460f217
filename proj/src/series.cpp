#include "eulersums/series.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace eulersums {

const mpq_class& bernoulli(int n) {
    static std::mutex mu;
    static std::deque<mpq_class> table{mpq_class(1)};
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        mpq_class acc(0);
        mpz_class binom(1);  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += binom * table[static_cast<std::size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        mpq_class b = -acc / (m + 1);
        b.canonicalize();
        table.push_back(b);
    }
    return table[static_cast<std::size_t>(n)];
}

namespace {

// Finite-difference weights for derivatives of order 0..max_order at 0,
// nodes -M..M with unit spacing (Fornberg's recurrence, exact).
std::vector<std::vector<mpq_class>> fornberg_weights(int M, int max_order) {
    const int n = 2 * M;
    std::vector<mpq_class> x(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) x[static_cast<std::size_t>(j)] = j - M;
    std::vector<std::vector<mpq_class>> c(static_cast<std::size_t>(max_order + 1),
                                          std::vector<mpq_class>(static_cast<std::size_t>(n + 1)));
    auto at = [&](int k, int j) -> mpq_class& {
        return c[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    };
    mpq_class c1(1), c4 = x[0];
    at(0, 0) = 1;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, max_order);
        mpq_class c2(1), c5 = c4;
        c4 = x[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) {
            mpq_class c3 = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    at(k, i) = c1 * (k * at(k - 1, i - 1) - c5 * at(k, i - 1)) / c2;
                }
                at(0, i) = -c1 * c5 * at(0, i - 1) / c2;
            }
            for (int k = mn; k >= 1; --k) {
                at(k, j) = (c4 * at(k, j) - k * at(k - 1, j)) / c3;
            }
            at(0, j) = c4 * at(0, j) / c3;
        }
        c1 = c2;
    }
    return c;
}

const std::vector<std::vector<mpq_class>>& exact_stencil(int M, int max_order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::vector<mpq_class>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(M, max_order);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, fornberg_weights(M, max_order)).first;
    return it->second;
}

struct RealStencil {
    std::vector<std::vector<Real>> w;  // w[k][j], j = 0..2M
};

const RealStencil& stencil(int M, int max_order) {
    thread_local std::map<std::tuple<int, int, mpfr_prec_t>, RealStencil> cache;
    auto key = std::make_tuple(M, max_order, working_precision());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& exact = exact_stencil(M, max_order);
    RealStencil s;
    s.w.resize(exact.size());
    for (std::size_t k = 0; k < exact.size(); ++k) {
        s.w[k].reserve(exact[k].size());
        for (const auto& q : exact[k]) s.w[k].emplace_back(q);
    }
    return cache.emplace(key, std::move(s)).first->second;
}

// Tanh-sinh nodes for one refinement level. delta is the distance from the
// nearer endpoint as a fraction of the interval; weight includes dx/du.
struct TsNode {
    Real delta;
    Real weight;
    bool right;
};

const std::vector<TsNode>& ts_level(int level) {
    thread_local std::map<std::pair<int, mpfr_prec_t>, std::vector<TsNode>> cache;
    const mpfr_prec_t bits = working_precision();
    auto key = std::make_pair(level, bits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<TsNode> nodes;
    const Real half_pi = const_pi() / 2;
    // Offsets down to 2^-2(bits+24) keep t^(-1/2) endpoint tails below the target.
    const double umax = std::asinh(2.0 * (static_cast<double>(bits) + 24.0) * std::log(2.0) / M_PI);
    const long step_den = 1L << level;
    auto push = [&](const Real& u, bool right) {
        Real w = half_pi * sinh(u);
        Real e = exp(2 * abs(w));
        Real one_plus = 1 + e;
        Real delta = 1 / one_plus;
        Real weight = 2 * e / (one_plus * one_plus) * half_pi * cosh(u);
        nodes.push_back({std::move(delta), std::move(weight), right});
    };
    if (level == 0) {
        Real half(1);
        half /= 2;
        nodes.push_back({half, const_pi() / 4, false});
        for (long j = 1; static_cast<double>(j) <= umax; ++j) {
            push(Real(j), true);
            push(Real(j), false);
        }
    } else {
        for (long j = 1; static_cast<double>(j) / static_cast<double>(step_den) <= umax; j += 2) {
            Real u = Real(j) / step_den;
            push(u, true);
            push(u, false);
        }
    }
    return cache.emplace(key, std::move(nodes)).first->second;
}

constexpr int kMaxTsLevel = 12;

SeriesValue tanh_sinh(const RealFn& f, const Real& lo, const Real& hi, const Real& tol) {
    const Real width = hi - lo;
    Real total(0);
    Real previous(0);
    long evals = 0;
    for (int level = 0; level <= kMaxTsLevel; ++level) {
        Real level_sum(0);
        for (const auto& node : ts_level(level)) {
            Real x = node.right ? hi - width * node.delta : lo + width * node.delta;
            if (x == lo || x == hi) continue;
            Real y = f(x);
            ++evals;
            if (!y.is_finite()) throw ConvergenceError("integrand is not finite inside the interval");
            level_sum += node.weight * y;
        }
        const Real h = ldexp(Real(1), -level);
        if (level == 0) {
            total = level_sum * width;
        } else {
            total = total / 2 + level_sum * width * h;
        }
        if (level >= 3) {
            Real diff = abs(total - previous);
            if (diff <= tol) {
                Real bound = diff + epsilon() * abs(total) * 16;
                return {total, bound, evals};
            }
        }
        previous = total;
    }
    throw ConvergenceError("tanh-sinh refinement stalled above the target error");
}

struct Tail {
    Real value;
    Real bound;
    long evals = 0;
};

// Euler-Maclaurin completion of sum_{n >= N} f(n).
Tail em_tail(const RealFn& f, long N, const PrecisionContext& ctx, const Real& quad_tol) {
    const int pmax = 2 * ctx.em_order;
    const int max_order = 2 * pmax + 1;
    const int digits = ctx.decimal_digits + 5;
    const int M = std::max(static_cast<int>(std::ceil(digits / 1.4)) + 4, pmax + 2);

    std::vector<Real> samples;
    samples.reserve(static_cast<std::size_t>(2 * M + 1));
    {
        PrecisionScope elevated(working_precision() + 64);
        const Real h = Real(N) / (2 * M);
        for (int j = -M; j <= M; ++j) samples.push_back(f(Real(N) + h * j));
    }
    const Real h = Real(N) / (2 * M);
    const auto& hi = stencil(M, max_order).w;
    const auto& lo = stencil(M - 1, max_order).w;

    // corrections c_k = B_2k/(2k)! f^(2k-1)(N) from both stencils
    std::vector<Real> corr(static_cast<std::size_t>(pmax + 2));
    std::vector<Real> corr_err(static_cast<std::size_t>(pmax + 2));
    mpz_class fact(1);
    Real hpow = h;
    for (int k = 1; k <= pmax + 1; ++k) {
        const int order = 2 * k - 1;
        Real d_hi(0), d_lo(0);
        for (int j = 0; j <= 2 * M; ++j) {
            d_hi += hi[static_cast<std::size_t>(order)][static_cast<std::size_t>(j)] *
                    samples[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j <= 2 * M - 2; ++j) {
            d_lo += lo[static_cast<std::size_t>(order)][static_cast<std::size_t>(j)] *
                    samples[static_cast<std::size_t>(j + 1)];
        }
        if (k > 1) hpow *= h * h;
        fact *= (2 * k - 1) * (2 * k);
        const Real coef(mpq_class(bernoulli(2 * k) / fact));
        corr[static_cast<std::size_t>(k)] = coef * d_hi / hpow;
        corr_err[static_cast<std::size_t>(k)] = abs(coef * (d_hi - d_lo) / hpow);
    }

    int p = ctx.em_order;
    for (int q = ctx.em_order + 1; q <= pmax; ++q) {
        if (abs(corr[static_cast<std::size_t>(q + 1)]) < abs(corr[static_cast<std::size_t>(p + 1)])) p = q;
    }
    Real em(0), deriv_err(0);
    for (int k = 1; k <= p; ++k) {
        em += corr[static_cast<std::size_t>(k)];
        deriv_err += corr_err[static_cast<std::size_t>(k)];
    }

    const Real n_real(N);
    RealFn g = [&](const Real& v) {
        Real t = n_real / v;
        return f(t) * t / v;
    };
    SeriesValue integral = tanh_sinh(g, Real(0), Real(1), quad_tol);

    Tail tail;
    tail.value = integral.value + samples[static_cast<std::size_t>(M)] / 2 - em;
    tail.bound = 4 * abs(corr[static_cast<std::size_t>(p + 1)]) + integral.tail_bound + deriv_err;
    tail.evals = integral.terms_used + 2 * M + 1;
    return tail;
}

}  // namespace

SeriesValue sum_series(const SmoothTerm& term, const PrecisionContext& ctx) {
    validate(ctx);
    if (!term.eval) throw std::invalid_argument("sum_series: missing term");
    if (!(term.decay_exponent > 1.0)) throw std::invalid_argument("sum_series: decay exponent must exceed 1");
    PrecisionScope scope(ctx.working_bits());

    RealFn f = term.eval;
    Sequence seq;
    if (term.sequence) seq = term.sequence();
    if (term.alternating) {
        RealFn base = term.eval;
        f = [base](const Real& t) { return base(2 * t - 1) - base(2 * t); };
        if (seq) {
            seq = [inner = std::move(seq)](long t) mutable {
                Real odd = inner(2 * t - 1);
                return odd - inner(2 * t);
            };
        }
    }
    if (!seq) seq = [&f](long n) { return f(Real(n)); };

    const Real tol = ctx.target();
    long N = std::max<long>(64, static_cast<long>(ctx.decimal_digits) * ctx.decimal_digits / 4);
    Real direct(0);
    long next = 1;
    for (;;) {
        const long limit = term.alternating ? 2 * N : N;
        if (limit > ctx.max_terms) {
            throw ConvergenceError("sum_series: tail bound not reached within max_terms");
        }
        while (next < N) {
            direct += seq(next);
            ++next;
        }
        const Real scale = max(Real(1), abs(direct));
        Tail tail = em_tail(f, N, ctx, tol * scale / 4);
        Real total = direct + tail.value;
        const Real magnitude = max(Real(1), abs(total));
        Real bound = tail.bound + epsilon() * (N + tail.evals) * magnitude;
        if (bound <= tol * magnitude) {
            const long used = term.alternating ? 2 * (N - 1) : N - 1;
            return {std::move(total), std::move(bound), used};
        }
        N *= 2;
    }
}

SeriesValue sum_geometric(const Sequence& term, double ratio, const PrecisionContext& ctx) {
    validate(ctx);
    if (!(ratio >= 0.0 && ratio < 1.0)) throw std::invalid_argument("sum_geometric: ratio must lie in [0,1)");
    PrecisionScope scope(ctx.working_bits());
    const Real tol = ctx.target();
    const Real factor = Real(4) * Real(ratio) / (1 - Real(ratio));
    Real sum(0), prev(0);
    for (long n = 1; n <= ctx.max_terms; ++n) {
        Real t = term(n);
        sum += t;
        Real recent = max(abs(t), abs(prev));
        if (n >= 3) {
            Real bound = recent * factor + epsilon() * n * max(Real(1), abs(sum));
            if (bound <= tol * max(Real(1), abs(sum))) return {std::move(sum), std::move(bound), n};
        }
        prev = std::move(t);
    }
    throw ConvergenceError("sum_geometric: tail bound not reached within max_terms");
}

SeriesValue integrate_adaptive(const RealFn& f, const Real& lo, const Real& hi, const PrecisionContext& ctx) {
    validate(ctx);
    PrecisionScope scope(ctx.working_bits());
    if (!(lo < hi)) throw std::invalid_argument("integrate_adaptive: requires lo < hi");
    return tanh_sinh(f, lo, hi, ctx.target());
}

}  // namespace eulersums
