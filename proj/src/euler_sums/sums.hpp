#pragma once

#include "eulersums/approx.hpp"
#include "eulersums/identity.hpp"
#include "eulersums/series.hpp"
#include "eulersums/special.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace eulersums::detail {

// (-1)^k
inline long sgn(long k) { return (k % 2 == 0) ? 1 : -1; }

// A partial sum P_n = sum_{k<=n} increment(k) with a smooth extension in n.
struct Partial {
    std::function<Real(const Real&)> smooth;
    std::function<Real(long)> increment;
};

// H_t = psi(t+1) + gamma
Partial harmonic_partial(const PrecisionContext& ctx);
// sum_{k<=t} 1/(k+c)^p; psi-based for p = 1, Hurwitz tails otherwise
Partial hurwitz_partial(int p, const Real& c, const PrecisionContext& ctx);

using Combine = std::function<Real(const Real& t, const std::vector<Real>& parts)>;

// Summand f(n) = combine(n, P_1(n), ..., P_k(n)).
SmoothTerm partial_term(std::vector<Partial> parts, Combine combine, double decay);
// Summand F(n, L_n) with L_n = sum_{k<=n} (-1)^(k-1)/k, paired as F(2t-1,.) + F(2t,.).
SmoothTerm alternating_harmonic_term(std::function<Real(const Real& n, const Real& L)> f, double decay);

Approx series(const SmoothTerm& term, const PrecisionContext& ctx);
Approx rational_series(RealFn f, double decay, const PrecisionContext& ctx, bool alternating = false);
// factory returns a fresh generator called with n = 1, 2, ...
Approx geometric(const std::function<Sequence()>& factory, double ratio, const PrecisionContext& ctx);

// Caches a value across evaluations; key must identify the quantity, the context is appended.
Approx memo(const std::string& key, const PrecisionContext& ctx, const std::function<Approx()>& compute);
std::string key_of(const Real& v);

// Special-function values with a rounding allowance.
Approx zeta(int s, const PrecisionContext& ctx, bool convention = false);
Approx hurwitz(long s, const Real& q, const PrecisionContext& ctx);
Approx alt_hurwitz(long s, const Real& q, const PrecisionContext& ctx);
Approx alt_zeta_value(int s, const PrecisionContext& ctx);
Approx cot_pi(const Real& a, const PrecisionContext& ctx);
Approx log2_value();
// sum 1/(n(n+a)), zeta(2) at a = 0
Approx aux(const Real& a, const PrecisionContext& ctx);
Approx Li(int s, const Real& a, const Real& x, const PrecisionContext& ctx);
Approx Li1(const Real& x, const PrecisionContext& ctx);
Approx Hcap(int m, const Real& x, const Real& a, const PrecisionContext& ctx);
Approx power(const Real& x, const Real& e);

// Linear sums reused across identities (memoised).
// sum H_n / (n+a)^j
Approx harmonic_sum(int j, const Real& a, const PrecisionContext& ctx);
// sum H_n / (n (n+a))
Approx harmonic_over_n_sum(const Real& a, const PrecisionContext& ctx);
// sum zeta_n(u, c+1) / (n+c)^i
Approx hurwitz_partial_sum(int u, const Real& c, int i, const PrecisionContext& ctx);
// sum zeta_n(u, c+1) x^(n+c) / (n+c)^i
Approx hurwitz_partial_power_sum(int u, const Real& c, int i, const Real& x, const PrecisionContext& ctx);
// sum_n w_n sum_{k<=n} x^(k+c)/(k+c) via H_1(x,c) sum w - sum w_n (tail_n); weights from a generator.
Approx weighted_truncated_log(const Approx& weight_total, const std::function<Sequence()>& weights,
                              const Real& x, const Real& c, const PrecisionContext& ctx);

// Domain helpers; all throw DomainError.
void require_fields(const ParamPoint& pt, const std::string& fields);
void require_greater(const Real& v, long bound, const char* what);
void require_greater(const Real& v, const Real& bound, const char* what);
void require_non_integer(const Real& a, const PrecisionContext& ctx, const char* what);
void require_unit_interval(const Real& x, const char* what);  // 0 < x < 1
void require_at_least(int v, int lo, const char* what);
void require_below_one(const Real& a, const char* what);  // |a| < 1

long binomial(long n, long k);
Approx exact(const mpq_class& q);

// Base grid values.
std::vector<mpq_class> grid_a();
std::vector<mpq_class> grid_x();
std::vector<int> grid_sp();
std::vector<int> grid_m();
std::vector<int> grid_n();
// 5 cyclic neighbours plus 5 diagonal pairs of grid_a()
std::vector<std::pair<mpq_class, mpq_class>> grid_ab();
bool abs_below_one(const mpq_class& a);

using Registrar = void (*)(std::vector<IdentityEntry>&);
void register_linear(std::vector<IdentityEntry>& out);
void register_cubic(std::vector<IdentityEntry>& out);
void register_parametric(std::vector<IdentityEntry>& out);

}  // namespace eulersums::detail
