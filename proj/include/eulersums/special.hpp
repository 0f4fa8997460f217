#pragma once

#include "eulersums/context.hpp"
#include "eulersums/real.hpp"

#include <stdexcept>

namespace eulersums {

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Values substituted for zeta(0) and zeta(1) where a formula asks for them.
struct ZetaConvention {
    static Real zeta_zero() { return Real(-1) / 2; }
    static Real zeta_one() { return Real(0); }
};

// All functions below evaluate at max(thread working precision, ctx.working_bits()).

Real euler_gamma(const PrecisionContext& ctx);

Real riemann_zeta(int s, const PrecisionContext& ctx, bool use_convention = false);
// (1 - 2^(1-s)) zeta(s), ln 2 at s = 1.
Real alt_zeta(int s, const PrecisionContext& ctx);

// zeta(s, q) = sum_{n>=0} (n+q)^-s, so hurwitz_zeta(s, a+1) = sum_{n>=1} (n+a)^-s.
Real hurwitz_zeta(long s, const Real& q, const PrecisionContext& ctx);
Real hurwitz_zeta(const Real& s, const Real& q, const PrecisionContext& ctx);
// sum_{n>=0} (-1)^n (n+q)^-s
Real alt_hurwitz_zeta(long s, const Real& q, const PrecisionContext& ctx);

Real digamma(const Real& x, const PrecisionContext& ctx);
Real polygamma(int m, const Real& x, const PrecisionContext& ctx);

// pi cot(pi a); rejects a within 10^(-digits/2) of an integer.
Real pi_cot_pi(const Real& a, const PrecisionContext& ctx);

// Li_s(a, x) = sum_{n>=1} x^n / (n+a)^s for a > -1, -1 <= x <= 1.
Real param_polylog(int s, const Real& a, const Real& x, const PrecisionContext& ctx);
// H_m(x, a) = sum_{n>=1} x^(n+a) / (n+a)^m = x^a Li_m(a, x).
Real h_cap(int m, const Real& x, const Real& a, const PrecisionContext& ctx);

// sum_{n>=1} 1/(n(n+a)) = (psi(a+1) + gamma)/a
Real aux_sum_reciprocal(const Real& a, const PrecisionContext& ctx);

// True when |a - k| < 10^(-digits/2) for some integer k.
bool near_integer(const Real& a, const PrecisionContext& ctx);

}  // namespace eulersums
