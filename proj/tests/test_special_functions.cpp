#include "eulersums/combinatorics.hpp"
#include "eulersums/special.hpp"

#include <doctest.h>

using namespace eulersums;

namespace {

const PrecisionContext& ctx40() {
    static const PrecisionContext ctx = make_context(40);
    return ctx;
}

Real tol() { return pow10(-38); }

}  // namespace

TEST_CASE("euler gamma") {
    PrecisionScope scope(ctx40().working_bits());
    const Real g = euler_gamma(ctx40());
    CHECK(g > Real(std::string_view("0.577")));
    CHECK(g < Real(std::string_view("0.578")));
}

TEST_CASE("riemann_zeta and conventions") {
    PrecisionScope scope(ctx40().working_bits());
    const Real pi = const_pi();
    CHECK(abs(riemann_zeta(2, ctx40()) - pi * pi / 6) < tol());
    CHECK(abs(riemann_zeta(2, ctx40()) - hurwitz_zeta(2L, Real(1), ctx40())) < tol());
    CHECK(riemann_zeta(0, ctx40(), true) == Real(-1) / 2);
    CHECK(riemann_zeta(1, ctx40(), true).is_zero());
    CHECK_THROWS_AS(riemann_zeta(1, ctx40()), DomainError);
    CHECK_THROWS_AS(riemann_zeta(0, ctx40()), DomainError);
}

TEST_CASE("alt_zeta") {
    PrecisionScope scope(ctx40().working_bits());
    const Real pi = const_pi();
    CHECK(abs(alt_zeta(1, ctx40()) - const_log2()) < tol());
    CHECK(abs(alt_zeta(2, ctx40()) - pi * pi / 12) < tol());
    CHECK(abs(alt_zeta(3, ctx40()) - riemann_zeta(3, ctx40()) * 3 / 4) < tol());
    CHECK_THROWS_AS(alt_zeta(0, ctx40()), DomainError);
}

TEST_CASE("hurwitz_zeta") {
    PrecisionScope scope(ctx40().working_bits());
    const Real pi = const_pi();
    CHECK(abs(hurwitz_zeta(2L, Real(mpq_class(3, 2)), ctx40()) - (pi * pi / 2 - 4)) < tol());
    CHECK(abs(hurwitz_zeta(3L, Real(1), ctx40()) - riemann_zeta(3, ctx40())) < tol());
    for (long s : {2L, 3L, 5L}) {
        for (const char* q : {"0.3", "1.25", "7.5"}) {
            const Real Q{std::string_view(q)};
            CHECK(abs(hurwitz_zeta(s, Q, ctx40()) - hurwitz_zeta(s, Q + 1, ctx40()) - pow(Q, -s)) < tol());
        }
    }
    CHECK(abs(hurwitz_zeta(Real(std::string_view("2.5")), Real(1), ctx40()) -
              hurwitz_zeta(Real(std::string_view("2.5")), Real(2), ctx40()) - 1) < tol());
    CHECK_THROWS_AS(hurwitz_zeta(2L, Real(0), ctx40()), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(1L, Real(1), ctx40()), DomainError);
}

TEST_CASE("alt_hurwitz_zeta") {
    PrecisionScope scope(ctx40().working_bits());
    const Real pi = const_pi();
    CHECK(abs(alt_hurwitz_zeta(1, Real(1), ctx40()) - const_log2()) < tol());
    CHECK(abs(alt_hurwitz_zeta(2, Real(1), ctx40()) - pi * pi / 12) < tol());
    // sum (-1)^(n-1)/(n+1/2) = 2 - pi/2 by pairing against the Leibniz series
    CHECK(abs(alt_hurwitz_zeta(1, Real(mpq_class(3, 2)), ctx40()) - (2 - pi / 2)) < tol());
    CHECK_THROWS_AS(alt_hurwitz_zeta(2, Real(-1), ctx40()), DomainError);
}

TEST_CASE("digamma and polygamma") {
    PrecisionScope scope(ctx40().working_bits());
    const Real g = euler_gamma(ctx40());
    CHECK(abs(digamma(Real(1), ctx40()) + g) < tol());
    CHECK(abs(digamma(Real(2), ctx40()) - (1 - g)) < tol());
    CHECK(abs(polygamma(1, Real(1), ctx40()) - riemann_zeta(2, ctx40())) < tol());
    for (int m = 1; m <= 4; ++m) {
        const Real q(mpq_class(7, 3));
        long fact = 1;
        for (int k = 2; k <= m; ++k) fact *= k;
        const Real bridge = (m % 2 == 1 ? 1 : -1) * fact * hurwitz_zeta(static_cast<long>(m + 1), q, ctx40());
        CHECK(abs(polygamma(m, q, ctx40()) - bridge) < tol());
    }
    CHECK_THROWS_AS(digamma(Real(0), ctx40()), DomainError);
    CHECK_THROWS_AS(polygamma(2, Real(-1) / 2, ctx40()), DomainError);
}

TEST_CASE("pi_cot_pi and reflection") {
    PrecisionScope scope(ctx40().working_bits());
    const Real pi = const_pi();
    CHECK(abs(pi_cot_pi(Real(1) / 2, ctx40())) < tol());
    CHECK(abs(pi_cot_pi(Real(1) / 4, ctx40()) - pi) < tol());
    for (const char* x : {"0.3", "0.05", "0.71"}) {
        const Real X{std::string_view(x)};
        CHECK(abs(digamma(1 - X, ctx40()) - digamma(X, ctx40()) - pi_cot_pi(X, ctx40())) < tol());
    }
    CHECK_THROWS_AS(pi_cot_pi(Real(3), ctx40()), DomainError);
}

TEST_CASE("param_polylog") {
    PrecisionScope scope(ctx40().working_bits());
    const Real pi = const_pi();
    CHECK(abs(param_polylog(1, Real(0), Real(1) / 2, ctx40()) - const_log2()) < tol());
    CHECK(abs(param_polylog(2, Real(0), Real(1), ctx40()) - pi * pi / 6) < tol());
    const Real a(mpq_class(1, 2));
    CHECK(abs(param_polylog(2, a, Real(-1), ctx40()) + alt_hurwitz_zeta(2, a + 1, ctx40())) < tol());
    CHECK_THROWS_AS(param_polylog(1, Real(0), Real(1), ctx40()), DomainError);
    CHECK_THROWS_AS(param_polylog(2, Real(-1), Real(1) / 2, ctx40()), DomainError);
    CHECK_THROWS_AS(param_polylog(2, Real(0), Real(2), ctx40()), DomainError);
}

TEST_CASE("param_polylog satisfies x d/dx Li_s = Li_(s-1)") {
    const PrecisionContext ctx = make_context(30);
    PrecisionScope scope(ctx.working_bits());
    const Real h = pow10(-8);
    for (const char* x : {"0.3", "0.6"}) {
        const Real X{std::string_view(x)};
        const Real d = (param_polylog(3, Real(0), X + h, ctx) - param_polylog(3, Real(0), X - h, ctx)) / (2 * h);
        CHECK(abs(X * d - param_polylog(2, Real(0), X, ctx)) < pow10(-14));
    }
}

TEST_CASE("h_cap") {
    PrecisionScope scope(ctx40().working_bits());
    CHECK(abs(h_cap(2, Real(1), Real(0), ctx40()) - riemann_zeta(2, ctx40())) < tol());
    CHECK(abs(h_cap(1, Real(1) / 2, Real(0), ctx40()) - const_log2()) < tol());
    const Real a(mpq_class(1, 4));
    CHECK(abs(h_cap(2, Real(1), a, ctx40()) - hurwitz_zeta(2L, a + 1, ctx40())) < tol());
    CHECK_THROWS_AS(h_cap(1, Real(1), Real(0), ctx40()), DomainError);
}

TEST_CASE("aux_sum_reciprocal") {
    PrecisionScope scope(ctx40().working_bits());
    const Real ln2 = const_log2();
    CHECK(abs(aux_sum_reciprocal(Real(1), ctx40()) - 1) < tol());
    CHECK(abs(aux_sum_reciprocal(Real(1) / 2, ctx40()) - (4 - 4 * ln2)) < tol());
    CHECK(abs(aux_sum_reciprocal(Real(-1) / 2, ctx40()) - 4 * ln2) < tol());
    CHECK_THROWS_AS(aux_sum_reciprocal(Real(-1), ctx40()), DomainError);
}

TEST_CASE("harmonic numbers through the smooth extension") {
    PrecisionScope scope(ctx40().working_bits());
    const Real g = euler_gamma(ctx40());
    for (long n : {1L, 7L, 50L}) {
        CHECK(abs(Real(harmonic(n, 1)) - (digamma(Real(n + 1), ctx40()) + g)) < tol());
        CHECK(abs(Real(harmonic(n, 2)) - (riemann_zeta(2, ctx40()) - polygamma(1, Real(n + 1), ctx40()))) < tol());
        CHECK(abs(Real(harmonic(n, 3)) - (riemann_zeta(3, ctx40()) + polygamma(2, Real(n + 1), ctx40()) / 2)) < tol());
    }
}

TEST_CASE("near_integer guard") {
    PrecisionScope scope(ctx40().working_bits());
    CHECK(near_integer(Real(2), ctx40()));
    CHECK(near_integer(Real(2) + pow10(-30), ctx40()));
    CHECK_FALSE(near_integer(Real(2) + pow10(-10), ctx40()));
}
