#include "eulersums/context.hpp"
#include "eulersums/series.hpp"
#include "eulersums/special.hpp"

#include <doctest.h>

using namespace eulersums;

TEST_CASE("make_context defaults") {
    const PrecisionContext c50 = make_context(50);
    CHECK(c50.decimal_digits == 50);
    CHECK(c50.guard_digits == 10);
    CHECK(c50.em_order == 8);
    CHECK(c50.max_terms == 1000000);
    CHECK(c50.working_bits() >= static_cast<mpfr_prec_t>(60 * 3.3219));

    const PrecisionContext c10 = make_context(10);
    CHECK(c10.working_bits() >= static_cast<mpfr_prec_t>(20 * 3.3219));

    CHECK(make_context(100).guard_digits == 20);
    CHECK_THROWS_AS(make_context(5), std::invalid_argument);
}

TEST_CASE("validate rejects out-of-range fields") {
    PrecisionContext ctx = make_context(30);
    ctx.em_order = 1;
    CHECK_THROWS(validate(ctx));
    ctx = make_context(30);
    ctx.max_terms = 10;
    CHECK_THROWS(validate(ctx));
    ctx = make_context(30);
    ctx.guard_digits = 3;
    CHECK_THROWS(validate(ctx));
}

TEST_CASE("Real keeps the thread working precision") {
    PrecisionScope outer(128);
    Real a(1);
    CHECK(a.precision() == 128);
    {
        PrecisionScope inner(256);
        CHECK((Real(1) / 3).precision() == 256);
    }
    CHECK((Real(1) / 3).precision() == 128);
    CHECK(Real(mpq_class(1, 4)) == Real(std::string_view("0.25")));
}

TEST_CASE("sum_series on 1/t^2 matches the Hurwitz zeta evaluator") {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    SmoothTerm term;
    term.eval = [](const Real& t) { return 1 / (t * t); };
    term.decay_exponent = 2.0;
    const SeriesValue v = sum_series(term, ctx);
    const Real ref = hurwitz_zeta(2L, Real(1), ctx);
    CHECK(abs(v.value - ref) <= v.tail_bound + pow10(-45));
    CHECK(abs(v.value - ref) < pow10(-40));
}

TEST_CASE("sum_series telescoping and zero summands") {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    SmoothTerm tele;
    tele.eval = [](const Real& t) { return 1 / (t * (t + 1)); };
    const SeriesValue v = sum_series(tele, ctx);
    CHECK(abs(v.value - 1) <= v.tail_bound + pow10(-45));

    SmoothTerm zero;
    zero.eval = [](const Real&) { return Real(0); };
    const SeriesValue z = sum_series(zero, ctx);
    CHECK(z.value.is_zero());
    CHECK(z.tail_bound < pow10(-50));
}

TEST_CASE("sum_series pairs alternating terms") {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    SmoothTerm alt;
    alt.eval = [](const Real& t) { return 1 / t; };
    alt.decay_exponent = 1.5;
    alt.alternating = true;
    const SeriesValue v = sum_series(alt, ctx);
    CHECK(abs(v.value - const_log2()) < pow10(-40));
}

TEST_CASE("sum_series rejects a non-decaying exponent") {
    const PrecisionContext ctx = make_context(20);
    SmoothTerm bad;
    bad.eval = [](const Real& t) { return 1 / t; };
    bad.decay_exponent = 1.0;
    CHECK_THROWS(sum_series(bad, ctx));
}

TEST_CASE("raising em_order lowers the tail bound at a fixed crossover") {
    PrecisionContext lo = make_context(40);
    PrecisionContext hi = lo;
    hi.em_order = 2 * lo.em_order;
    PrecisionScope scope(lo.working_bits());
    SmoothTerm term;
    term.eval = [](const Real& t) { return 1 / (t * t); };
    const SeriesValue a = sum_series(term, lo);
    const SeriesValue b = sum_series(term, hi);
    CHECK(b.tail_bound <= a.tail_bound);
}

TEST_CASE("more digits never worsen the residual against a fixed reference") {
    const PrecisionContext ref_ctx = make_context(80);
    PrecisionScope scope(ref_ctx.working_bits());
    const Real ref = riemann_zeta(3, ref_ctx);
    SmoothTerm term;
    term.eval = [](const Real& t) { return 1 / (t * t * t); };
    term.decay_exponent = 3.0;
    Real previous(1);
    for (int d : {20, 30, 40, 50}) {
        const Real residual = abs(sum_series(term, make_context(d)).value - ref);
        CHECK(residual <= previous);
        previous = residual;
    }
}

TEST_CASE("sum_geometric on 2^-n") {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    const SeriesValue v = sum_geometric([](long n) { return pow(Real(2), -n); }, 0.5, ctx);
    CHECK(abs(v.value - 1) < pow10(-40));
}

TEST_CASE("integrate_adaptive examples") {
    const PrecisionContext ctx = make_context(40);
    PrecisionScope scope(ctx.working_bits());
    const SeriesValue lin = integrate_adaptive([](const Real& t) { return t; }, Real(0), Real(1), ctx);
    CHECK(abs(lin.value - Real(1) / 2) < pow10(-38));

    const SeriesValue logint =
        integrate_adaptive([](const Real& t) { return log(t) / (1 - t); }, Real(0), Real(1), ctx);
    CHECK(abs(logint.value + riemann_zeta(2, ctx)) < pow10(-35));

    const Real half = Real(1) / 2;
    const SeriesValue sing = integrate_adaptive([](const Real& t) { return 1 / sqrt(t); }, Real(0), half, ctx);
    CHECK(abs(sing.value - 2 * sqrt(half)) < pow10(-35));
}

TEST_CASE("elementary integral identity for n <= 5, m <= 3, a in {0, 1/2}") {
    // int_0^1 t^(n+a-1) ln^(m-1)(t) dt = (-1)^(m-1) (m-1)! / (n+a)^m
    const PrecisionContext ctx = make_context(30);
    PrecisionScope scope(ctx.working_bits());
    for (int n = 1; n <= 5; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (const Real& a : {Real(0), Real(1) / 2}) {
                const Real e = n + a - 1;
                const SeriesValue v = integrate_adaptive(
                    [&](const Real& t) { return pow(t, e) * pow(log(t), static_cast<long>(m - 1)); }, Real(0), Real(1),
                    ctx);
                long fact = 1;
                for (int k = 2; k < m; ++k) fact *= k;
                const Real expected = ((m - 1) % 2 == 0 ? 1 : -1) * fact / pow(n + a, static_cast<long>(m));
                CHECK(abs(v.value - expected) <= v.tail_bound + pow10(-28));
            }
        }
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(2) == mpq_class(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
}
