#include "eulersums/combinatorics.hpp"
#include "eulersums/special.hpp"

#include <doctest.h>

using namespace eulersums;

TEST_CASE("harmonic and alternating harmonic numbers") {
    CHECK(harmonic(3, 1) == mpq_class(11, 6));
    CHECK(harmonic(0, 4) == 0);
    CHECK(harmonic(2, 2) == mpq_class(5, 4));
    CHECK(alt_harmonic(1, 1) == 1);
    CHECK(alt_harmonic(2, 1) == mpq_class(1, 2));
    CHECK(alt_harmonic(3, 2) == mpq_class(31, 36));
    CHECK_THROWS(harmonic(3, 0));
    CHECK_THROWS(alt_harmonic(3, -1));
}

TEST_CASE("stirling1 values") {
    CHECK(stirling1(4, 2) == 11);
    CHECK(stirling1(4, 1) == 6);
    CHECK(stirling1(3, 5) == 0);
    CHECK(stirling1(0, 0) == 1);
    CHECK(stirling1(5, 0) == 0);
    CHECK(stirling1(5, 3) == 35);
    CHECK(stirling1(100, 1) > 0);
}

TEST_CASE("stirling table recurrence and generating polynomial") {
    const StirlingTable table(40);
    CHECK(table.recurrence_holds());
    CHECK(table.at(2, 5) == 0);
    for (int n = 0; n <= 12; ++n) {
        const auto poly = stirling_generating_polynomial(n);
        REQUIRE(poly.size() == static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) CHECK(poly[static_cast<std::size_t>(k)] == table.at(n + 1, k + 1));
    }
    const auto p3 = stirling_generating_polynomial(3);
    CHECK(p3 == std::vector<mpz_class>{6, 11, 6, 1});
}

TEST_CASE("stirling sums and closed forms") {
    CHECK(verify_stirling_sums(6, 2));
    CHECK(verify_stirling_sums(1, 2));
    CHECK(verify_stirling_sums(10, 4));
    for (int n = 1; n <= 30; ++n) {
        for (int p = 1; p <= 6; ++p) CHECK(verify_stirling_sums(n, p));
        CHECK(verify_stirling_closed_forms(n));
    }
    CHECK_THROWS(verify_stirling_sums(0, 1));
}

TEST_CASE("harmonic square sums") {
    CHECK(verify_harmonic_square_sums(1));
    CHECK(verify_harmonic_square_sums(3));
    CHECK(verify_harmonic_square_sums(25));
}

TEST_CASE("log power series coefficients") {
    for (int p = 0; p <= 6; ++p) CHECK(verify_log_power_series(p, 30));
}

TEST_CASE("partial_hurwitz") {
    const PrecisionContext ctx = make_context(30);
    PrecisionScope scope(ctx.working_bits());
    CHECK(partial_hurwitz(2, 1, Real(0), ctx) == Real(mpq_class(3, 2)));
    CHECK(partial_hurwitz(0, 3, Real(1) / 2, ctx).is_zero());
    const Real expected = Real(4) / 9 + Real(4) / 25 + Real(4) / 49;
    CHECK(abs(partial_hurwitz(3, 2, Real(1) / 2, ctx) - expected) < pow10(-28));
    CHECK(abs(partial_hurwitz(6, 4, Real(0), ctx) - Real(harmonic(6, 4))) < pow10(-35));
    CHECK_THROWS_AS(partial_hurwitz(3, 2, Real(-1), ctx), DomainError);
}
