#include "eulersums/kernel_residues.hpp"
#include "eulersums/special.hpp"

#include <doctest.h>

#include <cmath>

using namespace eulersums;

namespace {

const PrecisionContext& ctx40() {
    static const PrecisionContext ctx = make_context(40);
    return ctx;
}

Real tol() { return pow10(-38); }

Real z(int s) { return riemann_zeta(s, ctx40()); }

}  // namespace

TEST_CASE("kernel kind names round-trip") {
    for (auto kind : {KernelKind::cot, KernelKind::psi_pos, KernelKind::psi_neg, KernelKind::polygamma_pos,
                      KernelKind::polygamma_neg}) {
        CHECK(parse_kernel_kind(to_string(kind)) == kind);
    }
    CHECK_FALSE(parse_kernel_kind("bogus").has_value());
    CHECK(is_negative_center(KernelKind::psi_neg));
    CHECK_FALSE(is_negative_center(KernelKind::cot));
}

TEST_CASE("cot kernel at n = 3") {
    PrecisionScope scope(ctx40().working_bits());
    const LocalExpansion e = expand_kernel(KernelKind::cot, 3, 0, 3, ctx40());
    CHECK(e.center == 3);
    CHECK(e.lowest_order == -1);
    CHECK(abs(e.coefficient(-1) - 1) < tol());
    CHECK(abs(e.coefficient(0)) < tol());
    CHECK(abs(e.coefficient(1) + 2 * z(2)) < tol());
    CHECK(abs(e.coefficient(2)) < tol());
    CHECK(abs(e.coefficient(3) + 2 * z(4)) < tol());
    CHECK(e.coefficient(9).is_zero());
}

TEST_CASE("psi kernels at positive and negative centres") {
    PrecisionScope scope(ctx40().working_bits());
    const LocalExpansion pos = expand_kernel(KernelKind::psi_pos, 0, 0, 1, ctx40());
    CHECK(abs(pos.coefficient(-1) - 1) < tol());
    CHECK(abs(pos.coefficient(0)) < tol());
    CHECK(abs(pos.coefficient(1) + z(2)) < tol());

    const LocalExpansion neg = expand_kernel(KernelKind::psi_neg, 2, 0, 1, ctx40());
    CHECK(neg.center == -2);
    CHECK(abs(neg.coefficient(0) - 1) < tol());
    CHECK(abs(neg.coefficient(1) - (1 - z(2))) < tol());
}

TEST_CASE("expansions agree with direct evaluation near the centre") {
    const PrecisionContext& ctx = ctx40();
    PrecisionScope scope(ctx.working_bits());
    const std::vector<Real> radii{Real(std::string_view("0.01"))};
    for (auto kind : {KernelKind::cot, KernelKind::psi_pos, KernelKind::psi_neg, KernelKind::polygamma_pos,
                      KernelKind::polygamma_neg}) {
        for (long n : {1L, 3L}) {
            const LocalExpansion e = expand_kernel(kind, n, 3, 10, ctx);
            CHECK(validate_expansion(e, kind, n, 3, radii, ctx) < pow10(-15));
        }
    }
    const LocalExpansion e = expand_kernel(KernelKind::cot, 1, 0, 4, ctx);
    CHECK_THROWS(validate_expansion(e, KernelKind::cot, 1, 0, {Real(1)}, ctx));
    CHECK_THROWS(validate_expansion(e, KernelKind::cot, 2, 0, radii, ctx));
}

TEST_CASE("truncation error scales like r^(K+1)") {
    // err(0.1) <= C 0.1^6 with C = err(0.2) / 0.2^6
    const ScalingFit cot = fit_expansion_scaling(KernelKind::cot, 1, 0, 5, {0.1, 0.2}, ctx40());
    CHECK(cot.errors[0] <= cot.errors[1] / 64);
    CHECK(cot.errors[0] < cot.errors[1]);

    const ScalingFit psi = fit_expansion_scaling(KernelKind::psi_pos, 2, 0, 4, {0.05, 0.1}, ctx40());
    const double ratio = psi.errors[0] / psi.errors[1];
    CHECK(ratio > std::pow(2.0, -5) / 2);
    CHECK(ratio < std::pow(2.0, -5) * 2);

    for (auto kind : {KernelKind::psi_neg, KernelKind::polygamma_neg}) {
        const ScalingFit f = fit_expansion_scaling(kind, 2, 3, kDefaultExpansionOrder, default_radii(), ctx40());
        CHECK(std::abs(f.slope - (kDefaultExpansionOrder + 1)) <= 0.2);
    }
}

TEST_CASE("polygamma_pos with p = 2 at n >= 1 scales one power faster") {
    // The r^(K+1) coefficient (K+2)(zeta(K+3) - zeta_n(K+3)) is a small tail when n >= 1.
    const ScalingFit f =
        fit_expansion_scaling(KernelKind::polygamma_pos, 1, 2, kDefaultExpansionOrder, default_radii(), ctx40());
    CHECK(std::abs(f.slope - (kDefaultExpansionOrder + 2)) <= 0.2);
}

TEST_CASE("polygamma_any") {
    PrecisionScope scope(ctx40().working_bits());
    for (int k = 0; k <= 9; ++k) {
        for (const char* x : {"2.3", "-0.4", "-2.7"}) {
            const Real X{std::string_view(x)};
            const Real lhs = polygamma_any(k, X + 1, ctx40()) - polygamma_any(k, X, ctx40());
            long fact = 1;
            for (int j = 2; j <= k; ++j) fact *= j;
            const Real rhs = (k % 2 == 0 ? 1 : -1) * fact / pow(X, static_cast<long>(k + 1));
            CHECK(abs(lhs - rhs) < abs(rhs) * pow10(-35) + tol());
        }
    }
    CHECK(abs(polygamma_any(0, Real(std::string_view("0.3")), ctx40()) -
              digamma(Real(std::string_view("0.3")), ctx40())) < tol());
    CHECK_THROWS_AS(polygamma_any(1, Real(-2), ctx40()), DomainError);
}

TEST_CASE("even ledger pole terms") {
    PrecisionScope scope(ctx40().working_bits());
    const Real a(mpq_class(3, 10));
    const ResidueLedger ledger = residue_ledger_even(a, 1, 10, ctx40());
    CHECK(ledger.N == 10);
    CHECK(ledger.positive_residues.size() == 10);
    CHECK(ledger.negative_residues.size() == 10);
    CHECK(abs(ledger.pole_at_zero + z(3) * 2 / (a * a)) < tol());
}

TEST_CASE("even ledger residue sums decrease with N") {
    PrecisionScope scope(ctx40().working_bits());
    const ResidueLedger ledger = residue_ledger_even(Real(mpq_class(3, 10)), 1, 1000, ctx40());
    const Real r5 = residue_sum_check(ledger, 5);
    const Real r10 = residue_sum_check(ledger, 10);
    const Real r100 = residue_sum_check(ledger, 100);
    const Real r1000 = residue_sum_check(ledger);
    CHECK(r10 < r5);
    CHECK(r100 < r10);
    CHECK(r1000 < r100);
    CHECK(r1000 < pow10(-8));

    ResidueLedger broken = ledger;
    broken.pole_at_zero = -broken.pole_at_zero;
    CHECK(residue_sum_check(broken) > Real(1) / 10);
}

TEST_CASE("odd ledger converges with the corrected zero pole") {
    PrecisionScope scope(ctx40().working_bits());
    const Real a(mpq_class(3, 10));
    const ResidueLedger ledger = residue_ledger_odd(a, 1, 1, 1000, ctx40(), ZeroPoleForm::corrected);
    CHECK(residue_sum_check(ledger) < residue_sum_check(ledger, 100));
    CHECK(residue_sum_check(ledger) < pow10(-6));
    const ResidueLedger printed = residue_ledger_odd(a, 1, 1, 1000, ctx40(), ZeroPoleForm::printed);
    CHECK(residue_sum_check(printed) > Real(1) / 100);
    const ResidueLedger m0 = residue_ledger_odd(a, 0, 1, 1000, ctx40(), ZeroPoleForm::printed);
    CHECK(residue_sum_check(m0) < pow10(-6));
}

TEST_CASE("implied sums match the brute force series") {
    PrecisionScope scope(ctx40().working_bits());
    const Real a(mpq_class(3, 10));
    SmoothTerm even;
    // zeta_n(2) = zeta(2) - psi'(n+1) keeps the series smooth in n
    even.eval = [&](const Real& t) { return (z(2) - polygamma(1, t + 1, ctx40())) / (t * (t * t - a * a)); };
    even.decay_exponent = 3.0;
    const Real brute = sum_series(even, ctx40()).value;
    CHECK(abs(implied_even_sum(a, 1, ctx40()).value - brute) < pow10(-35));

    SmoothTerm odd;
    odd.eval = [&](const Real& t) {
        return (z(3) + polygamma(2, t + 1, ctx40()) / 2) / (t * t * (t * t - a * a));
    };
    odd.decay_exponent = 4.0;
    const Real brute_odd = sum_series(odd, ctx40()).value;
    CHECK(abs(implied_odd_sum(a, 1, 1, ctx40(), ZeroPoleForm::corrected).value - brute_odd) < pow10(-35));
}

TEST_CASE("ledger domain errors") {
    CHECK_THROWS_AS(residue_ledger_even(Real(2), 1, 10, ctx40()), DomainError);
    CHECK_THROWS(residue_ledger_even(Real(mpq_class(1, 2)), 0, 10, ctx40()));
    CHECK_THROWS(residue_ledger_even(Real(mpq_class(1, 2)), 1, 0, ctx40()));
    CHECK_THROWS(expand_kernel(KernelKind::psi_neg, 0, 0, 3, ctx40()));
    CHECK_THROWS(expand_kernel(KernelKind::polygamma_pos, 1, 1, 3, ctx40()));
}
