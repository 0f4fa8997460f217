#include "eulersums/identity.hpp"
#include "eulersums/special.hpp"

#include <doctest.h>

#include <set>

using namespace eulersums;

namespace {

const PrecisionContext& ctx40() {
    static const PrecisionContext ctx = make_context(40);
    return ctx;
}

const IdentityEntry& entry(const std::string& id) {
    const IdentityEntry* e = find_identity(id);
    REQUIRE(e != nullptr);
    return *e;
}

VerificationResult verify(const std::string& id, const std::string& pt) {
    return verify_identity(entry(id), ParamPoint::parse(pt), ctx40());
}

}  // namespace

TEST_CASE("registry contents") {
    CHECK(registry().size() == 31);
    std::set<std::string> ids;
    for (const auto& e : registry()) {
        CHECK(ids.insert(e.id).second);
        CHECK_FALSE(e.equation.empty());
        CHECK_FALSE(e.quote.empty());
        CHECK_FALSE(e.signature.empty());
        CHECK(e.lhs);
        CHECK(e.rhs);
        CHECK_FALSE(default_grid(e).empty());
    }
    CHECK(find_identity("E4.13")->equation == "Eq. (4.13)");
    CHECK(find_identity("bogus") == nullptr);
    CHECK(find_identity("E2.14")->erratum.has_value());
    CHECK(find_identity("E2.30")->erratum.has_value());
}

TEST_CASE("ParamPoint parsing and printing") {
    const ParamPoint p = ParamPoint::parse("m=2, a=-2/5,x=0.25,n=3");
    CHECK(p.str() == "a=-2/5,x=1/4,m=2,n=3");
    CHECK(ParamPoint::parse(p.str()) == p);
    CHECK(ParamPoint::parse("n_small=4").n_small == 4);
    CHECK(parse_rational("1e-6") == mpq_class(1, 1000000));
    CHECK(parse_rational("-1.5E1") == -15);
    CHECK_THROWS(ParamPoint::parse("q=1"));
    CHECK_THROWS(ParamPoint::parse("a"));
    CHECK_THROWS(ParamPoint::parse("m=1/2"));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(ParamPoint::parse("a=1/2") < ParamPoint::parse("a=2/3"));
}

TEST_CASE("brute_lhs anchors") {
    PrecisionScope scope(ctx40().working_bits());
    const Real tol = pow10(-38);
    const Real z2 = riemann_zeta(2, ctx40()), z3 = riemann_zeta(3, ctx40()), z4 = riemann_zeta(4, ctx40());
    const SeriesValue e224 = brute_lhs(entry("E2.24"), ParamPoint::parse("a=1,s=2"), ctx40());
    CHECK(abs(e224.value - z3) < tol);
    const SeriesValue eh = brute_lhs(entry("EH.s"), ParamPoint::parse("s=3"), ctx40());
    CHECK(abs(eh.value - (z4 * 5 - z2 * z2) / 2) < tol);
    const SeriesValue e413 = brute_lhs(entry("E4.13"), ParamPoint::parse("a=0"), ctx40());
    CHECK(abs(e413.value - (z4 * 5 / 2 - z2 * z2)) < tol);
    CHECK(closed_rhs(entry("E4.13"), ParamPoint::parse("a=0"), ctx40()).value.is_zero());
}

TEST_CASE("a = 0 specialisations agree with their parents") {
    PrecisionScope scope(ctx40().working_bits());
    for (int s : {2, 3}) {
        const std::string pt = "s=" + std::to_string(s);
        CHECK(abs(brute_lhs(entry("E3.23"), ParamPoint::parse(pt), ctx40()).value -
                  brute_lhs(entry("E3.13"), ParamPoint::parse("a=0," + pt), ctx40()).value) < pow10(-38));
        CHECK(verify("E3.12", pt).pass);
    }
}

TEST_CASE("verify_identity examples") {
    CHECK(verify("E2.16", "a=1/4,m=1").pass);
    CHECK(verify("E4.15", "a=1/2,m=2").pass);
    CHECK(verify("E2.13", "a=1/2,m=1").pass);
    const VerificationResult e222 = verify("E2.22", "a=0,s=3");
    CHECK(e222.pass);
    const VerificationResult el = verify("EL.s", "s=3");
    CHECK(el.pass);
    PrecisionScope scope(ctx40().working_bits());
    CHECK(abs(e222.lhs.value - el.lhs.value) < pow10(-38));
}

TEST_CASE("pass rule") {
    const VerificationResult r = verify("E2.24", "a=1/3,s=3");
    REQUIRE(r.error.empty());
    PrecisionScope scope(ctx40().working_bits());
    CHECK(r.pass == (r.residual <= pass_threshold(r.budget, ctx40())));
    CHECK(pass_threshold(Real(0), ctx40()) == pow10(-30));
}

TEST_CASE("domain errors are recorded, not thrown") {
    const VerificationResult integer_a = verify("E2.13", "a=1,m=1");
    CHECK_FALSE(integer_a.pass);
    CHECK(integer_a.error.find("E2.13 at a=1,m=1") != std::string::npos);
    const VerificationResult missing = verify("E2.13", "a=1/2");
    CHECK_FALSE(missing.pass);
    CHECK_FALSE(missing.error.empty());
    const VerificationResult extra = verify("EH.s", "s=2,a=1/2");
    CHECK_FALSE(extra.pass);
    const VerificationResult low_a = verify("E3.1", "a=-3/2,s=2");
    CHECK_FALSE(low_a.pass);
    CHECK_THROWS_AS(brute_lhs(entry("E2.13"), ParamPoint::parse("a=2,m=1"), ctx40()), DomainError);
}

TEST_CASE("printed E2.14 and E2.30 fail, corrected forms pass") {
    const VerificationResult e214 = verify("E2.14", "a=1/2,s=1,m=1");
    CHECK_FALSE(e214.pass);
    CHECK(e214.corrected_pass);
    const VerificationResult e214_m0 = verify("E2.14", "a=1/2,s=2,m=0");
    CHECK(e214_m0.pass);
    CHECK(e214_m0.corrected_pass);
    const VerificationResult e230 = verify("E2.30", "a=1/4");
    CHECK_FALSE(e230.pass);
    CHECK(e230.corrected_pass);
}

TEST_CASE("default grids follow the domain filters") {
    for (const auto& pt : default_grid(entry("E2.13"))) {
        CHECK_FALSE(*pt.a == mpq_class(3, 2));
    }
    bool has_three_halves = false;
    for (const auto& pt : default_grid(entry("E3.1"))) has_three_halves = has_three_halves || *pt.a == mpq_class(3, 2);
    CHECK(has_three_halves);
    for (const auto& pt : default_grid(entry("E4.10"))) CHECK(abs(*pt.a) < 1);
}

TEST_CASE("E4.7 at an asymmetric point") {
    CHECK(verify("E4.7", "a=1/4,b=1/2,x=1/2,m=1,p=2").pass);
    CHECK(verify("E4.7", "a=1/2,b=1/4,x=1/2,m=2,p=1").pass);
}

TEST_CASE("E2.21 approaches E2.24 as x -> 1") {
    PrecisionScope scope(ctx40().working_bits());
    const Real target = brute_lhs(entry("E2.24"), ParamPoint::parse("a=1/2,s=2"), ctx40()).value;
    Real previous(1000);
    for (const char* x : {"0.9", "0.99", "0.999"}) {
        const ParamPoint pt = ParamPoint::parse(std::string("a=1/2,s=2,x=") + x);
        const Real gap = abs(brute_lhs(entry("E2.21"), pt, ctx40()).value - target);
        CHECK(gap < previous);
        previous = gap;
    }
}

TEST_CASE("a -> 0 continuity") {
    PrecisionScope scope(ctx40().working_bits());
    for (const char* id : {"E2.24", "E3.1", "E3.13"}) {
        const Real near = closed_rhs(entry(id), ParamPoint::parse("a=1e-6,s=3"), ctx40()).value;
        const Real zero = closed_rhs(entry(id), ParamPoint::parse("a=0,s=3"), ctx40()).value;
        CHECK(abs(near - zero) < pow10(-4));
    }
}

TEST_CASE("verification at 20 digits stays consistent") {
    const PrecisionContext ctx = make_context(20);
    const VerificationResult r = verify_identity(entry("E3.13"), ParamPoint::parse("a=1/3,s=3"), ctx);
    CHECK(r.pass);
}
