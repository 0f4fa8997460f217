#pragma once

#include "eulersums/approx.hpp"
#include "eulersums/context.hpp"
#include "eulersums/series.hpp"

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eulersums {

// Real parameters are kept as exact rationals so points print and compare exactly.
struct ParamPoint {
    std::optional<mpq_class> a, b, x, y;
    std::optional<int> s, m, p, n_small;

    // "a=1/3,m=2" in field order a,b,x,y,s,m,p,n.
    std::string str() const;
    // Accepts the str() format; values may be integers, fractions or decimals.
    static ParamPoint parse(const std::string& text);

    Real real(char field) const;
    int integer(char field) const;
    bool has(char field) const;

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

bool operator<(const ParamPoint& lhs, const ParamPoint& rhs);

// Exact rational from "3", "-2/5" or "0.25".
mpq_class parse_rational(const std::string& text);

using Evaluator = std::function<Approx(const ParamPoint&, const PrecisionContext&)>;

struct Erratum {
    std::string description;
    Evaluator corrected_rhs;
};

struct IdentityEntry {
    std::string id;
    std::string equation;
    std::string quote;
    std::string signature;
    std::string fields;  // required ParamPoint fields, e.g. "asm"
    std::function<void(const ParamPoint&, const PrecisionContext&)> check;  // throws DomainError
    Evaluator lhs;
    Evaluator rhs;
    std::function<std::vector<ParamPoint>()> grid;
    std::optional<Erratum> erratum = std::nullopt;
};

struct VerificationResult {
    std::string id;
    ParamPoint point;
    SeriesValue lhs;
    SeriesValue rhs;
    Real residual;
    Real budget;
    bool pass = false;
    // Filled when the entry documents an erratum.
    std::optional<SeriesValue> corrected_rhs;
    std::optional<Real> corrected_residual;
    bool corrected_pass = false;
    std::string error;
    double ms = 0.0;
};

const std::vector<IdentityEntry>& registry();
// nullptr when unknown.
const IdentityEntry* find_identity(const std::string& id);

SeriesValue brute_lhs(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx);
SeriesValue closed_rhs(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx);
// Never throws for evaluator failures; they land in result.error with pass = false.
VerificationResult verify_identity(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx);
std::vector<ParamPoint> default_grid(const IdentityEntry& id);

// max(budget, 10^-(digits-10))
Real pass_threshold(const Real& budget, const PrecisionContext& ctx);

}  // namespace eulersums
