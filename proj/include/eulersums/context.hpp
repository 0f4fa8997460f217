#pragma once

#include "eulersums/real.hpp"

namespace eulersums {

struct PrecisionContext {
    int decimal_digits = 40;
    int guard_digits = 10;
    int em_order = 8;
    long max_terms = 1000000;

    // Binary working precision, rounded up to whole limbs.
    mpfr_prec_t working_bits() const;
    // Absolute tolerance 10^-(decimal_digits + 5) used by the summation engine.
    Real target() const;
};

PrecisionContext make_context(int decimal_digits);

// Throws std::invalid_argument when a field violates the context invariants.
void validate(const PrecisionContext& ctx);

}  // namespace eulersums
