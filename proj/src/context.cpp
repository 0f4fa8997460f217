#include "eulersums/context.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulersums {

mpfr_prec_t PrecisionContext::working_bits() const {
    const double bits = std::ceil((decimal_digits + guard_digits) * std::log2(10.0));
    const long granule = mp_bits_per_limb;
    return static_cast<mpfr_prec_t>((static_cast<long>(bits) + granule - 1) / granule * granule);
}

Real PrecisionContext::target() const {
    PrecisionScope scope(working_bits());
    return pow10(-(decimal_digits + 5));
}

PrecisionContext make_context(int decimal_digits) {
    if (decimal_digits < 10) throw std::invalid_argument("decimal_digits must be >= 10");
    PrecisionContext ctx;
    ctx.decimal_digits = decimal_digits;
    ctx.guard_digits = std::max(10, decimal_digits / 5);
    return ctx;
}

void validate(const PrecisionContext& ctx) {
    if (ctx.decimal_digits < 10) throw std::invalid_argument("decimal_digits must be >= 10");
    if (ctx.guard_digits < 10) throw std::invalid_argument("guard_digits must be >= 10");
    if (ctx.em_order < 2) throw std::invalid_argument("em_order must be >= 2");
    if (ctx.max_terms < 1000) throw std::invalid_argument("max_terms must be >= 1000");
}

}  // namespace eulersums
