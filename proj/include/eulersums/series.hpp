#pragma once

#include "eulersums/context.hpp"
#include "eulersums/real.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace eulersums {

struct SeriesValue {
    Real value;
    Real tail_bound;
    long terms_used = 0;
};

using RealFn = std::function<Real(const Real&)>;
// Stateful generator called with n = 1, 2, 3, ... in order.
using Sequence = std::function<Real(long)>;

struct SmoothTerm {
    RealFn eval;
    double decay_exponent = 2.0;
    bool alternating = false;
    // Optional fast path for the integer prefix; must agree with eval at integers.
    std::function<Sequence()> sequence;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sum over n >= 1 of term(n), or of (-1)^(n-1) term(n) when alternating.
SeriesValue sum_series(const SmoothTerm& term, const PrecisionContext& ctx);

// Sum over n >= 1 of a sequence whose terms shrink at least like ratio^n.
SeriesValue sum_geometric(const Sequence& term, double ratio, const PrecisionContext& ctx);

// Tanh-sinh quadrature on [lo, hi]; tolerates integrable endpoint singularities.
SeriesValue integrate_adaptive(const RealFn& f, const Real& lo, const Real& hi,
                               const PrecisionContext& ctx);

// Exact Bernoulli number B_n (B_1 = -1/2).
const mpq_class& bernoulli(int n);

}  // namespace eulersums
