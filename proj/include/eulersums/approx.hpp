#pragma once

#include "eulersums/real.hpp"
#include "eulersums/series.hpp"

#include <utility>

namespace eulersums {

// A value with an absolute error bound, propagated to first order with a
// rounding allowance per operation.
struct Approx {
    Real value;
    Real error;

    Approx() : value(0), error(0) {}
    // Error of a few units in the last place.
    Approx(const Real& v);  // NOLINT(google-explicit-constructor)
    Approx(int v) : Approx(Real(v)) {}  // NOLINT(google-explicit-constructor)
    Approx(Real v, Real e) : value(std::move(v)), error(std::move(e)) {}
    Approx(const SeriesValue& s);  // NOLINT(google-explicit-constructor)

    SeriesValue series() const { return {value, error, 0}; }
};

Approx operator+(const Approx& a, const Approx& b);
Approx operator-(const Approx& a, const Approx& b);
Approx operator*(const Approx& a, const Approx& b);
Approx operator/(const Approx& a, const Approx& b);
Approx operator-(const Approx& a);
Approx operator*(const Approx& a, long k);
Approx operator*(long k, const Approx& a);
Approx operator/(const Approx& a, long k);

Approx& operator+=(Approx& a, const Approx& b);
Approx& operator-=(Approx& a, const Approx& b);

}  // namespace eulersums
