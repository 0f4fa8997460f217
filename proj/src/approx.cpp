#include "eulersums/approx.hpp"

#include <stdexcept>

namespace eulersums {

namespace {

Real rounding(const Real& v) { return 4 * epsilon() * abs(v); }

}  // namespace

Approx::Approx(const Real& v) : value(v), error(rounding(v)) {}

Approx::Approx(const SeriesValue& s) : value(s.value), error(s.tail_bound + rounding(s.value)) {}

Approx operator+(const Approx& a, const Approx& b) {
    Real v = a.value + b.value;
    Real e = a.error + b.error + rounding(v);
    return {std::move(v), std::move(e)};
}

Approx operator-(const Approx& a, const Approx& b) {
    Real v = a.value - b.value;
    Real e = a.error + b.error + rounding(v);
    return {std::move(v), std::move(e)};
}

Approx operator*(const Approx& a, const Approx& b) {
    Real v = a.value * b.value;
    Real e = abs(a.value) * b.error + abs(b.value) * a.error + a.error * b.error + rounding(v);
    return {std::move(v), std::move(e)};
}

Approx operator/(const Approx& a, const Approx& b) {
    const Real denom = abs(b.value) - b.error;
    if (!(denom > Real(0))) throw std::domain_error("division by a value indistinguishable from zero");
    Real v = a.value / b.value;
    Real e = (a.error + abs(v) * b.error) / denom + rounding(v);
    return {std::move(v), std::move(e)};
}

Approx operator-(const Approx& a) { return {-a.value, a.error}; }

Approx operator*(const Approx& a, long k) {
    Real v = a.value * k;
    Real e = a.error * (k < 0 ? -k : k) + rounding(v);
    return {std::move(v), std::move(e)};
}

Approx operator*(long k, const Approx& a) { return a * k; }

Approx operator/(const Approx& a, long k) {
    if (k == 0) throw std::domain_error("division by zero");
    Real v = a.value / k;
    Real e = a.error / (k < 0 ? -k : k) + rounding(v);
    return {std::move(v), std::move(e)};
}

Approx& operator+=(Approx& a, const Approx& b) { return a = a + b; }
Approx& operator-=(Approx& a, const Approx& b) { return a = a - b; }

}  // namespace eulersums
