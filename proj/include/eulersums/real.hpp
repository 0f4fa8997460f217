#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace eulersums {

// Precision in bits used for newly created values on the calling thread.
mpfr_prec_t working_precision();

// Sets the thread's working precision for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

// Arbitrary precision real. New results are rounded to the thread's
// working precision; copies keep the precision of their source.
class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    explicit Real(double v);
    Real(const mpz_class& v);
    Real(const mpq_class& v);
    explicit Real(std::string_view decimal);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // Decimal scientific notation with the given number of significant digits.
    std::string str(int digits) const;
    // Exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent2() const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator+=(long o);
    Real& operator-=(long o);
    Real& operator*=(long o);
    Real& operator/=(long o);

    Real operator-() const;

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(Real&& a, const Real& b);
Real operator-(Real&& a, const Real& b);
Real operator*(Real&& a, const Real& b);
Real operator/(Real&& a, const Real& b);

Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);

Real operator+(Real&& a, long b);
Real operator-(Real&& a, long b);
Real operator*(Real&& a, long b);
Real operator/(Real&& a, long b);

inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator+(Real&& a, int b) { return std::move(a) + static_cast<long>(b); }
inline Real operator-(Real&& a, int b) { return std::move(a) - static_cast<long>(b); }
inline Real operator*(Real&& a, int b) { return std::move(a) * static_cast<long>(b); }
inline Real operator/(Real&& a, int b) { return std::move(a) / static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return static_cast<long>(a) + b; }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
inline Real operator*(int a, const Real& b) { return static_cast<long>(a) * b; }
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

Real operator+(const Real&, double) = delete;
Real operator-(const Real&, double) = delete;
Real operator*(const Real&, double) = delete;
Real operator/(const Real&, double) = delete;
Real operator+(double, const Real&) = delete;
Real operator-(double, const Real&) = delete;
Real operator*(double, const Real&) = delete;
Real operator/(double, const Real&) = delete;

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real floor(const Real& x);
Real round(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// x * 2^k
Real ldexp(const Real& x, long k);
// 10^k as a real
Real pow10(long k);
// 2^-(bits) relative rounding unit at the current working precision
Real epsilon();

Real const_pi();
Real const_euler();
Real const_log2();

// Exact rational value of a finite x.
mpq_class to_rational(const Real& x);

}  // namespace eulersums
