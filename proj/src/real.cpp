#include "eulersums/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulersums {

namespace {

thread_local mpfr_prec_t tl_precision = 128;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

mpfr_prec_t working_precision() { return tl_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(tl_precision) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
        throw std::invalid_argument("precision out of range");
    }
    tl_precision = bits;
}

PrecisionScope::~PrecisionScope() { tl_precision = saved_; }

Real::Real() {
    mpfr_init2(v_, tl_precision);
    mpfr_set_zero(v_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_si(v_, v, kRnd);
}

Real::Real(unsigned long v) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_ui(v_, v, kRnd);
}

Real::Real(double v) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_d(v_, v, kRnd);
}

Real::Real(const mpz_class& v) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

Real::Real(const mpq_class& v) {
    mpfr_init2(v_, tl_precision);
    mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

Real::Real(std::string_view decimal) {
    mpfr_init2(v_, tl_precision);
    std::string s(decimal);
    char* end = nullptr;
    if (mpfr_strtofr(v_, s.c_str(), &end, 10, kRnd), end == s.c_str() || *end != '\0') {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: " + s);
    }
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, kRnd);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    digits = std::max(digits, 1);
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    int n = mpfr_snprintf(nullptr, 0, fmt.c_str(), v_);
    std::string out(static_cast<std::size_t>(n) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), fmt.c_str(), v_);
    out.resize(static_cast<std::size_t>(n));
    return out;
}

long Real::exponent2() const {
    if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? MPFR_EMIN_MIN : MPFR_EMAX_MAX;
    return mpfr_get_exp(v_);
}

Real& Real::operator+=(const Real& o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_add(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_sub(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_mul(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_div(v_, v_, o.v_, kRnd);
    return *this;
}

Real& Real::operator+=(long o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_add_si(v_, v_, o, kRnd);
    return *this;
}

Real& Real::operator-=(long o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_sub_si(v_, v_, o, kRnd);
    return *this;
}

Real& Real::operator*=(long o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_mul_si(v_, v_, o, kRnd);
    return *this;
}

Real& Real::operator/=(long o) {
    if (precision() != tl_precision) mpfr_prec_round(v_, tl_precision, kRnd);
    mpfr_div_si(v_, v_, o, kRnd);
    return *this;
}

Real Real::operator-() const {
    Real r;
    mpfr_neg(r.v_, v_, kRnd);
    return r;
}

#define ES_BINARY(op, fn)                                   \
    Real operator op(const Real& a, const Real& b) {        \
        Real r;                                             \
        fn(r.raw(), a.raw(), b.raw(), kRnd);                \
        return r;                                           \
    }                                                       \
    Real operator op(Real&& a, const Real& b) {             \
        a op## = b;                                         \
        return std::move(a);                                \
    }

ES_BINARY(+, mpfr_add)
ES_BINARY(-, mpfr_sub)
ES_BINARY(*, mpfr_mul)
ES_BINARY(/, mpfr_div)
#undef ES_BINARY

Real operator+(const Real& a, long b) {
    Real r;
    mpfr_add_si(r.raw(), a.raw(), b, kRnd);
    return r;
}
Real operator-(const Real& a, long b) {
    Real r;
    mpfr_sub_si(r.raw(), a.raw(), b, kRnd);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r;
    mpfr_mul_si(r.raw(), a.raw(), b, kRnd);
    return r;
}
Real operator/(const Real& a, long b) {
    Real r;
    mpfr_div_si(r.raw(), a.raw(), b, kRnd);
    return r;
}
Real operator+(Real&& a, long b) { return std::move(a += b); }
Real operator-(Real&& a, long b) { return std::move(a -= b); }
Real operator*(Real&& a, long b) { return std::move(a *= b); }
Real operator/(Real&& a, long b) { return std::move(a /= b); }
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
    Real r;
    mpfr_si_sub(r.raw(), a, b.raw(), kRnd);
    return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
    Real r;
    mpfr_si_div(r.raw(), a, b.raw(), kRnd);
    return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.raw(), b.raw());
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

#define ES_UNARY(name, fn)             \
    Real name(const Real& x) {         \
        Real r;                        \
        fn(r.raw(), x.raw(), kRnd);    \
        return r;                      \
    }

ES_UNARY(abs, mpfr_abs)
ES_UNARY(sqrt, mpfr_sqrt)
ES_UNARY(log, mpfr_log)
ES_UNARY(log1p, mpfr_log1p)
ES_UNARY(exp, mpfr_exp)
ES_UNARY(sin, mpfr_sin)
ES_UNARY(cos, mpfr_cos)
ES_UNARY(tan, mpfr_tan)
ES_UNARY(cot, mpfr_cot)
ES_UNARY(sinh, mpfr_sinh)
ES_UNARY(cosh, mpfr_cosh)
ES_UNARY(tanh, mpfr_tanh)
#undef ES_UNARY

Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real round(const Real& x) {
    Real r;
    mpfr_round(r.raw(), x.raw());
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r;
    mpfr_pow(r.raw(), x.raw(), y.raw(), kRnd);
    return r;
}

Real pow(const Real& x, long n) {
    Real r;
    mpfr_pow_si(r.raw(), x.raw(), n, kRnd);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real ldexp(const Real& x, long k) {
    Real r;
    mpfr_mul_2si(r.raw(), x.raw(), k, kRnd);
    return r;
}

Real pow10(long k) {
    Real r;
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(std::labs(k)), kRnd);
    if (k < 0) mpfr_ui_div(r.raw(), 1, r.raw(), kRnd);
    return r;
}

Real epsilon() {
    Real r(1);
    mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(tl_precision), kRnd);
    return r;
}

Real const_pi() {
    Real r;
    mpfr_const_pi(r.raw(), kRnd);
    return r;
}

Real const_euler() {
    Real r;
    mpfr_const_euler(r.raw(), kRnd);
    return r;
}

Real const_log2() {
    Real r;
    mpfr_const_log2(r.raw(), kRnd);
    return r;
}

mpq_class to_rational(const Real& x) {
    if (!x.is_finite()) throw std::domain_error("to_rational: non-finite value");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
    mpq_class q(m);
    if (e >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    q.canonicalize();
    return q;
}

}  // namespace eulersums
