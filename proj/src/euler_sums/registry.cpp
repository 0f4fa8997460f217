#include "sums.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace eulersums {

namespace {

constexpr const char* kFieldOrder = "abxysmpn";

const std::optional<mpq_class>* rational_field(const ParamPoint& pt, char f) {
    switch (f) {
        case 'a': return &pt.a;
        case 'b': return &pt.b;
        case 'x': return &pt.x;
        case 'y': return &pt.y;
        default: return nullptr;
    }
}

const std::optional<int>* integer_field(const ParamPoint& pt, char f) {
    switch (f) {
        case 's': return &pt.s;
        case 'm': return &pt.m;
        case 'p': return &pt.p;
        case 'n': return &pt.n_small;
        default: return nullptr;
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

mpq_class parse_rational(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty number");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(trim(text.substr(0, slash)), 10) != 0 || den.set_str(trim(text.substr(slash + 1)), 10) != 0) {
            throw std::invalid_argument("malformed fraction '" + text + "'");
        }
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_point = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed number '" + text + "'");
    long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw std::invalid_argument("malformed number '" + text + "'");
        const std::string rest = text.substr(i + 1);
        std::size_t used = 0;
        try {
            exponent = std::stol(rest, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent in '" + text + "'");
        }
        if (used != rest.size()) throw std::invalid_argument("malformed exponent in '" + text + "'");
    }
    mpz_class num(digits, 10);
    mpz_class ten = 10, pow_num = 1, pow_den = 1;
    const long shift = exponent - scale;
    if (shift > 0) mpz_pow_ui(pow_num.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    if (shift < 0) mpz_pow_ui(pow_den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    mpq_class q(num * pow_num, pow_den);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::string ParamPoint::str() const {
    std::ostringstream out;
    bool first = true;
    for (const char* f = kFieldOrder; *f; ++f) {
        std::string value;
        if (const auto* r = rational_field(*this, *f); r && r->has_value()) value = (*r)->get_str();
        if (const auto* n = integer_field(*this, *f); n && n->has_value()) value = std::to_string(**n);
        if (value.empty()) continue;
        if (!first) out << ',';
        out << *f << '=' << value;
        first = false;
    }
    return out.str();
}

ParamPoint ParamPoint::parse(const std::string& text) {
    ParamPoint pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected field=value, got '" + item + "'");
        const std::string key = trim(item.substr(0, eq));
        const std::string value = trim(item.substr(eq + 1));
        const char f = key == "n_small" ? 'n' : (key.size() == 1 ? key[0] : '\0');
        if (f == 'a' || f == 'b' || f == 'x' || f == 'y') {
            auto& slot = f == 'a' ? pt.a : f == 'b' ? pt.b : f == 'x' ? pt.x : pt.y;
            slot = parse_rational(value);
        } else if (f == 's' || f == 'm' || f == 'p' || f == 'n') {
            const mpq_class q = parse_rational(value);
            if (q.get_den() != 1 || !q.get_num().fits_sint_p()) {
                throw std::invalid_argument("field '" + key + "' must be an integer");
            }
            auto& slot = f == 's' ? pt.s : f == 'm' ? pt.m : f == 'p' ? pt.p : pt.n_small;
            slot = static_cast<int>(q.get_num().get_si());
        } else {
            throw std::invalid_argument("unknown parameter '" + key + "'");
        }
    }
    return pt;
}

Real ParamPoint::real(char field) const {
    const auto* r = rational_field(*this, field);
    if (r == nullptr || !r->has_value()) throw DomainError(std::string("missing parameter '") + field + "'");
    return Real(**r);
}

int ParamPoint::integer(char field) const {
    const auto* n = integer_field(*this, field);
    if (n == nullptr || !n->has_value()) throw DomainError(std::string("missing parameter '") + field + "'");
    return **n;
}

bool ParamPoint::has(char field) const {
    if (const auto* r = rational_field(*this, field)) return r->has_value();
    if (const auto* n = integer_field(*this, field)) return n->has_value();
    return false;
}

bool operator<(const ParamPoint& lhs, const ParamPoint& rhs) {
    for (const char* f = kFieldOrder; *f; ++f) {
        if (const auto* l = rational_field(lhs, *f)) {
            const auto* r = rational_field(rhs, *f);
            if (*l != *r) {
                if (!l->has_value()) return true;
                if (!r->has_value()) return false;
                return **l < **r;
            }
        } else {
            const auto* li = integer_field(lhs, *f);
            const auto* ri = integer_field(rhs, *f);
            if (*li != *ri) return *li < *ri;
        }
    }
    return false;
}

const std::vector<IdentityEntry>& registry() {
    static const std::vector<IdentityEntry> entries = [] {
        std::vector<IdentityEntry> out;
        detail::register_linear(out);
        detail::register_cubic(out);
        detail::register_parametric(out);
        return out;
    }();
    return entries;
}

const IdentityEntry* find_identity(const std::string& id) {
    for (const auto& e : registry()) {
        if (e.id == id) return &e;
    }
    return nullptr;
}

namespace {

void prepare(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx) {
    validate(ctx);
    detail::require_fields(pt, id.fields);
    for (const char* f = kFieldOrder; *f; ++f) {
        if (pt.has(*f) && id.fields.find(*f) == std::string::npos) {
            throw DomainError(id.id + " does not take parameter '" + std::string(1, *f) + "'");
        }
    }
    if (id.check) id.check(pt, ctx);
}

}  // namespace

SeriesValue brute_lhs(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx) {
    prepare(id, pt, ctx);
    PrecisionScope scope(ctx.working_bits());
    return id.lhs(pt, ctx).series();
}

SeriesValue closed_rhs(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx) {
    prepare(id, pt, ctx);
    PrecisionScope scope(ctx.working_bits());
    return id.rhs(pt, ctx).series();
}

Real pass_threshold(const Real& budget, const PrecisionContext& ctx) {
    PrecisionScope scope(ctx.working_bits());
    return max(budget, pow10(-(ctx.decimal_digits - 10)));
}

VerificationResult verify_identity(const IdentityEntry& id, const ParamPoint& pt, const PrecisionContext& ctx) {
    const auto start = std::chrono::steady_clock::now();
    VerificationResult result;
    result.id = id.id;
    result.point = pt;
    try {
        prepare(id, pt, ctx);
        PrecisionScope scope(ctx.working_bits());
        const Approx lhs = id.lhs(pt, ctx);
        const Approx rhs = id.rhs(pt, ctx);
        result.lhs = lhs.series();
        result.rhs = rhs.series();
        const Real rounding = 4 * epsilon() * max(abs(lhs.value), abs(rhs.value));
        result.residual = abs(lhs.value - rhs.value);
        result.budget = lhs.error + rhs.error + rounding;
        result.pass = result.residual <= pass_threshold(result.budget, ctx);
        if (id.erratum) {
            const Approx fixed = id.erratum->corrected_rhs(pt, ctx);
            result.corrected_rhs = fixed.series();
            result.corrected_residual = abs(lhs.value - fixed.value);
            const Real budget = lhs.error + fixed.error + rounding;
            result.corrected_pass = *result.corrected_residual <= pass_threshold(budget, ctx);
        }
    } catch (const std::exception& e) {
        result.pass = false;
        result.corrected_pass = false;
        result.error = id.id + " at " + pt.str() + ": " + e.what();
    }
    result.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<ParamPoint> default_grid(const IdentityEntry& id) { return id.grid ? id.grid() : std::vector<ParamPoint>{}; }

}  // namespace eulersums
