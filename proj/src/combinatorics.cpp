#include "eulersums/combinatorics.hpp"

#include "eulersums/special.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace eulersums {

namespace {

struct PrefixCache {
    std::mutex mu;
    std::map<int, std::vector<ExactRational>> prefixes;  // by k; entry n holds the n-term sum
};

ExactRational cached_prefix(PrefixCache& cache, long n, int k, bool alternating) {
    if (k < 1) throw DomainError("harmonic numbers need k >= 1");
    if (n < 0) throw DomainError("harmonic numbers need n >= 0");
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& v = cache.prefixes[k];
    if (v.empty()) v.emplace_back(0);
    while (static_cast<long>(v.size()) <= n) {
        const long j = static_cast<long>(v.size());
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(k));
        ExactRational term(1, den);
        term.canonicalize();
        if (alternating && j % 2 == 0) term = -term;
        v.push_back(v.back() + term);
    }
    return v[static_cast<std::size_t>(n)];
}

mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace

ExactRational harmonic(long n, int k) {
    static PrefixCache cache;
    return cached_prefix(cache, n, k, false);
}

ExactRational alt_harmonic(long n, int k) {
    static PrefixCache cache;
    return cached_prefix(cache, n, k, true);
}

StirlingTable::StirlingTable(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw DomainError("StirlingTable: max_n must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_n + 1));
    rows_[0] = {mpz_class(1)};
    for (int n = 0; n < max_n; ++n) {
        const auto& prev = rows_[static_cast<std::size_t>(n)];
        auto& next = rows_[static_cast<std::size_t>(n + 1)];
        next.assign(static_cast<std::size_t>(n + 2), mpz_class(0));
        for (int k = 1; k <= n + 1; ++k) {
            next[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)];
            if (k <= n) next[static_cast<std::size_t>(k)] += n * prev[static_cast<std::size_t>(k)];
        }
    }
}

mpz_class StirlingTable::at(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > max_n_) throw DomainError("StirlingTable: n beyond table size");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool StirlingTable::recurrence_holds() const {
    if (at(0, 0) != 1) return false;
    for (int n = 1; n <= max_n_; ++n) {
        if (at(n, 0) != 0) return false;
    }
    for (int n = 0; n < max_n_; ++n) {
        for (int k = 1; k <= n + 1; ++k) {
            if (at(n + 1, k) != at(n, k - 1) + n * at(n, k)) return false;
        }
    }
    return true;
}

mpz_class stirling1(int n, int k) {
    static std::mutex mu;
    static std::shared_ptr<const StirlingTable> table = std::make_shared<StirlingTable>(64);
    if (n < 0 || k < 0 || k > n) return 0;
    std::shared_ptr<const StirlingTable> current;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (table->max_n() < n) table = std::make_shared<StirlingTable>(std::max(n, 2 * table->max_n()));
        current = table;
    }
    return current->at(n, k);
}

std::vector<mpz_class> stirling_generating_polynomial(int n) {
    if (n < 0) throw DomainError("stirling_generating_polynomial: n must be >= 0");
    std::vector<mpq_class> poly{mpq_class(1)};
    for (int j = 1; j <= n; ++j) {
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        const mpq_class inv(1, j);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * inv;
        }
        poly = std::move(next);
    }
    const mpz_class fact = factorial(n);
    std::vector<mpz_class> out;
    out.reserve(poly.size());
    for (auto& c : poly) {
        mpq_class v = c * fact;
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("generating polynomial has a non-integer coefficient");
        out.push_back(v.get_num());
    }
    return out;
}

bool verify_stirling_sums(int n, int p) {
    if (n < 1 || p < 1) throw DomainError("verify_stirling_sums: need n >= 1 and p >= 1");
    ExactRational lhs(0);
    for (int j = 1; j <= n; ++j) lhs += ExactRational(stirling1(j, p), factorial(j));
    ExactRational rhs(stirling1(n + 1, p + 1), factorial(n));
    rhs.canonicalize();
    lhs.canonicalize();
    if (lhs != rhs) return false;
    if (p < 2) return true;
    ExactRational lhs3(0);
    for (int j = 1; j <= n - 1; ++j) {
        ExactRational t(stirling1(n - j, p - 1), factorial(n - j));
        t.canonicalize();
        lhs3 += harmonic(j, 1) * t;
    }
    return lhs3 == p * rhs;
}

bool verify_stirling_closed_forms(int n) {
    if (n < 1) throw DomainError("verify_stirling_closed_forms: need n >= 1");
    const ExactRational f(factorial(n - 1));
    const ExactRational H = harmonic(n - 1, 1);
    const ExactRational z2 = harmonic(n - 1, 2);
    const ExactRational z3 = harmonic(n - 1, 3);
    const ExactRational z4 = harmonic(n - 1, 4);
    const ExactRational forms[5] = {
        f,
        f * H,
        f / 2 * (H * H - z2),
        f / 6 * (H * H * H - 3 * H * z2 + 2 * z3),
        f / 24 * (H * H * H * H - 6 * z4 - 6 * H * H * z2 + 3 * z2 * z2 + 8 * H * z3),
    };
    for (int k = 1; k <= 5; ++k) {
        if (forms[k - 1] != ExactRational(stirling1(n, k))) return false;
    }
    return true;
}

bool verify_harmonic_square_sums(int n) {
    if (n < 1) throw DomainError("verify_harmonic_square_sums: need n >= 1");
    const ExactRational Hn = harmonic(n, 1);
    const ExactRational z2 = harmonic(n, 2);
    ExactRational first(0), second(0);
    for (int j = 1; j <= n - 1; ++j) first += harmonic(j, 1) / ExactRational(n - j);
    for (int k = 1; k <= n; ++k) second += harmonic(k, 1) / ExactRational(k);
    return first == Hn * Hn - z2 && second == (Hn * Hn + z2) / 2;
}

bool verify_log_power_series(int p, int n_max) {
    if (p < 0 || n_max < 1) throw DomainError("verify_log_power_series: need p >= 0 and n_max >= 1");
    // ln(1-x) = -sum x^n/n, truncated at degree n_max
    std::vector<ExactRational> base(static_cast<std::size_t>(n_max + 1), ExactRational(0));
    for (int n = 1; n <= n_max; ++n) base[static_cast<std::size_t>(n)] = ExactRational(-1, n);
    std::vector<ExactRational> power = base;
    for (int e = 2; e <= p + 1; ++e) {
        std::vector<ExactRational> next(static_cast<std::size_t>(n_max + 1), ExactRational(0));
        for (int i = 0; i <= n_max; ++i) {
            if (power[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 1; i + j <= n_max; ++j) {
                next[static_cast<std::size_t>(i + j)] += power[static_cast<std::size_t>(i)] * base[static_cast<std::size_t>(j)];
            }
        }
        power = std::move(next);
    }
    const ExactRational scale = ExactRational((p + 1) % 2 == 0 ? 1 : -1) * ExactRational(factorial(p + 1));
    for (int n = 0; n <= n_max; ++n) {
        ExactRational expected = scale * ExactRational(stirling1(n, p + 1), factorial(n));
        expected.canonicalize();
        if (power[static_cast<std::size_t>(n)] != expected) return false;
    }
    return true;
}

Real partial_hurwitz(long n, int p, const Real& a, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("partial_hurwitz: n must be >= 0");
    if (p < 1) throw DomainError("partial_hurwitz: p must be >= 1");
    if (!(a > Real(-1))) throw DomainError("partial_hurwitz: a must exceed -1");
    PrecisionScope scope(std::max(working_precision(), ctx.working_bits()));
    Real sum(0);
    for (long k = 1; k <= n; ++k) sum += 1 / pow(a + k, static_cast<long>(p));
    return sum;
}

}  // namespace eulersums
