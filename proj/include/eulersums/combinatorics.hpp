#pragma once

#include "eulersums/context.hpp"
#include "eulersums/real.hpp"

#include <gmpxx.h>

#include <vector>

namespace eulersums {

// gmpxx keeps results canonical: lowest terms, positive denominator.
using ExactRational = mpq_class;

// zeta_n(k) = sum_{j<=n} 1/j^k
ExactRational harmonic(long n, int k);
// L_n(k) = sum_{j<=n} (-1)^(j-1)/j^k
ExactRational alt_harmonic(long n, int k);

// Unsigned Stirling numbers of the first kind s(n,k), 0 <= k <= n <= max_n.
class StirlingTable {
public:
    explicit StirlingTable(int max_n);

    int max_n() const { return max_n_; }
    // Zero outside the triangle.
    mpz_class at(int n, int k) const;
    bool recurrence_holds() const;

private:
    int max_n_;
    std::vector<std::vector<mpz_class>> rows_;
};

// Backed by a shared table that grows on demand.
mpz_class stirling1(int n, int k);

// Coefficients of n! (1+x)(1+x/2)...(1+x/n), lowest power first.
std::vector<mpz_class> stirling_generating_polynomial(int n);

// Checks sum_{j<=n} s(j,p)/j! = s(n+1,p+1)/n! and, for p >= 2,
// sum_{j<n} H_j s(n-j,p-1)/(n-j)! = p s(n+1,p+1)/n!.
bool verify_stirling_sums(int n, int p);

// Checks s(n,1..5) against their harmonic-number closed forms.
bool verify_stirling_closed_forms(int n);

// Checks sum_{j<n} H_j/(n-j) = H_n^2 - zeta_n(2) and sum_{k<=n} H_k/k = (H_n^2 + zeta_n(2))/2.
bool verify_harmonic_square_sums(int n);

// Checks the x^n coefficients of ln^(p+1)(1-x) against (-1)^(p+1) (p+1)! s(n,p+1)/n! for n <= n_max.
bool verify_log_power_series(int p, int n_max);

// zeta_n(p, a+1) = sum_{k<=n} 1/(k+a)^p by direct summation.
Real partial_hurwitz(long n, int p, const Real& a, const PrecisionContext& ctx);

}  // namespace eulersums
