#pragma once

#include "eulersums/approx.hpp"
#include "eulersums/context.hpp"
#include "eulersums/real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eulersums {

// Kernels and their expansion centers:
//   cot            pi cot(pi s)                 at s = n
//   psi_pos        psi(-s) + gamma              at s = n, n >= 0
//   psi_neg        psi(-s) + gamma              at s = -n, n >= 1
//   polygamma_pos  psi^(p-1)(-s) / (p-1)!       at s = n, n >= 0
//   polygamma_neg  psi^(p-1)(-s) / (p-1)!       at s = -n, n >= 1
enum class KernelKind { cot, psi_pos, psi_neg, polygamma_pos, polygamma_neg };

std::string to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(const std::string& name);
bool is_negative_center(KernelKind kind);

// Coefficients of (s - c)^lowest_order ... (s - c)^order, c = center.
struct LocalExpansion {
    long center = 0;
    int lowest_order = 0;
    int order = 0;
    std::vector<Real> coefficients;

    // Zero outside [lowest_order, order].
    Real coefficient(int power) const;
    // Sum of c_j h^j with h = s - center.
    Real evaluate(const Real& h) const;
};

// n is the magnitude of the center; p is ignored for the first three kinds.
LocalExpansion expand_kernel(KernelKind kind, long n, int p, int K, const PrecisionContext& ctx);

// psi^(k)(x) for any real x off the poles 0, -1, -2, ...; k <= 7 below zero.
Real polygamma_any(int k, const Real& x, const PrecisionContext& ctx);

// Direct evaluation of the kernel at s.
Real kernel_value(KernelKind kind, int p, const Real& s, const PrecisionContext& ctx);

// max |kernel(s) - expansion(s)| over s = center +- r, r in radii.
Real validate_expansion(const LocalExpansion& exp, KernelKind kind, long n, int p, const std::vector<Real>& radii,
                        const PrecisionContext& ctx);

struct ScalingFit {
    std::vector<double> radii;
    std::vector<double> errors;
    // Least-squares slope of log(error) against log(r).
    double slope = 0.0;
};

ScalingFit fit_expansion_scaling(KernelKind kind, long n, int p, int K, const std::vector<double>& radii,
                                 const PrecisionContext& ctx);

std::vector<double> default_radii();
constexpr int kDefaultExpansionOrder = 6;

// Residues of kernel(z) r(z) at z = n and z = -n for n <= N, the combined
// pair of poles at +-a, and the pole at 0.
struct ResidueLedger {
    long N = 0;
    std::vector<Real> positive_residues;
    std::vector<Real> negative_residues;
    Real pole_at_a;
    Real pole_at_zero;
};

// Kernel pi cot(pi z) psi^(2m-1)(-z)/(2m-1)!, r(z) = 1/(z(z^2-a^2)); m >= 1.
ResidueLedger residue_ledger_even(const Real& a, int m, long N, const PrecisionContext& ctx);

enum class ZeroPoleForm { printed, corrected };

// Kernel pi cot(pi z) (psi^(2m)(-z)/(2m)! + [m=0] gamma), r(z) = 1/(z^(2s)(z^2-a^2)); m, s >= 0.
// zeta(1) is replaced by 0 throughout.
ResidueLedger residue_ledger_odd(const Real& a, int m, int s, long N, const PrecisionContext& ctx,
                                 ZeroPoleForm form = ZeroPoleForm::printed);

// |sum of all ledger entries with n <= n_max|; n_max defaults to the ledger's N.
Real residue_sum_check(const ResidueLedger& ledger, std::optional<long> n_max = std::nullopt);

// The sum of zeta_n(2m)/(n(n^2-a^2)) implied by a vanishing residue sum.
Approx implied_even_sum(const Real& a, int m, const PrecisionContext& ctx);
// The sum of zeta_n(2m+1)/(n^(2s)(n^2-a^2)) implied by a vanishing residue sum.
Approx implied_odd_sum(const Real& a, int m, int s, const PrecisionContext& ctx,
                       ZeroPoleForm form = ZeroPoleForm::printed);

}  // namespace eulersums
