#ifndef CARLITZ_LSERIES_HPP
#define CARLITZ_LSERIES_HPP

/* Truncated multivariable L-series over A = F_q[θ]:
 *
 *     L(N,s,z) = Σ_{d≥0} z^d Σ_{a monic, deg a = d} a(t_1)⋯a(t_s) / a^N.
 *
 * For N ≤ 0 the inner sums vanish for all large d, so the series is an
 * exact polynomial; the constructor extends the precision past the last
 * possibly-nonzero order, verifies two further orders vanish, and marks
 * the result exact.  Companion sums (power sums over monics, scalar power
 * sums), the twisted logarithm operator log_{N,z}, and evaluation at z = 1
 * with certified 1/θ-adic windows live here as well.
 */

#include <optional>

#include "carlitz/laurent.hpp"
#include "carlitz/zseries.hpp"

namespace carlitz {

struct LSeriesTrunc {
    int N = 0;      // exponent on 1/a
    int s = 1;      // number of t-variables
    ZSeries series; // exact polynomial when N ≤ 0, truncated otherwise

    bool exact() const { return series.exact(); }
    int prec() const { return series.exact() ? series.stored() : series.prec(); }
};

// Exact coefficients of z^0..z^{prec-1} by monic enumeration; s ≥ 1,
// prec ≥ 1.  For N ≤ 0 prec is raised to cover the full finite support
// ⌈(s + |N|(q−1))/(q−1)⌉ + 1 and the result is flagged exact after two
// additional orders are checked to vanish.
LSeriesTrunc L_series(const Fq& F, int N, int s, int prec);

// Σ_{a monic, deg a = k} a(t_1)⋯a(t_s); s = 0 gives the scalar count of
// monics as an element of F_q
MultiPoly power_sum(const Fq& F, int k, int s);

// Σ_{a monic, deg a = d} a^m for m ≥ 0
Frac scalar_power_sum(const Fq& F, int d, long long m);

// Twisted logarithm operator in n t-variables applied to a series in z:
//
//     log_{N,z}(h) = Σ_{k≥0} z^k (b_k(t_1)⋯b_k(t_n) / l_k^N) φ^k(h),
//
// truncated at `prec` z-orders (default: h's own precision, or its stored
// length when h is an exact polynomial).
ZSeries log_Nz(const Fq& F, int N, int n, const ZSeries& h, int prec = -1);

// Value at z = 1.  For N ≤ 0 the sum is finite and the result exact; for
// N ≥ 1 the z^d coefficient has Gauss norm ≤ q^{−Nd}, the summation is cut
// at d = ⌈target_prec/N⌉, and the result is a certified approximation with
// error ≤ q^{−N(cutoff+1)}.
struct EvalZ1 {
    bool exact = false;
    std::optional<MultiPoly> exact_value; // set when exact
    std::optional<TateApprox> approx;     // set when not exact
    int cutoff = 0;                       // largest z-order summed
};
EvalZ1 eval_z1(const Fq& F, const LSeriesTrunc& L, int target_prec);

// Windowed partial sum Σ_{d≤cutoff} Σ_{a monic, deg a = d} a(t_1)⋯a(t_s)/a^N
// for N ≥ 1, every 1/a^N expanded as a certified digit window with floor
// exponent floor_exp.  Error bound of the result: the z-tail q^{−N(cutoff+1)}
// joined with the window floors.
TateApprox eval_z1_windowed(const Fq& F, int N, int s, int cutoff,
                            int floor_exp, int threads = 0);

} // namespace carlitz

#endif
