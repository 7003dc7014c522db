#ifndef CARLITZ_LAURENT_HPP
#define CARLITZ_LAURENT_HPP

/* Certified windows into F_q((1/θ)) and the exponential/logarithm
 * operators on approximate elements of the Tate algebra T_s.
 *
 * A LaurentScalar stores the coefficients of θ^e for e in [lo, hi] of some
 * value x, with the contract |x - stored| ≤ q^{lo-1}: everything at or
 * above the window floor is exact, everything below is unknown.  Window
 * bounds propagate through arithmetic (they are exponents, so lo = -10
 * means "certified through θ^{-10}").  Only this layer and the z = 1
 * evaluation of L-series use approximation; every other module is exact.
 *
 * A TateApprox is a t-polynomial whose coefficients are such windows,
 * together with one uniform Gauss-norm bound q^{err_exp} on whatever has
 * been discarded (for instance the tail of a truncated series).
 *
 * exp_tau_approx / log_tau_approx apply Σ_j τ^j/D_j resp. Σ_j τ^j/l_j,
 * where τ = (t_1-θ)···(t_s-θ)φ, capping j via the norm growth
 * ‖τ^j(f)‖ ≤ q^{s(q^j-1)/(q-1)}·‖f‖^{q^j} against v_∞ of the denominator;
 * the cap and the certified output bound are part of the result.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/multipoly.hpp"

namespace carlitz {

class LaurentScalar {
  public:
    // zero window covering [lo, hi]
    LaurentScalar(const Fq& F, long long hi, long long lo);
    // window of an exact polynomial (hi = its degree)
    static LaurentScalar of_poly(const ThetaPoly& a, long long lo);
    // long division window of an exact fraction
    static LaurentScalar of_frac(const Frac& x, long long lo);

    const Fq& field() const { return *F_; }
    long long hi() const { return hi_; }
    long long lo() const { return lo_; }
    fq_elem coeff(long long e) const; // 0 outside the stored window
    // exponent of the top nonzero stored coefficient, if any
    std::optional<long long> top_exp() const;
    // E with |value| ≤ q^E certified (top stored exponent, or lo-1)
    long long norm_bound_exp() const;
    // true when every stored coefficient vanishes (value ≤ q^{lo-1})
    bool provably_small() const { return !top_exp().has_value(); }

    LaurentScalar operator-() const;
    LaurentScalar operator+(const LaurentScalar& o) const;
    LaurentScalar operator-(const LaurentScalar& o) const;
    LaurentScalar operator*(const LaurentScalar& o) const;
    LaurentScalar& operator+=(const LaurentScalar& o) { return *this = *this + o; }
    LaurentScalar scaled(fq_elem c) const;
    LaurentScalar shifted(long long k) const; // multiply by θ^k
    LaurentScalar times_poly(const ThetaPoly& p) const;
    // x -> x^{q^j}: exact in characteristic p, floor deepens to (lo-1)q^j+1
    LaurentScalar frobenius_spread(int j) const;
    LaurentScalar truncated(long long new_lo) const; // drop digits below

    std::string to_string() const; // e.g. "th^-1 + 2*th^-3 + O(th^-6)"

  private:
    const Fq* F_;
    long long hi_, lo_;
    std::vector<fq_elem> c_; // c_[i] = coefficient of θ^{hi_ - i}
    void trim_top();
};

// t-polynomial with windowed coefficients plus a uniform bound q^{err_exp}
// on the Gauss norm of everything not stored
struct TateApprox {
    const Fq* F;
    int s; // number of t variables
    long long err_exp;
    std::map<Mono, LaurentScalar, MonoLess> c;

    TateApprox(const Fq& field, int vars, long long err)
        : F(&field), s(vars), err_exp(err) {}
    // windows of an exact t-polynomial at a common floor; err_exp = floor-1
    static TateApprox of_exact(const MultiPoly& f, int s, long long floor_lo);

    void add_at(const Mono& m, const LaurentScalar& v);
    // certified bound: max of err_exp and every coefficient's norm bound
    long long gauss_bound_exp() const;
    // windows of (this - exact), for residual checks
    TateApprox sub_exact(const MultiPoly& exact) const;
};

struct TauApproxResult {
    TateApprox value;
    int j_cap; // largest τ-power included
};

// Σ_{j≤J} τ^j(f)/D_j with |discarded| ≤ q^{target_exp}; throws
// PrecisionLoss when no finite cap certifies the target
TauApproxResult exp_tau_approx(const TateApprox& f, long long target_exp);
// Σ_{j≤J} τ^j(f)/l_j; converges only for small enough ‖f‖
TauApproxResult log_tau_approx(const TateApprox& f, long long target_exp);

} // namespace carlitz

#endif
