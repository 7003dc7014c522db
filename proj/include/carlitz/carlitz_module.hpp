#ifndef CARLITZ_CARLITZ_MODULE_HPP
#define CARLITZ_CARLITZ_MODULE_HPP

/* The Carlitz module and its companions: the coefficient sequences D_i and
 * l_i, the coefficients ψ_k(a) of C_a(X) = Σ ψ_k(a) X^{q^k}, the diagonal
 * action a*F, the polynomials b_d(t) = (t-θ)(t-θ^q)...(t-θ^{q^{d-1}}), the
 * twists φ, τ, τ_z, and the operators exp_z = Σ τ_z^j/D_j and
 * log_z = Σ τ_z^j/l_j acting on truncated series in z.
 */

#include "carlitz/zseries.hpp"

namespace carlitz {

// D_0 = 1, D_i = (θ^{q^i} - θ) D_{i-1}^q   (degree i*q^i)
ThetaPoly carlitz_D(const Fq& F, int i);
// l_0 = 1, l_i = (θ - θ^{q^i}) l_{i-1}     (degree q + q^2 + ... + q^i)
ThetaPoly carlitz_l(const Fq& F, int i);

// coefficients of C_a(X): entry k is ψ_k(a), for k = 0..deg a (single {0}
// entry for a = 0).  ψ_0(a) = a and ψ_k is F_q-linear in a.
std::vector<ThetaPoly> carlitz_coeffs(const ThetaPoly& a);
ThetaPoly psi(const ThetaPoly& a, int k);

// C_a(v) as a polynomial in the given variable
MultiPoly carlitz_poly(const ThetaPoly& a, Var v);

// a*F: substitute X_i -> C_a(X_i) in every X variable; when z_aware,
// additionally Z -> Z^{q^{deg a}} (a must then be nonzero)
MultiPoly carlitz_action(const ThetaPoly& a, const MultiPoly& F,
                         bool z_aware = false);

// the one-variable version: only X_j is substituted
MultiPoly carlitz_action_var(const ThetaPoly& a, const MultiPoly& F, int j);

// b_d in the variable t_i (b_0 = 1)
MultiPoly b_poly(const Fq& F, int d, int i);
// b_d(t_1) ... b_d(t_s)
MultiPoly b_product(const Fq& F, int d, int s);

// φ^d: every coefficient raised to the q^d-th power (alias of phi)
MultiPoly phi_twist(const MultiPoly& f, int d = 1);
// τ^d(f) = b_d(t_1)...b_d(t_s) φ^d(f) for f in the t-variables only
MultiPoly tau_twist(const MultiPoly& f, int s, int d = 1);
// τ_z^d(f) = z^d b_d(t_1)...b_d(t_s) φ^d(f) on truncated series in z
ZSeries tau_z_twist(const ZSeries& f, int s, int d = 1);

// exp_z(f) = Σ_j τ_z^j(f)/D_j and log_z(f) = Σ_j τ_z^j(f)/l_j; both need a
// truncated input (the j-sum stops at the precision since τ_z^j lands in
// z-order ≥ j) and are mutually inverse to that precision
ZSeries exp_z(const ZSeries& f, int s);
ZSeries log_z(const ZSeries& f, int s);

// Σ_{i+j=n} (1/l_i) (1/D_j)^{q^i}: equals 1 for n = 0 and 0 for n ≥ 1.
// These scalars are the composition coefficients of log_z ∘ exp_z, so their
// vanishing certifies the inverse property at every order up to n.
Frac exp_log_composition_sum(const Fq& F, int n);

} // namespace carlitz

#endif
