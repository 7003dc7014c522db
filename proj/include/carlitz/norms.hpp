#ifndef CARLITZ_NORMS_HPP
#define CARLITZ_NORMS_HPP

/* The orthogonal H basis, sup and Gauss norms, and the dot action of
 * t/z polynomials on X/Z polynomials.
 *
 * H_N(X) = ∏_i (θ^i * X)^{N_i} for the base-q digits N_i of N.  These form
 * an orthogonal basis of K[X] with ‖H_N‖ = q^{s_q(N)/(q-1)} (s_q = digit
 * sum), and the sup norm of Σ c_N H_{N_1}(X_1)...H_{N_s}(X_s) is
 * max |c_N|_∞ q^{Σ_i s_q(N_i)/(q-1)}.
 *
 * Norm values are 0 or powers q^{m/(q-1)}; they are kept exact as the
 * integer numerator m over the fixed denominator q-1.
 */

#include <cstdint>
#include <map>

#include "carlitz/multipoly.hpp"

namespace carlitz {

class NormValue {
  public:
    static NormValue zero(int q) { return NormValue(q, 0, true); }
    static NormValue one(int q) { return NormValue(q, 0, false); }
    // the value q^{num/(q-1)}
    static NormValue q_pow(int q, long long num) {
        return NormValue(q, num, false);
    }

    bool is_zero() const { return zero_; }
    long long num() const { return num_; }
    int den() const { return q_ - 1; }
    int q() const { return q_; }

    NormValue operator*(const NormValue& o) const;
    NormValue pow_q(int j) const; // raise to the q^j-th power
    bool operator==(const NormValue& o) const;
    bool operator!=(const NormValue& o) const { return !(*this == o); }
    bool operator<(const NormValue& o) const; // zero below everything
    bool operator<=(const NormValue& o) const { return *this < o || *this == o; }

    std::string to_string() const; // "0" or "q^(m/d)", with " = v" if integral

  private:
    NormValue(int q, long long num, bool zero)
        : q_(q), num_(zero ? 0 : num), zero_(zero) {}
    int q_;
    long long num_;
    bool zero_;
};

// sum of the base-q digits of N ≥ 0
long long digit_sum(long long N, int q);

// H_N in the given variable (H_0 = 1)
MultiPoly h_poly(const Fq& F, long long N, Var v);

// expansion of G over products H_{N_1}(X_1)...H_{N_s}(X_s); the key lists
// the H degree of each variable in `xs` order (ascending X index)
struct HExpansion {
    std::vector<Var> xs;
    std::map<std::vector<std::uint32_t>, Frac> coeff;
};

HExpansion h_expand(const MultiPoly& G); // G must involve only X variables
MultiPoly h_unexpand(const HExpansion& E, const Fq& F);

// sup norm of G ∈ K[X1..Xs] via the H expansion
NormValue sup_norm(const MultiPoly& G);

// Gauss norm: max over the coefficients of q^{deg num - deg den}
NormValue gauss_norm(const MultiPoly& f);

// dot action of f ∈ K[t1..ts][z] on F ∈ K[X1..Xs][Z]: the term
// c t_1^{n_1}...t_s^{n_s} z^k sends F to c F(X_i -> C_{θ^{n_i}}(X_i))
// with every Z exponent multiplied by q^k
MultiPoly dot_action(const MultiPoly& f, const MultiPoly& F);

} // namespace carlitz

#endif
