#ifndef CARLITZ_LOGALG_HPP
#define CARLITZ_LOGALG_HPP

/* Log-algebraicity operators on K[X_1..X_s].
 *
 *   L_k(F) = Σ_{a monic, deg a = k} (a*F)/a
 *   Z_k(F) = L_k(F) - Σ_{j>=1} Z_{k-j}(F)^{q^j}/l_j
 *   log_algebraic(F) = Σ_{k>=0} Z_k(F) Z^{q^k}
 *
 * For F in A[X] the last sum is a polynomial: every Z_k(F) lies in A[X]
 * and vanishes as soon as q^k exceeds ‖F‖.  log_algebraic certifies both
 * facts instead of assuming them -- integrality by exact division, and
 * termination by computing one index past the norm bound and checking
 * that it vanishes.
 *
 * The engine exploits K-linearity of L_k.  For fixed degree k the sums
 *   S_k(W) = Σ_a ψ_{w_1}(a)···ψ_{w_m}(a)/a        (W a multiset of indices)
 * are shared by every monomial, so they are tabulated once per degree as
 * numerators over the common denominator l_k (all arithmetic stays in A),
 * and L_k of X_1^{e_1}···X_s^{e_s} becomes a multinomial assembly over the
 * table, since C_a(X)^e expands into ψ-products indexed by multisets.
 */

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "carlitz/carlitz_module.hpp"
#include "carlitz/norms.hpp"

namespace carlitz {

struct LogAlgebraic {
    MultiPoly result; // Σ_k Z_k(F) Z^{q^k}, an element of A[X][Z]
    int k0;           // largest k with q^k <= ‖F‖ (last index that can occur)
};

// Per-field engine with cached multiset-sum tables.  Not thread-safe; use
// one engine per thread or serialize access (the shared log_engine below is
// handed out under a lock but not locked per call).
class LogAlgebra {
  public:
    explicit LogAlgebra(const Fq& F) : F_(&F) {}

    const Fq& field() const { return *F_; }

    MultiPoly L_op(const MultiPoly& F, int k);
    MultiPoly Z_op(const MultiPoly& F, int k);
    LogAlgebraic log_algebraic(const MultiPoly& F);

    // Z_0(F)..Z_kmax(F) for integral F, computed over A throughout
    std::vector<MultiPoly> z_coeffs(const MultiPoly& F, int kmax);

  private:
    // per degree k: packed sorted multiset W -> Σ_a ψ^W(a)·(l_k/a), built
    // for multisets up to a size cap
    struct STable {
        int maxm = -1;
        std::unordered_map<std::uint64_t, ThetaPoly> num;
    };
    const Fq* F_;
    std::vector<STable> s_;
    // numerator cache: l_k·L_k(monomial), an integral polynomial
    std::map<int, std::map<Mono, MultiPoly, MonoLess>> lnum_;

    void ensure_table(int k, int maxm);
    const MultiPoly& L_num(const Mono& m, int k);
    MultiPoly L_num_F(const MultiPoly& F, int k); // Σ c_m · l_k·L_k(m)
};

// shared per-field engine (created on first use)
LogAlgebra& log_engine(const Fq& F);

// convenience wrappers through the shared engine
MultiPoly L_op(const MultiPoly& F, int k);
MultiPoly Z_op(const MultiPoly& F, int k);
LogAlgebraic log_algebraic(const MultiPoly& F);

// the diagonal special value: log_algebraic(X_1···X_s)
MultiPoly special_poly(const Fq& F, int s);

} // namespace carlitz

#endif
