#ifndef CARLITZ_STARK_HPP
#define CARLITZ_STARK_HPP

/* Anderson-Stark units σ_s ∈ A[t_1..t_s, z], computed along two
 * independent routes:
 *
 *   - exp route: σ_s = exp_z of the order-one L-series truncation, with
 *     every order past the degree bound deg_z σ_s ≤ (s−1)/(q−1) checked
 *     to vanish and every surviving coefficient checked to lie in A[t];
 *
 *   - extraction route: the degree-s special polynomial is rewritten per
 *     X-variable in the H-basis (triangular inversion), whose coefficients
 *     are exactly the t-monomial coefficients of σ_s.
 *
 * For large variable counts the symmetric-orbit engine solves the same
 * triangular system order by order with coefficients reduced modulo a
 * large irreducible, and certifies the lifted result through an a-priori
 * degree bound on every z-order plus one guard order of the identity.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "carlitz/multipoly.hpp"

namespace carlitz {

struct StarkUnit {
    int q;
    int s;
    MultiPoly sigma;   // element of A[t_1..t_s, z]
    std::string route; // "exp_z-of-L" or "extraction-from-special"
};

StarkUnit sigma_via_exp(const Fq& F, int s);
StarkUnit sigma_via_extraction(const Fq& F, int s);

// σ_s in symmetric-orbit form: zc[d] maps the nibble-packed descending
// exponent multiset of a t-monomial orbit to the coefficient shared by
// every monomial of the orbit at z-order d.
struct SymStarkUnit {
    int q = 0;
    int s = 1;
    std::vector<std::map<std::uint64_t, ThetaPoly>> zc;
    bool guard_checked = false; // identity verified one order past deg_z
};

// Triangular solve of log_z(σ) = L(1,s,z) in the orbit representation,
// coefficients modulo a deterministic irreducible of certified size;
// q ∈ {2,3}.  Throws VerificationError when a lifted coefficient exceeds
// its degree bound or the guard order fails to vanish.
SymStarkUnit sigma_symmetric(const Fq& F, int s, int threads = 0);

// The same solve with exact θ-polynomial coefficients (any q, small s only:
// the Frobenius twists multiply intermediate degrees by q^k).  Throws
// NonzeroTail / IntegralityViolation with exp-route semantics.
SymStarkUnit sigma_exact_orbits(const Fq& F, int s, int threads = 0);

// expansion to an explicit polynomial; throws InvalidInput past ~4M terms
MultiPoly sym_to_poly(const Fq& F, const SymStarkUnit& u);

// orbit form of σ_s(t,1) = Σ_d coefficient at z^d
std::map<std::uint64_t, ThetaPoly> sym_eval_z1(const Fq& F,
                                               const SymStarkUnit& u);

// For 1 ≤ s ≤ s_max: degree bound; (z−1) | σ_s iff s ≡ 1 mod (q−1) and
// s > 1 (equivalently σ_s(t,1) = 0 exactly then); the logarithm identity
// at every computed order plus one guard order.  Dispatches to the exp
// route for small s and the symmetric engine beyond it.
struct SigmaPropertyReport {
    int q = 0;
    int s_max = 0;
    std::vector<std::string> violations; // empty when every property holds
    bool ok() const { return violations.empty(); }
};
SigmaPropertyReport sigma_properties_check(const Fq& F, int s_max,
                                           int threads = 0);

} // namespace carlitz

#endif
