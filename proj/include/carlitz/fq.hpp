#ifndef CARLITZ_FQ_HPP
#define CARLITZ_FQ_HPP

/* Finite field F_q, q = p^e, with table-driven arithmetic.
 *
 * Elements are uint8_t codes in [0, q).  The code is the base-p packing of
 * the residue polynomial: code = sum c_i p^i with c_i in [0, p).  For prime
 * q the code is just the value mod p.  Contexts are interned: Fq::get()
 * returns a reference with static lifetime, so raw pointers to contexts can
 * be stored and compared for identity.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "carlitz/errors.hpp"

namespace carlitz {

using fq_elem = std::uint8_t;

class Fq {
  public:
    // Field with q elements, q = p^e <= 256 a prime power.  For e > 1 the
    // built-in modulus is used (q in {4, 8, 9, 16, 25, 27, ...} as available).
    static const Fq& get(int q);
    // Explicit construction: p prime, e >= 1, modulus = monic irreducible
    // degree-e polynomial over F_p given low-first (ignored when e == 1).
    static const Fq& get(int p, int e, const std::vector<int>& modulus);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    bool prime() const { return e_ == 1; }

    fq_elem zero() const { return 0; }
    fq_elem one() const { return 1; }
    fq_elem gen() const { return gen_; }

    fq_elem add(fq_elem a, fq_elem b) const { return add_[a * q_ + b]; }
    fq_elem sub(fq_elem a, fq_elem b) const { return add_[a * q_ + neg_[b]]; }
    fq_elem mul(fq_elem a, fq_elem b) const { return mul_[a * q_ + b]; }
    fq_elem neg(fq_elem a) const { return neg_[a]; }
    fq_elem inv(fq_elem a) const {
        if (a == 0) throw DivisionByZero("inverse of 0 in F_q");
        return inv_[a];
    }
    fq_elem div(fq_elem a, fq_elem b) const { return mul(a, inv(b)); }
    // x -> x^p (the p-power Frobenius generates Gal(F_q/F_p))
    fq_elem frobenius(fq_elem a) const { return frob_[a]; }
    fq_elem pow(fq_elem a, long long n) const;

    // element from an integer (reduced mod p, landing in the prime subfield)
    fq_elem from_int(long long n) const;
    // discrete log base gen(); only valid for a != 0
    int log_gen(fq_elem a) const { return log_[a]; }

    // canonical display: prime fields use integers 0..p-1 with values > p/2
    // shown by the caller as negatives; non-prime fields use 0, 1, g, g^k
    std::string to_string(fq_elem a) const;

    // raw table access for hot loops
    const fq_elem* add_table() const { return add_.data(); }
    const fq_elem* mul_table() const { return mul_.data(); }

    bool operator==(const Fq& o) const { return this == &o; }

  private:
    Fq(int p, int e, const std::vector<int>& modulus);
    Fq(const Fq&) = delete;
    Fq& operator=(const Fq&) = delete;

    int p_, e_, q_;
    std::vector<int> modulus_; // monic, length e+1, low-first, F_p values
    std::vector<fq_elem> add_, mul_, neg_, inv_, frob_;
    std::vector<int> log_;
    fq_elem gen_ = 0;
};

} // namespace carlitz

#endif
