#ifndef CARLITZ_THETA_POLY_HPP
#define CARLITZ_THETA_POLY_HPP

/* Dense univariate polynomials over F_q in the indeterminate θ.
 * These are the elements of A = F_q[θ].  Coefficients are stored low-first
 * with no trailing zeros; the zero polynomial has an empty vector and its
 * degree is reported as an empty optional (never -1).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "carlitz/fq.hpp"

namespace carlitz {

class ThetaPoly {
  public:
    explicit ThetaPoly(const Fq& F) : F_(&F) {}
    ThetaPoly(const Fq& F, std::vector<fq_elem> coeffs);

    static ThetaPoly zero(const Fq& F) { return ThetaPoly(F); }
    static ThetaPoly constant(const Fq& F, fq_elem c);
    static ThetaPoly theta_power(const Fq& F, int n, fq_elem c = 1);
    // monic polynomial of degree d with index idx in [0, q^d): coefficients
    // below the leading term are the base-q digits of idx (constant term =
    // least significant digit), so enumeration order is ascending idx
    static ThetaPoly monic_of_index(const Fq& F, int d, long long idx);

    const Fq& field() const { return *F_; }
    const std::vector<fq_elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }
    fq_elem lead() const { return c_.empty() ? fq_elem(0) : c_.back(); }
    fq_elem coeff(int i) const {
        return (i >= 0 && i < int(c_.size())) ? c_[i] : fq_elem(0);
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    ThetaPoly operator-() const;
    ThetaPoly operator+(const ThetaPoly& o) const;
    ThetaPoly operator-(const ThetaPoly& o) const;
    ThetaPoly operator*(const ThetaPoly& o) const;
    ThetaPoly& operator+=(const ThetaPoly& o) { return *this = *this + o; }
    ThetaPoly& operator-=(const ThetaPoly& o) { return *this = *this - o; }
    ThetaPoly& operator*=(const ThetaPoly& o) { return *this = *this * o; }
    bool operator==(const ThetaPoly& o) const;
    bool operator!=(const ThetaPoly& o) const { return !(*this == o); }

    ThetaPoly scaled(fq_elem c) const;
    ThetaPoly shifted(int k) const; // multiply by θ^k
    ThetaPoly monic() const;        // scale so the leading coefficient is 1
    ThetaPoly pow(long long n) const;
    // θ -> θ^{q^j}; equals raising to the q^j-th power since coefficients
    // lie in F_q (a Frobenius "spread" of the exponents)
    ThetaPoly frobenius_spread(int j, int q) const;
    fq_elem eval(fq_elem x) const;

    // in-place fused accumulate: *this += c * (a shifted by k)
    void add_scaled(const ThetaPoly& a, fq_elem c, int shift = 0);

    std::string to_string() const; // e.g. "th^2+th+1", "2*th", "g^2*th^3"

    void trim();

  private:
    const Fq* F_;
    std::vector<fq_elem> c_;
};

// all monic polynomials of degree d in ascending coefficient-code order
// (the order of ThetaPoly::monic_of_index); size q^d, so keep d small
std::vector<ThetaPoly> monic_enum(const Fq& F, int d);

// quotient/remainder with divisor != 0
std::pair<ThetaPoly, ThetaPoly> divrem(const ThetaPoly& a, const ThetaPoly& b);
// exact division; throws IntegralityViolation if the remainder is nonzero
ThetaPoly div_exact(const ThetaPoly& a, const ThetaPoly& b);
// monic gcd (gcd(0,0) = 0)
ThetaPoly gcd(const ThetaPoly& a, const ThetaPoly& b);

} // namespace carlitz

#endif
