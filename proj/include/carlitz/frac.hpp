#ifndef CARLITZ_FRAC_HPP
#define CARLITZ_FRAC_HPP

/* Elements of K = F_q(θ) as reduced fractions of ThetaPoly.
 * Invariants: denominator monic and nonzero, gcd(num, den) = 1,
 * zero is represented as 0/1.
 */

#include <string>

#include "carlitz/theta_poly.hpp"

namespace carlitz {

class Frac {
  public:
    explicit Frac(const Fq& F)
        : num_(ThetaPoly::zero(F)), den_(ThetaPoly::constant(F, 1)) {}
    Frac(ThetaPoly num, ThetaPoly den);               // reduces
    explicit Frac(ThetaPoly num);                     // num / 1
    static Frac of_int(const Fq& F, long long n) {
        return Frac(ThetaPoly::constant(F, F.from_int(n)));
    }

    const Fq& field() const { return num_.field(); }
    const ThetaPoly& num() const { return num_; }
    const ThetaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); } // lies in A = F_q[θ]

    // ∞-adic valuation v(num/den) = deg den - deg num; nullopt for zero
    std::optional<int> valuation() const {
        if (is_zero()) return std::nullopt;
        return *den_.degree() - *num_.degree();
    }

    Frac operator-() const;
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }
    bool operator==(const Frac& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    Frac inv() const;
    Frac pow(long long n) const;
    // x -> x^{q^j} (numerator and denominator spread; stays reduced)
    Frac frobenius_power(int j) const;

    std::string to_string() const; // "num/den" with parentheses as needed

  private:
    ThetaPoly num_, den_;
    void reduce();
};

} // namespace carlitz

#endif
