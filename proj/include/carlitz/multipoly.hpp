#ifndef CARLITZ_MULTIPOLY_HPP
#define CARLITZ_MULTIPOLY_HPP

/* Sparse multivariate polynomials over K = F_q(θ) in the variables
 * t1..ts, X1..Xs and the two series markers z, Z.
 *
 * Monomials are sorted exponent vectors; the term order is graded
 * lexicographic with t1 < t2 < ... < X1 < X2 < ... < z < Z.  Terms are kept
 * in a std::map so iteration (and hence serialization) is deterministic.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "carlitz/frac.hpp"

namespace carlitz {

// variable identifier packed as (kind << 28) | index; integer order gives
// the canonical variable order.  Theta is transient: the parser uses it for
// 'th' and folds it into coefficients before returning.
enum class VarKind : std::uint32_t { T = 0, X = 1, LowZ = 2, UpZ = 3, Theta = 4 };

struct Var {
    std::uint32_t code;
    Var(VarKind k, int index = 0) {
        if ((k == VarKind::T || k == VarKind::X) && index < 1)
            throw InvalidVariable("t/X variable index must be >= 1");
        code = (std::uint32_t(k) << 28) | std::uint32_t(index);
    }
    static Var t(int i) { return Var(VarKind::T, i); }
    static Var x(int i) { return Var(VarKind::X, i); }
    static Var z() { return Var(VarKind::LowZ); }
    static Var Z() { return Var(VarKind::UpZ); }
    VarKind kind() const { return VarKind(code >> 28); }
    int index() const { return int(code & 0x0fffffff); }
    bool operator==(const Var& o) const { return code == o.code; }
    bool operator<(const Var& o) const { return code < o.code; }
    std::string name() const;
};

// sorted (var, exponent) pairs, exponents > 0
class Mono {
  public:
    Mono() = default;
    explicit Mono(std::vector<std::pair<Var, std::uint32_t>> factors);
    static Mono one() { return Mono(); }
    static Mono var(Var v, std::uint32_t e = 1) {
        if (e == 0) return Mono();
        return Mono({{v, e}});
    }

    const std::vector<std::pair<Var, std::uint32_t>>& factors() const {
        return f_;
    }
    bool is_one() const { return f_.empty(); }
    long long total_degree() const;
    std::uint32_t exp_of(Var v) const;
    Mono times(const Mono& o) const;
    Mono pow(std::uint32_t e) const;
    // remove one variable entirely (used when extracting layers)
    Mono without(Var v) const;
    Mono with_exp(Var v, std::uint32_t e) const; // set/replace exponent

    bool operator==(const Mono& o) const { return f_ == o.f_; }

  private:
    std::vector<std::pair<Var, std::uint32_t>> f_;
};

// graded order: lower total degree sorts first; ties broken at the first
// variable (in canonical order) where exponents differ, larger exponent
// sorting first.  Map iteration therefore yields constant term first and
// same-degree terms in natural reading order (t1 before t2).
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class MultiPoly {
  public:
    explicit MultiPoly(const Fq& F) : F_(&F) {}
    static MultiPoly zero(const Fq& F) { return MultiPoly(F); }
    static MultiPoly constant(Frac c);
    static MultiPoly of_int(const Fq& F, long long n) {
        return constant(Frac::of_int(F, n));
    }
    static MultiPoly monomial(Frac c, const Mono& m);
    static MultiPoly variable(const Fq& F, Var v, std::uint32_t e = 1);

    const Fq& field() const { return *F_; }
    const std::map<Mono, Frac, MonoLess>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Frac coeff(const Mono& m) const;
    // all coefficients in A = F_q[θ]
    bool is_integral() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const Frac& c) const;
    MultiPoly mono_times(const Mono& m, const Frac& c) const;
    MultiPoly pow(std::uint32_t n) const;

    void add_term(const Mono& m, const Frac& c); // accumulate one term

    // substitute a variable by a polynomial (powers cached internally)
    MultiPoly subst(Var v, const MultiPoly& value) const;
    // substitute a variable by a scalar
    MultiPoly subst_scalar(Var v, const Frac& value) const;
    // raise every coefficient to the q^j-th power, monomials unchanged
    // (the φ-twist on polynomials in t)
    MultiPoly phi(int j = 1) const;
    // full q^j-th power (coefficients powered, exponents multiplied by q^j);
    // valid in characteristic p by freshman's dream
    MultiPoly frobenius_power(int j) const;
    // formal partial derivative
    MultiPoly derivative(Var v) const;

    long long degree_in(Var v) const;      // 0 for zero polynomial
    long long total_degree_in(VarKind k) const;
    int max_index(VarKind k) const;        // largest t/X index present

    // split by the exponent of a marker variable (z or Z): exponent -> part
    // with the marker removed
    std::map<std::uint32_t, MultiPoly> split_by(Var v) const;

    std::string to_string() const; // canonical text form (see grammar)

  private:
    const Fq* F_;
    std::map<Mono, Frac, MonoLess> t_;
};

} // namespace carlitz

#endif
