#ifndef CARLITZ_ZSERIES_HPP
#define CARLITZ_ZSERIES_HPP

/* Truncated power series in z with MultiPoly coefficients.
 *
 * A ZSeries either knows the coefficients of z^0..z^{prec-1} (truncated, the
 * tail is unknown) or is marked exact, meaning it is a genuine polynomial
 * and every coefficient beyond the stored ones is zero.  Operations track
 * the weaker of the two precisions; asking for a coefficient beyond the
 * certified window throws PrecisionLoss.
 */

#include <vector>

#include "carlitz/multipoly.hpp"

namespace carlitz {

class ZSeries {
  public:
    explicit ZSeries(const Fq& F) : F_(&F), prec_(0), exact_(true) {}
    // truncated series with the given certified precision
    ZSeries(const Fq& F, std::vector<MultiPoly> coeffs, int prec);
    // exact polynomial in z
    static ZSeries exact_poly(const Fq& F, std::vector<MultiPoly> coeffs);
    static ZSeries one(const Fq& F, int prec);

    const Fq& field() const { return *F_; }
    bool exact() const { return exact_; }
    int prec() const { return prec_; } // meaningless when exact()
    // number of stored coefficients (exact: polynomial length)
    int stored() const { return int(c_.size()); }
    bool known(int d) const { return exact_ || d < prec_; }
    const MultiPoly& coeff(int d) const;
    bool is_zero() const; // all known coefficients zero

    ZSeries operator-() const;
    ZSeries operator+(const ZSeries& o) const;
    ZSeries operator-(const ZSeries& o) const;
    ZSeries operator*(const ZSeries& o) const;
    bool operator==(const ZSeries& o) const; // compares the common window

    ZSeries scaled(const MultiPoly& f) const;
    ZSeries shifted_z(int k) const; // multiply by z^k
    ZSeries truncated(int prec) const;
    // apply F -> F.phi(j) to every coefficient
    ZSeries phi_coeffs(int j) const;

    // degree in z of an exact series; throws PrecisionLoss when truncated
    int degree_z() const;
    // exact polynomial -> MultiPoly with explicit z variable
    MultiPoly to_poly() const;
    // certify that an exact tail was verified: drop trailing zero coeffs
    void trim();

  private:
    const Fq* F_;
    std::vector<MultiPoly> c_;
    int prec_;
    bool exact_;
    static const MultiPoly& zero_of(const Fq& F);
};

} // namespace carlitz

#endif
