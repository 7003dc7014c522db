#include "carlitz/frac.hpp"

namespace carlitz {

Frac::Frac(ThetaPoly num, ThetaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    reduce();
}

Frac::Frac(ThetaPoly num)
    : num_(std::move(num)), den_(ThetaPoly::constant(num_.field(), 1)) {}

void Frac::reduce() {
    const Fq& F = num_.field();
    if (num_.is_zero()) {
        den_ = ThetaPoly::constant(F, 1);
        return;
    }
    if (!den_.is_one()) {
        ThetaPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
    }
    if (!den_.is_monic()) {
        fq_elem li = F.inv(den_.lead());
        num_ = num_.scaled(li);
        den_ = den_.scaled(li);
    }
}

Frac Frac::operator-() const {
    Frac r(field());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Frac Frac::operator+(const Frac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        ThetaPoly n = num_ + o.num_;
        return Frac(std::move(n), den_);
    }
    return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator-(const Frac& o) const { return *this + (-o); }

Frac Frac::operator*(const Frac& o) const {
    if (is_zero() || o.is_zero()) return Frac(field());
    // cross-reduce before multiplying to keep intermediates small
    ThetaPoly g1 = gcd(num_, o.den_);
    ThetaPoly g2 = gcd(o.num_, den_);
    ThetaPoly n1 = g1.is_one() ? num_ : div_exact(num_, g1);
    ThetaPoly d2 = g1.is_one() ? o.den_ : div_exact(o.den_, g1);
    ThetaPoly n2 = g2.is_one() ? o.num_ : div_exact(o.num_, g2);
    ThetaPoly d1 = g2.is_one() ? den_ : div_exact(den_, g2);
    return Frac(n1 * n2, d1 * d2);
}

Frac Frac::operator/(const Frac& o) const { return *this * o.inv(); }

Frac Frac::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero fraction");
    return Frac(den_, num_);
}

Frac Frac::pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    Frac r = Frac(ThetaPoly::constant(field(), 1));
    Frac b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        if (n >>= 1) b *= b;
    }
    return r;
}

Frac Frac::frobenius_power(int j) const {
    if (j == 0 || is_zero()) return *this;
    Frac r(field());
    r.num_ = num_.frobenius_spread(j, field().q());
    r.den_ = den_.frobenius_spread(j, field().q());
    return r; // coprimality and monicity survive the spread
}

std::string Frac::to_string() const {
    auto wrap = [](const ThetaPoly& p) {
        std::string s = p.to_string();
        if (s.find('+') != std::string::npos) return "(" + s + ")";
        return s;
    };
    if (den_.is_one()) return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace carlitz
