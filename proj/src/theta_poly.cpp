#include "carlitz/theta_poly.hpp"

#include <sstream>

namespace carlitz {

ThetaPoly::ThetaPoly(const Fq& F, std::vector<fq_elem> coeffs)
    : F_(&F), c_(std::move(coeffs)) {
    trim();
}

void ThetaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ThetaPoly ThetaPoly::constant(const Fq& F, fq_elem c) {
    ThetaPoly r(F);
    if (c != 0) r.c_.push_back(c);
    return r;
}

ThetaPoly ThetaPoly::theta_power(const Fq& F, int n, fq_elem c) {
    ThetaPoly r(F);
    if (c != 0) {
        r.c_.assign(size_t(n) + 1, 0);
        r.c_[n] = c;
    }
    return r;
}

ThetaPoly ThetaPoly::monic_of_index(const Fq& F, int d, long long idx) {
    if (d < 0) throw InvalidInput("monic_of_index: degree must be >= 0");
    ThetaPoly r(F);
    r.c_.assign(size_t(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        r.c_[i] = fq_elem(idx % F.q());
        idx /= F.q();
    }
    if (idx != 0) throw InvalidInput("monic_of_index: index out of range");
    r.c_[d] = 1;
    return r;
}

ThetaPoly ThetaPoly::operator-() const {
    ThetaPoly r(*F_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
    return r;
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
    ThetaPoly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = F_->add(r.c_[i], o.c_[i]);
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
    ThetaPoly r(*F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = F_->sub(r.c_[i], o.c_[i]);
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
    ThetaPoly r(*F_);
    if (c_.empty() || o.c_.empty()) return r;
    size_t n = c_.size() + o.c_.size() - 1;
    if (F_->prime()) {
        // codes are integers mod p: accumulate in 32-bit and reduce once
        const int p = F_->p();
        std::vector<std::uint32_t> acc(n, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            std::uint32_t a = c_[i];
            if (!a) continue;
            const fq_elem* b = o.c_.data();
            std::uint32_t* out = acc.data() + i;
            for (size_t j = 0; j < o.c_.size(); ++j) out[j] += a * b[j];
        }
        r.c_.resize(n);
        for (size_t i = 0; i < n; ++i) r.c_[i] = fq_elem(acc[i] % p);
    } else {
        const fq_elem* mt = F_->mul_table();
        const fq_elem* at = F_->add_table();
        const int q = F_->q();
        r.c_.assign(n, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            fq_elem a = c_[i];
            if (!a) continue;
            const fq_elem* row = mt + size_t(a) * q;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                fq_elem prod = row[o.c_[j]];
                r.c_[i + j] = at[size_t(r.c_[i + j]) * q + prod];
            }
        }
    }
    r.trim();
    return r;
}

bool ThetaPoly::operator==(const ThetaPoly& o) const {
    return F_ == o.F_ && c_ == o.c_;
}

ThetaPoly ThetaPoly::scaled(fq_elem c) const {
    ThetaPoly r(*F_);
    if (c == 0) return r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], c);
    r.trim();
    return r;
}

ThetaPoly ThetaPoly::shifted(int k) const {
    if (is_zero() || k == 0) {
        ThetaPoly r = *this;
        if (k < 0) throw InvalidInput("shifted: negative shift");
        return r;
    }
    if (k < 0) throw InvalidInput("shifted: negative shift");
    ThetaPoly r(*F_);
    r.c_.assign(c_.size() + size_t(k), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

ThetaPoly ThetaPoly::monic() const {
    if (is_zero()) throw DivisionByZero("monic(): zero polynomial");
    return scaled(F_->inv(lead()));
}

ThetaPoly ThetaPoly::pow(long long n) const {
    if (n < 0) throw InvalidInput("ThetaPoly::pow: negative exponent");
    ThetaPoly r = constant(*F_, 1), b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        if (n >>= 1) b *= b;
    }
    return r;
}

ThetaPoly ThetaPoly::frobenius_spread(int j, int q) const {
    if (j == 0) return *this;
    long long step = 1;
    for (int i = 0; i < j; ++i) step *= q;
    ThetaPoly r(*F_);
    if (is_zero()) return r;
    r.c_.assign(size_t(step) * (c_.size() - 1) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) r.c_[size_t(step) * i] = c_[i]; // c^{q^j} = c in F_q
    return r;
}

fq_elem ThetaPoly::eval(fq_elem x) const {
    fq_elem r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
    return r;
}

void ThetaPoly::add_scaled(const ThetaPoly& a, fq_elem c, int shift) {
    if (c == 0 || a.is_zero()) return;
    size_t need = a.c_.size() + size_t(shift);
    if (c_.size() < need) c_.resize(need, 0);
    if (F_->prime()) {
        const int p = F_->p();
        for (size_t i = 0; i < a.c_.size(); ++i)
            c_[i + shift] = fq_elem((c_[i + shift] + c * a.c_[i]) % p);
    } else {
        const fq_elem* mt = F_->mul_table();
        const fq_elem* at = F_->add_table();
        const int q = F_->q();
        const fq_elem* row = mt + size_t(c) * q;
        for (size_t i = 0; i < a.c_.size(); ++i)
            c_[i + shift] = at[size_t(c_[i + shift]) * q + row[a.c_[i]]];
    }
    trim();
}

std::string ThetaPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = F_->to_string(c_[i]);
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << "th";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<ThetaPoly> monic_enum(const Fq& F, int d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) {
        count *= F.q();
        if (count > (1 << 22))
            throw InvalidInput("monic_enum: q^d too large to materialize");
    }
    std::vector<ThetaPoly> out;
    out.reserve(size_t(count));
    for (long long idx = 0; idx < count; ++idx)
        out.push_back(ThetaPoly::monic_of_index(F, d, idx));
    return out;
}

std::pair<ThetaPoly, ThetaPoly> divrem(const ThetaPoly& a, const ThetaPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Fq& F = a.field();
    if (a.is_zero() || a.coeffs().size() < b.coeffs().size())
        return {ThetaPoly::zero(F), a};
    std::vector<fq_elem> rem = a.coeffs();
    const std::vector<fq_elem>& d = b.coeffs();
    size_t db = d.size() - 1;
    fq_elem linv = F.inv(d.back());
    std::vector<fq_elem> quot(rem.size() - db, 0);
    if (F.prime()) {
        const int p = F.p();
        for (size_t k = rem.size(); k-- > db;) {
            int c = rem[k];
            if (c == 0) continue;
            int qd = int(F.mul(fq_elem(c), linv));
            quot[k - db] = fq_elem(qd);
            for (size_t i = 0; i <= db; ++i) {
                int v = rem[k - db + i] - qd * d[i];
                v %= p;
                if (v < 0) v += p;
                rem[k - db + i] = fq_elem(v);
            }
        }
    } else {
        for (size_t k = rem.size(); k-- > db;) {
            fq_elem c = rem[k];
            if (c == 0) continue;
            fq_elem qd = F.mul(c, linv);
            quot[k - db] = qd;
            for (size_t i = 0; i <= db; ++i)
                rem[k - db + i] = F.sub(rem[k - db + i], F.mul(qd, d[i]));
        }
    }
    return {ThetaPoly(F, std::move(quot)), ThetaPoly(F, std::move(rem))};
}

ThetaPoly div_exact(const ThetaPoly& a, const ThetaPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero())
        throw IntegralityViolation("exact polynomial division left a remainder");
    return q;
}

ThetaPoly gcd(const ThetaPoly& a, const ThetaPoly& b) {
    ThetaPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

} // namespace carlitz
