/* Certified Laurent windows and the τ-operator exponential/logarithm on
 * approximate Tate-algebra elements.
 */

#include "carlitz/laurent.hpp"

#include <algorithm>

#include "carlitz/carlitz_module.hpp"

namespace carlitz {

namespace {

constexpr long long kMaxWindow = 1 << 20; // largest stored window length

void check_window(long long hi, long long lo) {
    if (hi < lo) throw InvalidInput("LaurentScalar: window bounds reversed");
    if (hi - lo + 1 > kMaxWindow)
        throw InvalidInput("LaurentScalar: window too long");
}

} // namespace

LaurentScalar::LaurentScalar(const Fq& F, long long hi, long long lo)
    : F_(&F), hi_(hi), lo_(lo) {
    check_window(hi, lo);
    c_.assign(size_t(hi - lo + 1), 0);
}

void LaurentScalar::trim_top() {
    while (c_.size() > 1 && c_.front() == 0) {
        c_.erase(c_.begin());
        --hi_;
    }
}

LaurentScalar LaurentScalar::of_poly(const ThetaPoly& a, long long lo) {
    const Fq& F = a.field();
    long long deg = a.is_zero() ? lo : (long long)*a.degree();
    LaurentScalar r(F, std::max(deg, lo), lo);
    for (long long e = std::max(0LL, lo); e <= deg; ++e)
        r.c_[size_t(r.hi_ - e)] = a.coeff(int(e));
    r.trim_top();
    return r;
}

LaurentScalar LaurentScalar::of_frac(const Frac& x, long long lo) {
    const Fq& F = x.field();
    if (x.is_zero()) return LaurentScalar(F, lo, lo);
    long long vdeg =
        (long long)*x.num().degree() - (long long)*x.den().degree();
    if (vdeg < lo) return LaurentScalar(F, lo, lo);
    long long K = std::max(0LL, -lo);
    if (K + *x.num().degree() > kMaxWindow)
        throw InvalidInput("LaurentScalar: division window too long");
    ThetaPoly q = divrem(x.num().shifted(int(K)), x.den()).first;
    LaurentScalar r(F, vdeg, lo);
    for (long long e = lo; e <= vdeg; ++e)
        r.c_[size_t(vdeg - e)] = q.coeff(int(e + K));
    r.trim_top();
    return r;
}

fq_elem LaurentScalar::coeff(long long e) const {
    if (e > hi_ || e < lo_) return 0;
    return c_[size_t(hi_ - e)];
}

std::optional<long long> LaurentScalar::top_exp() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return hi_ - (long long)i;
    return std::nullopt;
}

long long LaurentScalar::norm_bound_exp() const {
    auto t = top_exp();
    return t ? *t : lo_ - 1;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    for (auto& v : r.c_) v = F_->neg(v);
    return r;
}

LaurentScalar LaurentScalar::operator+(const LaurentScalar& o) const {
    long long hi = std::max(hi_, o.hi_), lo = std::max(lo_, o.lo_);
    LaurentScalar r(*F_, hi, lo);
    for (long long e = lo; e <= hi; ++e)
        r.c_[size_t(hi - e)] = F_->add(coeff(e), o.coeff(e));
    r.trim_top();
    return r;
}

LaurentScalar LaurentScalar::operator-(const LaurentScalar& o) const {
    return *this + (-o);
}

LaurentScalar LaurentScalar::operator*(const LaurentScalar& o) const {
    auto t1 = top_exp(), t2 = o.top_exp();
    long long T1 = t1 ? *t1 : lo_ - 1;
    long long T2 = t2 ? *t2 : o.lo_ - 1;
    long long lo = std::max(T1 + o.lo_, T2 + lo_);
    if (!t1 || !t2) return LaurentScalar(*F_, lo, lo);
    long long hi = std::max(T1 + T2, lo);
    LaurentScalar r(*F_, hi, lo);
    for (long long e1 = lo_; e1 <= T1; ++e1) {
        fq_elem a = coeff(e1);
        if (a == 0) continue;
        for (long long e2 = std::max(o.lo_, lo - e1); e2 <= T2; ++e2) {
            fq_elem b = o.coeff(e2);
            if (b == 0) continue;
            size_t i = size_t(hi - (e1 + e2));
            r.c_[i] = F_->add(r.c_[i], F_->mul(a, b));
        }
    }
    r.trim_top();
    return r;
}

LaurentScalar LaurentScalar::scaled(fq_elem c) const {
    LaurentScalar r = *this;
    for (auto& v : r.c_) v = F_->mul(v, c);
    r.trim_top();
    return r;
}

LaurentScalar LaurentScalar::shifted(long long k) const {
    LaurentScalar r = *this;
    r.hi_ += k;
    r.lo_ += k;
    return r;
}

LaurentScalar LaurentScalar::times_poly(const ThetaPoly& p) const {
    if (p.is_zero()) return LaurentScalar(*F_, lo_, lo_);
    long long d = *p.degree();
    LaurentScalar r(*F_, hi_ + d, lo_ + d);
    for (long long e = lo_; e <= hi_; ++e) {
        fq_elem a = coeff(e);
        if (a == 0) continue;
        for (long long m = 0; m <= d; ++m) {
            fq_elem b = p.coeff(int(m));
            if (b == 0) continue;
            if (e + m < r.lo_) continue;
            size_t i = size_t(r.hi_ - (e + m));
            r.c_[i] = F_->add(r.c_[i], F_->mul(a, b));
        }
    }
    r.trim_top();
    return r;
}

LaurentScalar LaurentScalar::frobenius_spread(int j) const {
    if (j < 0) throw InvalidInput("LaurentScalar: negative Frobenius power");
    if (j == 0) return *this;
    long long qj = 1;
    for (int i = 0; i < j; ++i) {
        qj *= F_->q();
        if (qj > kMaxWindow) throw InvalidInput("LaurentScalar: spread too wide");
    }
    long long hi = hi_ * qj, lo = (lo_ - 1) * qj + 1;
    LaurentScalar r(*F_, hi, lo);
    for (long long e = lo_; e <= hi_; ++e) {
        fq_elem a = coeff(e);
        if (a != 0) r.c_[size_t(hi - e * qj)] = a;
    }
    r.trim_top();
    return r;
}

LaurentScalar LaurentScalar::truncated(long long new_lo) const {
    if (new_lo <= lo_) return *this;
    if (new_lo > hi_) return LaurentScalar(*F_, new_lo, new_lo);
    LaurentScalar r(*F_, hi_, new_lo);
    for (long long e = new_lo; e <= hi_; ++e) r.c_[size_t(hi_ - e)] = coeff(e);
    r.trim_top();
    return r;
}

std::string LaurentScalar::to_string() const {
    std::string s;
    for (long long e = hi_; e >= lo_; --e) {
        fq_elem v = coeff(e);
        if (v == 0) continue;
        if (!s.empty()) s += " + ";
        std::string cs = F_->to_string(v);
        if (e == 0) {
            s += cs;
        } else {
            std::string pw =
                e == 1 ? "th" : "th^" + std::to_string(e);
            s += (v == 1) ? pw : cs + "*" + pw;
        }
    }
    std::string tail = "O(th^" + std::to_string(lo_ - 1) + ")";
    return s.empty() ? tail : s + " + " + tail;
}

TateApprox TateApprox::of_exact(const MultiPoly& f, int s, long long floor_lo) {
    if (f.max_index(VarKind::X) > 0 || f.degree_in(Var::z()) > 0 ||
        f.degree_in(Var::Z()) > 0)
        throw InvalidInput("TateApprox: input must involve only t variables");
    if (f.max_index(VarKind::T) > s)
        throw InvalidInput("TateApprox: t index exceeds the variable count");
    TateApprox r(f.field(), s, floor_lo - 1);
    for (const auto& [m, c] : f.terms())
        r.c.emplace(m, LaurentScalar::of_frac(c, floor_lo));
    return r;
}

void TateApprox::add_at(const Mono& m, const LaurentScalar& v) {
    auto it = c.find(m);
    if (it == c.end())
        c.emplace(m, v);
    else
        it->second += v;
}

long long TateApprox::gauss_bound_exp() const {
    long long b = err_exp;
    for (const auto& [m, w] : c) b = std::max(b, w.norm_bound_exp());
    return b;
}

TateApprox TateApprox::sub_exact(const MultiPoly& exact) const {
    TateApprox r = *this;
    for (const auto& [m, v] : exact.terms()) {
        auto it = r.c.find(m);
        long long floor_lo = it != r.c.end() ? it->second.lo() : err_exp + 1;
        LaurentScalar w = LaurentScalar::of_frac(v, floor_lo);
        if (it != r.c.end())
            it->second = it->second - w;
        else
            r.c.emplace(m, -w);
    }
    return r;
}

namespace {

using i128 = __int128;

// certified exponent bound for the j-th operator term on input of Gauss
// norm ≤ q^B: s(q^j-1)/(q-1) + B q^j - v_q(denominator_j)
i128 term_bound(int s, long long B, int j, int q, bool use_l) {
    i128 qj = 1;
    const i128 lim = i128(1) << 100;
    for (int i = 0; i < j; ++i) {
        qj *= q;
        if (qj > lim) qj = lim;
    }
    i128 e = i128(s) * (qj - 1) / (q - 1) + i128(B) * qj;
    if (use_l)
        e += (i128(q) * qj - q) / (q - 1); // deg l_j = (q^{j+1}-q)/(q-1)
    else
        e -= i128(j) * qj; // deg D_j = j q^j
    return e;
}

TauApproxResult tau_operator_sum(const TateApprox& f, long long target_exp,
                                 bool use_l) {
    const Fq& F = *f.F;
    const int q = F.q();
    for (const auto& [m, w] : f.c)
        for (const auto& [v, e] : m.factors())
            if (v.kind() != VarKind::T || v.index() > f.s)
                throw InvalidInput(
                    "tau operator: input must involve only t1..ts");

    long long B = f.gauss_bound_exp();

    // find the cap J: bounds are strictly decreasing for j >= jm, so once
    // the bound at J+1 meets the target every later term does too
    int jm;
    if (use_l) {
        if ((long long)f.s + B * (q - 1) + q >= 0)
            throw PrecisionLoss(
                "log operator: input Gauss norm too large to converge");
        jm = 0;
    } else {
        long long numer = (long long)f.s + B * (q - 1) - q;
        jm = numer >= 0 ? int(numer / (q - 1)) + 1 : 0;
    }
    constexpr int kMaxCap = 13;
    int J = std::max(jm - 1, 0);
    while (J <= kMaxCap &&
           term_bound(f.s, B, J + 1, q, use_l) > i128(target_exp))
        ++J;
    if (J > kMaxCap)
        throw PrecisionLoss(
            "tau operator: input Gauss norm too large for the target");

    // propagate the input's own uncertainty through every kept term
    long long err = target_exp; // the discarded tail
    for (int j = 0; j <= J; ++j) {
        i128 p = term_bound(f.s, f.err_exp, j, q, use_l);
        long long pc = p > i128(1) << 62 ? (1LL << 62) : (long long)p;
        err = std::max(err, pc);
    }

    // b_j(t) coefficient lists are shared across the axes
    TateApprox out(F, f.s, err);
    for (int j = 0; j <= J; ++j) {
        std::map<Mono, LaurentScalar, MonoLess> term;
        for (const auto& [m, w] : f.c) term.emplace(m, w.frobenius_spread(j));
        if (j > 0) {
            MultiPoly bj = b_poly(F, j, 1);
            std::vector<ThetaPoly> bc(size_t(j + 1), ThetaPoly::zero(F));
            for (const auto& [m, c] : bj.terms())
                bc[m.total_degree()] = c.num();
            for (int i = 1; i <= f.s; ++i) {
                std::map<Mono, LaurentScalar, MonoLess> nx;
                for (const auto& [m, w] : term)
                    for (int d = 0; d <= j; ++d) {
                        if (bc[size_t(d)].is_zero()) continue;
                        Mono key =
                            m.times(Mono::var(Var::t(i), std::uint32_t(d)));
                        LaurentScalar ws = w.times_poly(bc[size_t(d)]);
                        auto it = nx.find(key);
                        if (it == nx.end())
                            nx.emplace(key, ws);
                        else
                            it->second += ws;
                    }
                term = std::move(nx);
            }
            ThetaPoly den = use_l ? carlitz_l(F, j) : carlitz_D(F, j);
            long long maxtop = 0;
            for (const auto& [m, w] : term)
                maxtop = std::max(maxtop, w.norm_bound_exp());
            LaurentScalar dw = LaurentScalar::of_frac(
                Frac(ThetaPoly::constant(F, 1), den),
                target_exp - std::max(maxtop, 0LL) - 2);
            for (auto& [m, w] : term) w = w * dw;
        }
        for (const auto& [m, w] : term) out.add_at(m, w);
    }
    for (const auto& [m, w] : out.c)
        out.err_exp = std::max(out.err_exp, w.lo() - 1);
    return {std::move(out), J};
}

} // namespace

TauApproxResult exp_tau_approx(const TateApprox& f, long long target_exp) {
    return tau_operator_sum(f, target_exp, false);
}

TauApproxResult log_tau_approx(const TateApprox& f, long long target_exp) {
    return tau_operator_sum(f, target_exp, true);
}

} // namespace carlitz
