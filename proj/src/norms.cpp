/* H basis, sup/Gauss norms, dot action. */

#include "carlitz/norms.hpp"
#include "carlitz/carlitz_module.hpp"
#include "carlitz/errors.hpp"

#include <algorithm>

namespace carlitz {

NormValue NormValue::operator*(const NormValue& o) const {
    if (q_ != o.q_) throw MismatchError("NormValue: mixed fields");
    if (zero_ || o.zero_) return zero(q_);
    return q_pow(q_, num_ + o.num_);
}

NormValue NormValue::pow_q(int j) const {
    if (zero_) return *this;
    long long m = num_;
    for (int k = 0; k < j; ++k) {
        m *= q_;
        if (std::llabs(m) > (1LL << 56))
            throw InvalidInput("NormValue: exponent overflow");
    }
    return q_pow(q_, m);
}

bool NormValue::operator==(const NormValue& o) const {
    if (q_ != o.q_) throw MismatchError("NormValue: mixed fields");
    return zero_ == o.zero_ && num_ == o.num_;
}

bool NormValue::operator<(const NormValue& o) const {
    if (q_ != o.q_) throw MismatchError("NormValue: mixed fields");
    if (zero_) return !o.zero_;
    if (o.zero_) return false;
    return num_ < o.num_;
}

std::string NormValue::to_string() const {
    if (zero_) return "0";
    std::string s =
        "q^(" + std::to_string(num_) + "/" + std::to_string(q_ - 1) + ")";
    if (num_ % (q_ - 1) == 0) {
        long long e = num_ / (q_ - 1), v = 1;
        bool fits = true;
        for (long long k = 0; k < std::llabs(e); ++k) {
            if (v > (1LL << 60) / q_) { fits = false; break; }
            v *= q_;
        }
        if (fits)
            s += " = " + (e < 0 ? "1/" + std::to_string(v) : std::to_string(v));
    }
    return s;
}

long long digit_sum(long long N, int q) {
    if (N < 0) throw InvalidInput("digit_sum: negative argument");
    long long s = 0;
    for (; N > 0; N /= q) s += N % q;
    return s;
}

MultiPoly h_poly(const Fq& F, long long N, Var v) {
    if (N < 0) throw InvalidInput("h_poly: negative degree");
    if (N > 0x0fffffff) throw InvalidInput("h_poly: degree too large");
    MultiPoly r = MultiPoly::of_int(F, 1);
    long long n = N;
    for (int i = 0; n > 0; ++i, n /= F.q()) {
        int d = int(n % F.q());
        if (d > 0)
            r *= carlitz_poly(ThetaPoly::theta_power(F, i), v).pow(std::uint32_t(d));
    }
    return r;
}

namespace {

void expand_rec(const MultiPoly& G, const std::vector<Var>& xs, size_t pos,
                std::vector<std::uint32_t>& key, HExpansion& out) {
    const Fq& F = G.field();
    if (pos == xs.size()) {
        if (G.is_zero()) return;
        if (!G.terms().begin()->first.is_one() || G.terms().size() != 1)
            throw InvalidInput("h_expand: input must involve only X variables");
        Frac c = G.terms().begin()->second;
        auto [it, fresh] = out.coeff.emplace(key, c);
        if (!fresh) it->second += c;
        return;
    }
    Var v = xs[pos];
    MultiPoly rest = G;
    while (true) {
        long long n = rest.degree_in(v);
        if (n == 0) break;
        // peel the top slice in v and subtract its H form
        MultiPoly top = MultiPoly::zero(F);
        for (const auto& [m, c] : rest.terms())
            if (m.exp_of(v) == std::uint32_t(n)) top.add_term(m.without(v), c);
        rest -= h_poly(F, n, v) * top;
        key[pos] = std::uint32_t(n);
        expand_rec(top, xs, pos + 1, key, out);
    }
    key[pos] = 0;
    expand_rec(rest, xs, pos + 1, key, out);
}

} // namespace

HExpansion h_expand(const MultiPoly& G) {
    HExpansion E;
    int top = G.max_index(VarKind::X);
    for (const auto& [m, c] : G.terms())
        for (const auto& [v, e] : m.factors())
            if (v.kind() != VarKind::X)
                throw InvalidInput("h_expand: input must involve only X variables");
    for (int i = 1; i <= top; ++i) E.xs.push_back(Var::x(i));
    std::vector<std::uint32_t> key(E.xs.size(), 0);
    expand_rec(G, E.xs, 0, key, E);
    // drop exact cancellations
    for (auto it = E.coeff.begin(); it != E.coeff.end();)
        it = it->second.is_zero() ? E.coeff.erase(it) : std::next(it);
    return E;
}

MultiPoly h_unexpand(const HExpansion& E, const Fq& F) {
    MultiPoly r = MultiPoly::zero(F);
    for (const auto& [key, c] : E.coeff) {
        MultiPoly term = MultiPoly::constant(c);
        for (size_t i = 0; i < key.size(); ++i)
            if (key[i] > 0) term *= h_poly(F, key[i], E.xs[i]);
        r += term;
    }
    return r;
}

NormValue sup_norm(const MultiPoly& G) {
    const Fq& F = G.field();
    int q = F.q();
    if (G.is_zero()) return NormValue::zero(q);
    HExpansion E = h_expand(G);
    NormValue best = NormValue::zero(q);
    for (const auto& [key, c] : E.coeff) {
        long long w = 0;
        for (std::uint32_t n : key) w += digit_sum(n, q);
        long long v = *c.num().degree() - *c.den().degree();
        best = std::max(best, NormValue::q_pow(q, v * (q - 1) + w));
    }
    return best;
}

NormValue gauss_norm(const MultiPoly& f) {
    const Fq& F = f.field();
    int q = F.q();
    NormValue best = NormValue::zero(q);
    for (const auto& [m, c] : f.terms()) {
        long long v = *c.num().degree() - *c.den().degree();
        best = std::max(best, NormValue::q_pow(q, v * (q - 1)));
    }
    return best;
}

MultiPoly dot_action(const MultiPoly& f, const MultiPoly& F) {
    const Fq& K = f.field();
    for (const auto& [m, c] : f.terms())
        for (const auto& [v, e] : m.factors())
            if (v.kind() != VarKind::T && !(v == Var::z()))
                throw InvalidInput("dot_action: the operator may involve only t and z");
    for (const auto& [m, c] : F.terms())
        for (const auto& [v, e] : m.factors())
            if (v.kind() != VarKind::X && !(v == Var::Z()))
                throw InvalidInput("dot_action: the operand may involve only X and Z");

    MultiPoly out = MultiPoly::zero(K);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly G = F;
        std::uint32_t zk = 0;
        for (const auto& [v, e] : m.factors()) {
            if (v == Var::z()) {
                zk = e;
                continue;
            }
            Var xv = Var::x(v.index());
            G = G.subst(xv, carlitz_poly(ThetaPoly::theta_power(K, int(e)), xv));
        }
        if (zk > 0) {
            std::uint64_t fpow = 1;
            for (std::uint32_t k = 0; k < zk; ++k) {
                fpow *= std::uint64_t(K.q());
                if (fpow > 0x0fffffffULL)
                    throw InvalidInput("dot_action: Z exponent overflow");
            }
            MultiPoly shifted = MultiPoly::zero(K);
            for (const auto& [mm, cc] : G.terms()) {
                std::uint32_t e = mm.exp_of(Var::Z());
                if (e == 0) {
                    shifted.add_term(mm, cc);
                    continue;
                }
                std::uint64_t ne = std::uint64_t(e) * fpow;
                if (ne > 0x0fffffffULL)
                    throw InvalidInput("dot_action: Z exponent overflow");
                shifted.add_term(mm.with_exp(Var::Z(), std::uint32_t(ne)), cc);
            }
            G = std::move(shifted);
        }
        out += G.scaled(c);
    }
    return out;
}

} // namespace carlitz
