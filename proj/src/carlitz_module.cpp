/* Carlitz module arithmetic: D_i, l_i, ψ coefficients, the diagonal action,
 * the b_d polynomials and the φ/τ/τ_z twists, exp_z and log_z.
 */

#include "carlitz/carlitz_module.hpp"
#include "carlitz/errors.hpp"

#include <map>
#include <mutex>
#include <deque>

namespace carlitz {

namespace {

struct SeqCache {
    std::deque<ThetaPoly> D, l;
};

SeqCache& cache_for(const Fq& F) {
    static std::map<const Fq*, SeqCache> caches;
    static std::mutex m;
    std::lock_guard<std::mutex> g(m);
    return caches[&F];
}

std::mutex& seq_mutex() {
    static std::mutex m;
    return m;
}

// θ^{q^i} - θ
ThetaPoly frob_diff(const Fq& F, int i) {
    long long e = 1;
    for (int k = 0; k < i; ++k) {
        e *= F.q();
        if (e > (1 << 26)) throw InvalidInput("carlitz: exponent q^i too large");
    }
    ThetaPoly r = ThetaPoly::theta_power(F, int(e));
    r.add_scaled(ThetaPoly::theta_power(F, 1), F.neg(1));
    return r;
}

} // namespace

ThetaPoly carlitz_D(const Fq& F, int i) {
    if (i < 0) throw InvalidInput("carlitz_D: negative index");
    std::lock_guard<std::mutex> g(seq_mutex());
    auto& c = cache_for(F).D;
    if (c.empty()) c.push_back(ThetaPoly::constant(F, 1));
    while (int(c.size()) <= i) {
        int k = int(c.size());
        ThetaPoly prev = c.back();
        c.push_back(frob_diff(F, k) * prev.frobenius_spread(1, F.q()));
    }
    return c[i];
}

ThetaPoly carlitz_l(const Fq& F, int i) {
    if (i < 0) throw InvalidInput("carlitz_l: negative index");
    std::lock_guard<std::mutex> g(seq_mutex());
    auto& c = cache_for(F).l;
    if (c.empty()) c.push_back(ThetaPoly::constant(F, 1));
    while (int(c.size()) <= i) {
        int k = int(c.size());
        c.push_back(c.back() * frob_diff(F, k).scaled(F.neg(1)));
    }
    return c[i];
}

std::vector<ThetaPoly> carlitz_coeffs(const ThetaPoly& a) {
    const Fq& F = a.field();
    auto deg = a.degree();
    if (!deg) return {ThetaPoly::zero(F)};
    // cur holds the coefficients of C_{θ^i}; C_1 = X
    std::vector<ThetaPoly> cur{ThetaPoly::constant(F, 1)};
    std::vector<ThetaPoly> out(*deg + 1, ThetaPoly::zero(F));
    const auto& digits = a.coeffs();
    for (int i = 0; i <= *deg; ++i) {
        if (digits[i] != 0)
            for (int k = 0; k < int(cur.size()); ++k)
                out[k] = out[k] + cur[k].scaled(digits[i]);
        if (i == *deg) break;
        // C_{θ^{i+1}} = θ C_{θ^i} + (C_{θ^i})^q
        std::vector<ThetaPoly> next(cur.size() + 1, ThetaPoly::zero(F));
        for (int k = 0; k < int(cur.size()); ++k) {
            next[k] = next[k] + cur[k].shifted(1);
            next[k + 1] = next[k + 1] + cur[k].frobenius_spread(1, F.q());
        }
        cur = std::move(next);
    }
    return out;
}

ThetaPoly psi(const ThetaPoly& a, int k) {
    if (k < 0) throw InvalidInput("psi: negative index");
    auto deg = a.degree();
    if (!deg || k > *deg) return ThetaPoly::zero(a.field());
    return carlitz_coeffs(a)[k];
}

MultiPoly carlitz_poly(const ThetaPoly& a, Var v) {
    const Fq& F = a.field();
    MultiPoly r = MultiPoly::zero(F);
    if (a.is_zero()) return r;
    auto cs = carlitz_coeffs(a);
    std::uint64_t e = 1;
    for (int k = 0; k < int(cs.size()); ++k) {
        if (!cs[k].is_zero())
            r.add_term(Mono::var(v, std::uint32_t(e)), Frac(cs[k]));
        e *= std::uint64_t(F.q());
        if (e > 0x0fffffffULL)
            throw InvalidInput("carlitz_poly: exponent q^k too large");
    }
    return r;
}

MultiPoly carlitz_action(const ThetaPoly& a, const MultiPoly& F,
                         bool z_aware) {
    const Fq& K = F.field();
    auto deg = a.degree();
    if (z_aware && !deg)
        throw InvalidInput("carlitz_action: Z-aware action needs a nonzero a");

    // collect the X variables present
    std::vector<Var> xs;
    for (const auto& [m, c] : F.terms())
        for (const auto& [v, e] : m.factors())
            if (v.kind() == VarKind::X) {
                bool seen = false;
                for (Var w : xs) seen = seen || w == v;
                if (!seen) xs.push_back(v);
            }

    MultiPoly r = F;
    for (Var v : xs) r = r.subst(v, carlitz_poly(a, v));

    if (z_aware && *deg > 0) {
        std::uint64_t f = 1;
        for (int k = 0; k < *deg; ++k) {
            f *= std::uint64_t(K.q());
            if (f > 0x0fffffffULL)
                throw InvalidInput("carlitz_action: Z exponent overflow");
        }
        MultiPoly s = MultiPoly::zero(K);
        for (const auto& [m, c] : r.terms()) {
            std::uint32_t e = m.exp_of(Var::Z());
            if (e == 0) {
                s.add_term(m, c);
                continue;
            }
            std::uint64_t ne = std::uint64_t(e) * f;
            if (ne > 0x0fffffffULL)
                throw InvalidInput("carlitz_action: Z exponent overflow");
            s.add_term(m.with_exp(Var::Z(), std::uint32_t(ne)), c);
        }
        r = std::move(s);
    }
    return r;
}

MultiPoly carlitz_action_var(const ThetaPoly& a, const MultiPoly& F, int j) {
    if (j < 1) throw InvalidInput("carlitz_action_var: variable index must be >= 1");
    return F.subst(Var::x(j), carlitz_poly(a, Var::x(j)));
}

MultiPoly b_poly(const Fq& F, int d, int i) {
    if (d < 0) throw InvalidInput("b_poly: negative index");
    MultiPoly r = MultiPoly::of_int(F, 1);
    long long e = 1;
    for (int k = 0; k < d; ++k) {
        MultiPoly f = MultiPoly::variable(F, Var::t(i));
        f += MultiPoly::constant(Frac(ThetaPoly::theta_power(F, int(e), F.neg(1))));
        r *= f;
        e *= F.q();
        if (e > (1 << 26)) throw InvalidInput("b_poly: exponent q^k too large");
    }
    return r;
}

MultiPoly b_product(const Fq& F, int d, int s) {
    MultiPoly r = MultiPoly::of_int(F, 1);
    for (int i = 1; i <= s; ++i) r *= b_poly(F, d, i);
    return r;
}

MultiPoly phi_twist(const MultiPoly& f, int d) { return f.phi(d); }

MultiPoly tau_twist(const MultiPoly& f, int s, int d) {
    if (f.max_index(VarKind::X) > 0 || f.degree_in(Var::z()) > 0 ||
        f.degree_in(Var::Z()) > 0)
        throw InvalidInput("tau_twist: input must involve only t variables");
    if (f.max_index(VarKind::T) > s)
        throw InvalidInput("tau_twist: t index exceeds the variable count");
    return b_product(f.field(), d, s) * f.phi(d);
}

ZSeries tau_z_twist(const ZSeries& f, int s, int d) {
    const Fq& F = f.field();
    MultiPoly B = b_product(F, d, s);
    int n = f.stored();
    // orders at prec − d and beyond fall off the end of the shift below,
    // so skip their products up front
    if (!f.exact() && d > 0) n = std::min(n, std::max(0, f.prec() - d));
    std::vector<MultiPoly> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        if (f.coeff(k).max_index(VarKind::X) > 0 ||
            f.coeff(k).degree_in(Var::Z()) > 0)
            throw InvalidInput("tau_z_twist: input must involve only t variables");
        out.push_back(B * f.coeff(k).phi(d));
    }
    ZSeries r = f.exact() ? ZSeries::exact_poly(F, std::move(out))
                          : ZSeries(F, std::move(out), n);
    return r.shifted_z(d);
}

namespace {

ZSeries operator_sum(const ZSeries& f, int s, bool use_l) {
    if (f.exact())
        throw InvalidInput("exp_z/log_z: truncate the input first");
    const Fq& F = f.field();
    ZSeries r = f; // j = 0 term
    for (int j = 1; j < f.prec(); ++j) {
        ThetaPoly den = use_l ? carlitz_l(F, j) : carlitz_D(F, j);
        r = r + tau_z_twist(f, s, j).scaled(
                    MultiPoly::constant(Frac(ThetaPoly::constant(F, 1), den)));
    }
    return r;
}

} // namespace

ZSeries exp_z(const ZSeries& f, int s) { return operator_sum(f, s, false); }
ZSeries log_z(const ZSeries& f, int s) { return operator_sum(f, s, true); }

Frac exp_log_composition_sum(const Fq& F, int n) {
    Frac sum(ThetaPoly::zero(F));
    for (int i = 0; i <= n; ++i) {
        Frac term = Frac(ThetaPoly::constant(F, 1), carlitz_l(F, i)) *
                    Frac(ThetaPoly::constant(F, 1), carlitz_D(F, n - i))
                        .frobenius_power(i);
        sum += term;
    }
    return sum;
}

} // namespace carlitz
