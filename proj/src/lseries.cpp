/* Multivariable L-series: exact truncations by monic enumeration, power
 * sums, the twisted logarithm operator, and certified evaluation at z = 1.
 *
 * Inner loops accumulate per exponent multiset and expand to monomials at
 * the end; the packed-key machinery lives in orbit_keys.hpp.
 */

#include "carlitz/lseries.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "carlitz/carlitz_module.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/orbit_keys.hpp"

namespace carlitz {

namespace {

void check_sum_shape(int k, int s) {
    if (k < 0 || s < 0) throw InvalidInput("power sum: negative argument");
    if (k > kMaxNibble) throw InvalidInput("power sum: degree too large");
    if (s > kMaxSlots) throw InvalidInput("power sum: too many variables");
}

// Σ_{a∈A_{+,d}} a(t_1)⋯a(t_s)·a^M for M ≥ 0, as an exact polynomial
MultiPoly weighted_power_sum(const Fq& F, int d, int s, long long M) {
    check_sum_shape(d, s);
    std::map<std::uint64_t, ThetaPoly> acc;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= F.q();
    for (long long idx = 0; idx < count; ++idx) {
        ThetaPoly a = ThetaPoly::monic_of_index(F, d, idx);
        ThetaPoly aM = a.pow(M);
        monic_multisets(F, a, s, [&](std::uint64_t key, fq_elem c) {
            auto it = acc.try_emplace(key, ThetaPoly::zero(F)).first;
            it->second.add_scaled(aM, c);
        });
    }
    MultiPoly out = MultiPoly::zero(F);
    expand_orbits(acc, s, [&](Mono m, const ThetaPoly& v) {
        if (!v.is_zero()) out.add_term(m, Frac(v));
    });
    return out;
}

} // namespace

MultiPoly power_sum(const Fq& F, int k, int s) {
    check_sum_shape(k, s);
    if (s == 0) // Σ 1 over q^k monics, reduced into F_q
        return MultiPoly::of_int(F, k == 0 ? 1 : 0);
    return weighted_power_sum(F, k, s, 0);
}

Frac scalar_power_sum(const Fq& F, int d, long long m) {
    if (d < 0 || m < 0) throw InvalidInput("scalar power sum: negative argument");
    ThetaPoly acc = ThetaPoly::zero(F);
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= F.q();
    for (long long idx = 0; idx < count; ++idx)
        acc += ThetaPoly::monic_of_index(F, d, idx).pow(m);
    return Frac(acc);
}

LSeriesTrunc L_series(const Fq& F, int N, int s, int prec) {
    if (s < 1) throw InvalidInput("L series: need at least one t-variable");
    if (s > kMaxSlots) throw InvalidInput("L series: too many variables");
    if (prec < 1) throw InvalidInput("L series: precision must be at least 1");
    int q = F.q();

    if (N <= 0) {
        // finite support: orders past ⌈(s+|N|(q−1))/(q−1)⌉ vanish; compute
        // two extra orders and insist they are zero
        long long M = -N;
        int last = int((s + M * (q - 1) + (q - 2)) / (q - 1));
        std::vector<MultiPoly> coeffs;
        for (int d = 0; d <= last + 2; ++d) {
            MultiPoly cd = weighted_power_sum(F, d, s, M);
            if (d > last && !cd.is_zero())
                throw NonzeroTail("L series: expected tail order to vanish");
            if (d <= last) coeffs.push_back(std::move(cd));
        }
        ZSeries ser = ZSeries::exact_poly(F, std::move(coeffs));
        ser.trim();
        return LSeriesTrunc{N, s, std::move(ser)};
    }

    int r = 0;
    long long qr = 1;
    while (qr < N) {
        qr *= q;
        ++r;
    }
    std::vector<MultiPoly> coeffs;
    for (int d = 0; d < prec; ++d) {
        if (d > kMaxNibble) throw InvalidInput("L series: precision too large");
        ThetaPoly ld = carlitz_l(F, d);
        ThetaPoly ldr = ld.frobenius_spread(r, q); // l_d^{q^r}
        std::map<std::uint64_t, ThetaPoly> acc;
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (long long idx = 0; idx < count; ++idx) {
            ThetaPoly a = ThetaPoly::monic_of_index(F, d, idx);
            auto [cof, rem] = divrem(ld, a);
            if (!rem.is_zero())
                throw VerificationError("L series: monic does not divide l_d");
            // 1/a^N = a^{q^r−N} (l_d/a)^{q^r} / l_d^{q^r}, all integral
            ThetaPoly w = cof.frobenius_spread(r, q) * a.pow(qr - N);
            monic_multisets(F, a, s, [&](std::uint64_t key, fq_elem c) {
                auto it = acc.try_emplace(key, ThetaPoly::zero(F)).first;
                it->second.add_scaled(w, c);
            });
        }
        MultiPoly cd = MultiPoly::zero(F);
        std::map<std::uint64_t, Frac> scaledv;
        for (const auto& [key, v] : acc)
            if (!v.is_zero()) scaledv.emplace(key, Frac(v, ldr));
        expand_orbits(scaledv, s, [&](Mono m, const Frac& v) {
            if (!v.is_zero()) cd.add_term(m, v);
        });
        coeffs.push_back(std::move(cd));
    }
    return LSeriesTrunc{N, s, ZSeries(F, std::move(coeffs), prec)};
}

ZSeries log_Nz(const Fq& F, int N, int n, const ZSeries& h, int prec) {
    if (n < 1) throw InvalidInput("log operator: need at least one t-variable");
    if (prec < 0) prec = h.exact() ? std::max(h.stored(), 1) : h.prec();
    if (!h.exact()) prec = std::min(prec, h.prec());
    if (prec < 1) throw InvalidInput("log operator: need positive precision");
    int ilim = h.exact() ? h.stored() : prec;
    std::vector<MultiPoly> out(prec, MultiPoly::zero(F));
    for (int k = 0; k < prec; ++k) {
        ThetaPoly lk = carlitz_l(F, k);
        Frac scale = N >= 0 ? Frac(ThetaPoly::constant(F, 1), lk.pow(N))
                            : Frac(lk.pow(-N));
        MultiPoly w = b_product(F, k, n).scaled(scale);
        for (int i = 0; i < ilim && k + i < prec; ++i)
            out[k + i] += w * h.coeff(i).phi(k);
    }
    return ZSeries(F, std::move(out), prec);
}

TateApprox eval_z1_windowed(const Fq& F, int N, int s, int cutoff,
                            int floor_exp, int threads) {
    if (N < 1) throw InvalidInput("windowed evaluation: exponent must be >= 1");
    if (s < 1 || s > kMaxSlots)
        throw InvalidInput("windowed evaluation: variable count out of range");
    if (cutoff < 0 || cutoff > kMaxNibble)
        throw InvalidInput("windowed evaluation: cutoff out of range");
    long long total = 1;
    for (int i = 0; i < cutoff; ++i) {
        total *= F.q();
        if (total > (1ll << 26))
            throw InvalidInput("windowed evaluation: cutoff too large");
    }
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = int(std::min(8u, hc ? hc : 1u));
    }

    std::map<std::uint64_t, LaurentScalar> full;
    for (int d = 0; d <= cutoff; ++d) {
        long long top = -(long long)N * d; // valuation of 1/a^N, a monic deg d
        int width = int(top - floor_exp + 1);
        if (width < 1) continue; // entire order sits below the floor
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        using DigMap = std::unordered_map<std::uint64_t, std::vector<fq_elem>>;
        int nt = int(std::min<long long>(threads, count));
        std::vector<DigMap> parts(nt);
        auto work = [&](int ti) {
            DigMap& acc = parts[ti];
            long long lo = count * ti / nt, hi = count * (ti + 1) / nt;
            std::vector<fq_elem> dig(width);
            for (long long idx = lo; idx < hi; ++idx) {
                ThetaPoly a = ThetaPoly::monic_of_index(F, d, idx);
                LaurentScalar w = LaurentScalar::of_frac(
                    Frac(ThetaPoly::constant(F, 1), a.pow(N)), floor_exp);
                for (int j = 0; j < width; ++j) dig[j] = w.coeff(top - j);
                monic_multisets(F, a, s, [&](std::uint64_t key, fq_elem c) {
                    auto it = acc.try_emplace(key).first;
                    std::vector<fq_elem>& dst = it->second;
                    if (dst.empty()) dst.assign(width, 0);
                    for (int j = 0; j < width; ++j)
                        dst[j] = F.add(dst[j], F.mul(c, dig[j]));
                });
            }
        };
        std::vector<std::thread> pool;
        for (int ti = 1; ti < nt; ++ti) pool.emplace_back(work, ti);
        work(0);
        for (auto& th : pool) th.join();

        std::map<std::uint64_t, std::vector<fq_elem>> merged;
        for (DigMap& part : parts)
            for (auto& [key, v] : part) {
                auto it = merged.try_emplace(key).first;
                if (it->second.empty()) it->second = std::move(v);
                else
                    for (int j = 0; j < width; ++j)
                        it->second[j] = F.add(it->second[j], v[j]);
            }
        for (const auto& [key, v] : merged) {
            // digits v[j] at exponent top-j; rebuild as a window over the floor
            ThetaPoly p(F, std::vector<fq_elem>(v.rbegin(), v.rend()));
            LaurentScalar w =
                LaurentScalar::of_poly(p, 0).shifted(floor_exp);
            auto it = full.find(key);
            if (it == full.end())
                full.emplace(key, w + LaurentScalar(F, top, floor_exp));
            else
                it->second += w;
        }
    }

    TateApprox out(F, s, std::max<long long>(-(long long)N * (cutoff + 1),
                                             floor_exp - 1));
    expand_orbits(full, s, [&](Mono m, const LaurentScalar& v) {
        out.add_at(m, v);
    });
    return out;
}

EvalZ1 eval_z1(const Fq& F, const LSeriesTrunc& L, int target_prec) {
    EvalZ1 out;
    if (L.N <= 0) {
        out.exact = true;
        MultiPoly v = MultiPoly::zero(F);
        for (int d = 0; d < L.series.stored(); ++d) v += L.series.coeff(d);
        out.exact_value = std::move(v);
        out.cutoff = std::max(L.series.stored() - 1, 0);
        return out;
    }
    if (target_prec < 1)
        throw InvalidInput("evaluation at z=1: need positive target precision");
    int cutoff = (target_prec + L.N - 1) / L.N;
    out.exact = false;
    out.cutoff = cutoff;
    out.approx = eval_z1_windowed(F, L.N, L.s, cutoff, -L.N * (cutoff + 1));
    return out;
}

} // namespace carlitz
