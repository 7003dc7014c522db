/* Packed exponent-multiset keys for symmetric accumulations.
 *
 * Sums of the shape Σ_a a(t_1)⋯a(t_s)·w(a) are symmetric in the t's, so
 * inner loops accumulate one value per exponent multiset (packed into
 * nibbles of a 64-bit key, descending) and expand to monomials once at
 * the end.  This keeps working sets at the number of multisets rather
 * than the number of exponent tuples.
 */

#ifndef CARLITZ_ORBIT_KEYS_HPP
#define CARLITZ_ORBIT_KEYS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "carlitz/errors.hpp"
#include "carlitz/multipoly.hpp"
#include "carlitz/theta_poly.hpp"

namespace carlitz {

inline constexpr int kMaxNibble = 15;
inline constexpr int kMaxSlots = 16;
inline constexpr long long kMaxExpand = 1 << 24;

// key pattern 0x11…1 with j nibbles, for appending j equal digits at once
inline std::uint64_t nibble_ones(int j) {
    std::uint64_t r = 0;
    for (int i = 0; i < j; ++i) r = (r << 4) | 1;
    return r;
}

// Enumerate all ways to pick one term of a(t) for each of `slots` variables,
// grouped by the exponent multiset.  Calls out(key, c) once per multiset,
// where key packs the exponents descending four bits each and c is the
// product of the chosen coefficients — the shared coefficient of every
// monomial in the orbit, carried once per distinct exponent tuple.
template <class Out>
void monic_multisets(const Fq& F, const ThetaPoly& a, int slots, Out&& out) {
    std::vector<std::pair<int, fq_elem>> sup; // descending exponents
    for (int e = int(a.coeffs().size()) - 1; e >= 0; --e)
        if (a.coeff(e) != 0) sup.emplace_back(e, a.coeff(e));
    struct Rec {
        const Fq& F;
        const std::vector<std::pair<int, fq_elem>>& sup;
        Out& out;
        void go(std::size_t from, int slots, std::uint64_t key, fq_elem c) {
            if (slots == 0) {
                out(key, c);
                return;
            }
            if (from == sup.size()) return; // every slot must pick a term
            auto [e, ce] = sup[from];
            fq_elem cj = c;
            for (int j = 0; j <= slots; ++j) {
                if (j > 0) cj = F.mul(cj, ce);
                std::uint64_t kj =
                    (key << (4 * j)) | (nibble_ones(j) * std::uint64_t(e));
                if (j > 0 && from + 1 == sup.size() && j < slots) continue;
                go(from + 1, slots - j, kj, cj);
            }
        }
    } rec{F, sup, out};
    rec.go(0, slots, 0, F.one());
}

// unpack a descending nibble key into exponents e_1 ≥ … ≥ e_s
inline std::vector<int> unpack_key(std::uint64_t key, int s) {
    std::vector<int> e(s);
    for (int i = s - 1; i >= 0; --i) {
        e[i] = int(key & 0xf);
        key >>= 4;
    }
    return e;
}

inline long long tuple_count(const std::vector<int>& desc) {
    // multinomial s! / Π mult! computed incrementally; caller guards size
    long long total = 1, n = 0;
    long long run = 0;
    int prev = -1;
    for (std::size_t i = 0; i < desc.size(); ++i) {
        ++n;
        run = (desc[i] == prev) ? run + 1 : 1;
        prev = desc[i];
        total = total * n / run;
    }
    return total;
}

// expand an orbit-keyed accumulation into per-monomial terms
template <class Val, class Emit>
void expand_orbits(const std::map<std::uint64_t, Val>& acc, int s,
                   Emit&& emit) {
    long long total = 0;
    for (const auto& [key, v] : acc) {
        (void)v;
        total += tuple_count(unpack_key(key, s));
        if (total > kMaxExpand)
            throw InvalidInput("orbit expansion: result has too many terms");
    }
    for (const auto& [key, v] : acc) {
        std::vector<int> e = unpack_key(key, s);
        std::reverse(e.begin(), e.end()); // ascending for next_permutation
        do {
            std::vector<std::pair<Var, std::uint32_t>> f;
            for (int i = 0; i < s; ++i)
                if (e[i] > 0)
                    f.emplace_back(Var::t(i + 1), std::uint32_t(e[i]));
            emit(Mono(std::move(f)), v);
        } while (std::next_permutation(e.begin(), e.end()));
    }
}

} // namespace carlitz

#endif // CARLITZ_ORBIT_KEYS_HPP
