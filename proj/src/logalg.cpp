/* Log-algebraicity engine: multiset-sum tables, the L_k/Z_k operators and
 * the certified finite expansion Σ_k Z_k(F) Z^{q^k}.
 */

#include "carlitz/logalg.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

namespace carlitz {

namespace {

// multisets are packed into a uint64: entry count in the top nibble, the
// entries (sorted descending, each < 16) in nibbles from bit 0 up
constexpr int kMaxEntry = 15;   // largest representable ψ index
constexpr int kMaxSize = 15;    // largest representable multiset

std::uint64_t pack_key(const std::vector<int>& sorted_desc) {
    std::uint64_t key = std::uint64_t(sorted_desc.size()) << 60;
    for (size_t i = 0; i < sorted_desc.size(); ++i)
        key |= std::uint64_t(sorted_desc[i]) << (4 * i);
    return key;
}

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

// C(n, m) mod p for n, m < p (p prime)
int binom_digit(int n, int m, int p) {
    if (m > n) return 0;
    long long num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return int(num * pow_mod(den, p - 2, p) % p);
}

int binom_mod_p(long long n, long long m, int p) {
    long long r = 1;
    while ((n > 0 || m > 0) && r != 0) {
        r = r * binom_digit(int(n % p), int(m % p), p) % p;
        n /= p;
        m /= p;
    }
    return int(r);
}

// e! / ∏ counts_i! mod p
int multinomial_mod_p(int e, const std::vector<int>& counts, int p) {
    long long r = 1;
    int rem = e;
    for (int c : counts) {
        r = r * binom_mod_p(rem, c, p) % p;
        rem -= c;
        if (r == 0) break;
    }
    return int(r);
}

void check_x_only(const MultiPoly& F, const char* who) {
    if (F.max_index(VarKind::T) > 0 || F.degree_in(Var::z()) > 0 ||
        F.degree_in(Var::Z()) > 0)
        throw InvalidInput(std::string(who) +
                           ": input must involve only X variables");
}

// one way of raising C_a(X) to the e-th power: a multiset U of ψ indices
// with its multinomial coefficient and the resulting X exponent Σ q^{u}
struct Choice {
    std::vector<int> w; // sorted descending
    fq_elem c;
    std::uint32_t xe;
};

std::vector<Choice> var_choices(const Fq& F, int k, int e) {
    std::vector<Choice> out;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (int(cur.size()) == e) {
            std::vector<int> counts;
            for (size_t i = 0; i < cur.size();) {
                size_t j = i;
                while (j < cur.size() && cur[j] == cur[i]) ++j;
                counts.push_back(int(j - i));
                i = j;
            }
            int mc = multinomial_mod_p(e, counts, F.p());
            if (mc % F.p() != 0) {
                std::uint64_t xe = 0;
                for (int w : cur) {
                    std::uint64_t pw = 1;
                    for (int i = 0; i < w; ++i) {
                        pw *= std::uint64_t(F.q());
                        if (pw > 0x0fffffffULL)
                            throw InvalidInput("L_op: X exponent overflow");
                    }
                    xe += pw;
                    if (xe > 0x0fffffffULL)
                        throw InvalidInput("L_op: X exponent overflow");
                }
                out.push_back({cur, F.from_int(mc), std::uint32_t(xe)});
            }
            return;
        }
        for (int v = (cur.empty() ? k : cur.back()); v >= 0; --v) {
            cur.push_back(v);
            gen(v);
            cur.pop_back();
        }
    };
    gen(k);
    return out;
}

} // namespace

void LogAlgebra::ensure_table(int k, int maxm) {
    if (k < 0) throw InvalidInput("L_op: negative degree");
    if (k > kMaxEntry)
        throw InvalidInput("L_op: degree too large for the multiset tables");
    if (maxm > kMaxSize)
        throw InvalidInput("L_op: total degree too large for the multiset tables");
    if (int(s_.size()) <= k) s_.resize(k + 1);
    if (s_[k].maxm >= maxm) return;

    const Fq& F = *F_;
    ThetaPoly lk = carlitz_l(F, k);
    STable tab;
    tab.maxm = maxm;

    std::vector<ThetaPoly> psis;
    std::function<void(int, int, const ThetaPoly&, std::uint64_t)> dfs =
        [&](int vmax, int depth, const ThetaPoly& partial, std::uint64_t key) {
            auto it = tab.num.find(key);
            if (it == tab.num.end())
                tab.num.emplace(key, partial);
            else
                it->second += partial;
            if (depth == maxm) return;
            std::uint64_t base = key & 0x0fffffffffffffffULL;
            for (int v = vmax; v >= 0; --v) {
                ThetaPoly next = partial * psis[v];
                if (next.is_zero()) continue;
                std::uint64_t ck = base | (std::uint64_t(v) << (4 * depth)) |
                                   (std::uint64_t(depth + 1) << 60);
                dfs(v, depth + 1, next, ck);
            }
        };

    for (const ThetaPoly& a : monic_enum(F, k)) {
        psis = carlitz_coeffs(a);
        ThetaPoly cof = div_exact(lk, a);
        dfs(k, 0, cof, 0);
    }
    s_[k] = std::move(tab);
}

const MultiPoly& LogAlgebra::L_num(const Mono& m, int k) {
    auto& perk = lnum_[k];
    auto hit = perk.find(m);
    if (hit != perk.end()) return hit->second;

    const Fq& F = *F_;
    long long degm = m.total_degree();
    if (degm > kMaxSize)
        throw InvalidInput("L_op: total degree too large for the multiset tables");
    ensure_table(k, int(degm));
    const STable& tab = s_[k];

    std::vector<Var> vars;
    std::vector<std::vector<Choice>> choices;
    for (const auto& [v, e] : m.factors()) {
        if (v.kind() != VarKind::X)
            throw InvalidInput("L_op: input must involve only X variables");
        vars.push_back(v);
        choices.push_back(var_choices(F, k, int(e)));
    }

    MultiPoly acc = MultiPoly::zero(F);
    std::vector<int> merged;
    std::function<void(size_t, const Mono&, fq_elem)> rec =
        [&](size_t i, const Mono& mono, fq_elem c) {
            if (i == vars.size()) {
                std::vector<int> w = merged;
                std::sort(w.begin(), w.end(), std::greater<int>());
                auto it = tab.num.find(pack_key(w));
                if (it == tab.num.end() || it->second.is_zero()) return;
                acc.add_term(mono, Frac(it->second.scaled(c)));
                return;
            }
            for (const Choice& ch : choices[i]) {
                size_t keep = merged.size();
                merged.insert(merged.end(), ch.w.begin(), ch.w.end());
                rec(i + 1, mono.times(Mono::var(vars[i], ch.xe)),
                    F.mul(c, ch.c));
                merged.resize(keep);
            }
        };
    rec(0, Mono::one(), F.one());

    return perk.emplace(m, std::move(acc)).first->second;
}

MultiPoly LogAlgebra::L_num_F(const MultiPoly& F, int k) {
    long long maxdeg = 0;
    for (const auto& [m, c] : F.terms())
        maxdeg = std::max(maxdeg, m.total_degree());
    if (maxdeg > kMaxSize)
        throw InvalidInput("L_op: total degree too large for the multiset tables");
    ensure_table(k, int(maxdeg));

    MultiPoly acc = MultiPoly::zero(*F_);
    for (const auto& [m, c] : F.terms()) acc += L_num(m, k).scaled(c);
    return acc;
}

MultiPoly LogAlgebra::L_op(const MultiPoly& F, int k) {
    check_x_only(F, "L_op");
    if (k < 0 || F.is_zero()) return MultiPoly::zero(*F_);
    return L_num_F(F, k).scaled(
        Frac(ThetaPoly::constant(*F_, 1), carlitz_l(*F_, k)));
}

std::vector<MultiPoly> LogAlgebra::z_coeffs(const MultiPoly& F, int kmax) {
    check_x_only(F, "Z_op");
    if (!F.is_integral())
        throw InvalidInput("Z_op: coefficients must lie in A = F_q[th]");
    const Fq& Fd = *F_;
    std::vector<MultiPoly> Z;
    for (int k = 0; k <= kmax; ++k) {
        MultiPoly acc = L_num_F(F, k); // l_k·L_k(F)
        ThetaPoly lk = carlitz_l(Fd, k);
        for (int j = 1; j <= k; ++j)
            acc -= Z[k - j].frobenius_power(j).scaled(
                Frac(div_exact(lk, carlitz_l(Fd, j))));
        // Z_k = acc / l_k must divide exactly -- this is the integrality
        // certificate for the whole recursion
        MultiPoly zk = MultiPoly::zero(Fd);
        for (const auto& [m, c] : acc.terms()) {
            if (!c.is_integral())
                throw IntegralityViolation("Z_op: non-integral accumulator");
            zk.add_term(m, Frac(div_exact(c.num(), lk)));
        }
        Z.push_back(std::move(zk));
    }
    return Z;
}

MultiPoly LogAlgebra::Z_op(const MultiPoly& F, int k) {
    check_x_only(F, "Z_op");
    if (k < 0 || F.is_zero()) return MultiPoly::zero(*F_);
    if (F.is_integral()) return z_coeffs(F, k).back();
    // general coefficients: run the recursion over K
    std::vector<MultiPoly> Z;
    for (int kk = 0; kk <= k; ++kk) {
        MultiPoly acc = L_op(F, kk);
        for (int j = 1; j <= kk; ++j)
            acc -= Z[kk - j].frobenius_power(j).scaled(
                Frac(ThetaPoly::constant(*F_, 1), carlitz_l(*F_, j)));
        Z.push_back(std::move(acc));
    }
    return Z.back();
}

LogAlgebraic LogAlgebra::log_algebraic(const MultiPoly& F) {
    check_x_only(F, "log_algebraic");
    const Fq& Fd = *F_;
    if (F.is_zero()) return {MultiPoly::zero(Fd), 0};
    if (!F.is_integral())
        throw InvalidInput("log_algebraic: coefficients must lie in A = F_q[th]");

    // ‖F‖ = q^{n/(q-1)}; the last index with q^k <= ‖F‖ is floor(n/(q-1))
    NormValue nrm = sup_norm(F);
    int k0 = int(nrm.num() / (Fd.q() - 1));

    std::vector<MultiPoly> Z = z_coeffs(F, k0 + 1);
    if (!Z[k0 + 1].is_zero())
        throw NonzeroTail("log_algebraic: coefficient past the norm bound "
                          "did not vanish");

    MultiPoly out = MultiPoly::zero(Fd);
    std::uint64_t e = 1;
    for (int k = 0; k <= k0; ++k) {
        if (e > 0x0fffffffULL)
            throw InvalidInput("log_algebraic: Z exponent overflow");
        if (!Z[k].is_zero())
            out += Z[k].mono_times(Mono::var(Var::Z(), std::uint32_t(e)),
                                   Frac::of_int(Fd, 1));
        e *= std::uint64_t(Fd.q());
    }
    return {std::move(out), k0};
}

LogAlgebra& log_engine(const Fq& F) {
    static std::mutex mu;
    static std::map<const Fq*, std::unique_ptr<LogAlgebra>> engines;
    std::lock_guard<std::mutex> g(mu);
    auto& p = engines[&F];
    if (!p) p = std::make_unique<LogAlgebra>(F);
    return *p;
}

MultiPoly L_op(const MultiPoly& F, int k) {
    return log_engine(F.field()).L_op(F, k);
}

MultiPoly Z_op(const MultiPoly& F, int k) {
    return log_engine(F.field()).Z_op(F, k);
}

LogAlgebraic log_algebraic(const MultiPoly& F) {
    return log_engine(F.field()).log_algebraic(F);
}

MultiPoly special_poly(const Fq& F, int s) {
    if (s < 1) throw InvalidInput("special_poly: s must be >= 1");
    MultiPoly diag = MultiPoly::of_int(F, 1);
    for (int i = 1; i <= s; ++i) diag *= MultiPoly::variable(F, Var::x(i));
    return log_engine(F).log_algebraic(diag).result;
}

} // namespace carlitz
