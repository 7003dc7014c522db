#include "carlitz/fq.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace carlitz {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// residue polynomials over F_p packed in base p, low digit = constant term
std::vector<int> unpack(int code, int p, int e) {
    std::vector<int> c(e, 0);
    for (int i = 0; i < e; ++i) { c[i] = code % p; code /= p; }
    return c;
}

int pack(const std::vector<int>& c, int p) {
    int code = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
    return code;
}

// multiply two residue polynomials mod (modulus, p)
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
    int e = int(mod.size()) - 1;
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce: modulus is monic
    for (int d = int(prod.size()) - 1; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
            prod[d - e + i] = ((prod[d - e + i] - c * mod[i]) % p + p * p) % p;
    }
    prod.resize(e);
    return prod;
}

// irreducibility of a monic degree-e polynomial over F_p by trial division
// against all monic polynomials of degree <= e/2 (desk scale: e <= 4)
bool irreducible(const std::vector<int>& mod, int p) {
    int e = int(mod.size()) - 1;
    if (e == 1) return true;
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            std::vector<int> div = unpack(int(v), p, d);
            div.push_back(1); // monic
            // long division remainder of mod by div
            std::vector<int> rem = mod;
            for (int k = int(rem.size()) - 1; k >= d; --k) {
                int c = rem[k];
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i)
                    rem[k - d + i] = ((rem[k - d + i] - c * div[i]) % p + p * p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

// built-in moduli (low-first, monic) for the prime powers we support
std::vector<int> builtin_modulus(int p, int e) {
    if (p == 2 && e == 2) return {1, 1, 1};        // x^2 + x + 1
    if (p == 2 && e == 3) return {1, 1, 0, 1};     // x^3 + x + 1
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};  // x^4 + x + 1
    if (p == 3 && e == 2) return {1, 0, 1};        // x^2 + 1
    if (p == 3 && e == 3) return {1, 2, 0, 1};     // x^3 + 2x + 1
    if (p == 5 && e == 2) return {2, 0, 1};        // x^2 + 2
    if (p == 7 && e == 2) return {1, 0, 1};        // x^2 + 1
    std::ostringstream os;
    os << "no built-in modulus for q = " << p << "^" << e
       << "; pass one explicitly";
    throw InvalidInput(os.str());
}

std::mutex registry_mutex;
std::map<std::pair<std::pair<int, int>, std::vector<int>>, Fq*>& registry() {
    static std::map<std::pair<std::pair<int, int>, std::vector<int>>, Fq*> r;
    return r;
}

} // namespace

Fq::Fq(int p, int e, const std::vector<int>& modulus)
    : p_(p), e_(e), modulus_(modulus) {
    if (!is_prime(p)) throw InvalidInput("field characteristic must be prime");
    if (e < 1) throw InvalidInput("field extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 256) throw InvalidInput("q = p^e must be <= 256");
    }
    q_ = int(q);
    if (e_ == 1) {
        modulus_ = {0, 1}; // unused placeholder
    } else {
        if (int(modulus_.size()) != e_ + 1 || modulus_[e_] != 1)
            throw InvalidInput("modulus must be monic of degree e");
        for (int& c : modulus_) c = ((c % p) + p) % p;
        if (!irreducible(modulus_, p))
            throw InvalidInput("modulus polynomial is not irreducible over F_p");
    }

    add_.assign(size_t(q_) * q_, 0);
    mul_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    frob_.assign(q_, 0);
    log_.assign(q_, -1);

    for (int a = 0; a < q_; ++a) {
        auto ca = unpack(a, p_, e_);
        for (int b = 0; b < q_; ++b) {
            auto cb = unpack(b, p_, e_);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = fq_elem(pack(s, p_));
            mul_[a * q_ + b] = fq_elem(pack(polymul_mod(ca, cb, modulus_, p_), p_));
        }
    }
    for (int a = 0; a < q_; ++a) {
        auto ca = unpack(a, p_, e_);
        std::vector<int> n(e_);
        for (int i = 0; i < e_; ++i) n[i] = (p_ - ca[i]) % p_;
        neg_[a] = fq_elem(pack(n, p_));
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) { inv_[a] = fq_elem(b); break; }
        fq_elem f = fq_elem(a);
        for (int i = 1; i < p_; ++i) f = mul_[f * q_ + a];
        frob_[a] = f; // a^p
    }

    // smallest-code multiplicative generator and its discrete-log table
    for (int g = 1; g < q_; ++g) {
        int x = g, order = 1;
        while (x != 1) { x = mul_[x * q_ + g]; ++order; }
        if (order == q_ - 1) { gen_ = fq_elem(g); break; }
    }
    if (q_ > 2 && gen_ == 0) throw Error("internal: no generator found");
    if (q_ == 2) gen_ = 1;
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        if (log_[x] < 0) log_[x] = k;
        x = mul_[size_t(x) * q_ + gen_];
    }
}

const Fq& Fq::get(int q) {
    if (q < 2) throw InvalidInput("q must be >= 2");
    int p = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    int e = 0;
    long long v = 1;
    while (v < q) { v *= p; ++e; }
    if (v != q) throw InvalidInput("q must be a prime power");
    if (e == 1) return get(p, 1, {});
    return get(p, e, builtin_modulus(p, e));
}

const Fq& Fq::get(int p, int e, const std::vector<int>& modulus) {
    std::vector<int> key_mod = modulus;
    if (e == 1) key_mod.clear();
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(std::make_pair(p, e), key_mod);
    auto it = registry().find(key);
    if (it != registry().end()) return *it->second;
    Fq* f = new Fq(p, e, modulus); // interned for the process lifetime
    registry()[key] = f;
    return *f;
}

fq_elem Fq::pow(fq_elem a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    fq_elem r = 1, b = a;
    while (n > 0) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

fq_elem Fq::from_int(long long n) const {
    long long v = n % p_;
    if (v < 0) v += p_;
    return fq_elem(v); // lives in the prime subfield, code == value
}

std::string Fq::to_string(fq_elem a) const {
    if (prime()) return std::to_string(int(a));
    if (a == 0) return "0";
    int k = log_[a];
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g^" + std::to_string(k);
}

} // namespace carlitz
