#include "carlitz/multipoly.hpp"

#include <algorithm>

#include "carlitz/grammar.hpp"

namespace carlitz {

std::string Var::name() const {
    switch (kind()) {
        case VarKind::T: return "t" + std::to_string(index());
        case VarKind::X: return "X" + std::to_string(index());
        case VarKind::LowZ: return "z";
        case VarKind::UpZ: return "Z";
        case VarKind::Theta: return "th";
    }
    return "?";
}

Mono::Mono(std::vector<std::pair<Var, std::uint32_t>> factors)
    : f_(std::move(factors)) {
    std::sort(f_.begin(), f_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates, drop zero exponents
    std::vector<std::pair<Var, std::uint32_t>> out;
    for (const auto& [v, e] : f_) {
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.emplace_back(v, e);
    }
    f_ = std::move(out);
}

long long Mono::total_degree() const {
    long long d = 0;
    for (const auto& [v, e] : f_) d += e;
    return d;
}

std::uint32_t Mono::exp_of(Var v) const {
    for (const auto& [w, e] : f_)
        if (w == v) return e;
    return 0;
}

Mono Mono::times(const Mono& o) const {
    std::vector<std::pair<Var, std::uint32_t>> all = f_;
    all.insert(all.end(), o.f_.begin(), o.f_.end());
    return Mono(std::move(all));
}

Mono Mono::pow(std::uint32_t e) const {
    if (e == 0) return Mono();
    std::vector<std::pair<Var, std::uint32_t>> all = f_;
    for (auto& [v, x] : all) x *= e;
    Mono m;
    m.f_ = std::move(all);
    return m;
}

Mono Mono::without(Var v) const {
    Mono m;
    for (const auto& fe : f_)
        if (!(fe.first == v)) m.f_.push_back(fe);
    return m;
}

Mono Mono::with_exp(Var v, std::uint32_t e) const {
    std::vector<std::pair<Var, std::uint32_t>> all;
    for (const auto& fe : f_)
        if (!(fe.first == v)) all.push_back(fe);
    if (e > 0) all.emplace_back(v, e);
    return Mono(std::move(all));
}

bool MonoLess::operator()(const Mono& a, const Mono& b) const {
    long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // same total degree: walk both sorted factor lists and break the tie at
    // the first variable where the exponents differ; the monomial with the
    // larger exponent there sorts first.  Ascending map iteration then
    // yields natural reading order: t1 before t2, X1^2 before X1*X2.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first < fb[j].first) return true;        // a has exp > 0 first
        if (fb[j].first < fa[i].first) return false;       // b has exp > 0 first
        if (fa[i].second != fb[j].second)
            return fa[i].second > fb[j].second;
        ++i;
        ++j;
    }
    // equal total degree: both lists must exhaust together
    return false;
}

MultiPoly MultiPoly::constant(Frac c) {
    MultiPoly r(c.field());
    if (!c.is_zero()) r.t_.emplace(Mono::one(), std::move(c));
    return r;
}

MultiPoly MultiPoly::monomial(Frac c, const Mono& m) {
    MultiPoly r(c.field());
    if (!c.is_zero()) r.t_.emplace(m, std::move(c));
    return r;
}

MultiPoly MultiPoly::variable(const Fq& F, Var v, std::uint32_t e) {
    return monomial(Frac::of_int(F, 1), Mono::var(v, e));
}

Frac MultiPoly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    if (it == t_.end()) return Frac(*F_);
    return it->second;
}

bool MultiPoly::is_integral() const {
    for (const auto& [m, c] : t_)
        if (!c.is_integral()) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*F_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(*F_);
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return F_ == o.F_ && t_ == o.t_;
}

MultiPoly MultiPoly::scaled(const Frac& c) const {
    MultiPoly r(*F_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : t_) r.t_.emplace(m, x * c);
    return r;
}

MultiPoly MultiPoly::mono_times(const Mono& m, const Frac& c) const {
    MultiPoly r(*F_);
    if (c.is_zero()) return r;
    for (const auto& [mm, x] : t_) r.add_term(mm.times(m), x * c);
    return r;
}

MultiPoly MultiPoly::pow(std::uint32_t n) const {
    MultiPoly r = of_int(*F_, 1);
    MultiPoly b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        if (n >>= 1) b *= b;
    }
    return r;
}

void MultiPoly::add_term(const Mono& m, const Frac& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
    MultiPoly r(*F_);
    std::map<std::uint32_t, MultiPoly> powers; // exponent -> value^exponent
    for (const auto& [m, c] : t_) {
        std::uint32_t e = m.exp_of(v);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        auto it = powers.find(e);
        if (it == powers.end())
            it = powers.emplace(e, value.pow(e)).first;
        Mono rest = m.without(v);
        for (const auto& [mv, cv] : it->second.t_)
            r.add_term(rest.times(mv), c * cv);
    }
    return r;
}

MultiPoly MultiPoly::subst_scalar(Var v, const Frac& value) const {
    MultiPoly r(*F_);
    for (const auto& [m, c] : t_) {
        std::uint32_t e = m.exp_of(v);
        if (e == 0)
            r.add_term(m, c);
        else
            r.add_term(m.without(v), c * value.pow(e));
    }
    return r;
}

MultiPoly MultiPoly::phi(int j) const {
    if (j == 0) return *this;
    if (j < 0) throw InvalidInput("phi: twist order must be >= 0");
    MultiPoly r(*F_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, c.frobenius_power(j));
    return r;
}

MultiPoly MultiPoly::frobenius_power(int j) const {
    if (j == 0) return *this;
    if (j < 0) throw InvalidInput("frobenius_power: order must be >= 0");
    std::uint64_t step = 1;
    for (int i = 0; i < j; ++i) step *= std::uint64_t(F_->q());
    MultiPoly r(*F_);
    for (const auto& [m, c] : t_) {
        std::vector<std::pair<Var, std::uint32_t>> fs = m.factors();
        for (auto& [v, e] : fs) {
            std::uint64_t ne = std::uint64_t(e) * step;
            if (ne > 0x0fffffffULL)
                throw InvalidInput("frobenius_power: exponent overflow");
            e = std::uint32_t(ne);
        }
        r.t_.emplace(Mono(std::move(fs)), c.frobenius_power(j));
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r(*F_);
    for (const auto& [m, c] : t_) {
        std::uint32_t e = m.exp_of(v);
        if (e == 0) continue;
        Frac factor = Frac::of_int(*F_, e); // e reduced mod p
        if (factor.is_zero()) continue;
        r.add_term(m.with_exp(v, e - 1), c * factor);
    }
    return r;
}

long long MultiPoly::degree_in(Var v) const {
    long long d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, (long long)m.exp_of(v));
    return d;
}

long long MultiPoly::total_degree_in(VarKind k) const {
    long long best = 0;
    for (const auto& [m, c] : t_) {
        long long d = 0;
        for (const auto& [v, e] : m.factors())
            if (v.kind() == k) d += e;
        best = std::max(best, d);
    }
    return best;
}

int MultiPoly::max_index(VarKind k) const {
    int best = 0;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.factors())
            if (v.kind() == k) best = std::max(best, v.index());
    return best;
}

std::map<std::uint32_t, MultiPoly> MultiPoly::split_by(Var v) const {
    std::map<std::uint32_t, MultiPoly> out;
    for (const auto& [m, c] : t_) {
        std::uint32_t e = m.exp_of(v);
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, MultiPoly(*F_)).first;
        it->second.add_term(m.without(v), c);
    }
    return out;
}

std::string MultiPoly::to_string() const { return format_poly(*this); }

} // namespace carlitz
