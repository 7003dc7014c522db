#include "carlitz/zseries.hpp"

#include <map>
#include <mutex>

namespace carlitz {

const MultiPoly& ZSeries::zero_of(const Fq& F) {
    static std::map<const Fq*, MultiPoly> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(&F);
    if (it == cache.end()) it = cache.emplace(&F, MultiPoly(F)).first;
    return it->second;
}

ZSeries::ZSeries(const Fq& F, std::vector<MultiPoly> coeffs, int prec)
    : F_(&F), c_(std::move(coeffs)), prec_(prec), exact_(false) {
    if (prec_ < 0) throw InvalidInput("ZSeries precision must be >= 0");
    c_.resize(size_t(prec_), MultiPoly(F));
}

ZSeries ZSeries::exact_poly(const Fq& F, std::vector<MultiPoly> coeffs) {
    ZSeries s(F);
    s.c_ = std::move(coeffs);
    s.exact_ = true;
    s.prec_ = int(s.c_.size());
    s.trim();
    return s;
}

ZSeries ZSeries::one(const Fq& F, int prec) {
    ZSeries s(F, {MultiPoly::of_int(F, 1)}, prec);
    return s;
}

void ZSeries::trim() {
    if (!exact_) return;
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    prec_ = int(c_.size());
}

const MultiPoly& ZSeries::coeff(int d) const {
    if (d < 0) throw InvalidInput("negative z-order");
    if (d < int(c_.size())) return c_[d];
    if (exact_) return zero_of(*F_);
    throw PrecisionLoss("z-coefficient beyond the certified precision");
}

bool ZSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

ZSeries ZSeries::operator-() const {
    ZSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
    ZSeries r(*F_);
    r.exact_ = exact_ && o.exact_;
    if (r.exact_) {
        r.c_.resize(std::max(c_.size(), o.c_.size()), MultiPoly(*F_));
    } else {
        int p = exact_ ? o.prec_ : (o.exact_ ? prec_ : std::min(prec_, o.prec_));
        r.prec_ = p;
        r.c_.resize(size_t(p), MultiPoly(*F_));
    }
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    if (r.exact_) r.prec_ = int(r.c_.size());
    return r;
}

ZSeries ZSeries::operator-(const ZSeries& o) const { return *this + (-o); }

ZSeries ZSeries::operator*(const ZSeries& o) const {
    ZSeries r(*F_);
    // an exactly-zero factor gives an exactly-zero product
    if ((exact_ && c_.empty()) || (o.exact_ && o.c_.empty())) return r;
    r.exact_ = exact_ && o.exact_;
    size_t n;
    if (r.exact_) {
        n = c_.empty() || o.c_.empty() ? 0 : c_.size() + o.c_.size() - 1;
        r.prec_ = int(n);
    } else {
        // a truncated factor limits every product order it contributes to
        int p;
        if (exact_ && !o.exact_) p = o.prec_ + (c_.empty() ? 0 : int(c_.size()) - 1);
        else if (!exact_ && o.exact_) p = prec_ + (o.c_.empty() ? 0 : int(o.c_.size()) - 1);
        else p = std::min(prec_, o.prec_);
        r.prec_ = p;
        n = size_t(p);
    }
    r.c_.assign(n, MultiPoly(*F_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (i + j >= n) break;
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

bool ZSeries::operator==(const ZSeries& o) const {
    int window;
    if (exact_ && o.exact_)
        window = int(std::max(c_.size(), o.c_.size()));
    else if (exact_)
        window = o.prec_;
    else if (o.exact_)
        window = prec_;
    else
        window = std::min(prec_, o.prec_);
    for (int d = 0; d < window; ++d)
        if (coeff(d) != o.coeff(d)) return false;
    return true;
}

ZSeries ZSeries::scaled(const MultiPoly& f) const {
    ZSeries r = *this;
    for (auto& c : r.c_) c = c * f;
    r.trim();
    return r;
}

ZSeries ZSeries::shifted_z(int k) const {
    if (k < 0) throw InvalidInput("shifted_z: negative shift");
    ZSeries r(*F_);
    r.exact_ = exact_;
    r.prec_ = exact_ ? prec_ + k : prec_ + k;
    r.c_.assign(size_t(k), MultiPoly(*F_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    if (!exact_) r.c_.resize(size_t(r.prec_), MultiPoly(*F_));
    return r;
}

ZSeries ZSeries::truncated(int prec) const {
    ZSeries r(*F_);
    r.exact_ = false;
    r.prec_ = exact_ ? prec : std::min(prec, prec_);
    r.c_.assign(c_.begin(),
                c_.begin() + std::min(c_.size(), size_t(r.prec_)));
    r.c_.resize(size_t(r.prec_), MultiPoly(*F_));
    return r;
}

ZSeries ZSeries::phi_coeffs(int j) const {
    ZSeries r = *this;
    for (auto& c : r.c_) c = c.phi(j);
    return r;
}

int ZSeries::degree_z() const {
    if (!exact_)
        throw PrecisionLoss("degree_z of a truncated series is not certified");
    for (size_t i = c_.size(); i-- > 0;)
        if (!c_[i].is_zero()) return int(i);
    return 0; // zero polynomial: report degree 0
}

MultiPoly ZSeries::to_poly() const {
    if (!exact_)
        throw PrecisionLoss("to_poly requires an exact series");
    MultiPoly r(*F_);
    for (size_t d = 0; d < c_.size(); ++d)
        for (const auto& [m, c] : c_[d].terms())
            r.add_term(d == 0 ? m : m.times(Mono::var(Var::z(), std::uint32_t(d))), c);
    return r;
}

} // namespace carlitz
