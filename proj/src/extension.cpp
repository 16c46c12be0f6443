#include "leviflat/extension.hpp"

#include <sstream>
#include <stdexcept>

namespace leviflat {

int ExtensionContext::adjoin(const GaussianRational& d) {
    if (d.is_zero()) throw std::invalid_argument("cannot adjoin sqrt(0)");
    for (size_t t = 0; t < roots_.size(); ++t)
        if (roots_[t] == d) return static_cast<int>(t);
    if (roots_.size() >= 30) throw std::runtime_error("too many adjoined roots");
    int idx = static_cast<int>(roots_.size());
    if (d.is_real()) {
        roots_.push_back(d);
        conj_.push_back(idx);
        negate_.push_back(d.re() < 0);
        return idx;
    }
    // Complex d: adjoin conj(d) alongside and pair the symbols.
    roots_.push_back(d);
    conj_.push_back(idx + 1);
    negate_.push_back(false);
    roots_.push_back(d.conj());
    conj_.push_back(idx);
    negate_.push_back(false);
    return idx;
}

ExtScalar ExtScalar::sqrt(const ExtCtxPtr& ctx, const GaussianRational& d) {
    GaussianRational r;
    if (d.exact_sqrt(&r)) return ExtScalar(ctx, r);
    return root(ctx, ctx->adjoin(d));
}

bool ExtScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

GaussianRational ExtScalar::rational_part() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? GaussianRational() : it->second;
}

bool ExtScalar::uses_roots() const {
    for (const auto& [m, c] : terms_)
        if (m != 0) return true;
    return false;
}

void ExtScalar::merge_ctx(const ExtScalar& o) {
    if (!ctx_) ctx_ = o.ctx_;
    else if (o.ctx_ && o.ctx_ != ctx_ && o.uses_roots())
        throw std::invalid_argument("mixing extension contexts");
}

ExtScalar ExtScalar::conj() const {
    ExtScalar r(ctx_);
    for (const auto& [mask, c] : terms_) {
        uint32_t nm = 0;
        bool neg = false;
        for (int t = 0; t < 32; ++t) {
            if (!(mask & (uint32_t(1) << t))) continue;
            int p = ctx_->conj_partner(t);
            nm |= uint32_t(1) << p;
            if (ctx_->conj_negates(t)) neg = !neg;
        }
        GaussianRational v = c.conj();
        if (neg) v = -v;
        auto [it, fresh] = r.terms_.try_emplace(nm, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

ExtScalar ExtScalar::operator-() const {
    ExtScalar r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
    merge_ctx(o);
    for (const auto& [m, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) { return *this += -o; }

ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
    ExtScalar r(a.ctx_ ? a.ctx_ : b.ctx_);
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && a.uses_roots() && b.uses_roots())
        throw std::invalid_argument("mixing extension contexts");
    if (!r.ctx_ && b.ctx_) r.ctx_ = b.ctx_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            uint32_t overlap = ma & mb;
            GaussianRational c = ca * cb;
            for (int t = 0; t < 32 && overlap; ++t) {
                uint32_t bit = uint32_t(1) << t;
                if (overlap & bit) {
                    c *= r.ctx_->root_square(t);
                    overlap &= ~bit;
                }
            }
            uint32_t m = ma ^ mb;
            auto [it, fresh] = r.terms_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

ExtScalar ExtScalar::scaled(const GaussianRational& c) const {
    ExtScalar r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

std::string ExtScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int t = 0; t < 32; ++t)
            if (m & (uint32_t(1) << t))
                os << "*sqrt(" << ctx_->root_square(t).to_string() << ")";
    }
    return os.str();
}

}  // namespace leviflat
