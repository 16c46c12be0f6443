#include "leviflat/series.hpp"

#include <algorithm>
#include <sstream>

namespace leviflat {

int trunc_min(int a, int b) { return a < b ? a : b; }

std::shared_ptr<const VariableSpace> VariableSpace::make(std::vector<std::string> names) {
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw SeriesError("duplicate variable name: " + names[i]);
    auto sp = std::shared_ptr<VariableSpace>(new VariableSpace());
    sp->names_ = std::move(names);
    sp->conj_.assign(sp->names_.size(), -1);
    sp->real_.assign(sp->names_.size(), false);
    sp->weight_.assign(sp->names_.size(), 1);
    return sp;
}

std::shared_ptr<const VariableSpace> VariableSpace::with_pair(const std::string& a,
                                                              const std::string& b) const {
    auto sp = std::shared_ptr<VariableSpace>(new VariableSpace(*this));
    int ia = index(a), ib = index(b);
    if (ia == ib) throw SeriesError("cannot pair a variable with itself: " + a);
    if (sp->conj_[ia] != -1 || sp->conj_[ib] != -1)
        throw SeriesError("variable already paired");
    sp->conj_[ia] = ib;
    sp->conj_[ib] = ia;
    return sp;
}

std::shared_ptr<const VariableSpace> VariableSpace::with_real(const std::string& name) const {
    auto sp = std::shared_ptr<VariableSpace>(new VariableSpace(*this));
    sp->real_[index(name)] = true;
    return sp;
}

std::shared_ptr<const VariableSpace> VariableSpace::with_weight(const std::string& name,
                                                                int w) const {
    if (w < 1) throw SeriesError("weights must be positive");
    auto sp = std::shared_ptr<VariableSpace>(new VariableSpace(*this));
    sp->weight_[index(name)] = w;
    return sp;
}

int VariableSpace::index(const std::string& name) const {
    auto f = find(name);
    if (!f) throw SeriesError("unknown variable: " + name);
    return *f;
}

std::optional<int> VariableSpace::find(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::zero(SpacePtr sp, int trunc) {
    TruncatedSeries s;
    s.space_ = std::move(sp);
    s.trunc_ = trunc;
    return s;
}

TruncatedSeries TruncatedSeries::constant(SpacePtr sp, GaussianRational c, int trunc) {
    TruncatedSeries s = zero(std::move(sp), trunc);
    if (!c.is_zero() && trunc >= 0) s.coeffs_[Monomial{std::vector<int>(s.space_->dim(), 0)}] = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(SpacePtr sp, const std::string& name, int trunc) {
    TruncatedSeries s = zero(std::move(sp), trunc);
    std::vector<int> e(s.space_->dim(), 0);
    e[s.space_->index(name)] = 1;
    if (trunc >= 1) s.coeffs_[Monomial{std::move(e)}] = GaussianRational(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(SpacePtr sp, const std::vector<int>& exp,
                                          GaussianRational c, int trunc) {
    TruncatedSeries s = zero(std::move(sp), trunc);
    if (static_cast<int>(exp.size()) != s.space_->dim()) throw SeriesError("bad exponent length");
    for (int e : exp)
        if (e < 0) throw SeriesError("negative exponent");
    Monomial m{exp};
    if (!c.is_zero() && m.degree() <= trunc) s.coeffs_[std::move(m)] = std::move(c);
    return s;
}

GaussianRational TruncatedSeries::coeff(const std::vector<int>& exp) const {
    auto it = coeffs_.find(Monomial{exp});
    return it == coeffs_.end() ? GaussianRational() : it->second;
}

GaussianRational TruncatedSeries::constant_term() const {
    return coeff(std::vector<int>(space_->dim(), 0));
}

int TruncatedSeries::valuation() const {
    if (coeffs_.empty()) return kExactTrunc;
    return coeffs_.begin()->first.degree();
}

int TruncatedSeries::max_degree() const {
    if (coeffs_.empty()) return -1;
    return coeffs_.rbegin()->first.degree();
}

int TruncatedSeries::weighted_valuation() const {
    int v = kExactTrunc;
    for (const auto& [m, c] : coeffs_) v = std::min(v, m.weighted_degree(*space_));
    return v;
}

void TruncatedSeries::insert(Monomial m, GaussianRational c) {
    if (c.is_zero() || m.degree() > trunc_) return;
    auto [it, fresh] = coeffs_.try_emplace(std::move(m), std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void TruncatedSeries::check_same_space(const TruncatedSeries& o) const {
    if (!space_ || !o.space_ || *space_ != *o.space_)
        throw SeriesError("mismatched variable spaces");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& [m, c] : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_space(o);
    int t = trunc_min(trunc_, o.trunc_);
    if (t < trunc_) *this = truncated(t);
    for (const auto& [m, c] : o.coeffs_) {
        if (m.degree() > t) continue;
        auto [it, fresh] = coeffs_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_space(b);
    TruncatedSeries r = TruncatedSeries::zero(a.space_, trunc_min(a.trunc_, b.trunc_));
    const int n = a.space_->dim();
    for (const auto& [ma, ca] : a.coeffs_) {
        int da = ma.degree();
        if (da > r.trunc_) break;
        for (const auto& [mb, cb] : b.coeffs_) {
            if (da + mb.degree() > r.trunc_) break;
            Monomial m;
            m.exp.resize(n);
            for (int i = 0; i < n; ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
            r.insert(std::move(m), ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const GaussianRational& c) const {
    TruncatedSeries r = zero(space_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : coeffs_) r.coeffs_[m] = v * c;
    return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw SeriesError("negative power");
    TruncatedSeries r = constant(space_, GaussianRational(1), trunc_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool TruncatedSeries::equals_mod(const TruncatedSeries& o, int d) const {
    check_same_space(o);
    if (d > trunc_ || d > o.trunc_) throw SeriesError("comparison beyond reliable degree");
    for (const auto& [m, c] : coeffs_) {
        if (m.degree() > d) break;
        if (o.coeff(m.exp) != c) return false;
    }
    for (const auto& [m, c] : o.coeffs_) {
        if (m.degree() > d) break;
        if (coeff(m.exp) != c) return false;
    }
    return true;
}

TruncatedSeries TruncatedSeries::substitute(
    const std::map<std::string, TruncatedSeries>& assignments) const {
    // Target space: from any assignment, else this space.
    SpacePtr target = assignments.empty() ? space_ : assignments.begin()->second.space_;
    int result_trunc = trunc_;
    bool has_unit = false;
    for (const auto& [name, val] : assignments) {
        if (*val.space_ != *target) throw SeriesError("assignment values live in different spaces");
        space_->index(name);  // must exist in the source space
        if (!val.constant_term().is_zero()) has_unit = true;
        result_trunc = trunc_min(result_trunc, val.trunc_);
    }
    if (has_unit && trunc_ != kExactTrunc)
        throw SeriesError(
            "substitution with nonzero constant term into a truncated series "
            "invalidates the truncation bound");

    // Per-variable image, with lazily grown power tables.
    const int n = space_->dim();
    std::vector<const TruncatedSeries*> image(n, nullptr);
    std::vector<TruncatedSeries> owned;
    owned.reserve(assignments.size());
    for (int i = 0; i < n; ++i) {
        auto it = assignments.find(space_->name(i));
        if (it != assignments.end()) {
            owned.push_back(it->second.truncated(result_trunc));
        }
    }
    size_t k = 0;
    std::vector<std::vector<TruncatedSeries>> powers(n);
    for (int i = 0; i < n; ++i) {
        auto it = assignments.find(space_->name(i));
        if (it != assignments.end()) {
            image[i] = &owned[k++];
        }
    }

    TruncatedSeries result = zero(target, result_trunc);
    TruncatedSeries one = constant(target, GaussianRational(1), result_trunc);
    for (const auto& [m, c] : coeffs_) {
        TruncatedSeries term = one.scaled(c);
        for (int i = 0; i < n && !term.is_zero(); ++i) {
            int e = m.exp[i];
            if (e == 0) continue;
            if (image[i] == nullptr) {
                auto idx = target->find(space_->name(i));
                if (!idx)
                    throw SeriesError("variable " + space_->name(i) +
                                      " has no assignment and is missing from the target space");
                std::vector<int> ev(target->dim(), 0);
                ev[*idx] = e;
                term = term * monomial(target, ev, GaussianRational(1), result_trunc);
            } else {
                auto& tab = powers[i];
                if (tab.empty()) tab.push_back(*image[i]);
                while (static_cast<int>(tab.size()) < e) tab.push_back(tab.back() * (*image[i]));
                term = term * tab[e - 1];
            }
        }
        result += term;
    }
    return result;
}

TruncatedSeries TruncatedSeries::conjugate() const {
    TruncatedSeries r = zero(space_, trunc_);
    const int n = space_->dim();
    for (const auto& [m, c] : coeffs_) {
        Monomial cm;
        cm.exp.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            if (m.exp[i] == 0) continue;
            int j = space_->conjugate_of(i);
            if (j >= 0) {
                cm.exp[j] += m.exp[i];
            } else if (space_->is_real(i)) {
                cm.exp[i] += m.exp[i];
            } else {
                throw SeriesError("variable " + space_->name(i) +
                                  " has no conjugate partner and is not declared real");
            }
        }
        r.coeffs_[std::move(cm)] = c.conj();
    }
    return r;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int d) const {
    if (trunc_ != kExactTrunc && d > trunc_) throw SeriesError("degree beyond reliable range");
    TruncatedSeries r = zero(space_, trunc_);
    for (const auto& [m, c] : coeffs_)
        if (m.degree() == d) r.coeffs_[m] = c;
    return r;
}

TruncatedSeries TruncatedSeries::parts_up_to(int d) const {
    TruncatedSeries r = zero(space_, trunc_);
    for (const auto& [m, c] : coeffs_) {
        if (m.degree() > d) break;
        r.coeffs_[m] = c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::weighted_part(int d) const {
    // Weighted degree dominates total degree, so exactness through total
    // degree trunc covers every term of weight <= trunc.
    if (trunc_ != kExactTrunc && d > trunc_) throw SeriesError("weight beyond reliable range");
    TruncatedSeries r = zero(space_, trunc_);
    for (const auto& [m, c] : coeffs_)
        if (m.weighted_degree(*space_) == d) r.coeffs_[m] = c;
    return r;
}

TruncatedSeries TruncatedSeries::weighted_parts_up_to(int d) const {
    TruncatedSeries r = zero(space_, trunc_);
    for (const auto& [m, c] : coeffs_)
        if (m.weighted_degree(*space_) <= d) r.coeffs_[m] = c;
    return r;
}

TruncatedSeries TruncatedSeries::differentiate(const std::string& var) const {
    int vi = space_->index(var);
    TruncatedSeries r = zero(space_, trunc_ == kExactTrunc ? kExactTrunc : trunc_ - 1);
    for (const auto& [m, c] : coeffs_) {
        if (m.exp[vi] == 0) continue;
        Monomial dm = m;
        int e = dm.exp[vi]--;
        if (dm.degree() > r.trunc_) continue;
        r.coeffs_[std::move(dm)] = c * GaussianRational(e);
    }
    return r;
}

TruncatedSeries TruncatedSeries::invert_in(const std::string& var) const {
    int vi = space_->index(var);
    if (!constant_term().is_zero()) throw SeriesError("inverse requires zero constant term");
    if (trunc_ == kExactTrunc)
        throw SeriesError("compositional inverse needs a finite truncation order");
    // Linear coefficient of var must be an invertible constant.
    std::vector<int> lin(space_->dim(), 0);
    lin[vi] = 1;
    GaussianRational c0 = coeff(lin);
    if (c0.is_zero()) throw SeriesError("zero linear coefficient in " + var);

    TruncatedSeries g = variable(space_, var, trunc_);
    GaussianRational inv_c0 = GaussianRational(1) / c0;
    for (int it = 0; it <= trunc_ + 1; ++it) {
        TruncatedSeries res = substitute({{var, g}}) - variable(space_, var, trunc_);
        if (res.is_zero()) break;
        g -= res.scaled(inv_c0);
    }
    // The update contracts in the degree filtration, so this must close.
    TruncatedSeries res = substitute({{var, g}}) - variable(space_, var, trunc_);
    if (!res.is_zero()) throw SeriesError("series inversion did not converge");
    return g;
}

TruncatedSeries TruncatedSeries::sqrt_unit() const {
    if (!constant_term().is_one()) throw SeriesError("sqrt_unit requires constant term 1");
    if (trunc_ == kExactTrunc)
        throw SeriesError("sqrt_unit needs a finite truncation order");
    // [s]_d = ([u]_d - sum_{0<i<d} [s]_i [s]_{d-i}) / 2.
    TruncatedSeries s = constant(space_, GaussianRational(1), trunc_);
    GaussianRational half(mpq_class(1, 2));
    for (int d = 1; d <= trunc_; ++d) {
        TruncatedSeries sq = s * s;
        TruncatedSeries delta = (homogeneous_part(d) - sq.homogeneous_part(d)).scaled(half);
        s += delta;
    }
    return s;
}

TruncatedSeries TruncatedSeries::reciprocal_unit() const {
    GaussianRational c0 = constant_term();
    if (c0.is_zero()) throw SeriesError("reciprocal requires a unit");
    if (trunc_ == kExactTrunc)
        throw SeriesError("reciprocal needs a finite truncation order");
    GaussianRational inv = GaussianRational(1) / c0;
    TruncatedSeries r = constant(space_, inv, trunc_);
    TruncatedSeries one = constant(space_, GaussianRational(1), trunc_);
    for (int it = 0; it <= trunc_; ++it) {
        TruncatedSeries res = one - (*this) * r;
        if (res.is_zero()) break;
        r += res.scaled(inv);
    }
    return r;
}

TruncatedSeries TruncatedSeries::divide_exact(const TruncatedSeries& f) const {
    check_same_space(f);
    if (f.is_zero()) throw SeriesError("division by zero series");
    TruncatedSeries rem = *this;
    TruncatedSeries q = zero(space_, trunc_);
    const auto& [lm, lc] = *f.coeffs_.rbegin();
    const int n = space_->dim();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.coeffs_.rbegin();
        Monomial d;
        d.exp.resize(n);
        for (int i = 0; i < n; ++i) {
            d.exp[i] = rm.exp[i] - lm.exp[i];
            if (d.exp[i] < 0) throw SeriesError("not divisible");
        }
        GaussianRational qc = rc / lc;
        TruncatedSeries qt = monomial(space_, d.exp, qc, trunc_);
        q += qt;
        rem -= qt * f;
    }
    return q;
}

TruncatedSeries TruncatedSeries::truncated(int t) const {
    if (t >= trunc_) {
        if (t > trunc_) throw SeriesError("cannot raise a truncation bound");
        return *this;
    }
    TruncatedSeries r = zero(space_, t);
    for (const auto& [m, c] : coeffs_) {
        if (m.degree() > t) break;
        r.coeffs_[m] = c;
    }
    return r;
}

GaussianRational TruncatedSeries::eval(
    const std::map<std::string, GaussianRational>& point) const {
    if (trunc_ != kExactTrunc) throw SeriesError("evaluation requires an entire series");
    const int n = space_->dim();
    std::vector<GaussianRational> vals(n);
    for (int i = 0; i < n; ++i) {
        auto it = point.find(space_->name(i));
        if (it == point.end()) throw SeriesError("missing coordinate: " + space_->name(i));
        vals[i] = it->second;
    }
    GaussianRational sum;
    for (const auto& [m, c] : coeffs_) {
        GaussianRational t = c;
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < m.exp[i]; ++e) t *= vals[i];
        sum += t;
    }
    return sum;
}

std::string TruncatedSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < space_->dim(); ++i) {
            if (m.exp[i] == 0) continue;
            os << "*" << space_->name(i);
            if (m.exp[i] > 1) os << "^" << m.exp[i];
        }
    }
    if (trunc_ != kExactTrunc) os << "  [mod deg " << trunc_ + 1 << "]";
    return os.str();
}

}  // namespace leviflat
