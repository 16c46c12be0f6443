#include "leviflat/rational.hpp"

namespace leviflat {

bool rational_sqrt(const mpq_class& q, mpq_class* out) {
    if (q < 0) return false;
    if (q == 0) {
        *out = 0;
        return true;
    }
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0) return false;
    *out = mpq_class(rn, rd);
    return true;
}

bool GaussianRational::exact_sqrt(GaussianRational* out) const {
    // (x+iy)^2 = a+bi  =>  x^2-y^2 = a, 2xy = b.
    // With n = |a+bi|, x^2 = (a+n)/2, y^2 = (n-a)/2; n must be rational.
    const mpq_class& a = re_;
    const mpq_class& b = im_;
    mpq_class n;
    if (!rational_sqrt(norm2(), &n)) return false;
    mpq_class x2 = (a + n) / 2;
    mpq_class y2 = (n - a) / 2;
    mpq_class x, y;
    if (!rational_sqrt(x2, &x)) return false;
    if (!rational_sqrt(y2, &y)) return false;
    // Fix the relative sign so that 2xy = b.
    if (b != 0) {
        if (x == 0) return false;
        y = b / (2 * x);
    }
    GaussianRational r(x, y);
    if (r * r == *this) {
        *out = r;
        return true;
    }
    return false;
}

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (re_ != 0) s += re_.get_str();
    if (im_ != 0) {
        if (!s.empty() && im_ > 0) s += "+";
        if (im_ == 1) {
            s += "i";
        } else if (im_ == -1) {
            s += "-i";
        } else {
            s += im_.get_str() + "i";
        }
    }
    return s;
}

}  // namespace leviflat
