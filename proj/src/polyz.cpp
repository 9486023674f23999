#include "groves/polyz.hpp"

#include <algorithm>
#include <sstream>

#include "groves/errors.hpp"

namespace groves {

PolyZ PolyZ::monomial(int degree, const Rational& c) {
    if (degree < 0) throw Error("negative monomial degree");
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return PolyZ(std::move(v));
}

void PolyZ::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational PolyZ::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

const Rational& PolyZ::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational PolyZ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<Rational> PolyZ::shifted_by_one() const {
    // Horner in (1 + e): acc <- acc * (1 + e) + a_k keeps everything dense.
    std::vector<Rational> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i];
            next[i + 1] += acc[i];
        }
        if (next.empty()) next.push_back(Rational(0));
        next[0] += *it;
        acc = std::move(next);
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    return acc;
}

int PolyZ::order_at_one() const {
    if (is_zero()) return -1;
    std::vector<Rational> s = shifted_by_one();
    int k = 0;
    while (s[k].is_zero()) ++k;
    return k;
}

PolyZ PolyZ::operator-() const {
    PolyZ r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyZ(std::move(prod));
}

void PolyZ::divmod(const PolyZ& a, const PolyZ& b, PolyZ& q, PolyZ& r) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    int dq = a.degree() - b.degree();
    if (dq < 0) {
        q = PolyZ();
        r = a;
        return;
    }
    std::vector<Rational> quot(dq + 1, Rational(0));
    const Rational& lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        Rational c = rem[k + b.degree()] / lead;
        quot[k] = c;
        if (!c.is_zero()) {
            for (size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= c * b.coeffs_[j];
        }
    }
    q = PolyZ(std::move(quot));
    r = PolyZ(std::move(rem));
}

PolyZ divexact(const PolyZ& a, const PolyZ& b) {
    PolyZ q, r;
    PolyZ::divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

PolyZ gcd(const PolyZ& a, const PolyZ& b) {
    PolyZ x = a, y = b;
    while (!y.is_zero()) {
        PolyZ q, r;
        PolyZ::divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    // Normalize to monic.
    Rational inv = Rational(1) / x.leading();
    std::vector<Rational> c = x.coeffs();
    for (auto& ci : c) ci *= inv;
    return PolyZ(std::move(c));
}

Rational PolyZ::content() const {
    if (is_zero()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        mpz_class n = c.numerator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rational c(mpq_class(num_gcd, den_lcm));
    return leading().sign() < 0 ? -c : c;
}

std::string PolyZ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::ostringstream os;
        if (k == 0) {
            os << a;
        } else {
            if (a != Rational(1)) os << a << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        out += os.str();
    }
    return out;
}

RatFuncZ::RatFuncZ(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

void RatFuncZ::reduce() {
    if (num_.is_zero()) {
        den_ = PolyZ(1);
        return;
    }
    PolyZ g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    Rational c = den_.content();
    if (c != Rational(1)) {
        Rational inv = Rational(1) / c;
        std::vector<Rational> nc = num_.coeffs(), dc = den_.coeffs();
        for (auto& x : nc) x *= inv;
        for (auto& x : dc) x *= inv;
        num_ = PolyZ(std::move(nc));
        den_ = PolyZ(std::move(dc));
    }
}

Rational RatFuncZ::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw Error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RatFuncZ RatFuncZ::operator-() const {
    RatFuncZ r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFuncZ operator+(const RatFuncZ& a, const RatFuncZ& b) {
    return RatFuncZ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncZ operator-(const RatFuncZ& a, const RatFuncZ& b) {
    return RatFuncZ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncZ operator*(const RatFuncZ& a, const RatFuncZ& b) {
    return RatFuncZ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncZ operator/(const RatFuncZ& a, const RatFuncZ& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    return RatFuncZ(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFuncZ::str(const std::string& var) const {
    if (den_ == PolyZ(1)) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::pair<int, std::vector<Rational>> ratfunc_expand_at_one(const RatFuncZ& f, int extra_order) {
    if (extra_order < 0) throw Error("negative expansion order");
    if (f.is_zero()) return {0, std::vector<Rational>(extra_order + 1, Rational(0))};

    std::vector<Rational> n = f.num().shifted_by_one();
    std::vector<Rational> d = f.den().shifted_by_one();
    size_t vn = 0, vd = 0;
    while (n[vn].is_zero()) ++vn;
    while (d[vd].is_zero()) ++vd;

    // With num = e^vn * N(e) and den = e^vd * D(e) (unit parts N, D), the
    // Laurent series of f starts at e^(vn - vd).  A positive vd - vn is the
    // pole order; a negative one is a zero at 1, reported as m = 0 with a
    // run of leading zero coefficients.
    int m = std::max(static_cast<int>(vd) - static_cast<int>(vn), 0);
    size_t zero_prefix = vd >= vn ? 0 : vn - vd;

    size_t terms = static_cast<size_t>(extra_order) + 1;
    std::vector<Rational> t(terms, Rational(0));
    for (size_t k = 0; k < terms; ++k) {
        Rational acc = (vn + k < n.size()) ? n[vn + k] : Rational(0);
        for (size_t j = 0; j < k; ++j) {
            size_t di = k - j;
            if (vd + di < d.size()) acc -= t[j] * d[vd + di];
        }
        t[k] = acc / d[vd];
    }
    std::vector<Rational> out(terms, Rational(0));
    for (size_t i = zero_prefix; i < terms; ++i) out[i] = t[i - zero_prefix];
    return {m, out};
}

}  // namespace groves
