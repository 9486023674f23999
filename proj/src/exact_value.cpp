#include "groves/exact_value.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "groves/errors.hpp"

namespace groves {

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::rational_only: return "1";
        case Generator::inv_pi: return "1/pi";
        case Generator::sqrt3_inv_pi: return "sqrt3/pi";
    }
    return "?";
}

Generator merge_generators(Generator a, Generator b) {
    if (a == b) return a;
    if (a == Generator::rational_only) return b;
    if (b == Generator::rational_only) return a;
    throw GeneratorMismatch(std::string("cannot combine values over ") + generator_name(a) +
                            " and " + generator_name(b));
}

ExactValue ExactValue::term(Generator g, int degree, const Rational& c) {
    ExactValue v;
    if (degree < 0) throw Error("negative generator degree");
    v.gen_ = g;
    v.coeffs_.assign(degree + 1, Rational(0));
    v.coeffs_[degree] = c;
    v.normalize();
    return v;
}

Rational ExactValue::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

void ExactValue::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    // A value with no t-terms is plainly rational, whatever ring produced it.
    if (coeffs_.size() <= 1) gen_ = Generator::rational_only;
}

double ExactValue::to_double() const {
    if (coeffs_.empty()) return 0.0;
    if (gen_ == Generator::rational_only) return coeffs_[0].to_double();
    // Lattice-kernel values pair enormous coefficients (hundreds of digits deep
    // in a table) with results of order log|p|, so double-precision Horner
    // evaluation cancels catastrophically.  Evaluate with mpfr at a precision
    // that absorbs the largest coefficient plus guard bits.
    mpfr_prec_t prec = 128;
    for (const auto& c : coeffs_) {
        size_t bits = mpz_sizeinbase(c.numerator().get_mpz_t(), 2) +
                      mpz_sizeinbase(c.denominator().get_mpz_t(), 2);
        prec = std::max(prec, static_cast<mpfr_prec_t>(bits + 96));
    }
    mpfr_t t, acc, term;
    mpfr_inits2(prec, t, acc, term, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(t, MPFR_RNDN);
    if (gen_ == Generator::sqrt3_inv_pi) {
        mpfr_sqrt_ui(term, 3, MPFR_RNDN);
        mpfr_div(t, term, t, MPFR_RNDN);  // sqrt(3)/pi
    } else {
        mpfr_ui_div(t, 1, t, MPFR_RNDN);  // 1/pi
    }
    mpfr_set_zero(acc, 1);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        mpfr_mul(acc, acc, t, MPFR_RNDN);
        mpfr_set_q(term, it->raw().get_mpq_t(), MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    double out = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clears(t, acc, term, static_cast<mpfr_ptr>(nullptr));
    return out;
}

ExactValue ExactValue::operator-() const {
    ExactValue r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
    gen_ = merge_generators(gen_, o.gen_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) {
    return *this += -o;
}

ExactValue& ExactValue::operator*=(const ExactValue& o) {
    Generator g = merge_generators(gen_, o.gen_);
    if (coeffs_.empty() || o.coeffs_.empty()) {
        *this = ExactValue();
        return *this;
    }
    std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    gen_ = g;
    coeffs_ = std::move(prod);
    normalize();
    return *this;
}

ExactValue ExactValue::operator/(const ExactValue& o) const {
    if (o.is_zero()) throw Error("division by zero value");
    Generator g = merge_generators(gen_, o.gen_);
    // Polynomial long division in Q[t]; only exact quotients are meaningful here.
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot;
    int dq = static_cast<int>(rem.size()) - static_cast<int>(o.coeffs_.size());
    if (dq < 0 && !rem.empty()) throw Error("inexact division in value ring");
    quot.assign(rem.empty() ? 0 : dq + 1, Rational(0));
    const Rational& lead = o.coeffs_.back();
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[k + o.coeffs_.size() - 1] / lead;
        quot[k] = q;
        if (!q.is_zero()) {
            for (size_t j = 0; j < o.coeffs_.size(); ++j) {
                rem[k + j] -= q * o.coeffs_[j];
            }
        }
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) throw Error("inexact division in value ring");
    }
    ExactValue r;
    r.gen_ = g;
    r.coeffs_ = std::move(quot);
    r.normalize();
    return r;
}

namespace {

// One term "c * t^k" in human form, without a sign: e.g. "5/16", "1/pi",
// "3/(16*pi)", "sqrt3/pi", "7*sqrt3^2/(12*pi^2)".
std::string term_str(Generator g, int k, const Rational& c) {
    mpz_class p = c.numerator();
    mpz_class q = c.denominator();
    std::ostringstream os;
    if (k == 0) {
        os << c;
        return os.str();
    }
    std::string root;
    if (g == Generator::sqrt3_inv_pi) {
        root = (k == 1) ? "sqrt3" : "sqrt3^" + std::to_string(k);
    }
    std::string num;
    if (p == 1 && !root.empty()) {
        num = root;
    } else {
        num = p.get_str();
        if (!root.empty()) num += "*" + root;
    }
    std::string pi_pow = (k == 1) ? "pi" : "pi^" + std::to_string(k);
    std::string den;
    if (q == 1) {
        den = pi_pow;
    } else {
        den = "(" + q.get_str() + "*" + pi_pow + ")";
    }
    return num + "/" + den;
}

}  // namespace

std::string ExactValue::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_str(gen_, static_cast<int>(k), a);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExactValue& v) {
    return os << v.str();
}

}  // namespace groves
