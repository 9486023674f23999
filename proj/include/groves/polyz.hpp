#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Dense univariate polynomial over Q, ascending powers, no trailing zeros.
// Used both for the squared-monodromy variable zeta (annular matrices) and
// for the raw transport variable z (finite-graph enumeration); the variable
// is purely positional, so one type serves both.
class PolyZ {
public:
    PolyZ() = default;
    PolyZ(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }  // NOLINT
    PolyZ(long n) : PolyZ(Rational(n)) {}                                 // NOLINT
    explicit PolyZ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyZ monomial(int degree, const Rational& c = Rational(1));
    static PolyZ variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    // Coefficients of p(1 + e) as a polynomial in e; the zeta -> 1 expansion.
    std::vector<Rational> shifted_by_one() const;

    // Multiplicity of the root at x = 1 (0 if p(1) != 0); zero poly -> -1.
    int order_at_one() const;

    PolyZ operator-() const;
    PolyZ& operator+=(const PolyZ& o);
    PolyZ& operator-=(const PolyZ& o);
    friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
    friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

    friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }

    // Quotient/remainder by a nonzero divisor.
    static void divmod(const PolyZ& a, const PolyZ& b, PolyZ& q, PolyZ& r);
    // Exact quotient; throws Error when the division leaves a remainder.
    friend PolyZ divexact(const PolyZ& a, const PolyZ& b);
    // Monic gcd (1 for coprime inputs, 0 only when both are zero).
    friend PolyZ gcd(const PolyZ& a, const PolyZ& b);

    // Rational c > 0 with p = c * (primitive integer polynomial).
    Rational content() const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient of polynomials in lowest terms.  The denominator is normalized to
// a primitive integer polynomial with positive leading coefficient, so equal
// rational functions have identical representations.
class RatFuncZ {
public:
    RatFuncZ() : num_(), den_(1) {}
    RatFuncZ(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFuncZ(long n) : num_(Rational(n)), den_(1) {}   // NOLINT
    RatFuncZ(const PolyZ& p) : num_(p), den_(1) {}     // NOLINT
    RatFuncZ(PolyZ num, PolyZ den);

    const PolyZ& num() const { return num_; }
    const PolyZ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational eval(const Rational& x) const;  // throws Error on a pole

    RatFuncZ operator-() const;
    friend RatFuncZ operator+(const RatFuncZ& a, const RatFuncZ& b);
    friend RatFuncZ operator-(const RatFuncZ& a, const RatFuncZ& b);
    friend RatFuncZ operator*(const RatFuncZ& a, const RatFuncZ& b);
    friend RatFuncZ operator/(const RatFuncZ& a, const RatFuncZ& b);
    RatFuncZ& operator+=(const RatFuncZ& o) { return *this = *this + o; }
    RatFuncZ& operator-=(const RatFuncZ& o) { return *this = *this - o; }
    RatFuncZ& operator*=(const RatFuncZ& o) { return *this = *this * o; }
    RatFuncZ& operator/=(const RatFuncZ& o) { return *this = *this / o; }

    friend bool operator==(const RatFuncZ& a, const RatFuncZ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncZ& a, const RatFuncZ& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const;

private:
    void reduce();
    PolyZ num_, den_;
};

// Laurent expansion of f around the point 1: writes f = sum_{k >= -m} a_k e^k
// in the local variable e (so the underlying variable equals 1 + e), with
// a_{-m} != 0 when f has a genuine pole of order m.  Returns the pole order
// m (0 when f is analytic at 1, including f = 0) and the coefficients
// a_{-m} ... a_{-m + extra_order}.
std::pair<int, std::vector<Rational>> ratfunc_expand_at_one(const RatFuncZ& f, int extra_order);

}  // namespace groves
