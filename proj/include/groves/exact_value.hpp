#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Tag for the transcendental generator t of the value ring Q[t].
// Square-lattice quantities live in Q[1/pi]; triangular and hexagonal ones in
// Q[sqrt(3)/pi].  Purely rational values carry no generator and coerce into
// either ring on demand.
enum class Generator {
    rational_only,
    inv_pi,        // t = 1/pi
    sqrt3_inv_pi,  // t = sqrt(3)/pi
};

const char* generator_name(Generator g);  // "1", "1/pi", "sqrt3/pi"

// Element of Q[t]: a polynomial in the tagged generator with rational
// coefficients.  Since t is transcendental the ring is free -- there are no
// relations, multiplication adds degrees exactly, and two values are equal
// iff their canonical forms (trimmed coefficients, demoted tag) coincide.
class ExactValue {
public:
    ExactValue() = default;
    ExactValue(const Rational& c) : coeffs_{c} { normalize(); }  // NOLINT
    ExactValue(long n) : ExactValue(Rational(n)) {}              // NOLINT

    static ExactValue term(Generator g, int degree, const Rational& c);

    Generator generator() const { return gen_; }
    // Degree of the polynomial; -1 for the zero value.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return gen_ == Generator::rational_only; }

    double to_double() const;
    std::string str() const;

    ExactValue operator-() const;
    ExactValue& operator+=(const ExactValue& o);
    ExactValue& operator-=(const ExactValue& o);
    ExactValue& operator*=(const ExactValue& o);

    friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
    friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
    friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }

    // Exact ring division; throws Error unless o divides *this in Q[t].
    ExactValue operator/(const ExactValue& o) const;

    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        return a.gen_ == b.gen_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ExactValue& v);

private:
    void normalize();

    Generator gen_ = Generator::rational_only;
    std::vector<Rational> coeffs_;  // ascending degree, no trailing zeros
};

// Shared tag for a binary operation; rational_only defers to the other side.
Generator merge_generators(Generator a, Generator b);

}  // namespace groves
