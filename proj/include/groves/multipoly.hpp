#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Formal generators for symbolic grove polynomials: response-matrix entries
// L[i,j], their monodromy derivatives L'[i,j], and the Green analogues
// G[i,j], G'[i,j].  L and G are symmetric in the index pair; the primed
// generators are antisymmetric, so asking for L'[j,i] with j > i yields the
// canonical generator with a sign flip.
enum class SymKind : uint8_t { L, Lprime, G, Gprime };

using GenId = uint16_t;

struct SignedGen {
    GenId id;
    int sign;  // +1 or -1
};

SignedGen make_generator(SymKind kind, int i, int j);
SymKind gen_kind(GenId id);
int gen_i(GenId id);
int gen_j(GenId id);
std::string gen_name(GenId id);

// Sparse multivariate polynomial over Q in the generators above.  A monomial
// is a sorted multiset of generator ids.
class MultiPoly {
public:
    using Monomial = std::vector<GenId>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT
    MultiPoly(long n) : MultiPoly(Rational(n)) {}  // NOLINT

    static MultiPoly generator(SymKind kind, int i, int j);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Adds c * (product of gens); gens need not be sorted.
    void add_term(Monomial gens, const Rational& c);

    Rational eval(const std::map<GenId, Rational>& assignment) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

}  // namespace groves
