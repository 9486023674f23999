#include "groves/rational.hpp"

#include <ostream>

#include "groves/errors.hpp"

namespace groves {

Rational::Rational(long n, long d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

}  // namespace groves
