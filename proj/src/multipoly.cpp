#include "groves/multipoly.hpp"

#include <algorithm>

#include "groves/errors.hpp"

namespace groves {

SignedGen make_generator(SymKind kind, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 15 || j > 15) throw Error("bad generator indices");
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        if (kind == SymKind::Lprime || kind == SymKind::Gprime) sign = -1;
    }
    GenId id = static_cast<GenId>((static_cast<int>(kind) << 8) | (i << 4) | j);
    return {id, sign};
}

SymKind gen_kind(GenId id) { return static_cast<SymKind>(id >> 8); }
int gen_i(GenId id) { return (id >> 4) & 0xf; }
int gen_j(GenId id) { return id & 0xf; }

std::string gen_name(GenId id) {
    static const char* base[] = {"L", "L'", "G", "G'"};
    return std::string(base[static_cast<int>(gen_kind(id))]) + "[" +
           std::to_string(gen_i(id)) + "," + std::to_string(gen_j(id)) + "]";
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

MultiPoly MultiPoly::generator(SymKind kind, int i, int j) {
    SignedGen g = make_generator(kind, i, j);
    MultiPoly p;
    p.terms_[{g.id}] = Rational(g.sign);
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.size()));
    return d;
}

void MultiPoly::add_term(Monomial gens, const Rational& c) {
    if (c.is_zero()) return;
    std::sort(gens.begin(), gens.end());
    auto [it, inserted] = terms_.try_emplace(std::move(gens), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::eval(const std::map<GenId, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [mono, c] : terms_) {
        Rational prod = c;
        for (GenId g : mono) {
            auto it = assignment.find(g);
            if (it == assignment.end()) throw Error("unassigned generator " + gen_name(g));
            prod *= it->second;
        }
        total += prod;
    }
    return total;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [mono, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            MultiPoly::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string term;
        if (a != Rational(1) || mono.empty()) term = a.str();
        for (GenId g : mono) {
            if (!term.empty()) term += "*";
            term += gen_name(g);
        }
        out += term;
    }
    return out;
}

}  // namespace groves
