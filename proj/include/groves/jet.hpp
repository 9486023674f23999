#pragma once

#include <vector>

#include "groves/errors.hpp"

namespace groves {

// Truncated power series sum_{k<=order} a_k e^k in the local variable
// e = zeta - 1, with coefficients in an arbitrary commutative ring R.
// All arithmetic truncates at the common order; mixing orders is a bug in
// the caller and throws.
template <class R>
class Jet {
public:
    Jet() : coeffs_(1, R()) {}
    explicit Jet(int order, const R& constant = R()) : coeffs_(order + 1, R()) {
        coeffs_[0] = constant;
    }
    explicit Jet(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw Error("jet needs at least the constant term");
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& operator[](int k) const { return coeffs_.at(k); }
    R& operator[](int k) { return coeffs_.at(k); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    Jet operator-() const {
        Jet r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Jet& operator+=(const Jet& o) {
        check(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        check(o);
        for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

    friend Jet operator*(const Jet& a, const Jet& b) {
        a.check(b);
        Jet r(a.order());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; i + j < b.coeffs_.size(); ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    friend bool operator==(const Jet& a, const Jet& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

private:
    void check(const Jet& o) const {
        if (coeffs_.size() != o.coeffs_.size()) throw Error("jet order mismatch");
    }
    std::vector<R> coeffs_;
};

}  // namespace groves
