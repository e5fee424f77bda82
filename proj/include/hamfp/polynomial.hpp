// Dense univariate integer polynomials in the formal variable t. Used for
// equivariant restrictions at fixed points, so degrees stay tiny.
#pragma once

#include <vector>

#include "hamfp/numeric.hpp"

namespace hamfp {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Int v) { return Poly({std::move(v)}); }
    static Poly monomial(Int coeff, int deg) {
        std::vector<Int> c(size_t(deg) + 1);
        c[size_t(deg)] = std::move(coeff);
        return Poly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return int(c_.size()) - 1; }

    Int coeff(int k) const {
        if (k < 0 || size_t(k) >= c_.size()) return 0;
        return c_[size_t(k)];
    }

    bool is_zero() const { return c_.empty(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(int e) const {
        Poly r = constant(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    const std::vector<Int>& coefficients() const { return c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;  // c_[k] multiplies t^k
};

}  // namespace hamfp
