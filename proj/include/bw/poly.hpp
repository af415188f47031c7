#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "bw/rat.hpp"

namespace bw {

/* Dense univariate polynomial, coefficients in ascending degree order.
 * The zero polynomial has an empty coefficient vector. */
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }

    /* u + a */
    static Poly linear(const T& a) { return Poly(std::vector<T>{a, T(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const T& coeff(size_t k) const {
        static const T zero = scalar_traits<T>::zero();
        return k < c_.size() ? c_[k] : zero;
    }
    void set_coeff(size_t k, const T& v) {
        if (k >= c_.size()) c_.resize(k + 1, scalar_traits<T>::zero());
        c_[k] = v;
        trim();
    }
    const std::vector<T>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar_traits<T>::zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), scalar_traits<T>::zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, scalar_traits<T>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    T eval(const T& x) const {
        T r = scalar_traits<T>::zero();
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
        return Poly(std::move(d));
    }

    double max_abs_coeff() const {
        double m = 0;
        for (const auto& x : c_) {
            double a = scalar_traits<T>::abs_value(x);
            if (a > m) m = a;
        }
        return m;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

/* prod (u + roots[i]) */
template <class T>
Poly<T> poly_from_roots_negated(const std::vector<T>& roots) {
    Poly<T> p = Poly<T>::constant(T(1));
    for (const auto& r : roots) p = p * Poly<T>::linear(r);
    return p;
}

}  // namespace bw
