#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bw {

/* Exact scalar used throughout the library.  mpq_class keeps every value
 * in lowest terms, so equality tests are exact and there is no overflow. */
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat factorial_rat(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline Rat binomial_rat(unsigned n, unsigned k) {
    if (k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

/* Canonical text form: "p/q", or "p" when the denominator is 1. */
inline std::string to_string(const Rat& q) { return q.get_str(); }

/* Parses "p", "-p/q", or a decimal like "1.25" (converted exactly). */
inline Rat rat_from_string(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;
    static Rat zero() { return Rat(0); }
    static Rat from_rat(const Rat& q) { return q; }
    static double abs_value(const Rat& q) { return std::abs(q.get_d()); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double from_rat(const Rat& q) { return q.get_d(); }
    static double abs_value(double x) { return std::abs(x); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {}; }
    static std::complex<double> from_rat(const Rat& q) { return {q.get_d(), 0.0}; }
    static double abs_value(const std::complex<double>& x) { return std::abs(x); }
};

}  // namespace bw
