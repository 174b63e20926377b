#pragma once

#include "qlfun/padic.hpp"
#include "qlfun/rational.hpp"

#include <cmath>
#include <complex>

namespace qlfun {

using Complex = std::complex<double>;

// Small uniform surface over the three computation domains (exact
// rationals, double-precision complex, finite-precision p-adic), used by
// the templated q-series code and the character tables.

template <class V>
struct DomainTraits;

template <>
struct DomainTraits<Rational> {
    static Rational from_long(long n) { return Rational(n); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational pow(const Rational& x, long e) { return x.pow(e); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static Rational zero_like(const Rational&) { return Rational(0); }
};

template <>
struct DomainTraits<Complex> {
    static Complex from_long(long n) { return Complex(double(n), 0.0); }
    static Complex from_rational(const Rational& r) { return Complex(r.to_double(), 0.0); }
    static Complex pow(const Complex& x, long e) {
        if (e == 0) return Complex(1.0, 0.0);
        if (e < 0) return Complex(1.0, 0.0) / pow(x, -e);
        Complex b = x, acc(1.0, 0.0);
        long k = e;
        while (k > 0) {
            if (k & 1) acc *= b;
            b *= b;
            k >>= 1;
        }
        return acc;
    }
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static bool equal(const Complex& a, const Complex& b) {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= 1e-9 * scale;
    }
    static Complex zero_like(const Complex&) { return Complex(0.0, 0.0); }
};

template <>
struct DomainTraits<PadicNumber> {
    static PadicNumber pow(const PadicNumber& x, long e) { return x.pow(e); }
    static bool is_zero(const PadicNumber& x) { return x.is_zero(); }
    static bool equal(const PadicNumber& a, const PadicNumber& b) {
        return PadicNumber::equal_to_precision(a, b);
    }
    static PadicNumber zero_like(const PadicNumber& x) { return PadicNumber::exact_zero(x.prime()); }
};

template <class V>
bool value_is_one(const V& x) {
    return DomainTraits<V>::equal(x, V(1));
}

template <>
inline bool value_is_one<Complex>(const Complex& x) {
    return DomainTraits<Complex>::equal(x, Complex(1.0, 0.0));
}

template <>
inline bool value_is_one<PadicNumber>(const PadicNumber& x) {
    if (x.is_zero()) return false;
    return DomainTraits<PadicNumber>::equal(x, PadicNumber::one(x.prime(), x.precision()));
}

}  // namespace qlfun
