#pragma once

#include "qlfun/bigint.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <limits>
#include <string>

namespace qlfun {

// Exact rational number, always kept in lowest terms with positive
// denominator.  Backed by boost::multiprecision::cpp_rational, which
// maintains exactly that normal form; this wrapper pins the serialization
// format ("num/den") and the handful of number-theoretic helpers the rest
// of the library needs (integer powers, p-adic valuation).
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
    }
    explicit Rational(Backend v) : v_(std::move(v)) {}

    // Parses "a/b" or "a" (optionally signed decimal integers).
    static Rational parse(const std::string& text);

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }
    const Backend& backend() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // x^e with exact inversion for negative e (x must be nonzero then).
    Rational pow(long e) const;

    // p-adic valuation v_p; +infinity (kInfValuation) for zero.
    long valuation(long p) const;

    Rational inverse() const {
        if (is_zero()) throw DomainError("Rational: inverse of zero");
        return Rational(Backend(1) / v_);
    }

    double to_double() const { return v_.convert_to<double>(); }

    // Canonical serialization, always "num/den".
    std::string to_string() const;

    static constexpr long kInfValuation = std::numeric_limits<long>::max() / 4;

private:
    Backend v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qlfun
