#include "qlfun/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qlfun {

void PadicNumber::check_same_prime(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw DomainError("PadicNumber: mixed primes");
}

PadicNumber PadicNumber::make(long p, long val, Int u, long window) {
    if (window <= 0) return inexact_zero(p, val + window);
    Int mod = int_pow(p, window);
    u %= mod;
    if (u < 0) u += mod;
    if (u == 0) return inexact_zero(p, val + window);
    long shift = 0;
    while (u % p == 0) {
        u /= p;
        ++shift;
    }
    long prec = window - shift;
    // shift < window since u != 0 mod p^window, so prec >= 1.
    return PadicNumber(p, val + shift, std::move(u), prec);
}

PadicNumber PadicNumber::from_int(long p, const Int& value, long prec) {
    if (!is_odd_prime(p)) throw DomainError("PadicNumber: p must be an odd prime");
    if (prec < 1) throw DomainError("PadicNumber: precision must be >= 1");
    if (value == 0) return exact_zero(p);
    Int v = value;
    long val = 0;
    while (v % p == 0) {
        v /= p;
        ++val;
    }
    Int mod = int_pow(p, prec);
    v %= mod;
    if (v < 0) v += mod;
    return PadicNumber(p, val, std::move(v), prec);
}

PadicNumber PadicNumber::from_rational(long p, const Rational& value, long prec) {
    if (value.is_zero()) {
        if (!is_odd_prime(p)) throw DomainError("PadicNumber: p must be an odd prime");
        return exact_zero(p);
    }
    PadicNumber num = from_int(p, value.numerator(), prec);
    PadicNumber den = from_int(p, value.denominator(), prec);
    return num / den;
}

const Int& PadicNumber::unit() const {
    if (zero_) throw DomainError("PadicNumber: zero element has no unit part");
    return unit_;
}

Int PadicNumber::residue(long k) const {
    if (k > abs_precision()) throw PrecisionError("PadicNumber::residue: beyond absolute precision");
    if (k <= 0) return 0;
    if (zero_) return 0;
    if (val_ < 0) throw DomainError("PadicNumber::residue: negative valuation");
    if (val_ >= k) return 0;
    Int mod = int_pow(p_, k);
    return unit_ % int_pow(p_, k - val_) * int_pow(p_, val_) % mod;
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    Int mod = int_pow(p_, prec_);
    return PadicNumber(p_, val_, mod - unit_, prec_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    PadicNumber::check_same_prime(a, b);
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    long cap = std::min(a.abs_precision(), b.abs_precision());
    if (a.zero_ && b.zero_) return PadicNumber::inexact_zero(a.p_, cap);
    if (a.zero_ || b.zero_) {
        const PadicNumber& x = a.zero_ ? b : a;
        if (x.val_ >= cap) return PadicNumber::inexact_zero(a.p_, cap);
        return PadicNumber::make(x.p_, x.val_, x.unit_, cap - x.val_);
    }
    long val = std::min(a.val_, b.val_);
    long window = cap - val;
    if (window <= 0) return PadicNumber::inexact_zero(a.p_, cap);
    Int sum = a.unit_ * int_pow(a.p_, a.val_ - val) + b.unit_ * int_pow(a.p_, b.val_ - val);
    return PadicNumber::make(a.p_, val, std::move(sum), window);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    PadicNumber::check_same_prime(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return PadicNumber::exact_zero(a.p_);
    if (a.zero_ && b.zero_) return PadicNumber::inexact_zero(a.p_, a.abs_prec_ + b.abs_prec_);
    if (a.zero_ || b.zero_) {
        const PadicNumber& z = a.zero_ ? a : b;
        const PadicNumber& x = a.zero_ ? b : a;
        return PadicNumber::inexact_zero(a.p_, z.abs_prec_ + x.val_);
    }
    long prec = std::min(a.prec_, b.prec_);
    Int u = a.unit_ * b.unit_ % int_pow(a.p_, prec);
    return PadicNumber(a.p_, a.val_ + b.val_, std::move(u), prec);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    PadicNumber::check_same_prime(a, b);
    if (b.zero_) throw PrecisionError("PadicNumber: division by (possible) zero");
    if (a.is_exact_zero()) return a;
    if (a.zero_) return PadicNumber::inexact_zero(a.p_, a.abs_prec_ - b.val_);
    long prec = std::min(a.prec_, b.prec_);
    Int mod = int_pow(a.p_, prec);
    Int u = a.unit_ * mod_inverse(b.unit_, mod) % mod;
    return PadicNumber(a.p_, a.val_ - b.val_, std::move(u), prec);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw PrecisionError("PadicNumber: inverse of (possible) zero");
    return one(p_, prec_) / *this;
}

PadicNumber PadicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) {
        if (zero_) throw DomainError("PadicNumber::pow: 0^0");
        return one(p_, prec_);
    }
    if (zero_) {
        if (is_exact_zero()) return *this;
        return inexact_zero(p_, abs_prec_ * e);
    }
    PadicNumber base = *this;
    PadicNumber result = one(p_, prec_);
    long k = e;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

PadicNumber PadicNumber::truncate(long abs_prec) const {
    if (abs_prec >= abs_precision()) return *this;
    if (zero_) return inexact_zero(p_, abs_prec);
    return make(p_, val_, unit_, abs_prec - val_);
}

long PadicNumber::agreement_exponent(const PadicNumber& a, const PadicNumber& b) {
    check_same_prime(a, b);
    long cap = std::min(a.abs_precision(), b.abs_precision());
    PadicNumber d = a - b;
    if (d.zero_) return std::min(cap, d.abs_prec_);
    return std::min(cap, d.val_);
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (zero_) {
        if (is_exact_zero()) {
            os << "0";
        } else {
            os << "O(" << p_ << "^" << abs_prec_ << ")";
        }
        return os.str();
    }
    if (val_ == 0) {
        os << unit_;
    } else {
        os << p_ << "^" << val_ << "*" << unit_;
    }
    os << " + O(" << p_ << "^" << (val_ + prec_) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicNumber& x) {
    return os << x.to_string();
}

}  // namespace qlfun
