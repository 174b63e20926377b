#pragma once

#include "qlfun/bigint.hpp"
#include "qlfun/rational.hpp"

#include <limits>
#include <string>

namespace qlfun {

// Element of Q_p known to a finite number of significant p-adic digits.
//
// A nonzero element is stored as p^val * unit with 0 < unit < p^prec and
// p !| unit; the value is known modulo p^(val + prec), i.e. `prec` is the
// relative precision and val + prec the absolute precision.  A "zero"
// element carries only an absolute precision M and means: some value
// congruent to 0 modulo p^M (M = kInfPrec for the exact zero).
//
// Precision tracking is conservative throughout: multiplication keeps the
// minimum of the relative precisions, addition aligns valuations and may
// lose digits to cancellation, and no operation ever claims more digits
// than the inputs justify.  Comparisons report the achieved agreement
// exponent rather than a bare yes/no.
class PadicNumber {
public:
    static constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;

    static PadicNumber exact_zero(long p) { return PadicNumber(p, kInfPrec); }
    static PadicNumber inexact_zero(long p, long abs_prec) { return PadicNumber(p, abs_prec); }
    static PadicNumber from_int(long p, const Int& value, long prec);
    static PadicNumber from_rational(long p, const Rational& value, long prec);
    static PadicNumber one(long p, long prec) { return from_int(p, 1, prec); }

    long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_prec_ == kInfPrec; }

    // Valuation of the value; for a zero element this is only a lower
    // bound (the absolute precision).
    long valuation() const { return zero_ ? abs_prec_ : val_; }
    long precision() const { return zero_ ? 0 : prec_; }
    long abs_precision() const { return zero_ ? abs_prec_ : val_ + prec_; }
    const Int& unit() const;

    // Representative of the value modulo p^k (requires k <= abs_precision
    // and a nonnegative-valuation representation).
    Int residue(long k) const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    PadicNumber inverse() const;
    PadicNumber pow(long e) const;

    // Forgets digits beyond absolute precision abs_prec (used to fold a
    // series truncation certificate into the tracked precision).
    PadicNumber truncate(long abs_prec) const;

    // Largest exponent e (capped by the common absolute precision) with
    // a == b (mod p^e).  kInfPrec when both are the exact same value to
    // unlimited precision.
    static long agreement_exponent(const PadicNumber& a, const PadicNumber& b);

    // Agreement up to the full common absolute precision.
    static bool equal_to_precision(const PadicNumber& a, const PadicNumber& b) {
        long cap = std::min(a.abs_precision(), b.abs_precision());
        return agreement_exponent(a, b) >= cap;
    }

    std::string to_string() const;

private:
    PadicNumber(long p, long abs_prec) : p_(p), zero_(true), abs_prec_(abs_prec) {}
    PadicNumber(long p, long val, Int unit, long prec)
        : p_(p), zero_(false), val_(val), unit_(std::move(unit)), prec_(prec), abs_prec_(0) {}

    // Canonicalizes p^val * u known to relative window `window` digits:
    // reduces u, strips p-factors into the valuation, and degrades to an
    // inexact zero when the whole window cancels.
    static PadicNumber make(long p, long val, Int u, long window);

    static void check_same_prime(const PadicNumber& a, const PadicNumber& b);

    long p_;
    bool zero_;
    long val_ = 0;
    Int unit_ = 0;
    long prec_ = 0;
    long abs_prec_;
};

std::ostream& operator<<(std::ostream& os, const PadicNumber& x);

}  // namespace qlfun
