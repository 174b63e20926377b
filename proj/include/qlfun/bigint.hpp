#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qlfun {

using Int = boost::multiprecision::cpp_int;

// Exceptions used across the library.  DomainError covers precondition
// violations (invalid q, even modulus, p | a, ...); PrecisionError covers
// p-adic precision exhaustion; ConvergenceError covers series that fail to
// reach the requested tail bound.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(const Int& base, long exp) {
    if (exp < 0) throw DomainError("int_pow: negative exponent");
    Int result = 1;
    Int b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

// Multiplicity of p in n.  n must be nonzero.
inline long int_valuation(Int n, const Int& p) {
    if (n == 0) throw DomainError("int_valuation: zero argument");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Inverse of a modulo m (gcd(a, m) must be 1).
inline Int mod_inverse(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    Int r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw DomainError("mod_inverse: arguments not coprime");
    t0 %= m;
    if (t0 < 0) t0 += m;
    return t0;
}

inline Int mod_pow(Int base, Int exp, const Int& m) {
    if (exp < 0) return mod_pow(mod_inverse(std::move(base), m), -exp, m);
    base %= m;
    if (base < 0) base += m;
    Int result = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_odd_prime(long n) { return n > 2 && is_prime(n); }

}  // namespace qlfun
