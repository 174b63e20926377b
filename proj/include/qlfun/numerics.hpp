#pragma once

#include "qlfun/bigint.hpp"
#include "qlfun/padic.hpp"
#include "qlfun/rational.hpp"

#include <complex>
#include <optional>

namespace qlfun {

// Standard binomial coefficient; 0 when k > n.
Int binomial(long n, long k);

// Falling-factorial binomial s(s-1)...(s-k+1)/k! for an arbitrary domain
// element s.  Matches binomial() when s is a nonnegative integer.
Rational generalized_binomial(const Rational& s, long k);
std::complex<double> generalized_binomial(const std::complex<double>& s, long k);
// p-adic version: the division by k! subtracts v_p(k!) from the valuation;
// if that exhausts the tracked digits a PrecisionError is raised rather
// than silently rounding.
PadicNumber generalized_binomial(const PadicNumber& s, long k);

// Results of checking the three binomial-coefficient identities used by
// the power-sum expansion, per argument triple (r, k, j).  An identity
// whose side conditions exclude the arguments is reported as excluded
// rather than pass/fail.
struct BinomialIdentityResult {
    std::optional<bool> eq22;    // excluded when r == 1 - k
    std::optional<bool> eq22_1;  // additionally excluded when r == 1
    std::optional<bool> eq23;    // excluded when r + k == 0
    bool all_hold() const {
        return eq22.value_or(true) && eq22_1.value_or(true) && eq23.value_or(true);
    }
};

// Verifies, in exact rational arithmetic,
//   (1/(r+k-1)) C(-r,k) C(1-r-k,j) = (-1/(j+k)) C(-r,k+j-1) C(k+j,j)   (22)
//   (1/(r+k-1)) C(-r,k) C(1-r-k,j) = (1/(r-1)) C(-r+1,k+j) C(k+j,j)    (22-1)
//   (r/(r+k))  C(-r-1,k) C(-r-k,j) = C(-r,k+j) C(k+j,j)                (23)
// for positive r and nonnegative k, j with j + k > 0.
BinomialIdentityResult verify_binomial_identities(long r, long k, long j);

// Teichmuller lift: the unique (p-1)-th root of unity in Z_p congruent to
// a mod p, computed modulo p^prec by iterating a -> a^p to its fixed point.
PadicNumber teichmuller(const Int& a, long p, long prec);

// base^s for v_p(base - 1) >= 1 and s in Z_p, via the binomial series
// sum_k C(s,k) (base-1)^k.  Truncation at k = prec is certified because
// C(s,k) is a p-adic integer and v_p((base-1)^k) >= k.
PadicNumber padic_power(const PadicNumber& base, const PadicNumber& s);

}  // namespace qlfun
