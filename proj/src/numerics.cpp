#include "qlfun/numerics.hpp"

namespace qlfun {

Int binomial(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

namespace {

Int factorial(long k) {
    Int f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

Rational generalized_binomial(const Rational& s, long k) {
    if (k < 0) throw DomainError("generalized_binomial: negative k");
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= s - Rational(i);
    return num / Rational(factorial(k));
}

std::complex<double> generalized_binomial(const std::complex<double>& s, long k) {
    if (k < 0) throw DomainError("generalized_binomial: negative k");
    std::complex<double> num(1.0, 0.0);
    for (long i = 0; i < k; ++i) num *= s - std::complex<double>(double(i), 0.0);
    return num / factorial(k).convert_to<double>();
}

PadicNumber generalized_binomial(const PadicNumber& s, long k) {
    if (k < 0) throw DomainError("generalized_binomial: negative k");
    long p = s.prime();
    long prec = s.is_zero() ? s.abs_precision() : s.precision();
    if (k == 0) return PadicNumber::one(p, std::max<long>(prec, 1));
    PadicNumber num = s;
    for (long i = 1; i < k; ++i) num = num * (s - PadicNumber::from_int(p, i, prec));
    PadicNumber result = num / PadicNumber::from_int(p, factorial(k), prec);
    if (!result.is_zero() && result.precision() < 1)
        throw PrecisionError("generalized_binomial: p-adic precision exhausted by division");
    return result;
}

BinomialIdentityResult verify_binomial_identities(long r, long k, long j) {
    if (r < 1) throw DomainError("verify_binomial_identities: r must be a positive integer");
    if (k < 0 || j < 0) throw DomainError("verify_binomial_identities: k, j must be nonnegative");
    if (j + k == 0) throw DomainError("verify_binomial_identities: j + k must be positive");

    BinomialIdentityResult out;
    Rational cr = generalized_binomial(Rational(-r), k);          // C(-r, k)
    Rational ckj = Rational(binomial(k + j, j));                  // C(k+j, j)

    if (r != 1 - k) {
        Rational lhs = cr * generalized_binomial(Rational(1 - r - k), j) / Rational(r + k - 1);
        out.eq22 = lhs == Rational(-1, Int(j + k)) * generalized_binomial(Rational(-r), k + j - 1) * ckj;
        if (r != 1)
            out.eq22_1 = lhs == generalized_binomial(Rational(-r + 1), k + j) * ckj / Rational(r - 1);
    }
    if (r + k != 0) {
        Rational lhs23 = Rational(r, Int(r + k)) * generalized_binomial(Rational(-r - 1), k) *
                         generalized_binomial(Rational(-r - k), j);
        out.eq23 = lhs23 == generalized_binomial(Rational(-r), k + j) * ckj;
    }
    return out;
}

PadicNumber teichmuller(const Int& a, long p, long prec) {
    if (!is_odd_prime(p)) throw DomainError("teichmuller: p must be an odd prime");
    if (prec < 1) throw DomainError("teichmuller: precision must be >= 1");
    if (a % p == 0) throw DomainError("teichmuller: argument divisible by p");
    Int mod = int_pow(p, prec);
    Int x = a % mod;
    if (x < 0) x += mod;
    for (long i = 0; i < prec + 1; ++i) {
        Int next = mod_pow(x, p, mod);
        if (next == x) break;
        x = next;
    }
    return PadicNumber::from_int(p, x, prec);
}

PadicNumber padic_power(const PadicNumber& base, const PadicNumber& s) {
    long p = base.prime();
    if (s.prime() != p) throw DomainError("padic_power: mixed primes");
    long prec = base.is_zero() ? base.abs_precision() : base.precision();
    PadicNumber t = base - PadicNumber::one(p, prec);
    if (!t.is_zero() && t.valuation() < 1)
        throw DomainError("padic_power: base must satisfy v_p(base - 1) >= 1");
    if (!s.is_zero() && s.valuation() < 0)
        throw DomainError("padic_power: exponent must lie in Z_p");

    PadicNumber sum = PadicNumber::one(p, prec);
    PadicNumber tk = PadicNumber::one(p, prec);
    for (long k = 1; k <= prec; ++k) {
        tk = tk * t;
        if (tk.is_zero() && !tk.is_exact_zero() && tk.abs_precision() >= prec) break;
        if (tk.is_exact_zero()) break;
        sum = sum + generalized_binomial(s, k) * tk;
    }
    return sum;
}

}  // namespace qlfun
