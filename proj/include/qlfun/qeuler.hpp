#pragma once

#include "qlfun/characters.hpp"
#include "qlfun/domain.hpp"
#include "qlfun/numerics.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <type_traits>
#include <utility>

namespace qlfun {

// Exact fraction argument a/F for q-Euler polynomial evaluation points.
// Fractional x is always carried this way so that the power q^x stays an
// exact domain element: E_{n,Q}(a/F) is evaluated with Q = q^F, for which
// Q^(a/F) = q^a.
struct Fraction {
    long num = 0;
    long den = 1;
};

// Classical Euler numbers E_m (coefficients of 2/(e^t+1), via the
// recurrence E_0 = 1, E_n = -(1/2) sum_{k<n} C(n,k) E_k) and the matching
// polynomials E_n(x) = sum_k C(n,k) E_k x^(n-k).
Rational classical_euler_number(long m);
Rational classical_euler_polynomial(long n, const Rational& x);

// Validated computation context: the value q in one of the supported
// domains, plus a memo table for the q-Euler numbers E_{m, q^e} that the
// series of the p-adic theory reuse heavily.  The classical limit q = 1
// (rational domain only) is a separate code path computing the ordinary
// Euler numbers and polynomials.
//
// Contexts are immutable apart from the memo table, which behaves as a
// pure function table and is safe for concurrent lookup/insert.
template <class V>
class QContext {
public:
    explicit QContext(V q, bool classical = false)
        : q_(std::move(q)), classical_(classical), cache_(std::make_unique<Cache>()) {
        validate();
    }

    static QContext classical_limit() {
        static_assert(std::is_same_v<V, Rational>, "classical limit lives in the rational domain");
        return QContext(V(1), true);
    }

    const V& q() const { return q_; }
    bool classical() const { return classical_; }
    V q_pow(long e) const { return DomainTraits<V>::pow(q_, e); }

    // E_{m, q^e}, memoized by (m, e).
    const V& euler_number(long m, long e = 1) const;

private:
    void validate();

    struct Cache {
        std::map<std::pair<long, long>, V> table;
        std::mutex mu;
    };

    V q_;
    bool classical_;
    std::unique_ptr<Cache> cache_;
};

using RationalContext = QContext<Rational>;
using ComplexContext = QContext<Complex>;

template <class V>
void QContext<V>::validate() {
    if constexpr (std::is_same_v<V, Rational>) {
        if (classical_) {
            if (q_ != Rational(1)) throw DomainError("QContext: classical path requires q = 1");
        } else if (q_.is_zero() || q_ == Rational(1) || q_ == Rational(-1)) {
            throw DomainError("QContext: rational q must avoid {0, 1, -1}");
        }
    } else {
        if (classical_) throw DomainError("QContext: classical path lives in the rational domain");
        double mag = std::abs(q_);
        if (!(mag > 0.0) || !(mag < 1.0)) throw DomainError("QContext: complex q requires 0 < |q| < 1");
    }
}

template <class V>
const V& QContext<V>::euler_number(long m, long e) const {
    if (m < 0) throw DomainError("euler_number: m must be nonnegative");
    if (e < 1) throw DomainError("euler_number: base power must be positive");
    if (classical_) e = 1;  // E_{m,1} does not depend on the base power
    std::scoped_lock lock(cache_->mu);
    auto key = std::make_pair(m, e);
    auto it = cache_->table.find(key);
    if (it != cache_->table.end()) return it->second;

    V value = [&]() -> V {
        if constexpr (std::is_same_v<V, Rational>) {
            if (classical_) return classical_euler_number(m);
        }
        const V one = DomainTraits<V>::from_long(1);
        V Q = q_pow(e);
        V sum = DomainTraits<V>::from_long(0);
        for (long i = 0; i <= m; ++i) {
            V den = one + DomainTraits<V>::pow(Q, i + 1);
            if (DomainTraits<V>::is_zero(den))
                throw DomainError("euler_number: denominator 1 + q^" + std::to_string(i + 1) + " vanishes");
            V term = DomainTraits<V>::from_rational(Rational(binomial(m, i))) / den;
            sum = (i % 2 == 0) ? sum + term : sum - term;
        }
        V inv_one_minus_q = one / (one - Q);
        return (one + Q) * DomainTraits<V>::pow(inv_one_minus_q, m) * sum;
    }();
    auto [pos, inserted] = cache_->table.emplace(key, std::move(value));
    (void)inserted;
    return pos->second;
}

// [x]_{q^e}; x may be negative (closed form); classical limit gives x.
template <class V>
V q_int_base(long x, long e, const QContext<V>& ctx) {
    if (ctx.classical()) return DomainTraits<V>::from_long(x);
    const V one = DomainTraits<V>::from_long(1);
    return (one - ctx.q_pow(e * x)) / (one - ctx.q_pow(e));
}

// [x]_q = (1 - q^x)/(1 - q).
template <class V>
V q_int(long x, const QContext<V>& ctx) {
    return q_int_base(x, 1, ctx);
}

// [x]_{-q} = (1 - (-q)^x)/(1 + q), the alternating expansion 1 - q + q^2 - ...
template <class V>
V q_int_neg(long x, const QContext<V>& ctx) {
    const V one = DomainTraits<V>::from_long(1);
    V den = one + ctx.q();
    if (DomainTraits<V>::is_zero(den)) throw DomainError("q_int_neg: q = -1");
    V minus_q_pow = ctx.q_pow(x);
    if (x % 2 != 0) minus_q_pow = DomainTraits<V>::from_long(0) - minus_q_pow;
    return (one - minus_q_pow) / den;
}

// [a/F]_{q^F} = [a]_q / [F]_q.
template <class V>
V q_frac(long a, long F, const QContext<V>& ctx) {
    if (F < 1) throw DomainError("q_frac: F must be positive");
    V den = q_int(F, ctx);
    if (DomainTraits<V>::is_zero(den)) throw DomainError("q_frac: [F]_q = 0");
    return q_int(a, ctx) / den;
}

template <class V>
V q_euler_number(long m, const QContext<V>& ctx) {
    return ctx.euler_number(m, 1);
}

// E_{n, q^F}(a/F) with Q = q^F and Q^(a/F) = q^a:
//   [2]_Q (1/(1-Q))^n sum_k C(n,k) (-q^a)^k / (1 + Q^(k+1)).
// Plain E_{n,q}(x) at integer x is the F = 1 case.
template <class V>
V q_euler_polynomial(long n, Fraction x, const QContext<V>& ctx) {
    if (n < 0) throw DomainError("q_euler_polynomial: n must be nonnegative");
    if (x.den < 1) throw DomainError("q_euler_polynomial: denominator of x must be positive");
    if constexpr (std::is_same_v<V, Rational>) {
        if (ctx.classical()) return classical_euler_polynomial(n, Rational(Int(x.num), Int(x.den)));
    }
    const V one = DomainTraits<V>::from_long(1);
    V Q = ctx.q_pow(x.den);
    V qx = ctx.q_pow(x.num);
    V sum = DomainTraits<V>::from_long(0);
    V qx_pow = one;
    for (long k = 0; k <= n; ++k) {
        V den = one + DomainTraits<V>::pow(Q, k + 1);
        if (DomainTraits<V>::is_zero(den))
            throw DomainError("q_euler_polynomial: denominator 1 + q^" + std::to_string(k + 1) + " vanishes");
        V term = DomainTraits<V>::from_rational(Rational(binomial(n, k))) * qx_pow / den;
        sum = (k % 2 == 0) ? sum + term : sum - term;
        qx_pow = qx_pow * qx;
    }
    V inv_one_minus_q = one / (one - Q);
    return (one + Q) * DomainTraits<V>::pow(inv_one_minus_q, n) * sum;
}

// E_{n,q}(x) = sum_j C(n,j) q^(jx) E_{j,q} [x]_q^(n-j), integer x >= 0.
template <class V>
V q_euler_polynomial_binomial(long n, long x, const QContext<V>& ctx) {
    if (n < 0) throw DomainError("q_euler_polynomial_binomial: n must be nonnegative");
    if (x < 0) throw DomainError("q_euler_polynomial_binomial: x must be nonnegative");
    V xq = q_int(x, ctx);
    V sum = DomainTraits<V>::from_long(0);
    for (long j = 0; j <= n; ++j) {
        V term = DomainTraits<V>::from_rational(Rational(binomial(n, j))) * ctx.q_pow(j * x) *
                 ctx.euler_number(j) * DomainTraits<V>::pow(xq, n - j);
        sum = sum + term;
    }
    return sum;
}

// E_{n,chi,q} = ([2]_q/[2]_{q^f}) [f]_q^n sum_a chi(a) (-1)^a q^a E_{n,q^f}(a/f).
template <class V>
V generalized_q_euler(long n, const DirichletCharacter<V>& chi, const QContext<V>& ctx) {
    long f = chi.modulus();
    if (f % 2 == 0) throw DomainError("generalized_q_euler: modulus of chi must be odd");
    const V one = DomainTraits<V>::from_long(1);
    V sum = DomainTraits<V>::from_long(0);
    for (long a = 0; a < f; ++a) {
        const V& cv = chi(a);
        if (DomainTraits<V>::is_zero(cv)) continue;
        V term = cv * ctx.q_pow(a) * q_euler_polynomial(n, Fraction{a, f}, ctx);
        sum = (a % 2 == 0) ? sum + term : sum - term;
    }
    V prefactor = (one + ctx.q()) / (one + ctx.q_pow(f)) * DomainTraits<V>::pow(q_int(f, ctx), n);
    return prefactor * sum;
}

// [2]_q sum_{l<n} (-1)^l q^l [l]_q^m by direct summation (0^0 = 1).
template <class V>
V alt_power_sum(long n, long m, const QContext<V>& ctx) {
    if (n < 0 || m < 0) throw DomainError("alt_power_sum: arguments must be nonnegative");
    V sum = DomainTraits<V>::from_long(0);
    for (long l = 0; l < n; ++l) {
        V term = ctx.q_pow(l) * DomainTraits<V>::pow(q_int(l, ctx), m);
        sum = (l % 2 == 0) ? sum + term : sum - term;
    }
    return (DomainTraits<V>::from_long(1) + ctx.q()) * sum;
}

// (-1)^(n+1) q^n sum_{l<m} C(m,l) q^(nl) E_{l,q} [n]_q^(m-l)
//   + ((-1)^(n+1) q^(n(m+1)) + 1) E_{m,q}.
template <class V>
V alt_power_sum_closed(long n, long m, const QContext<V>& ctx) {
    if (n < 0) throw DomainError("alt_power_sum_closed: n must be nonnegative");
    if (m < 1) throw DomainError("alt_power_sum_closed: m must be >= 1");
    const V one = DomainTraits<V>::from_long(1);
    V nq = q_int(n, ctx);
    V sum = DomainTraits<V>::from_long(0);
    for (long l = 0; l < m; ++l) {
        sum = sum + DomainTraits<V>::from_rational(Rational(binomial(m, l))) * ctx.q_pow(n * l) *
                        ctx.euler_number(l) * DomainTraits<V>::pow(nq, m - l);
    }
    V head = ctx.q_pow(n) * sum;
    V tail_coeff = ctx.q_pow(n * (m + 1));
    if (n % 2 == 0) {  // (-1)^(n+1) = -1
        head = DomainTraits<V>::from_long(0) - head;
        tail_coeff = one - tail_coeff;
    } else {
        tail_coeff = one + tail_coeff;
    }
    return head + tail_coeff * ctx.euler_number(m);
}

// Both sides of the distribution relation, odd m, base Q = q^(x.den):
// E_{n,Q}(x) vs ([2]_Q/[2]_{Q^m}) [m]_Q^n sum_{a<m} (-1)^a Q^a E_{n,Q^m}((a+x)/m).
template <class V>
std::pair<V, V> distribution_sides(long n, long m, Fraction x, const QContext<V>& ctx) {
    if (m < 1 || m % 2 == 0) throw DomainError("distribution_sides: m must be an odd positive integer");
    long F = x.den;
    if (F < 1) throw DomainError("distribution_sides: denominator of x must be positive");
    V lhs = q_euler_polynomial(n, x, ctx);

    const V one = DomainTraits<V>::from_long(1);
    V sum = DomainTraits<V>::from_long(0);
    for (long a = 0; a < m; ++a) {
        V term = ctx.q_pow(a * F) * q_euler_polynomial(n, Fraction{a * F + x.num, F * m}, ctx);
        sum = (a % 2 == 0) ? sum + term : sum - term;
    }
    V prefactor = (one + ctx.q_pow(F)) / (one + ctx.q_pow(F * m)) *
                  DomainTraits<V>::pow(q_int_base(m, F, ctx), n);
    return {lhs, prefactor * sum};
}

}  // namespace qlfun
