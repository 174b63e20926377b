#include "qlfun/zeta_arch.hpp"

#include <cmath>

namespace qlfun {

namespace {

// sup over n >= 1 of |[n + x]_Q^(-s)| for |Q| < 1: the bases lie in
// [(1-|Q|)/|1-Q|, (1+|Q|)/|1-Q|], and |b^(-s)| <= |b|^(-Re s) e^(pi |Im s|).
double power_sup(Complex s, Complex Q) {
    double lo = (1.0 - std::abs(Q)) / std::abs(1.0 - Q);
    double hi = (1.0 + std::abs(Q)) / std::abs(1.0 - Q);
    double re = s.real();
    double m = std::max(std::pow(lo, -re), std::pow(hi, -re));
    return m * std::exp(M_PI * std::abs(s.imag()));
}

Complex complex_power(Complex base, Complex minus_s) {
    if (minus_s == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    return std::pow(base, minus_s);
}

}  // namespace

SeriesResult zeta_E(Complex s, Fraction x, const ComplexContext& ctx, const Truncation& tr) {
    if (x.den < 1) throw DomainError("zeta_E: denominator of x must be positive");
    if (x.num < 0) throw DomainError("zeta_E: x must be nonnegative");
    long F = x.den;
    Complex q = ctx.q();
    Complex Q = DomainTraits<Complex>::pow(q, F);
    Complex one(1.0, 0.0);
    Complex inv_one_minus_Q = one / (one - Q);

    Complex sum(0.0, 0.0);
    Complex q_power = DomainTraits<Complex>::pow(q, x.num);  // q^(F n + a)
    Complex Qn = one;                                        // Q^n
    double sign = 1.0;
    double mag_Q = std::abs(Q);
    double sup = power_sup(s, Q);
    double tail = 0.0;
    long n = 0;
    for (;; ++n) {
        if (n > tr.max_terms)
            throw ConvergenceError("zeta_E: tail bound not reached within max_terms");
        Complex base = (one - q_power) * inv_one_minus_Q;
        Complex u;
        if (n == 0 && x.num == 0) {
            if (s == Complex(0.0, 0.0)) {
                u = one;  // 0^0 = 1 keeps the s = 0 value at 1
            } else if (s.real() >= 0.0) {
                throw DomainError("zeta_E: singular n = 0 term at x = 0 with Re(s) >= 0");
            } else {
                u = Complex(0.0, 0.0);
            }
        } else {
            u = complex_power(base, -s);
        }
        sum += sign * Qn * u;
        tail = std::abs(one + Q) * sup * std::pow(mag_Q, double(n + 1)) / (1.0 - mag_Q);
        if (n >= 1 && tail <= tr.epsilon) break;
        sign = -sign;
        Qn *= Q;
        q_power *= Q;
    }
    return SeriesResult{(one + Q) * sum, tail, n + 1};
}

SeriesResult dirichlet_l(Complex s, const DirichletCharacter<Complex>& chi,
                         const ComplexContext& ctx, const Truncation& tr) {
    Complex q = ctx.q();
    Complex one(1.0, 0.0);
    Complex inv_one_minus_q = one / (one - q);

    Complex sum(0.0, 0.0);
    Complex qn = q;
    double sign = -1.0;  // (-1)^n starting at n = 1
    double mag_q = std::abs(q);
    double sup = power_sup(s, q);
    double tail = 0.0;
    long n = 1;
    for (;; ++n) {
        if (n > tr.max_terms)
            throw ConvergenceError("dirichlet_l: tail bound not reached within max_terms");
        const Complex& cv = chi(n);
        if (cv != Complex(0.0, 0.0)) {
            Complex base = (one - qn) * inv_one_minus_q;
            sum += sign * cv * qn * complex_power(base, -s);
        }
        tail = std::abs(one + q) * sup * std::pow(mag_q, double(n + 1)) / (1.0 - mag_q);
        if (tail <= tr.epsilon) break;
        sign = -sign;
        qn *= q;
    }
    return SeriesResult{(one + q) * sum, tail, n};
}

PartialZetaResult partial_zeta(Complex s, long a, long F, const ComplexContext& ctx,
                               const Truncation& tr) {
    if (F < 1 || F % 2 == 0) throw DomainError("partial_zeta: F must be odd and positive");
    if (a <= 0 || a >= F) throw DomainError("partial_zeta: need 0 < a < F");
    Complex q = ctx.q();
    Complex one(1.0, 0.0);
    Complex inv_one_minus_q = one / (one - q);
    Complex QF = DomainTraits<Complex>::pow(q, F);

    // Residue-class series over m = a + lF.
    Complex sum(0.0, 0.0);
    Complex qm = DomainTraits<Complex>::pow(q, a);
    double sign = (a % 2 == 0) ? 1.0 : -1.0;
    double mag_q = std::abs(q);
    double mag_QF = std::abs(QF);
    double sup = power_sup(s, q);
    double tail = 0.0;
    long l = 0;
    for (;; ++l) {
        if (l > tr.max_terms)
            throw ConvergenceError("partial_zeta: tail bound not reached within max_terms");
        Complex base = (one - qm) * inv_one_minus_q;
        sum += sign * qm * complex_power(base, -s);
        tail = sup * std::pow(mag_q, double(a)) * std::pow(mag_QF, double(l + 1)) / (1.0 - mag_QF);
        if (tail <= tr.epsilon) break;
        sign = -sign;
        qm *= QF;
    }
    SeriesResult series{sum, tail, l + 1};

    // Closed form through zeta_{E,q^F}(s, a/F).
    SeriesResult inner = zeta_E(s, Fraction{a, F}, ctx, tr);
    Complex Fq = (one - QF) * inv_one_minus_q;
    Complex closed = complex_power(Fq, -s) / (one + QF) * inner.value;
    if (a % 2 != 0) closed = -closed;
    closed *= DomainTraits<Complex>::pow(q, a);

    return PartialZetaResult{series, closed, std::abs(series.value - closed)};
}

}  // namespace qlfun
