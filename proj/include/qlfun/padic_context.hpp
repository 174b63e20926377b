#pragma once

#include "qlfun/padic.hpp"
#include "qlfun/qeuler.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace qlfun {

// p-adic computation context: an odd prime p, a working precision, and a
// rational q embedded in Q_p with v_p(q - 1) >= 1 (or the classical limit
// q = 1).  All q-Euler quantities are computed exactly in the rational
// engine and embedded afterwards, so precision is spent only where the
// genuinely p-adic series of the l-function machinery demand it.
//
// Internally a few guard digits are kept on top of the requested
// precision; reported results carry their actually-achieved precision.
class PadicQContext {
public:
    static constexpr long kGuardDigits = 5;

    PadicQContext(long p, long prec, const Rational& q);
    static PadicQContext classical_limit(long p, long prec);

    long p() const { return p_; }
    long precision() const { return prec_; }
    long work_precision() const { return work_prec_; }
    bool classical() const { return rat_.classical(); }
    const Rational& q() const { return rat_.q(); }
    const RationalContext& rational() const { return rat_; }

    PadicNumber embed(const Rational& x) const { return PadicNumber::from_rational(p_, x, work_prec_); }

    // Teichmuller lift w(a) (depends on a mod p only); cached.
    PadicNumber teich(long a) const;

    // <a> = [a]_q / w(a), a coprime to p; satisfies v_p(<a> - 1) >= 1.
    PadicNumber angle(long a) const;

    // E_{m, q^e} with the p-adic integrality v_p >= 0 asserted.
    const Rational& euler_rational(long m, long e = 1) const;
    PadicNumber euler_embedded(long m, long e = 1) const;

private:
    PadicQContext(long p, long prec, RationalContext rat);

    long p_;
    long prec_;
    long work_prec_;
    RationalContext rat_;
    struct TeichCache {
        std::vector<std::optional<PadicNumber>> lifts;
        std::mutex mu;
    };
    std::unique_ptr<TeichCache> teich_;
};

// p-adic context overloads of the q-integer / q-Euler surface.
PadicNumber q_int(long x, const PadicQContext& ctx);
PadicNumber q_int_neg(long x, const PadicQContext& ctx);
PadicNumber q_frac(long a, long F, const PadicQContext& ctx);
PadicNumber q_euler_number(long m, const PadicQContext& ctx);
PadicNumber q_euler_polynomial(long n, Fraction x, const PadicQContext& ctx);
PadicNumber generalized_q_euler(long n, const DirichletCharacter<PadicNumber>& chi,
                                const PadicQContext& ctx);

// Finite-level approximant of the integral defining E_{m,q}:
//   (1/[p^level]_{-q}) sum_{j < p^level} [j]_q^m (-q)^j.
// The exact rational value; its p-adic distance to E_{m,q} shrinks as the
// level grows.
Rational volkenborn_approx_exact(long m, long level, const PadicQContext& ctx);
PadicNumber volkenborn_approx(long m, long level, const PadicQContext& ctx);

}  // namespace qlfun
