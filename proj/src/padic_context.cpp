#include "qlfun/padic_context.hpp"

namespace qlfun {

PadicQContext::PadicQContext(long p, long prec, RationalContext rat)
    : p_(p), prec_(prec), work_prec_(prec + kGuardDigits), rat_(std::move(rat)),
      teich_(std::make_unique<TeichCache>()) {
    if (!is_odd_prime(p_)) throw DomainError("PadicQContext: p must be an odd prime");
    if (prec_ < 1) throw DomainError("PadicQContext: precision must be >= 1");
    teich_->lifts.resize(std::size_t(p_));
    if (!rat_.classical()) {
        if ((rat_.q() - Rational(1)).valuation(p_) < 1)
            throw DomainError("PadicQContext: q must satisfy v_p(q - 1) >= 1");
    }
}

PadicQContext::PadicQContext(long p, long prec, const Rational& q)
    : PadicQContext(p, prec, RationalContext(q)) {}

PadicQContext PadicQContext::classical_limit(long p, long prec) {
    return PadicQContext(p, prec, RationalContext::classical_limit());
}

PadicNumber PadicQContext::teich(long a) const {
    long r = a % p_;
    if (r < 0) r += p_;
    if (r == 0) throw DomainError("teich: argument divisible by p");
    std::scoped_lock lock(teich_->mu);
    auto& slot = teich_->lifts[std::size_t(r)];
    if (!slot) slot = teichmuller(r, p_, work_prec_);
    return *slot;
}

PadicNumber PadicQContext::angle(long a) const {
    if (a % p_ == 0) throw DomainError("angle: argument divisible by p");
    return embed(qlfun::q_int(a, rat_)) / teich(a);
}

const Rational& PadicQContext::euler_rational(long m, long e) const {
    const Rational& value = rat_.euler_number(m, e);
    if (value.valuation(p_) < 0)
        throw DomainError("euler_rational: E_{m,q^e} is not a p-adic integer");
    return value;
}

PadicNumber PadicQContext::euler_embedded(long m, long e) const {
    return embed(euler_rational(m, e));
}

PadicNumber q_int(long x, const PadicQContext& ctx) { return ctx.embed(q_int(x, ctx.rational())); }

PadicNumber q_int_neg(long x, const PadicQContext& ctx) {
    return ctx.embed(q_int_neg(x, ctx.rational()));
}

PadicNumber q_frac(long a, long F, const PadicQContext& ctx) {
    return ctx.embed(q_frac(a, F, ctx.rational()));
}

PadicNumber q_euler_number(long m, const PadicQContext& ctx) { return ctx.euler_embedded(m, 1); }

PadicNumber q_euler_polynomial(long n, Fraction x, const PadicQContext& ctx) {
    return ctx.embed(q_euler_polynomial(n, x, ctx.rational()));
}

PadicNumber generalized_q_euler(long n, const DirichletCharacter<PadicNumber>& chi,
                                const PadicQContext& ctx) {
    long f = chi.modulus();
    if (f % 2 == 0) throw DomainError("generalized_q_euler: modulus of chi must be odd");
    const RationalContext& rat = ctx.rational();
    PadicNumber sum = PadicNumber::exact_zero(ctx.p());
    for (long a = 0; a < f; ++a) {
        const PadicNumber& cv = chi(a);
        if (cv.is_zero()) continue;
        Rational part = rat.q_pow(a) * q_euler_polynomial(n, Fraction{a, f}, rat);
        if (a % 2 != 0) part = -part;
        sum = sum + cv * ctx.embed(part);
    }
    Rational prefactor = (Rational(1) + rat.q()) / (Rational(1) + rat.q_pow(f)) *
                         q_int(f, rat).pow(n);
    return ctx.embed(prefactor) * sum;
}

Rational volkenborn_approx_exact(long m, long level, const PadicQContext& ctx) {
    if (m < 0) throw DomainError("volkenborn_approx: m must be nonnegative");
    if (level < 1) throw DomainError("volkenborn_approx: level must be positive");
    const RationalContext& rat = ctx.rational();
    long count = 1;
    for (long i = 0; i < level; ++i) count *= ctx.p();

    Rational sum(0);
    Rational minus_q_pow(1);  // (-q)^j
    Rational minus_q = -rat.q();
    for (long j = 0; j < count; ++j) {
        Rational term = q_int(j, rat).pow(m) * minus_q_pow;
        sum += term;
        minus_q_pow *= minus_q;
    }
    Rational weight = q_int_neg(count, rat);
    if (weight.is_zero()) throw DomainError("volkenborn_approx: [p^level]_{-q} = 0");
    return sum / weight;
}

PadicNumber volkenborn_approx(long m, long level, const PadicQContext& ctx) {
    return ctx.embed(volkenborn_approx_exact(m, level, ctx));
}

}  // namespace qlfun
