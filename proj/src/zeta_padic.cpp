#include "qlfun/zeta_padic.hpp"

#include <numeric>

namespace qlfun {

namespace {

// q^a [F]_q / [a]_q, the series ratio of the partial zeta expansion;
// has valuation v_p(F) >= 1 since F is a multiple of p.
Rational series_ratio(long a, long F, const RationalContext& rat) {
    return rat.q_pow(a) * q_int(F, rat) / q_int(a, rat);
}

void check_residue(long a, long F, long p) {
    if (a <= 0 || a >= F) throw DomainError("partial zeta: need 0 < a < F");
    if (a % p == 0) throw DomainError("partial zeta: a must be coprime to p");
}

}  // namespace

PadicLContext::PadicLContext(const PadicQContext& base, DirichletCharacter<PadicNumber> chi)
    : base_(&base), chi_(std::move(chi)), chi_primitive_(chi_.primitive()), F_(0) {
    for (const PadicNumber& v : chi_.values())
        if (v.prime() != base.p()) throw DomainError("PadicLContext: character prime != context prime");
    long cond = chi_.conductor();
    if (cond % 2 == 0) throw DomainError("PadicLContext: even conductor unsupported");
    F_ = std::lcm(base.p(), cond);
    Rational two_qF = Rational(1) + base.rational().q_pow(F_);
    if (two_qF.valuation(base.p()) != 0)
        throw DomainError("PadicLContext: [2]_{q^F} is not a p-adic unit");
}

PadicNumber partial_zeta_padic(long s, long a, const PadicLContext& ctx) {
    const PadicQContext& b = ctx.base();
    const RationalContext& rat = b.rational();
    long F = ctx.F();
    check_residue(a, F, b.p());

    long K = b.work_precision();
    bool finite = s <= 0;
    long jmax = finite ? -s : K;
    Rational ratio = series_ratio(a, F, rat);
    Rational sum(0);
    Rational rpow(1);
    for (long j = 0; j <= jmax; ++j) {
        if (j > 0) rpow *= ratio;
        Rational c = generalized_binomial(Rational(-s), j);
        if (c.is_zero()) continue;
        sum += c * rpow * b.euler_rational(j, F);
    }
    Rational part = rat.q_pow(a) / (Rational(1) + rat.q_pow(F)) * q_int(a, rat).pow(-s) * sum;
    if (a % 2 != 0) part = -part;
    PadicNumber out = b.embed(part) * b.teich(a).pow(s);
    return finite ? out : out.truncate(K + 1);
}

PadicNumber partial_zeta_padic(const PadicNumber& s, long a, const PadicLContext& ctx) {
    const PadicQContext& b = ctx.base();
    const RationalContext& rat = b.rational();
    long F = ctx.F();
    check_residue(a, F, b.p());
    if (!s.is_zero() && s.valuation() < 0)
        throw DomainError("partial_zeta_padic: s must lie in Z_p");

    long K = b.work_precision();
    PadicNumber minus_s = -s;
    PadicNumber angle_pow = padic_power(b.angle(a), minus_s);
    Rational ratio = series_ratio(a, F, rat);
    PadicNumber sum = PadicNumber::exact_zero(b.p());
    Rational rpow(1);
    for (long j = 0; j <= K; ++j) {
        if (j > 0) rpow *= ratio;
        sum = sum + generalized_binomial(minus_s, j) * b.embed(rpow * b.euler_rational(j, F));
    }
    sum = sum.truncate(K + 1);
    Rational pref = rat.q_pow(a) / (Rational(1) + rat.q_pow(F));
    if (a % 2 != 0) pref = -pref;
    return b.embed(pref) * angle_pow * sum;
}

namespace {

template <class S>
PadicNumber padic_l_impl(const S& s, const PadicLContext& ctx) {
    const PadicQContext& b = ctx.base();
    const DirichletCharacter<PadicNumber>& chi = ctx.chi_primitive();
    PadicNumber acc = PadicNumber::exact_zero(b.p());
    for (long a = 1; a <= ctx.F(); ++a) {
        if (a % b.p() == 0) continue;
        const PadicNumber& cv = chi(a);
        if (cv.is_zero()) continue;
        acc = acc + cv * partial_zeta_padic(s, a, ctx);
    }
    return b.embed(Rational(1) + b.rational().q()) * acc;
}

}  // namespace

PadicNumber padic_l(long s, const PadicLContext& ctx) { return padic_l_impl(s, ctx); }
PadicNumber padic_l(const PadicNumber& s, const PadicLContext& ctx) { return padic_l_impl(s, ctx); }

PadicNumber t_euler(long n, long s, long a, const PadicLContext& ctx) {
    if (n < 0) throw DomainError("t_euler: n must be nonnegative");
    const PadicQContext& b = ctx.base();
    const RationalContext& rat = b.rational();
    long F = ctx.F();
    check_residue(a, F, b.p());

    long K = b.work_precision();
    bool finite = s <= 0;
    long kmax = finite ? -s : K;
    Rational ratio = series_ratio(a, F, rat);
    Rational sum(0);
    Rational rpow(1);
    for (long k = 0; k <= kmax; ++k) {
        if (k > 0) rpow *= ratio;
        Rational c = generalized_binomial(Rational(-s), k);
        if (c.is_zero()) continue;
        Rational factor = rat.q_pow(F * n * (k + 1));
        if (n % 2 != 0) factor = -factor;
        factor -= Rational(1);
        sum += c * rpow * factor * b.euler_rational(k, F);
    }
    Rational part = rat.q_pow(a) * q_int(a, rat).pow(-s) * sum;
    if (a % 2 != 0) part = -part;
    PadicNumber out = b.embed(part) * b.teich(a).pow(s);
    return finite ? out : out.truncate(K + 1);
}

PadicNumber j_correction(long k, long s, long a, const PadicLContext& ctx) {
    if (k < 1) throw DomainError("j_correction: k must be >= 1");
    const PadicQContext& b = ctx.base();
    const RationalContext& rat = b.rational();
    PadicNumber h = partial_zeta_padic(s, a, ctx);
    PadicNumber wa = b.teich(a);
    PadicNumber ang = b.angle(a);
    Rational qm1 = rat.q() - Rational(1);
    PadicNumber acc = PadicNumber::exact_zero(b.p());
    for (long j = 1; j <= k; ++j) {
        Rational coeff = Rational(binomial(k, j)) * qm1.pow(j);
        if (coeff.is_zero()) continue;  // classical limit: every term carries (q-1)^j
        acc = acc + b.embed(coeff) * wa.pow(j) * ang.pow(j);
    }
    return acc * h;
}

PadicNumber k_correction(long n, long s, long a, const PadicLContext& ctx) {
    if (n < 1) throw DomainError("k_correction: n must be >= 1");
    const PadicQContext& b = ctx.base();
    const RationalContext& rat = b.rational();
    long F = ctx.F();
    check_residue(a, F, b.p());

    long K = b.work_precision();
    bool finite = s <= 0;
    long lmax = finite ? -s : K;
    Rational ratio = series_ratio(a, F, rat);
    Rational z = q_int(n * F, rat) * (rat.q() - Rational(1));  // [nF]_q (q-1)
    Rational sum(0);
    Rational rpow(1);
    for (long l = 0; l <= lmax; ++l) {
        if (l > 0) rpow *= ratio;
        Rational c = generalized_binomial(Rational(-s), l);
        if (c.is_zero()) continue;
        Rational inner(0);  // q^(nFl) minus its j = 0 term, per the binomial split
        Rational zpow(1);
        for (long j = 1; j <= l; ++j) {
            zpow *= z;
            inner += Rational(binomial(l, j)) * zpow;
        }
        if (inner.is_zero()) continue;
        sum += c * rpow * inner * b.euler_rational(l, F);
    }
    Rational part = rat.q_pow(a) / (Rational(1) + rat.q_pow(F)) * q_int(a, rat).pow(-s) * sum;
    if (a % 2 != 0) part = -part;
    PadicNumber out = b.embed(part) * b.teich(a).pow(s);
    return finite ? out : out.truncate(K + 1);
}

Rational theorem5_lhs_exact(long n, long r, const PadicQContext& base) {
    if (n < 0) throw DomainError("theorem5_lhs: n must be nonnegative");
    if (r < 1) throw DomainError("theorem5_lhs: r must be >= 1");
    const RationalContext& rat = base.rational();
    Rational acc(0);
    for (long j = 1; j <= n * base.p(); ++j) {
        if (j % base.p() == 0) continue;
        Rational term = rat.q_pow(j) / q_int(j, rat).pow(r);
        if (j % 2 != 0) term = -term;
        acc += term;
    }
    return (Rational(1) + rat.q()) * acc;
}

PadicNumber theorem5_lhs(long n, long r, const PadicQContext& base) {
    return base.embed(theorem5_lhs_exact(n, r, base));
}

Eq24Sides eq24_residue_sides(long n, long r, long a, long F, const PadicQContext& base) {
    if (n < 0) throw DomainError("eq24: n must be nonnegative");
    if (r < 1) throw DomainError("eq24: r must be >= 1");
    if (F % base.p() != 0 || F % 2 == 0) throw DomainError("eq24: F must be an odd multiple of p");
    check_residue(a, F, base.p());
    const RationalContext& rat = base.rational();
    long K = base.work_precision();

    Rational lhs(0);
    for (long l = 0; l < n; ++l) {
        Rational term = rat.q_pow(F * l + a) / q_int(F * l + a, rat).pow(r);
        if ((l + a) % 2 != 0) term = -term;
        lhs += term;
    }

    // Expansion through the alternating power-sum closed form, base Q = q^F.
    Rational two_Q = Rational(1) + rat.q_pow(F);
    Rational n_Q = q_int_base(n, F, rat);
    Rational Qn = rat.q_pow(F * n);
    Rational ratio = series_ratio(a, F, rat);
    bool n_even = n % 2 == 0;

    Rational sum(0);
    Rational rpow(1);
    for (long s = 0; s <= K; ++s) {
        if (s > 0) rpow *= ratio;
        Rational c = generalized_binomial(Rational(-r), s);

        Rational inner(0);
        for (long l = 0; l < s; ++l) {
            inner += Rational(binomial(s, l)) * rat.q_pow(F * n * l) * base.euler_rational(l, F) *
                     n_Q.pow(s - l);
        }
        Rational head = Qn * inner;
        Rational tail_coeff = rat.q_pow(F * n * (s + 1));
        if (n_even) {  // (-1)^(n+1) = -1
            head = -head;
            tail_coeff = Rational(1) - tail_coeff;
        } else {
            tail_coeff = Rational(1) + tail_coeff;
        }
        sum += c * rpow * (head + tail_coeff * base.euler_rational(s, F)) / two_Q;
    }
    Rational rhs = rat.q_pow(a) * q_int(a, rat).pow(-r) * sum;
    if (a % 2 != 0) rhs = -rhs;

    return Eq24Sides{std::move(lhs), std::move(rhs), K + 1};
}

Rational theorem5_reconstruction(long n, long r, const PadicQContext& base) {
    const RationalContext& rat = base.rational();
    long p = base.p();
    Rational acc(0);
    for (long a = 1; a < p; ++a) acc += eq24_residue_sides(n, r, a, p, base).rhs;
    return (Rational(1) + rat.q()) * acc;
}

PadicNumber theorem5_rhs(long n, long r, const PadicQContext& base, Theorem5Form form) {
    if (n < 1) throw DomainError("theorem5_rhs: n must be >= 1");
    if (r < 1) throw DomainError("theorem5_rhs: r must be >= 1");
    const RationalContext& rat = base.rational();
    long p = base.p();
    long K = base.work_precision();
    long shift = form == Theorem5Form::kLiteralWShift ? 1 : 0;
    long k0 = form == Theorem5Form::kDerived ? 1 : 0;

    Rational two_q = Rational(1) + rat.q();
    Rational pn_q = q_int(p * n, rat);
    PadicNumber acc = PadicNumber::exact_zero(p);
    for (long k = k0; k <= K; ++k) {
        DirichletCharacter<PadicNumber> chi_k =
            teichmuller_power(shift - r - k, p, base.work_precision());
        PadicLContext ctxk(base, chi_k);

        PadicNumber l_value = padic_l(r + k, ctxk);

        PadicNumber k_agg = PadicNumber::exact_zero(p);
        for (long a = 1; a < p; ++a) {
            PadicNumber item = base.embed(rat.q_pow(a * k)) * k_correction(n, r + k, a, ctxk);
            if (k >= 1) item = item + j_correction(k, r + k, a, ctxk);
            k_agg = k_agg + chi_k(a) * item;
        }
        k_agg = base.embed(two_q) * k_agg;

        Rational coef = Rational(r, Int(r + k)) * generalized_binomial(Rational(-r - 1), k) *
                        rat.q_pow(p * n) * pn_q.pow(k);
        if (n % 2 != 0) coef = -coef;
        acc = acc + base.embed(coef) * (l_value + k_agg);
    }

    DirichletCharacter<PadicNumber> chi_t = teichmuller_power(shift - r, p, base.work_precision());
    PadicLContext ctxt(base, chi_t);
    PadicNumber t_agg = PadicNumber::exact_zero(p);
    for (long a = 1; a < p; ++a) t_agg = t_agg + chi_t(a) * t_euler(n, r, a, ctxt);
    t_agg = base.embed(two_q) * t_agg;
    if (form == Theorem5Form::kDerived)
        t_agg = t_agg / base.embed(Rational(1) + rat.q_pow(p));

    PadicNumber rhs = PadicNumber::exact_zero(p) - acc - t_agg;
    return rhs.truncate(K + 1);
}

std::pair<Rational, Rational> remark_a_sides(long p, const Rational& q) {
    if (!is_odd_prime(p)) throw DomainError("remark_a: p must be an odd prime");
    RationalContext ctx(q);
    Rational lhs(0), rhs(0);
    for (long j = 1; j < p; ++j) {
        Rational inv = q_int(j, ctx).inverse();
        Rational l = ctx.q_pow(j) * inv;
        Rational r = inv;
        if (j % 2 != 0) {
            l = -l;
            r = -r;
        }
        lhs += l;
        rhs += r;
    }
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace qlfun
