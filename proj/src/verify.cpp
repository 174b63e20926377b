#include "qlfun/verify.hpp"

#include "qlfun/padic_context.hpp"
#include "qlfun/qeuler.hpp"
#include "qlfun/zeta_arch.hpp"
#include "qlfun/zeta_padic.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace qlfun {

namespace {

template <class T>
T opt(const std::optional<T>& o, T fallback) {
    return o ? *o : fallback;
}

Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num_d(-9, 9), den_d(1, 9);
    for (;;) {
        long num = num_d(rng), den = den_d(rng);
        if (num == 0 || std::labs(num) == den) continue;
        return Rational(Int(num), Int(den));
    }
}

PadicNumber random_zp(std::mt19937_64& rng, long p, long prec) {
    std::uniform_int_distribution<long> digit(0, p - 1);
    Int x = 0, pk = 1;
    for (long i = 0; i < prec; ++i) {
        x += digit(rng) * pk;
        pk *= p;
    }
    return PadicNumber::from_int(p, x, prec);
}

long rational_agreement(const Rational& a, const Rational& b, long p, long cap) {
    return std::min((a - b).valuation(p), cap);
}

std::vector<long> prime_grid(const SuiteParams& sp, std::vector<long> fallback) {
    if (sp.p) return {*sp.p};
    return fallback;
}

std::vector<Rational> q_grid_padic(const SuiteParams& sp, long p, bool two = true) {
    if (sp.q) return {*sp.q};
    std::vector<Rational> qs{Rational(1 + p)};
    if (two) qs.emplace_back(1 + 2 * p);
    return qs;
}

Json q_json(const Rational& q) { return q.to_string(); }

// ---- exact rational identity suites -------------------------------------

VerificationReport suite_eq5(const SuiteParams& sp) {
    long nmax = opt(sp.nmax, 8L), xmax = 5, trials = sp.q ? 1 : opt(sp.trials, 20L);
    VerificationReport rep("eq5", Json{{"nmax", nmax}, {"xmax", xmax}, {"trials", trials}, {"seed", sp.seed}});
    std::mt19937_64 rng(sp.seed);
    for (long t = 0; t < trials; ++t) {
        Rational q = sp.q ? *sp.q : random_q(rng);
        RationalContext ctx(q);
        for (long n = 0; n <= nmax; ++n) {
            for (long x = 0; x <= xmax; ++x) {
                Rational lhs = q_euler_polynomial(n, Fraction{x, 1}, ctx);
                Rational rhs = q_euler_polynomial_binomial(n, x, ctx);
                rep.add_case(Json{{"q", q_json(q)}, {"n", n}, {"x", x}}, to_json(lhs), to_json(rhs),
                             Agreement::exact(lhs == rhs));
            }
        }
    }
    return rep;
}

VerificationReport suite_eq13(const SuiteParams& sp) {
    long nmax = opt(sp.nmax, 10L), mmax = opt(sp.mmax, 8L), trials = sp.q ? 1 : opt(sp.trials, 20L);
    VerificationReport rep("eq13", Json{{"nmax", nmax}, {"mmax", mmax}, {"trials", trials}, {"seed", sp.seed}});
    std::mt19937_64 rng(sp.seed);
    for (long t = 0; t < trials; ++t) {
        Rational q = sp.q ? *sp.q : random_q(rng);
        RationalContext ctx(q);
        for (long n = 1; n <= nmax; ++n) {
            for (long m = 1; m <= mmax; ++m) {
                Rational direct = alt_power_sum(n, m, ctx);
                Rational closed = alt_power_sum_closed(n, m, ctx);
                rep.add_case(Json{{"q", q_json(q)}, {"n", n}, {"m", m}, {"identity", "eq13"}},
                             to_json(direct), to_json(closed), Agreement::exact(direct == closed));
                // Eq. (12) form through the polynomial at x = n.
                Rational via_poly = ctx.q_pow(n) * q_euler_polynomial(m, Fraction{n, 1}, ctx);
                if (n % 2 == 0) via_poly = -via_poly;
                via_poly += ctx.euler_number(m);
                rep.add_case(Json{{"q", q_json(q)}, {"n", n}, {"m", m}, {"identity", "eq12"}},
                             to_json(direct), to_json(via_poly), Agreement::exact(direct == via_poly));
            }
        }
    }
    return rep;
}

VerificationReport suite_dist(const SuiteParams& sp) {
    long nmax = opt(sp.nmax, 5L), trials = sp.q ? 1 : opt(sp.trials, 5L);
    VerificationReport rep("dist", Json{{"nmax", nmax}, {"trials", trials}, {"seed", sp.seed}});
    std::mt19937_64 rng(sp.seed);
    const std::vector<Fraction> xs{{0, 1}, {1, 1}, {1, 3}, {2, 3}};
    for (long t = 0; t < trials; ++t) {
        Rational q = sp.q ? *sp.q : random_q(rng);
        RationalContext ctx(q);
        for (long m : {1L, 3L, 5L}) {
            for (long n = 0; n <= nmax; ++n) {
                for (const Fraction& x : xs) {
                    auto [lhs, rhs] = distribution_sides(n, m, x, ctx);
                    rep.add_case(Json{{"q", q_json(q)}, {"m", m}, {"n", n},
                                      {"x", std::to_string(x.num) + "/" + std::to_string(x.den)}},
                                 to_json(lhs), to_json(rhs), Agreement::exact(lhs == rhs));
                }
            }
        }
    }
    return rep;
}

VerificationReport suite_remark_a(const SuiteParams& sp) {
    long trials = sp.q ? 1 : opt(sp.trials, 20L);
    VerificationReport rep("remark-a", Json{{"trials", trials}, {"seed", sp.seed}});
    std::mt19937_64 rng(sp.seed);
    for (long p : prime_grid(sp, {3, 5, 7, 11})) {
        for (long t = 0; t < trials; ++t) {
            Rational q = sp.q ? *sp.q : random_q(rng);
            auto [lhs, rhs] = remark_a_sides(p, q);
            rep.add_case(Json{{"p", p}, {"q", q_json(q)}}, to_json(lhs), to_json(rhs),
                         Agreement::exact(lhs == rhs));
        }
    }
    return rep;
}

VerificationReport suite_eq22_23(const SuiteParams& sp) {
    VerificationReport rep("eq22-23", Json{{"rmax", opt(sp.rmax, 10L)}, {"sum_max", 10}});
    auto run_one = [&](long r, long k, long j) {
        BinomialIdentityResult res = verify_binomial_identities(r, k, j);
        auto tag = [](const std::optional<bool>& v) {
            return v ? (*v ? "pass" : "fail") : "excluded";
        };
        rep.add_case(Json{{"r", r}, {"k", k}, {"j", j}},
                     Json{{"eq22", tag(res.eq22)}, {"eq22-1", tag(res.eq22_1)}, {"eq23", tag(res.eq23)}},
                     "all applicable identities hold", Agreement::exact(res.all_hold()));
    };
    if (sp.r || sp.k || sp.j) {
        if (!(sp.r && sp.k && sp.j))
            throw DomainError("eq22-23: specify all of r, k, j or none");
        run_one(*sp.r, *sp.k, *sp.j);
        return rep;
    }
    long rmax = opt(sp.rmax, 10L);
    for (long r = 1; r <= rmax; ++r)
        for (long k = 0; k <= 10; ++k)
            for (long j = std::max(0L, 1 - k); k + j <= 10; ++j) {
                if (r == 1 - k) continue;
                run_one(r, k, j);
            }
    return rep;
}

VerificationReport suite_integrality(const SuiteParams& sp) {
    long mmax = opt(sp.mmax, 12L);
    VerificationReport rep("integrality", Json{{"mmax", mmax}});
    for (long p : prime_grid(sp, {3, 5, 7})) {
        std::vector<Rational> qs = sp.q ? std::vector<Rational>{*sp.q}
                                        : std::vector<Rational>{Rational(1 + p), Rational(1 + 2 * p),
                                                                Rational(1 + p * p)};
        for (const Rational& q : qs) {
            RationalContext ctx(q);
            for (long m = 0; m <= mmax; ++m) {
                long v = ctx.euler_number(m).valuation(p);
                rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"m", m}}, to_json(ctx.euler_number(m)),
                             "v_p >= 0", Agreement::padic(v, 0));
            }
        }
    }
    return rep;
}

VerificationReport suite_volkenborn(const SuiteParams& sp) {
    long mmax = opt(sp.mmax, 3L), prec = opt(sp.prec, 8L), levels = 4;
    VerificationReport rep("volkenborn", Json{{"mmax", mmax}, {"levels", levels}});
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p, false)) {
            PadicQContext base(p, prec, q);
            for (long m = 0; m <= mmax; ++m) {
                const Rational& exact = base.rational().euler_number(m);
                Json exps = Json::array();
                bool monotone = true;
                long prev = std::numeric_limits<long>::min();
                for (long level = 1; level <= levels; ++level) {
                    Rational diff = volkenborn_approx_exact(m, level, base) - exact;
                    long v = diff.valuation(p);
                    exps.push_back(v >= Rational::kInfValuation ? Json("inf") : Json(v));
                    monotone = monotone && v >= prev;
                    prev = v;
                }
                rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"m", m}}, exps,
                             "agreement exponent nondecreasing in level", Agreement::exact(monotone));
            }
        }
    }
    return rep;
}

// ---- archimedean (complex) suites ----------------------------------------

std::vector<Rational> arch_q_grid(const SuiteParams& sp) {
    if (sp.q) return {*sp.q};
    return {Rational(1, 10), Rational(3, 10), Rational(1, 2)};
}

VerificationReport suite_prop2(const SuiteParams& sp) {
    long kmax = opt(sp.kmax, 6L);
    double eps = opt(sp.eps, 1e-8);
    Truncation tr{eps / 100.0, 2'000'000};
    VerificationReport rep("prop2", Json{{"kmax", kmax}, {"eps", eps}});
    const std::vector<Fraction> xs{{0, 1}, {1, 1}, {1, 3}};
    for (const Rational& q : arch_q_grid(sp)) {
        RationalContext rctx(q);
        ComplexContext cctx(Complex(q.to_double(), 0.0));
        for (long k = 0; k <= kmax; ++k) {
            for (const Fraction& x : xs) {
                double oracle = q_euler_polynomial(k, x, rctx).to_double();
                SeriesResult series = zeta_E(Complex(double(-k), 0.0), x, cctx, tr);
                double err = std::abs(series.value - Complex(oracle, 0.0));
                rep.add_case(Json{{"q", q_json(q)}, {"k", k},
                                  {"x", std::to_string(x.num) + "/" + std::to_string(x.den)}},
                             to_json(series.value), to_json(Complex(oracle, 0.0)),
                             Agreement::abs_error(err, eps));
            }
        }
    }
    return rep;
}

VerificationReport suite_thm4(const SuiteParams& sp) {
    long kmax = opt(sp.kmax, 6L);
    double eps = opt(sp.eps, 1e-8);
    Truncation tr{eps / 100.0, 2'000'000};
    VerificationReport rep("thm4", Json{{"kmax", kmax}, {"eps", eps}});
    struct Entry {
        const char* name;
        DirichletCharacter<Rational> chi;
        long kmin;
    };
    const std::vector<Entry> chis{{"trivial:1", trivial_character(1), 1},
                                  {"quadratic:3", quadratic_character(3), 0}};
    for (const Rational& q : arch_q_grid(sp)) {
        RationalContext rctx(q);
        ComplexContext cctx(Complex(q.to_double(), 0.0));
        for (const Entry& entry : chis) {
            DirichletCharacter<Complex> chi_c = to_complex(entry.chi);
            for (long k = entry.kmin; k <= kmax; ++k) {
                double oracle = generalized_q_euler(k, entry.chi, rctx).to_double();
                SeriesResult series = dirichlet_l(Complex(double(-k), 0.0), chi_c, cctx, tr);
                double err = std::abs(series.value - Complex(oracle, 0.0));
                rep.add_case(Json{{"q", q_json(q)}, {"k", k}, {"chi", entry.name}},
                             to_json(series.value), to_json(Complex(oracle, 0.0)),
                             Agreement::abs_error(err, eps));
            }
        }
    }
    return rep;
}

VerificationReport suite_eq14(const SuiteParams& sp) {
    double eps = opt(sp.eps, 1e-8);
    Truncation tr{eps / 100.0, 2'000'000};
    VerificationReport rep("eq14", Json{{"eps", eps}});
    const std::vector<Complex> ss{{-3, 0}, {-1, 0}, {0, 0}, {1.5, 0}, {2, 1}};
    for (long F : {3L, 5L}) {
        for (const Rational& q : arch_q_grid(sp)) {
            RationalContext rctx(q);
            ComplexContext cctx(Complex(q.to_double(), 0.0));
            for (long a = 1; a < F; ++a) {
                for (const Complex& s : ss) {
                    PartialZetaResult pz = partial_zeta(s, a, F, cctx, tr);
                    rep.add_case(Json{{"q", q_json(q)}, {"F", F}, {"a", a},
                                      {"s", Json{{"re", s.real()}, {"im", s.imag()}}}},
                                 to_json(pz.series.value), to_json(pz.closed_form),
                                 Agreement::abs_error(pz.difference, eps));
                }
                // Negative-integer values against the exact rational oracle.
                for (long n = 1; n <= 3; ++n) {
                    PartialZetaResult pz = partial_zeta(Complex(double(-n), 0.0), a, F, cctx, tr);
                    Rational oracle = rctx.q_pow(a) * q_int(F, rctx).pow(n) /
                                      (Rational(1) + rctx.q_pow(F)) *
                                      q_euler_polynomial(n, Fraction{a, F}, rctx);
                    if (a % 2 != 0) oracle = -oracle;
                    double err = std::abs(pz.series.value - Complex(oracle.to_double(), 0.0));
                    rep.add_case(Json{{"q", q_json(q)}, {"F", F}, {"a", a}, {"s", -n}},
                                 to_json(pz.series.value), to_json(oracle),
                                 Agreement::abs_error(err, eps));
                }
            }
        }
    }
    return rep;
}

VerificationReport suite_eq15(const SuiteParams& sp) {
    double eps = opt(sp.eps, 1e-8);
    Truncation tr{eps / 100.0, 2'000'000};
    VerificationReport rep("eq15", Json{{"eps", eps}});
    const std::vector<Complex> ss{{-2, 0}, {-1, 0}, {0, 0}, {1.5, 0}};
    for (long F : {3L, 5L}) {
        std::vector<std::pair<std::string, DirichletCharacter<Rational>>> chis;
        chis.emplace_back("quadratic:" + std::to_string(F), quadratic_character(F));
        chis.emplace_back("trivial:" + std::to_string(F), trivial_character(F));
        for (const Rational& q : arch_q_grid(sp)) {
            ComplexContext cctx(Complex(q.to_double(), 0.0));
            Complex two_q = Complex(1.0, 0.0) + cctx.q();
            for (const auto& [name, chi] : chis) {
                DirichletCharacter<Complex> chi_c = to_complex(chi);
                for (const Complex& s : ss) {
                    Complex lhs = dirichlet_l(s, chi_c, cctx, tr).value;
                    Complex rhs(0.0, 0.0);
                    for (long a = 1; a <= F; ++a) {
                        const Complex& cv = chi_c(a);
                        if (cv == Complex(0.0, 0.0)) continue;
                        rhs += cv * partial_zeta(s, a, F, cctx, tr).closed_form;
                    }
                    rhs *= two_q;
                    double err = std::abs(lhs - rhs);
                    rep.add_case(Json{{"q", q_json(q)}, {"F", F}, {"chi", name},
                                      {"s", Json{{"re", s.real()}, {"im", s.imag()}}}},
                                 to_json(lhs), to_json(rhs), Agreement::abs_error(err, eps));
                }
            }
        }
    }
    return rep;
}

// ---- p-adic suites --------------------------------------------------------

VerificationReport suite_eq17(const SuiteParams& sp) {
    long prec = opt(sp.prec, 10L), nmax = opt(sp.nmax, 6L);
    VerificationReport rep("eq17", Json{{"prec", prec}, {"nmax", nmax}});
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p)) {
            PadicQContext base(p, prec, q);
            PadicLContext ctx(base, teichmuller_power(0, p, base.work_precision()));
            for (long n = 1; n <= nmax; ++n) {
                for (long a = 1; a < p; ++a) {
                    PadicNumber lhs = partial_zeta_padic(-n, a, ctx);
                    Rational hq = base.rational().q_pow(a) * q_int(p, base.rational()).pow(n) /
                                  (Rational(1) + base.rational().q_pow(p)) *
                                  q_euler_polynomial(n, Fraction{a, p}, base.rational());
                    if (a % 2 != 0) hq = -hq;
                    PadicNumber rhs = base.embed(hq) * base.teich(a).pow(-n);
                    long agree = PadicNumber::agreement_exponent(lhs, rhs);
                    rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"n", n}, {"a", a}},
                                 to_json(lhs), to_json(rhs), Agreement::padic(agree, prec - 2));
                }
            }
        }
    }
    return rep;
}

VerificationReport suite_eq20(const SuiteParams& sp) {
    long prec = opt(sp.prec, 10L), nmax = opt(sp.nmax, 6L);
    VerificationReport rep("eq20", Json{{"prec", prec}, {"nmax", nmax}});
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p)) {
            PadicQContext base(p, prec, q);
            const RationalContext& rat = base.rational();
            for (long n = 1; n <= nmax; ++n) {
                long t = n % (p - 1);
                PadicLContext ctx(base, teichmuller_power(t, p, base.work_precision()));
                PadicNumber lhs = padic_l(-n, ctx);
                Rational oracle =
                    rat.euler_number(n, 1) - q_int(p, rat).pow(n) * rat.euler_number(n, p);
                PadicNumber rhs = base.embed(oracle);
                long agree = PadicNumber::agreement_exponent(lhs, rhs);
                rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"n", n}, {"t", t}}, to_json(lhs),
                             to_json(rhs), Agreement::padic(agree, prec - 2));
            }
        }
    }
    return rep;
}

VerificationReport suite_eq18_1(const SuiteParams& sp) {
    long prec = opt(sp.prec, 10L), nmax = opt(sp.nmax, 6L);
    VerificationReport rep("eq18-1", Json{{"prec", prec}, {"nmax", nmax}});
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p)) {
            PadicQContext base(p, prec, q);
            PadicQContext base_qp(p, prec, q.pow(p));
            DirichletCharacter<PadicNumber> chi = to_padic(quadratic_character(p), p, base.work_precision());
            PadicLContext ctx(base, chi);
            for (long n = 1; n <= nmax; ++n) {
                PadicNumber lhs = padic_l(-n, ctx);
                DirichletCharacter<PadicNumber> twist =
                    chi.times(teichmuller_power(-n, p, base.work_precision())).primitive();
                PadicNumber e1 = generalized_q_euler(n, twist, base);
                PadicNumber e2 = generalized_q_euler(n, twist, base_qp);
                PadicNumber rhs =
                    e1 - base.embed(q_int(p, base.rational()).pow(n)) * twist(p) * e2;
                long agree = PadicNumber::agreement_exponent(lhs, rhs);
                rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"n", n}, {"chi", "quadratic"},
                                  {"twist_conductor", twist.modulus()}},
                             to_json(lhs), to_json(rhs), Agreement::padic(agree, prec - 2));
            }
        }
    }
    return rep;
}

VerificationReport suite_eq21(const SuiteParams& sp) {
    long prec = opt(sp.prec, 8L), trials = opt(sp.trials, 10L);
    VerificationReport rep("eq21", Json{{"prec", prec}, {"trials", trials}, {"seed", sp.seed}});
    std::mt19937_64 rng(sp.seed);
    for (long p : prime_grid(sp, {3, 5, 7})) {
        Rational q = sp.q ? *sp.q : Rational(1 + p);
        PadicQContext base(p, prec, q);
        PadicLContext ctx(base, teichmuller_power(0, p, base.work_precision()));
        for (long t = 0; t < trials; ++t) {
            PadicNumber s1 = random_zp(rng, p, prec);
            PadicNumber s2 = random_zp(rng, p, prec);
            PadicNumber l1 = padic_l(s1, ctx);
            PadicNumber l2 = padic_l(s2, ctx);
            rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"s1", s1.to_string()}, {"check", "integral"}},
                         to_json(l1), "v_p >= 0", Agreement::padic(l1.valuation(), 0));
            rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"s1", s1.to_string()},
                              {"s2", s2.to_string()}, {"check", "constant mod p"}},
                         to_json(l1), to_json(l2),
                         Agreement::padic(PadicNumber::agreement_exponent(l1, l2), 1));
        }
        for (long kk = 1; kk <= 3; ++kk) {
            PadicNumber lk = padic_l(kk, ctx);
            PadicNumber lkp = padic_l(kk + p, ctx);
            rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"k", kk}, {"check", "kummer"}},
                         to_json(lk), to_json(lkp),
                         Agreement::padic(PadicNumber::agreement_exponent(lk, lkp), 1));
        }
    }
    return rep;
}

VerificationReport suite_eq24(const SuiteParams& sp) {
    long prec = opt(sp.prec, 8L), nmax = opt(sp.nmax, 3L), rmax = opt(sp.rmax, 3L);
    VerificationReport rep("eq24", Json{{"prec", prec}, {"nmax", nmax}, {"rmax", rmax}});
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p, false)) {
            PadicQContext base(p, prec, q);
            for (long n = 0; n <= nmax; ++n) {
                for (long r = 1; r <= rmax; ++r) {
                    for (long a = 1; a < p; ++a) {
                        Eq24Sides sides = eq24_residue_sides(n, r, a, p, base);
                        long agree = rational_agreement(sides.lhs, sides.rhs, p, sides.certificate);
                        rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"n", n}, {"r", r}, {"a", a}},
                                     to_json(sides.lhs), to_json(sides.rhs),
                                     Agreement::padic(agree, prec - 2));
                    }
                }
            }
        }
    }
    return rep;
}

VerificationReport suite_eq30(const SuiteParams& sp) {
    long nmax = opt(sp.nmax, 3L), rmax = opt(sp.rmax, 3L);
    VerificationReport rep("eq30", Json{{"nmax", nmax}, {"rmax", rmax}});
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p, false)) {
            PadicQContext base(p, opt(sp.prec, 8L), q);
            const RationalContext& rat = base.rational();
            for (long n = 1; n <= nmax; ++n) {
                for (long r = 1; r <= rmax; ++r) {
                    Rational direct(0);
                    for (long a = 1; a < p; ++a) {
                        for (long l = 0; l < n; ++l) {
                            Rational term = rat.q_pow(a + p * l) / q_int(a + p * l, rat).pow(r);
                            if ((a + p * l) % 2 != 0) term = -term;
                            direct += term;
                        }
                    }
                    direct *= Rational(1) + rat.q();
                    Rational other = theorem5_lhs_exact(n, r, base);
                    rep.add_case(Json{{"p", p}, {"q", q_json(q)}, {"n", n}, {"r", r}},
                                 to_json(direct), to_json(other), Agreement::exact(direct == other));
                }
            }
        }
    }
    return rep;
}

VerificationReport suite_thm5(const SuiteParams& sp) {
    long prec = opt(sp.prec, 8L), nmax = opt(sp.nmax, 2L), rmax = opt(sp.rmax, 2L);
    VerificationReport rep("thm5", Json{{"prec", prec}, {"nmax", nmax}, {"rmax", rmax}});
    bool literal_mismatch = false;
    for (long p : prime_grid(sp, {3, 5})) {
        for (const Rational& q : q_grid_padic(sp, p, false)) {
            PadicQContext base(p, prec, q);
            for (long n = 1; n <= nmax; ++n) {
                for (long r = 1; r <= rmax; ++r) {
                    Rational lhs = theorem5_lhs_exact(n, r, base);
                    Rational recon = theorem5_reconstruction(n, r, base);
                    long cert = base.work_precision() + 1;
                    long agree = rational_agreement(lhs, recon, p, cert);
                    Json inputs{{"p", p}, {"q", q_json(q)}, {"n", n}, {"r", r}};
                    Json inputs_recon = inputs;
                    inputs_recon["form"] = "reconstruction";
                    rep.add_case(inputs_recon, to_json(lhs), to_json(recon),
                                 Agreement::padic(agree, prec - 2));

                    PadicNumber lhs_p = base.embed(lhs);
                    PadicNumber derived = theorem5_rhs(n, r, base, Theorem5Form::kDerived);
                    Json inputs_d = inputs;
                    inputs_d["form"] = "derived";
                    rep.add_case(inputs_d, to_json(lhs_p), to_json(derived),
                                 Agreement::padic(PadicNumber::agreement_exponent(lhs_p, derived),
                                                  prec - 2));

                    PadicNumber literal = theorem5_rhs(n, r, base, Theorem5Form::kLiteral);
                    long lit_agree = PadicNumber::agreement_exponent(lhs_p, literal);
                    literal_mismatch = literal_mismatch || lit_agree < prec - 2;
                    Json inputs_l = inputs;
                    inputs_l["form"] = "literal";
                    rep.add_case(inputs_l, to_json(lhs_p), to_json(literal),
                                 Agreement::padic_info(lit_agree));

                    PadicNumber shifted = theorem5_rhs(n, r, base, Theorem5Form::kLiteralWShift);
                    Json inputs_s = inputs;
                    inputs_s["form"] = "literal-w-shifted";
                    rep.add_case(inputs_s, to_json(lhs_p), to_json(shifted),
                                 Agreement::padic_info(
                                     PadicNumber::agreement_exponent(lhs_p, shifted)));
                }
            }
        }
    }
    if (literal_mismatch) {
        rep.add_note("erratum: the displayed aggregate differs from the residue-level expansion; "
                     "it matches once the outer sum starts at k = 1 and the T aggregate is divided "
                     "by [2]_{q^F} (the 'derived' form).");
    }
    rep.add_note("the reconstruction (residue-level expansion summed over a) is the authoritative "
                 "right side; 'literal' and 'literal-w-shifted' agreement exponents are reported "
                 "for the displayed variants.");
    return rep;
}

VerificationReport suite_q1_corollary(const SuiteParams& sp) {
    long prec = opt(sp.prec, 8L), nmax = opt(sp.nmax, 2L), rmax = opt(sp.rmax, 2L);
    VerificationReport rep("q1-corollary", Json{{"prec", prec}, {"nmax", nmax}, {"rmax", rmax}});
    for (long p : prime_grid(sp, {3, 5})) {
        PadicQContext base = PadicQContext::classical_limit(p, prec);
        for (long n = 1; n <= nmax; ++n) {
            for (long r = 1; r <= rmax; ++r) {
                Rational lhs = theorem5_lhs_exact(n, r, base);
                PadicNumber lhs_p = base.embed(lhs);
                PadicNumber derived = theorem5_rhs(n, r, base, Theorem5Form::kDerived);
                rep.add_case(Json{{"p", p}, {"n", n}, {"r", r}, {"form", "derived"}},
                             to_json(lhs_p), to_json(derived),
                             Agreement::padic(PadicNumber::agreement_exponent(lhs_p, derived),
                                              prec - 2));

                // The corollary as displayed: no correction terms at all.
                long K = base.work_precision();
                PadicNumber corr = PadicNumber::exact_zero(p);
                for (long k = 0; k <= K; ++k) {
                    DirichletCharacter<PadicNumber> chi_k =
                        teichmuller_power(-r - k, p, base.work_precision());
                    PadicLContext ctxk(base, chi_k);
                    Rational coef = Rational(r, Int(r + k)) *
                                    generalized_binomial(Rational(-r - 1), k) *
                                    Rational(Int(p * n)).pow(k);
                    if (n % 2 != 0) coef = -coef;
                    corr = corr + base.embed(coef) * padic_l(k + r, ctxk);
                }
                corr = (PadicNumber::exact_zero(p) - corr).truncate(K + 1);
                rep.add_case(Json{{"p", p}, {"n", n}, {"r", r}, {"form", "displayed"}},
                             to_json(lhs_p), to_json(corr),
                             Agreement::padic_info(PadicNumber::agreement_exponent(lhs_p, corr)));
            }
        }
    }
    rep.add_note("the displayed q = 1 corollary omits the T-term surviving at q = 1 for odd n; "
                 "the gated check uses the corrected ('derived') form.");
    return rep;
}

const std::map<std::string, VerificationReport (*)(const SuiteParams&)>& registry() {
    static const std::map<std::string, VerificationReport (*)(const SuiteParams&)> reg{
        {"eq5", suite_eq5},
        {"eq13", suite_eq13},
        {"dist", suite_dist},
        {"prop2", suite_prop2},
        {"thm4", suite_thm4},
        {"eq14", suite_eq14},
        {"eq15", suite_eq15},
        {"eq17", suite_eq17},
        {"eq18-1", suite_eq18_1},
        {"eq20", suite_eq20},
        {"eq21", suite_eq21},
        {"eq22-23", suite_eq22_23},
        {"eq24", suite_eq24},
        {"eq30", suite_eq30},
        {"thm5", suite_thm5},
        {"q1-corollary", suite_q1_corollary},
        {"remark-a", suite_remark_a},
        {"integrality", suite_integrality},
        {"volkenborn", suite_volkenborn},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

bool is_suite_name(const std::string& name) { return registry().count(name) > 0; }

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
    auto it = registry().find(name);
    if (it == registry().end()) throw DomainError("unknown suite: " + name);
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep = it->second(params);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    rep.set_runtime_ms(elapsed.count());
    return rep;
}

}  // namespace qlfun
