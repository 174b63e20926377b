#include "qlfun/padic_context.hpp"
#include "qlfun/qeuler.hpp"

#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

using namespace qlfun;

namespace {

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

// Symbolic reductions of the closed form, used as independent oracles:
// E_{1,q} = -q/(1+q^2),  E_{2,q} = q(q^2-1)/((1+q^2)(1+q^3)).
Rational euler1_oracle(const Rational& q) { return -q / (rat(1) + q * q); }
Rational euler2_oracle(const Rational& q) {
    return q * (q * q - rat(1)) / ((rat(1) + q * q) * (rat(1) + q * q * q));
}

Rational random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num_d(-9, 9), den_d(1, 9);
    for (;;) {
        long num = num_d(rng), den = den_d(rng);
        if (num == 0 || std::labs(num) == den) continue;
        return rat(num, den);
    }
}

}  // namespace

TEST_CASE("q-integers") {
    RationalContext ctx(rat(1, 2));
    CHECK(q_int(0, ctx) == rat(0));
    CHECK(q_int(1, ctx) == rat(1));
    CHECK(q_int(3, ctx) == rat(7, 4));  // 1 + 1/2 + 1/4
    CHECK(q_int(-1, ctx) == rat(-2));   // (1 - q^-1)/(1 - q)
    CHECK(q_int_neg(0, ctx) == rat(0));
    CHECK(q_int_neg(1, ctx) == rat(1));
    CHECK(q_int_neg(2, ctx) == rat(1, 2));  // equals 1 - q
    CHECK(q_int_neg(2, ctx) == rat(1) - ctx.q());
    CHECK(q_frac(1, 3, ctx) == rat(4, 7));
    CHECK(q_frac(3, 3, ctx) == rat(1));
    CHECK(q_frac(0, 3, ctx) == rat(0));
}

TEST_CASE("q context validation") {
    CHECK_THROWS_AS(RationalContext(rat(0)), DomainError);
    CHECK_THROWS_AS(RationalContext(rat(1)), DomainError);
    CHECK_THROWS_AS(RationalContext(rat(-1)), DomainError);
    CHECK_THROWS_AS(ComplexContext(Complex(1.5, 0.0)), DomainError);
    CHECK_THROWS_AS(ComplexContext(Complex(0.0, 0.0)), DomainError);
    CHECK_NOTHROW(RationalContext::classical_limit());
}

TEST_CASE("q-Euler numbers, frozen values at q = 1/2") {
    RationalContext ctx(rat(1, 2));
    CHECK(q_euler_number(0, ctx) == rat(1));
    CHECK(q_euler_number(1, ctx) == rat(-2, 5));
    CHECK(q_euler_number(2, ctx) == rat(-4, 15));
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        Rational q = random_q(rng);
        RationalContext c(q);
        CHECK(q_euler_number(0, c) == rat(1));
        CHECK(q_euler_number(1, c) == euler1_oracle(q));
        CHECK(q_euler_number(2, c) == euler2_oracle(q));
    }
}

TEST_CASE("classical Euler numbers against the frozen table") {
    const std::vector<Rational> table{rat(1),     rat(-1, 2), rat(0), rat(1, 4), rat(0),
                                      rat(-1, 2), rat(0),     rat(17, 8)};
    for (std::size_t m = 0; m < table.size(); ++m) CHECK(classical_euler_number(long(m)) == table[m]);
    RationalContext cl = RationalContext::classical_limit();
    CHECK(q_euler_number(1, cl) == rat(-1, 2));
    CHECK(q_int(5, cl) == rat(5));
}

TEST_CASE("q-Euler polynomials, frozen values") {
    RationalContext ctx(rat(1, 2));
    CHECK(q_euler_polynomial(0, Fraction{3, 1}, ctx) == rat(1));
    CHECK(q_euler_polynomial(4, Fraction{0, 1}, ctx) == q_euler_number(4, ctx));
    CHECK(q_euler_polynomial(1, Fraction{1, 1}, ctx) == rat(4, 5));
    // Eq. (5) route: E_{1,q}(2) = [2]_q + q^2 E_{1,q} = 3/2 - 1/10 = 7/5
    CHECK(q_euler_polynomial_binomial(1, 2, ctx) == rat(7, 5));
    CHECK(q_euler_polynomial(1, Fraction{2, 1}, ctx) == rat(7, 5));
    CHECK(q_euler_polynomial_binomial(1, 1, ctx) == rat(1) + rat(1, 2) * rat(-2, 5));
}

TEST_CASE("polynomial forms (4) and (5) agree") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        Rational q = random_q(rng);
        RationalContext ctx(q);
        for (long n = 0; n <= 8; ++n)
            for (long x = 0; x <= 5; ++x)
                CHECK(q_euler_polynomial(n, Fraction{x, 1}, ctx) ==
                      q_euler_polynomial_binomial(n, x, ctx));
    }
}

TEST_CASE("alternating power sums: direct vs closed form") {
    RationalContext ctx(rat(1, 2));
    CHECK(alt_power_sum(1, 3, ctx) == rat(0));  // single term [0]^3 = 0
    CHECK(alt_power_sum(2, 1, ctx) == rat(-3, 4));
    CHECK(alt_power_sum_closed(2, 1, ctx) == rat(-3, 4));
    CHECK(alt_power_sum_closed(1, 1, ctx) == rat(0));
    // m = 0 sanity: [2]_q [n]_{-q}-type cancellation at q -> 1, even n
    RationalContext cl = RationalContext::classical_limit();
    CHECK(alt_power_sum(4, 0, cl) == rat(0));
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        RationalContext c(random_q(rng));
        for (long n = 1; n <= 10; ++n)
            for (long m = 1; m <= 8; ++m)
                CHECK(alt_power_sum(n, m, c) == alt_power_sum_closed(n, m, c));
    }
    CHECK_THROWS_AS(alt_power_sum_closed(2, 0, ctx), DomainError);
}

TEST_CASE("distribution relation for odd m") {
    std::mt19937_64 rng(31);
    {
        RationalContext ctx(rat(1, 2));
        auto [l1, r1] = distribution_sides(1, 3, Fraction{0, 1}, ctx);
        CHECK(l1 == r1);
        auto [l2, r2] = distribution_sides(2, 5, Fraction{1, 1}, ctx);
        CHECK(l2 == r2);
        auto [l3, r3] = distribution_sides(3, 1, Fraction{1, 3}, ctx);
        CHECK(l3 == r3);  // m = 1 collapses to a single term
        CHECK_THROWS_AS(distribution_sides(2, 2, Fraction{0, 1}, ctx), DomainError);
    }
    for (int t = 0; t < 5; ++t) {
        RationalContext ctx(random_q(rng));
        for (long m : {1L, 3L, 5L})
            for (long n = 0; n <= 5; ++n)
                for (Fraction x : {Fraction{0, 1}, Fraction{1, 1}, Fraction{2, 3}}) {
                    auto [lhs, rhs] = distribution_sides(n, m, x, ctx);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("generalized q-Euler numbers") {
    RationalContext ctx(rat(1, 2));
    // conductor 1 collapses to the plain numbers
    DirichletCharacter<Rational> triv = trivial_character(1);
    for (long n = 0; n <= 6; ++n) CHECK(generalized_q_euler(n, triv, ctx) == q_euler_number(n, ctx));
    // quadratic mod 3 at n = 0: closed geometric form -q(1+q)^2/(1+q^3)
    DirichletCharacter<Rational> quad = quadratic_character(3);
    CHECK(generalized_q_euler(0, quad, ctx) == rat(-1));
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
        Rational q = random_q(rng);
        RationalContext c(q);
        Rational expected = -q * (rat(1) + q) * (rat(1) + q) / (rat(1) + q.pow(3));
        CHECK(generalized_q_euler(0, quad, c) == expected);
    }
    DirichletCharacter<Rational> even_mod = trivial_character(4);
    CHECK_THROWS_AS(generalized_q_euler(1, even_mod, ctx), DomainError);
}

TEST_CASE("euler number cache is safe under concurrent fill") {
    RationalContext ctx(rat(2, 3));
    std::vector<std::thread> workers;
    std::vector<Rational> results(8, rat(0));
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([&ctx, &results, i] { results[std::size_t(i)] = ctx.euler_number(10, 2); });
    for (auto& w : workers) w.join();
    for (const Rational& r : results) CHECK(r == ctx.euler_number(10, 2));
}

TEST_CASE("volkenborn approximants converge to the q-Euler numbers") {
    // m = 0 is exact at every level
    PadicQContext ctx3(3, 8, rat(4));
    for (long level = 1; level <= 3; ++level)
        CHECK(volkenborn_approx_exact(0, level, ctx3) == rat(1));
    // p = 3, q = 4, m = 1: E_{1,4} = -4/17
    CHECK(ctx3.rational().euler_number(1) == rat(-4, 17));
    long prev = -100;
    for (long level = 1; level <= 4; ++level) {
        Rational diff = volkenborn_approx_exact(1, level, ctx3) - rat(-4, 17);
        long v = diff.valuation(3);
        CHECK(v >= level - 1);
        CHECK(v >= prev);
        prev = v;
    }
    // p = 5, q = 6, m = 2 converges toward E_{2,6}
    PadicQContext ctx5(5, 8, rat(6));
    Rational e26 = ctx5.rational().euler_number(2);
    CHECK(e26 == euler2_oracle(rat(6)));
    prev = -100;
    for (long level = 1; level <= 3; ++level) {
        long v = (volkenborn_approx_exact(2, level, ctx5) - e26).valuation(5);
        CHECK(v >= prev);
        prev = v;
    }
    // returned p-adic value matches the exact one
    PadicNumber approx = volkenborn_approx(1, 2, ctx3);
    CHECK(PadicNumber::equal_to_precision(approx, ctx3.embed(volkenborn_approx_exact(1, 2, ctx3))));
}

TEST_CASE("p-adic context validation and embedding") {
    CHECK_THROWS_AS(PadicQContext(4, 8, rat(5)), DomainError);   // p not prime
    CHECK_THROWS_AS(PadicQContext(2, 8, rat(3)), DomainError);   // p = 2 rejected
    CHECK_THROWS_AS(PadicQContext(5, 8, rat(7)), DomainError);   // v_5(7-1) = 0
    CHECK_THROWS_AS(PadicQContext(5, 0, rat(6)), DomainError);   // precision < 1
    PadicQContext ctx(5, 6, rat(6));
    CHECK(q_int(3, ctx).residue(2) == (1 + 6 + 36) % 25);
    CHECK(q_euler_number(0, ctx).residue(6) == 1);
    // integrality of E_{m,q} for v_p(q-1) >= 1
    for (long p : {3L, 5L, 7L}) {
        PadicQContext c(p, 6, rat(1 + p));
        for (long m = 0; m <= 12; ++m) CHECK(c.euler_rational(m).valuation(p) >= 0);
    }
}

TEST_CASE("angle values") {
    PadicQContext ctx(5, 6, rat(6));
    CHECK(ctx.angle(1).residue(6) == 1);
    // p = 5, q = 6, a = 2: [2]_6 = 7 and w(2) == 7 (mod 25), so <2> == 1 (mod 25)
    CHECK(ctx.angle(2).residue(2) == 1);
    for (long p : {3L, 5L, 7L}) {
        PadicQContext c(p, 6, rat(1 + p));
        for (long a = 1; a < p; ++a) {
            PadicNumber ang = c.angle(a);
            PadicNumber one = PadicNumber::one(p, 6);
            CHECK((ang - one).valuation() >= 1);
        }
    }
    CHECK_THROWS_AS(ctx.angle(10), DomainError);
}
