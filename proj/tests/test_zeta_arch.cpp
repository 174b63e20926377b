#include "qlfun/zeta_arch.hpp"

#include <doctest.h>

#include <cmath>

using namespace qlfun;

namespace {

Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

double dist(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("zeta_E frozen values") {
    Truncation tr{1e-10, 2'000'000};
    for (double qv : {0.1, 0.3, 0.5}) {
        ComplexContext ctx(Complex(qv, 0.0));
        // s = 0 -> 1 for any valid x
        CHECK(dist(zeta_E(Complex(0, 0), Fraction{0, 1}, ctx, tr).value, Complex(1, 0)) < 1e-9);
        CHECK(dist(zeta_E(Complex(0, 0), Fraction{1, 1}, ctx, tr).value, Complex(1, 0)) < 1e-9);
        CHECK(dist(zeta_E(Complex(0, 0), Fraction{1, 3}, ctx, tr).value, Complex(1, 0)) < 1e-9);
    }
    // s = -1, q = 0.3, x = 0: E_{1,q} = -q/(1+q^2) = -30/109
    ComplexContext ctx(Complex(0.3, 0.0));
    SeriesResult r = zeta_E(Complex(-1, 0), Fraction{0, 1}, ctx, tr);
    CHECK(dist(r.value, Complex(rat(-30, 109).to_double(), 0.0)) < 1e-8);
    CHECK(std::abs(r.value.real() - (-0.27523)) < 1e-5);
    CHECK(r.tail_bound <= 1e-10);
}

TEST_CASE("zeta_E interpolates the q-Euler polynomials (Proposition 2 grid)") {
    Truncation tr{1e-10, 2'000'000};
    for (Rational q : {rat(1, 10), rat(3, 10), rat(1, 2)}) {
        RationalContext rctx(q);
        ComplexContext cctx(Complex(q.to_double(), 0.0));
        for (long k = 0; k <= 6; ++k) {
            for (Fraction x : {Fraction{0, 1}, Fraction{1, 1}, Fraction{1, 3}}) {
                double oracle = q_euler_polynomial(k, x, rctx).to_double();
                Complex series = zeta_E(Complex(double(-k), 0.0), x, cctx, tr).value;
                CHECK(dist(series, Complex(oracle, 0.0)) < 1e-8);
            }
        }
    }
}

TEST_CASE("zeta_E error paths") {
    ComplexContext ctx(Complex(0.5, 0.0));
    CHECK_THROWS_AS(zeta_E(Complex(1.0, 0.0), Fraction{0, 1}, ctx), DomainError);
    CHECK_THROWS_AS(zeta_E(Complex(0, 0), Fraction{1, 1}, ctx, Truncation{1e-30, 20}),
                    ConvergenceError);
    CHECK_THROWS_AS(zeta_E(Complex(0, 0), Fraction{-1, 1}, ctx), DomainError);
}

TEST_CASE("truncation certificate: halving epsilon only sharpens") {
    ComplexContext ctx(Complex(0.4, 0.0));
    Complex s(0.7, 0.3);
    double eps = 1e-6;
    Complex prev = zeta_E(s, Fraction{1, 1}, ctx, Truncation{eps, 2'000'000}).value;
    for (int i = 0; i < 6; ++i) {
        eps /= 2;
        Complex next = zeta_E(s, Fraction{1, 1}, ctx, Truncation{eps, 2'000'000}).value;
        CHECK(dist(prev, next) <= 2 * eps * 2);  // both within the old bound
        prev = next;
    }
}

TEST_CASE("dirichlet_l interpolates generalized q-Euler numbers (Theorem 4 grid)") {
    Truncation tr{1e-10, 2'000'000};
    DirichletCharacter<Rational> triv = trivial_character(1);
    DirichletCharacter<Rational> quad = quadratic_character(3);
    for (Rational q : {rat(1, 10), rat(3, 10), rat(1, 2)}) {
        RationalContext rctx(q);
        ComplexContext cctx(Complex(q.to_double(), 0.0));
        for (long k = 1; k <= 6; ++k) {
            double o1 = generalized_q_euler(k, triv, rctx).to_double();
            CHECK(dist(dirichlet_l(Complex(double(-k), 0), to_complex(triv), cctx, tr).value,
                       Complex(o1, 0.0)) < 1e-8);
            double o2 = generalized_q_euler(k, quad, rctx).to_double();
            CHECK(dist(dirichlet_l(Complex(double(-k), 0), to_complex(quad), cctx, tr).value,
                       Complex(o2, 0.0)) < 1e-8);
        }
    }
    // quadratic mod 3 at s = 0, q = 1/2 -> -1
    ComplexContext half(Complex(0.5, 0.0));
    CHECK(dist(dirichlet_l(Complex(0, 0), to_complex(quad), half, tr).value, Complex(-1, 0)) < 1e-8);
}

TEST_CASE("dirichlet_l with a genuinely complex character (cubic mod 7)") {
    // chi of order 3: l_q(-k, chi) must match Eq. (10) computed in C
    Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    std::vector<Complex> values(7, Complex(0.0, 0.0));
    long x = 1;
    for (long k = 0; k < 6; ++k) {
        values[std::size_t(x)] = std::pow(omega, double(k % 3));
        x = x * 3 % 7;
    }
    auto chi = DirichletCharacter<Complex>::from_values(7, values);
    ComplexContext ctx(Complex(0.4, 0.0));
    Truncation tr{1e-11, 2'000'000};
    for (long k = 1; k <= 4; ++k) {
        Complex series = dirichlet_l(Complex(double(-k), 0), chi, ctx, tr).value;
        Complex viaEq10 = generalized_q_euler(k, chi, ctx);
        CHECK(dist(series, viaEq10) < 1e-7);
    }
}

TEST_CASE("partial zeta: two forms agree and interpolate (Eq. 14)") {
    Truncation tr{1e-10, 2'000'000};
    for (long F : {3L, 5L}) {
        for (Rational q : {rat(1, 10), rat(3, 10), rat(1, 2)}) {
            RationalContext rctx(q);
            ComplexContext cctx(Complex(q.to_double(), 0.0));
            for (long a = 1; a < F; ++a) {
                for (Complex s : {Complex(-2, 0), Complex(0, 0), Complex(1.5, 0), Complex(2, 1)}) {
                    PartialZetaResult pz = partial_zeta(s, a, F, cctx, tr);
                    CHECK(pz.difference < 1e-8);
                }
                // s = -n: (-1)^a q^a ([F]_q^n/[2]_{q^F}) E_{n,q^F}(a/F)
                for (long n = 1; n <= 3; ++n) {
                    Rational oracle = rctx.q_pow(a) * q_int(F, rctx).pow(n) /
                                      (rat(1) + rctx.q_pow(F)) *
                                      q_euler_polynomial(n, Fraction{a, F}, rctx);
                    if (a % 2 != 0) oracle = -oracle;
                    PartialZetaResult pz = partial_zeta(Complex(double(-n), 0), a, F, cctx, tr);
                    CHECK(dist(pz.series.value, Complex(oracle.to_double(), 0)) < 1e-8);
                }
            }
        }
    }
    ComplexContext cctx(Complex(0.5, 0.0));
    CHECK_THROWS_AS(partial_zeta(Complex(0, 0), 0, 3, cctx, tr), DomainError);
    CHECK_THROWS_AS(partial_zeta(Complex(0, 0), 1, 4, cctx, tr), DomainError);
}

TEST_CASE("l-function decomposes over partial zetas (Eq. 15)") {
    Truncation tr{1e-10, 2'000'000};
    for (long F : {3L, 5L}) {
        DirichletCharacter<Complex> chi = to_complex(quadratic_character(F));
        for (Rational q : {rat(3, 10), rat(1, 2)}) {
            ComplexContext cctx(Complex(q.to_double(), 0.0));
            Complex two_q = Complex(1, 0) + cctx.q();
            for (Complex s : {Complex(-2, 0), Complex(0, 0), Complex(1.5, 0)}) {
                Complex lhs = dirichlet_l(s, chi, cctx, tr).value;
                Complex rhs(0, 0);
                for (long a = 1; a < F; ++a) {
                    if (chi(a) == Complex(0, 0)) continue;
                    rhs += chi(a) * partial_zeta(s, a, F, cctx, tr).closed_form;
                }
                rhs *= two_q;
                CHECK(dist(lhs, rhs) < 1e-8);
            }
        }
    }
}
