#pragma once

#include "qlfun/characters.hpp"
#include "qlfun/numerics.hpp"
#include "qlfun/padic_context.hpp"

#include <utility>

namespace qlfun {

// Context for the p-adic l-function: a p-adic base context together with
// a p-adically valued Dirichlet character chi and the level F, chosen as
// the smallest odd common multiple of p and the conductor of chi.
// Validated invariants: F is an odd multiple of p, conductor(chi) | F and
// [2]_{q^F} is a p-adic unit (it is == 2 mod p), so dividing by it costs
// no precision.
//
// Holds the base context by reference; keep it alive for the lifetime of
// this view.
class PadicLContext {
public:
    PadicLContext(const PadicQContext& base, DirichletCharacter<PadicNumber> chi);

    const PadicQContext& base() const { return *base_; }
    long p() const { return base_->p(); }
    long F() const { return F_; }
    const DirichletCharacter<PadicNumber>& chi() const { return chi_; }
    // chi reduced to its conductor; this is what the l-function sums.
    const DirichletCharacter<PadicNumber>& chi_primitive() const { return chi_primitive_; }

private:
    const PadicQContext* base_;
    DirichletCharacter<PadicNumber> chi_;
    DirichletCharacter<PadicNumber> chi_primitive_;
    long F_;
};

// Partial p-adic zeta function, 0 < a < F with gcd(a, p) = 1:
//   H_{p,q}(s, a : F) = ((-1)^a q^a / [2]_{q^F}) <a>^(-s)
//                       sum_j C(-s,j) q^(ja) ([F]_q/[a]_q)^j E_{j,q^F}.
// The series truncates at the working precision; every dropped term has
// v_p >= (index) * v_p([F]_q) >= index, which is folded into the reported
// precision.  The integer-exponent overload evaluates the coefficient
// sum exactly (and finitely, for s <= 0).
PadicNumber partial_zeta_padic(long s, long a, const PadicLContext& ctx);
PadicNumber partial_zeta_padic(const PadicNumber& s, long a, const PadicLContext& ctx);

// l_{p,q}(s, chi) = [2]_q sum_{a=1, (a,p)=1}^{F} chi(a) H_{p,q}(s, a : F).
PadicNumber padic_l(long s, const PadicLContext& ctx);
PadicNumber padic_l(const PadicNumber& s, const PadicLContext& ctx);

// T-Euler polynomial
//   T_{n,q}(s, a : F) = (-1)^a q^a <a>^(-s) sum_k C(-s,k) ([F]_q/[a]_q)^k
//                       q^(ak) ((-1)^n q^(nF(k+1)) - 1) E_{k,q^F}.
PadicNumber t_euler(long n, long s, long a, const PadicLContext& ctx);

// J_{p,q}^{(k)}(s, a : F) = sum_{j=1}^k w^j(a) C(k,j) (q-1)^j <a>^j H_{p,q}(s, a : F).
PadicNumber j_correction(long k, long s, long a, const PadicLContext& ctx);

// K_{p,q}(s, a : F) = ((-1)^a q^a/[2]_{q^F}) <a>^(-s) sum_l C(-s,l) q^(al)
//     ([F]_q/[a]_q)^l E_{l,q^F} sum_{j=1}^l C(l,j) [nF]_q^j (q-1)^j,
// the inner sum being q^(nFl) minus its j = 0 term.
PadicNumber k_correction(long n, long s, long a, const PadicLContext& ctx);

// [2]_q sum_{j=1, (j,p)=1}^{np} (-1)^j q^j / [j]_q^r — a finite exact sum.
Rational theorem5_lhs_exact(long n, long r, const PadicQContext& base);
PadicNumber theorem5_lhs(long n, long r, const PadicQContext& base);

// Residue-level power-sum expansion: the exact finite sum
//   sum_{l<n} (-1)^(Fl+a) q^(Fl+a) / [Fl+a]_q^r
// against its expansion into the two q-Euler series (everything exact
// rational; the series truncated at the working precision with per-term
// valuation certificate >= index).
struct Eq24Sides {
    Rational lhs;
    Rational rhs;
    long certificate;  // truncation certificate exponent
};
Eq24Sides eq24_residue_sides(long n, long r, long a, long F, const PadicQContext& base);

// Aggregate right side of the main expansion, per interpretation:
//  - kLiteral: exactly as displayed, outer sum from k = 0 and the T
//    aggregate undivided;
//  - kDerived: outer sum from k = 1 and the T aggregate divided by
//    [2]_{q^F} (the form the residue-level chain actually yields);
//  - kLiteralWShift: kLiteral with the character exponents shifted by one
//    (the w^(1-r-k) variant of the display).
enum class Theorem5Form { kLiteral, kDerived, kLiteralWShift };
PadicNumber theorem5_rhs(long n, long r, const PadicQContext& base, Theorem5Form form);

// The authoritative reconstruction: eq24 right sides summed over the
// residues a = 1..p-1 (exact rational).
Rational theorem5_reconstruction(long n, long r, const PadicQContext& base);

// Both sides of Remark A: sum_{j=1}^{p-1} (-1)^j q^j/[j]_q (lhs) and
// sum_{j=1}^{p-1} (-1)^j/[j]_q (rhs); equal for every odd prime p.
std::pair<Rational, Rational> remark_a_sides(long p, const Rational& q);

}  // namespace qlfun
