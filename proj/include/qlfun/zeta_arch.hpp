#pragma once

#include "qlfun/characters.hpp"
#include "qlfun/qeuler.hpp"

#include <complex>

namespace qlfun {

// Series evaluation control: stop once the certified geometric tail bound
// drops below epsilon, error out at max_terms.
struct Truncation {
    double epsilon = 1e-10;
    long max_terms = 2'000'000;
};

struct SeriesResult {
    Complex value;
    double tail_bound;  // certified bound on the truncation error
    long terms;
};

// zeta_{E,Q}(s, a/F) = [2]_Q sum_{n>=0} (-1)^n Q^n [n + a/F]_Q^(-s) with
// Q = q^F (ambient q from ctx; plain zeta_{E,q}(s,x) is the F = 1 case).
// At x = 0 the n = 0 term is 0^(-s): taken as 1 at s = 0 and 0 for
// Re(s) < 0; Re(s) >= 0 (s != 0) is rejected as singular.
SeriesResult zeta_E(Complex s, Fraction x, const ComplexContext& ctx, const Truncation& tr = {});

// l_q(s, chi) = [2]_q sum_{n>=1} chi(n) (-1)^n q^n [n]_q^(-s).
SeriesResult dirichlet_l(Complex s, const DirichletCharacter<Complex>& chi,
                         const ComplexContext& ctx, const Truncation& tr = {});

// Partial q-zeta function H_q(s, a : F) for 0 < a < F, F odd, computed two
// ways: the residue-class series sum_{m == a (F), m > 0} q^m (-1)^m [m]_q^(-s)
// and the closed form (-1)^a q^a ([F]_q^(-s)/[2]_{q^F}) zeta_{E,q^F}(s, a/F).
// Both values are returned with their absolute difference as a diagnostic.
struct PartialZetaResult {
    SeriesResult series;
    Complex closed_form;
    double difference;
};
PartialZetaResult partial_zeta(Complex s, long a, long F, const ComplexContext& ctx,
                               const Truncation& tr = {});

}  // namespace qlfun
