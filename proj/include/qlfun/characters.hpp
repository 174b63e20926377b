#pragma once

#include "qlfun/domain.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace qlfun {

// Dirichlet character mod f as a complete value table on residues 0..f-1.
// Value domain V is Rational (characters with values in {0, +1, -1}),
// Complex (arbitrary roots of unity), or PadicNumber (Teichmuller values,
// order dividing p-1).  Tables are validated on construction: chi(a) = 0
// exactly off the units, chi(1) = 1, full multiplicativity, and every
// nonzero value a root of unity of the stored order.
template <class V>
class DirichletCharacter {
public:
    static DirichletCharacter from_values(long modulus, std::vector<V> values);

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus_; }

    const V& operator()(long n) const {
        long r = n % modulus_;
        if (r < 0) r += modulus_;
        return values_[std::size_t(r)];
    }
    const std::vector<V>& values() const { return values_; }

    // The primitive character mod conductor() inducing this one.
    DirichletCharacter primitive() const;

    // Pointwise product on the lcm of the moduli.
    DirichletCharacter times(const DirichletCharacter& other) const;

private:
    DirichletCharacter(long modulus, std::vector<V> values, long order, long conductor)
        : modulus_(modulus), values_(std::move(values)), order_(order), conductor_(conductor) {}

    long modulus_;
    std::vector<V> values_;
    long order_;
    long conductor_;
};

// chi(a) = 1 on units mod f, 0 otherwise; conductor 1.
DirichletCharacter<Rational> trivial_character(long f);

// Legendre symbol (a|p) for an odd prime p; conductor p.
DirichletCharacter<Rational> quadratic_character(long p);

// chi(a) = w(a)^t with w the Teichmuller character; modulus p, values
// known mod p^prec.  t is reduced mod p-1.
DirichletCharacter<PadicNumber> teichmuller_power(long t, long p, long prec);

// Embeddings of a {0, +/-1}-valued character into the other domains.
DirichletCharacter<PadicNumber> to_padic(const DirichletCharacter<Rational>& chi, long p, long prec);
DirichletCharacter<Complex> to_complex(const DirichletCharacter<Rational>& chi);

// Parses the CLI naming "trivial:f", "quadratic:p", "teich:p:t".
struct CharacterSpec {
    enum class Kind { Trivial, Quadratic, Teichmuller } kind;
    long f = 1;  // modulus (trivial/quadratic) or prime (teich)
    long t = 0;  // Teichmuller exponent
    static CharacterSpec parse(const std::string& text);
};

template <class V>
DirichletCharacter<V> DirichletCharacter<V>::from_values(long modulus, std::vector<V> values) {
    if (modulus < 1) throw DomainError("DirichletCharacter: modulus must be positive");
    if (long(values.size()) != modulus) throw DomainError("DirichletCharacter: table size != modulus");

    auto unit = [&](long a) { return std::gcd(a, modulus) == 1; };
    for (long a = 0; a < modulus; ++a) {
        bool zero = DomainTraits<V>::is_zero(values[std::size_t(a)]);
        if (unit(a) == zero)
            throw DomainError("DirichletCharacter: support must be exactly the units mod f");
    }
    if (!value_is_one(values[std::size_t(1 % modulus)]))
        throw DomainError("DirichletCharacter: chi(1) != 1");
    for (long a = 0; a < modulus; ++a) {
        if (!unit(a)) continue;
        for (long b = a; b < modulus; ++b) {
            if (!unit(b)) continue;
            V lhs = values[std::size_t(a * b % modulus)];
            V rhs = values[std::size_t(a)] * values[std::size_t(b)];
            if (!DomainTraits<V>::equal(lhs, rhs))
                throw DomainError("DirichletCharacter: table is not multiplicative");
        }
    }

    long order = 1;
    for (; order <= 2 * modulus + 2; ++order) {
        bool all_one = true;
        for (long a = 0; a < modulus && all_one; ++a)
            if (unit(a)) all_one = value_is_one(DomainTraits<V>::pow(values[std::size_t(a)], order));
        if (all_one) break;
    }
    if (order > 2 * modulus + 2)
        throw DomainError("DirichletCharacter: values are not roots of unity");

    long conductor = modulus;
    for (long d = 1; d <= modulus; ++d) {
        if (modulus % d != 0) continue;
        bool induced = true;
        for (long a = 0; a < modulus && induced; ++a) {
            if (!unit(a)) continue;
            for (long b = a; b < modulus && induced; ++b) {
                if (!unit(b) || (a - b) % d != 0) continue;
                induced = DomainTraits<V>::equal(values[std::size_t(a)], values[std::size_t(b)]);
            }
        }
        if (induced) {
            conductor = d;
            break;
        }
    }

    return DirichletCharacter(modulus, std::move(values), order, conductor);
}

template <class V>
DirichletCharacter<V> DirichletCharacter<V>::primitive() const {
    if (is_primitive()) return *this;
    long d = conductor_;
    std::vector<V> values;
    values.reserve(std::size_t(d));
    const V& exemplar = values_[std::size_t(1 % modulus_)];
    for (long x = 0; x < d; ++x) {
        if (std::gcd(x, d) != 1) {
            values.push_back(DomainTraits<V>::zero_like(exemplar));
            continue;
        }
        // Lift x to a residue mod modulus coprime to it (exists by CRT).
        long y = x;
        while (std::gcd(y, modulus_) != 1) y += d;
        values.push_back(values_[std::size_t(y % modulus_)]);
    }
    return from_values(d, std::move(values));
}

template <class V>
DirichletCharacter<V> DirichletCharacter<V>::times(const DirichletCharacter& other) const {
    long m = std::lcm(modulus_, other.modulus_);
    std::vector<V> values;
    values.reserve(std::size_t(m));
    for (long a = 0; a < m; ++a) values.push_back((*this)(a)*other(a));
    return from_values(m, std::move(values));
}

}  // namespace qlfun
