#include "qlfun/characters.hpp"

#include "qlfun/numerics.hpp"

#include <sstream>

namespace qlfun {

DirichletCharacter<Rational> trivial_character(long f) {
    if (f < 1) throw DomainError("trivial_character: modulus must be positive");
    std::vector<Rational> values;
    values.reserve(std::size_t(f));
    // f = 1: gcd(0, 1) = 1, so the single entry chi(0) = 1 (empty-modulus convention).
    for (long a = 0; a < f; ++a) values.emplace_back(std::gcd(a, f) == 1 ? 1 : 0);
    return DirichletCharacter<Rational>::from_values(f, std::move(values));
}

DirichletCharacter<Rational> quadratic_character(long p) {
    if (!is_odd_prime(p)) throw DomainError("quadratic_character: p must be an odd prime");
    std::vector<Rational> values(std::size_t(p), Rational(0));
    for (long a = 1; a < p; ++a) {
        Int r = mod_pow(a, (p - 1) / 2, p);
        values[std::size_t(a)] = (r == 1) ? Rational(1) : Rational(-1);
    }
    return DirichletCharacter<Rational>::from_values(p, std::move(values));
}

DirichletCharacter<PadicNumber> teichmuller_power(long t, long p, long prec) {
    if (!is_odd_prime(p)) throw DomainError("teichmuller_power: p must be an odd prime");
    long e = t % (p - 1);
    if (e < 0) e += p - 1;
    std::vector<PadicNumber> values;
    values.reserve(std::size_t(p));
    values.push_back(PadicNumber::exact_zero(p));
    for (long a = 1; a < p; ++a) values.push_back(teichmuller(a, p, prec).pow(e));
    return DirichletCharacter<PadicNumber>::from_values(p, std::move(values));
}

DirichletCharacter<PadicNumber> to_padic(const DirichletCharacter<Rational>& chi, long p, long prec) {
    std::vector<PadicNumber> values;
    values.reserve(std::size_t(chi.modulus()));
    for (const Rational& v : chi.values()) {
        if (!v.is_zero() && v != Rational(1) && v != Rational(-1))
            throw DomainError("to_padic: only {0, +1, -1}-valued characters embed directly");
        values.push_back(PadicNumber::from_rational(p, v, prec));
    }
    return DirichletCharacter<PadicNumber>::from_values(chi.modulus(), std::move(values));
}

DirichletCharacter<Complex> to_complex(const DirichletCharacter<Rational>& chi) {
    std::vector<Complex> values;
    values.reserve(std::size_t(chi.modulus()));
    for (const Rational& v : chi.values()) values.emplace_back(v.to_double(), 0.0);
    return DirichletCharacter<Complex>::from_values(chi.modulus(), std::move(values));
}

CharacterSpec CharacterSpec::parse(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    std::getline(in, kind, ':');
    CharacterSpec spec;
    auto read_long = [&](const char* what) {
        std::string tok;
        if (!std::getline(in, tok, ':')) throw DomainError(std::string("character spec: missing ") + what);
        try {
            return std::stol(tok);
        } catch (const std::exception&) {
            throw DomainError(std::string("character spec: malformed ") + what);
        }
    };
    if (kind == "trivial") {
        spec.kind = Kind::Trivial;
        spec.f = read_long("modulus");
    } else if (kind == "quadratic") {
        spec.kind = Kind::Quadratic;
        spec.f = read_long("prime");
    } else if (kind == "teich") {
        spec.kind = Kind::Teichmuller;
        spec.f = read_long("prime");
        spec.t = read_long("exponent");
    } else {
        throw DomainError("character spec: expected trivial:f, quadratic:p or teich:p:t");
    }
    return spec;
}

}  // namespace qlfun
