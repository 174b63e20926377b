#include "qlfun/rational.hpp"

#include <ostream>
#include <sstream>

namespace qlfun {

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw DomainError("Rational::parse: zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("Rational::parse: malformed rational '" + text + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (is_zero()) throw DomainError("Rational::pow: zero base with negative exponent");
        return inverse().pow(-e);
    }
    return Rational(int_pow(numerator(), e), int_pow(denominator(), e));
}

long Rational::valuation(long p) const {
    if (is_zero()) return kInfValuation;
    Int pp(p);
    long v = 0;
    Int num = numerator();
    if (num % pp == 0) {
        v = int_valuation(num, pp);
    } else {
        Int den = denominator();
        if (den % pp == 0) v = -int_valuation(den, pp);
    }
    return v;
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << numerator() << "/" << denominator();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace qlfun
