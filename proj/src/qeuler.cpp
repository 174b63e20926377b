#include "qlfun/qeuler.hpp"

#include <mutex>
#include <vector>

namespace qlfun {

namespace {

std::mutex g_classical_mu;
std::vector<Rational> g_classical;  // E_0, E_1, ...

}  // namespace

Rational classical_euler_number(long m) {
    if (m < 0) throw DomainError("classical_euler_number: m must be nonnegative");
    std::scoped_lock lock(g_classical_mu);
    if (g_classical.empty()) g_classical.emplace_back(1);
    while (long(g_classical.size()) <= m) {
        long n = long(g_classical.size());
        Rational sum(0);
        for (long k = 0; k < n; ++k) sum += Rational(binomial(n, k)) * g_classical[std::size_t(k)];
        g_classical.push_back(sum / Rational(-2));
    }
    return g_classical[std::size_t(m)];
}

Rational classical_euler_polynomial(long n, const Rational& x) {
    if (n < 0) throw DomainError("classical_euler_polynomial: n must be nonnegative");
    Rational sum(0);
    for (long k = 0; k <= n; ++k)
        sum += Rational(binomial(n, k)) * classical_euler_number(k) * x.pow(n - k);
    return sum;
}

}  // namespace qlfun
