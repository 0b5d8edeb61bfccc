#pragma once

#include <map>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// Trial-division factorization; inputs here are desk-scale square-free parts.
inline std::map<BigInt, int> factorize(BigInt n) {
    if (n < 0) n = -n;
    std::map<BigInt, int> f;
    for (BigInt d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++f[d];
            n /= d;
        }
    if (n > 1) ++f[n];
    return f;
}

/// Square-free integer representing q modulo squares (sign preserved).
inline BigInt squarefree_part(const BigRat& q) {
    BigInt n = numerator(q) * denominator(q);
    BigInt sf = n < 0 ? -1 : 1;
    for (const auto& [prime, e] : factorize(n))
        if (e % 2 == 1) sf *= prime;
    return sf;
}

inline int legendre(BigInt a, const BigInt& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    BigInt r = boost::multiprecision::powm(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

namespace detail {

// local Hilbert symbol (a,b)_p for square-free nonzero integers a, b
inline int hilbert_local(const BigInt& a, const BigInt& b, const BigInt& p) {
    auto split = [&](BigInt x) {
        int alpha = 0;
        while (x % p == 0) {
            x /= p;
            ++alpha;
        }
        return std::pair<int, BigInt>(alpha, x);
    };
    auto [alpha, u] = split(a);
    auto [beta, v] = split(b);
    if (p == 2) {
        auto eps = [](const BigInt& x) { return static_cast<int>(((x - 1) / 2) % 2 != 0); };
        auto omega = [](const BigInt& x) { return static_cast<int>(((x * x - 1) / 8) % 2 != 0); };
        int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int e = alpha * beta * static_cast<int>(((p - 1) / 2) % 2);
    int s = e % 2 == 0 ? 1 : -1;
    if (beta % 2 != 0) s *= legendre(u, p);
    if (alpha % 2 != 0) s *= legendre(v, p);
    return s;
}

}  // namespace detail

/// Global Hilbert symbol over Q: -1 iff z^2 = a x^2 + b y^2 has only the
/// trivial rational solution, i.e. iff the quaternion algebra (a,b)_Q is
/// division. By Hasse-Minkowski that happens iff some local symbol is -1;
/// only infinity, 2, and the odd primes dividing the square-free parts can
/// ramify. (The product of all local symbols is always +1 by reciprocity.)
inline int hilbert_symbol_q(const BigRat& a, const BigRat& b) {
    if (a == 0 || b == 0) throw ZeroArgument("hilbert symbol needs nonzero arguments");
    BigInt sa = squarefree_part(a);
    BigInt sb = squarefree_part(b);
    if (sa < 0 && sb < 0) return -1;  // ramified at infinity
    std::map<BigInt, int> primes = factorize(sa);
    for (const auto& [prime, e] : factorize(sb)) primes[prime] += e;
    primes[2];  // always include the dyadic place
    for (const auto& [prime, e] : primes)
        if (detail::hilbert_local(sa, sb, prime) == -1) return -1;
    return 1;
}

inline int hilbert_symbol_q(const FieldValue& a, const FieldValue& b) {
    if (a.spec().kind != FieldKind::Rationals || b.spec().kind != FieldKind::Rationals)
        throw FieldMismatch("hilbert symbol is defined over Q only");
    return hilbert_symbol_q(a.rat(), b.rat());
}

}  // namespace dickson
