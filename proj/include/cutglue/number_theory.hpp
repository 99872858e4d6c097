#pragma once

/**
 * @file number_theory.hpp
 * @brief Elementary number theory on arbitrary-precision integers: factorization by
 * trial division, extended gcd, radicals, square-freeness and four-square sums.
 *
 * Every input the constructions feed here is small (levels, discriminants, norms),
 * so trial division is the only factorization method.
 */

#include "cutglue/bigint.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace cutglue {

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; the product of prime^exponent recovers the input.
using PrimeFactorization = std::vector<PrimePower>;

namespace detail {

inline void factor_u64(std::uint64_t n, PrimeFactorization& out) {
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({Integer(p), e});
    };
    take(2);
    for (std::uint64_t p = 3; p <= n / p; p += 2) take(p);
    if (n > 1) out.push_back({Integer(n), 1});
}

} // namespace detail

inline PrimeFactorization factor(const Integer& n) {
    if (n < 1) throw std::invalid_argument("factor: input must be positive, got " + n.str());
    PrimeFactorization out;
    if (fits_u64(n)) {
        detail::factor_u64(n.convert_to<std::uint64_t>(), out);
        return out;
    }
    Integer rest = n;
    for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (fits_u64(rest)) {
            // primes below p are already removed, so the tail stays increasing
            detail::factor_u64(rest.convert_to<std::uint64_t>(), out);
            return out;
        }
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

inline Integer reconstruct(const PrimeFactorization& f) {
    Integer n = 1;
    for (const auto& [p, e] : f) n *= boost::multiprecision::pow(p, e);
    return n;
}

/// Exponent of p in n (n != 0, p >= 2).
inline unsigned valuation(Integer n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

struct Bezout {
    Integer g;
    Integer u;
    Integer v;
};

/// g = gcd(a, b) > 0 with u*a + v*b = g.
inline Bezout gcd_ext(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("gcd_ext: both arguments are zero");
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, Integer(r0 - q * r1));
        std::tie(s0, s1) = std::make_tuple(s1, Integer(s0 - q * s1));
        std::tie(t0, t1) = std::make_tuple(t1, Integer(t0 - q * t1));
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    return {r0, s0, t0};
}

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(Integer(a / gcd(a, b) * b));
}

/// Product of the distinct primes dividing n; radical(1) = 1.
inline Integer radical(const Integer& n) {
    Integer r = 1;
    for (const auto& pp : factor(n)) r *= pp.prime;
    return r;
}

inline bool is_squarefree(const Integer& d) {
    if (d < 1) throw std::invalid_argument("is_squarefree: input must be positive");
    for (const auto& pp : factor(d))
        if (pp.exponent > 1) return false;
    return true;
}

inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    return boost::multiprecision::sqrt(n);
}

/// Smallest s >= 0 with s*s >= n.
inline Integer ceil_sqrt(const Integer& n) {
    Integer s = isqrt(n);
    return s * s == n ? s : Integer(s + 1);
}

/// Lexicographically smallest non-increasing (b1, b2, b3, b4) with b1^2 + ... + b4^2 = b.
inline std::array<Integer, 4> four_squares(const Integer& b) {
    if (b < 0) throw std::invalid_argument("four_squares: negative input");
    auto ceil_div = [](const Integer& x, unsigned k) { return Integer((x + k - 1) / k); };
    for (Integer b1 = ceil_sqrt(ceil_div(b, 4)); b1 * b1 <= b; ++b1) {
        Integer r1 = b - b1 * b1;
        for (Integer b2 = ceil_sqrt(ceil_div(r1, 3)); b2 <= b1 && b2 * b2 <= r1; ++b2) {
            Integer r2 = r1 - b2 * b2;
            for (Integer b3 = ceil_sqrt(ceil_div(r2, 2)); b3 <= b2 && b3 * b3 <= r2; ++b3) {
                Integer r3 = r2 - b3 * b3;
                Integer b4 = isqrt(r3);
                if (b4 * b4 == r3 && b4 <= b3) return {b1, b2, b3, b4};
            }
        }
    }
    throw std::logic_error("four_squares: no representation found");  // unreachable by Lagrange
}

/// Legendre symbol (a/q) for an odd prime q, in {-1, 0, 1}.
inline int legendre(const Integer& a, const Integer& q) {
    Integer r = a % q;
    if (r < 0) r += q;
    if (r == 0) return 0;
    Integer e = (q - 1) / 2;
    Integer res = boost::multiprecision::powm(r, e, q);
    return res == 1 ? 1 : -1;
}

} // namespace cutglue
