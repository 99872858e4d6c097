#pragma once

/**
 * @file subring.hpp
 * @brief Finitely generated subrings of Q in the canonical form Z[1/d], d square-free.
 *
 * Z[a/b] with gcd(a, b) = 1 equals Z[1/b] (Bezout: 1/b = u*(a/b) + v), and
 * Z[1/b] = Z[1/rad(b)], so only the square-free d is stored.
 */

#include "cutglue/bigint.hpp"
#include "cutglue/number_theory.hpp"

#include <stdexcept>
#include <string>

namespace cutglue {

class SubringOfQ {
public:
    /// Z.
    SubringOfQ() = default;

    explicit SubringOfQ(Integer d) : d_(std::move(d)) {
        if (d_ < 1 || !is_squarefree(d_))
            throw std::invalid_argument("SubringOfQ: d = " + d_.str() + " must be positive and square-free");
    }

    /// 1 encodes Z.
    const Integer& d() const { return d_; }

    bool is_integers() const { return d_ == 1; }

    /// Every prime of q's reduced denominator divides d.
    bool contains(const Rational& q) const {
        Integer b = den(q);
        for (const auto& pp : factor(b))
            if (d_ % pp.prime != 0) return false;
        return true;
    }

    bool contains(const SubringOfQ& other) const { return d_ % other.d_ == 0; }

    std::string str() const { return d_ == 1 ? "Z" : "Z[1/" + d_.str() + "]"; }

    friend bool operator==(const SubringOfQ&, const SubringOfQ&) = default;

private:
    Integer d_{1};
};

/// Z[q] in canonical form: Z[1/rad(den q)].
inline SubringOfQ canonicalize(const Rational& q) { return SubringOfQ(radical(den(q))); }

/// Smallest subring containing both.
inline SubringOfQ join(const SubringOfQ& a, const SubringOfQ& b) { return SubringOfQ(radical(a.d() * b.d())); }

inline bool contains(const SubringOfQ& r, const Rational& q) { return r.contains(q); }

/// Lower and upper bound for the adjoint trace ring of a cut configuration over Q.
struct TraceRingBounds {
    SubringOfQ lower;
    SubringOfQ upper;
    bool pinched = false;
    /// 4(n-1) w1^2 / <w,w>
    Rational lower_generator;
    /// 2 / <w,w>
    Rational upper_generator;
};

/// Bounds from the generators 4(n-1) w1^2/<w,w> and 2/<w,w>.
inline TraceRingBounds trace_ring_bounds_from(unsigned n, const Integer& w1, const Integer& norm_w) {
    if (norm_w <= 0) throw std::invalid_argument("trace_ring_bounds: <w,w> must be positive");
    if (w1 * w1 < norm_w) throw std::invalid_argument("trace_ring_bounds: requires w1^2 >= <w,w>");
    TraceRingBounds t;
    t.lower_generator = Rational(Integer(4 * (n - 1)) * w1 * w1, norm_w);
    t.upper_generator = Rational(Integer(2), norm_w);
    t.lower = canonicalize(t.lower_generator);
    t.upper = canonicalize(t.upper_generator);
    if (!t.upper.contains(t.lower))
        throw std::logic_error("trace_ring_bounds: lower bound " + t.lower.str() + " not inside " + t.upper.str());
    t.pinched = t.lower == t.upper;
    return t;
}

} // namespace cutglue
