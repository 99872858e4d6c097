#pragma once

/**
 * @file quadratic_field.hpp
 * @brief Elements x + y*sqrt(d) of a real quadratic field, with plain rationals
 * as the degenerate case.
 *
 * An element whose irrational part vanishes is stored with d = 1, so a rational
 * compares equal to itself regardless of the field it was computed in. Mixing two
 * different non-trivial fields throws.
 */

#include "cutglue/bigint.hpp"
#include "cutglue/number_theory.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cutglue {

/// Real embeddings of Q(sqrt d): principal sends sqrt(d) to the positive root.
enum class Embedding { principal, conjugate };

class QuadFieldElement {
public:
    QuadFieldElement() = default;
    QuadFieldElement(int x) : x_(x) {}  // NOLINT(google-explicit-constructor)
    QuadFieldElement(Integer x) : x_(std::move(x)) {}  // NOLINT
    QuadFieldElement(Rational x) : x_(std::move(x)) {}  // NOLINT

    /// x + y*sqrt(d); d must be square-free (d = 1 means rational, y must then be 0).
    QuadFieldElement(Rational x, Rational y, Integer d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        if (d_ < 1) throw std::invalid_argument("QuadFieldElement: d must be positive");
        if (d_ == 1 && y_ != 0) throw std::invalid_argument("QuadFieldElement: d = 1 requires y = 0");
        if (d_ > 1 && !is_squarefree(d_))
            throw std::invalid_argument("QuadFieldElement: d = " + d_.str() + " is not square-free");
        normalize();
    }

    static QuadFieldElement sqrt_of(const Integer& d) { return {Rational(0), Rational(1), d}; }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    /// 1 for rationals.
    const Integer& d() const { return d_; }
    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("element " + str() + " is not rational");
        return x_;
    }

    QuadFieldElement conjugate() const { return make(x_, -y_, d_); }

    friend QuadFieldElement operator+(const QuadFieldElement& a, const QuadFieldElement& b) {
        return make(a.x_ + b.x_, a.y_ + b.y_, common_d(a, b));
    }
    friend QuadFieldElement operator-(const QuadFieldElement& a, const QuadFieldElement& b) {
        return make(a.x_ - b.x_, a.y_ - b.y_, common_d(a, b));
    }
    friend QuadFieldElement operator*(const QuadFieldElement& a, const QuadFieldElement& b) {
        if (a.is_rational() && b.is_rational()) return QuadFieldElement(Rational(a.x_ * b.x_));
        Integer d = common_d(a, b);
        return make(a.x_ * b.x_ + a.y_ * b.y_ * d, a.x_ * b.y_ + a.y_ * b.x_, d);
    }
    friend QuadFieldElement operator/(const QuadFieldElement& a, const QuadFieldElement& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in quadratic field");
        if (b.is_rational()) return make(a.x_ / b.x_, a.y_ / b.x_, a.d_);
        Rational n = b.x_ * b.x_ - Rational(b.d_) * b.y_ * b.y_;
        return a * make(b.x_ / n, -b.y_ / n, b.d_);
    }
    QuadFieldElement operator-() const { return make(-x_, -y_, d_); }

    QuadFieldElement& operator+=(const QuadFieldElement& o) { return *this = *this + o; }
    QuadFieldElement& operator-=(const QuadFieldElement& o) { return *this = *this - o; }
    QuadFieldElement& operator*=(const QuadFieldElement& o) { return *this = *this * o; }
    QuadFieldElement& operator/=(const QuadFieldElement& o) { return *this = *this / o; }

    friend bool operator==(const QuadFieldElement& a, const QuadFieldElement& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.d_ == b.d_;
    }

    /// Exact sign of the image under the given real embedding.
    int sign(Embedding e = Embedding::principal) const {
        Rational y = e == Embedding::principal ? y_ : Rational(-y_);
        int sx = x_.sign(), sy = y.sign();
        if (sy == 0) return sx;
        if (sx == 0 || sx == sy) return sy;
        // opposite signs: compare x^2 with d*y^2 (never equal for square-free d > 1)
        return x_ * x_ > Rational(d_) * y * y ? sx : sy;
    }

    double to_double(Embedding e = Embedding::principal) const {
        double root = std::sqrt(d_.convert_to<double>());
        double y = cutglue::to_double(y_);
        return cutglue::to_double(x_) + (e == Embedding::principal ? y : -y) * root;
    }

    /// "x", or "x + y*sqrt(d)" with rationals rendered as p/q.
    std::string str() const {
        if (is_rational()) return to_string(x_);
        std::string s = x_ == 0 ? "" : to_string(x_) + (y_ > 0 ? " + " : " - ");
        Rational ay = (x_ != 0 && y_ < 0) ? Rational(-y_) : y_;
        std::string coeff = ay == 1 ? "" : ay == -1 ? "-" : to_string(ay) + "*";
        return s + coeff + "sqrt(" + d_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadFieldElement& q) { return os << q.str(); }

private:
    static QuadFieldElement make(Rational x, Rational y, Integer d) {
        QuadFieldElement q;
        q.x_ = std::move(x);
        q.y_ = std::move(y);
        q.d_ = std::move(d);
        q.normalize();
        return q;
    }

    static Integer common_d(const QuadFieldElement& a, const QuadFieldElement& b) {
        if (a.d_ == 1) return b.d_;
        if (b.d_ == 1 || a.d_ == b.d_) return a.d_;
        throw std::domain_error("mixing Q(sqrt " + a.d_.str() + ") with Q(sqrt " + b.d_.str() + ")");
    }

    void normalize() {
        if (y_ == 0) d_ = 1;
    }

    Rational x_{0};
    Rational y_{0};
    Integer d_{1};
};

/// Exact comparison under a real embedding: sign(a - b).
inline int compare(const QuadFieldElement& a, const QuadFieldElement& b, Embedding e = Embedding::principal) {
    return (a - b).sign(e);
}

struct TraceNorm {
    Rational trace;
    Rational norm;
};

/// Trace and norm relative to Q(sqrt d)/Q: (2x, x^2 - d y^2).
inline TraceNorm field_trace_norm(const QuadFieldElement& xi, const Integer& d) {
    if (xi.d() != 1 && xi.d() != d)
        throw std::domain_error("element " + xi.str() + " does not lie in Q(sqrt " + d.str() + ")");
    return {2 * xi.x(), xi.x() * xi.x() - Rational(d) * xi.y() * xi.y()};
}

inline TraceNorm field_trace_norm(const QuadFieldElement& xi) { return field_trace_norm(xi, xi.d()); }

/// Rationals: denominator 1. Quadratic irrationals: the minimal polynomial
/// t^2 - trace*t + norm has integer coefficients.
inline bool is_algebraic_integer(const QuadFieldElement& xi) {
    if (xi.is_rational()) return is_integral(xi.x());
    auto [t, n] = field_trace_norm(xi);
    return is_integral(t) && is_integral(n);
}

} // namespace cutglue
