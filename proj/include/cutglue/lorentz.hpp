#pragma once

/**
 * @file lorentz.hpp
 * @brief Diagonal quadratic forms over Q or Q(sqrt d), reflections in their
 * hyperplanes, and the hyperplane disjointness criterion.
 *
 * Conventions: vectors are indexed 0..n with coordinate 0 the time-like one, the
 * inner product is <x, y> = x^T J y with J the diagonal Gram matrix, and a vector
 * is space-like when <x, x> > 0 under the principal embedding.
 */

#include "cutglue/certificate.hpp"
#include "cutglue/matrix.hpp"
#include "cutglue/quadratic_field.hpp"
#include "cutglue/subring.hpp"

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutglue {

using Vector = std::vector<QuadFieldElement>;
using SquareMatrix = Matrix<QuadFieldElement>;

class QuadraticForm {
public:
    explicit QuadraticForm(std::vector<QuadFieldElement> coefficients) : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty()) throw std::invalid_argument("QuadraticForm: empty coefficient list");
        for (const auto& c : coeffs_) {
            if (c.is_zero()) throw std::invalid_argument("QuadraticForm: zero diagonal coefficient");
            if (c.d() != 1) {
                if (d_ != 1 && d_ != c.d()) throw std::invalid_argument("QuadraticForm: coefficients in two fields");
                d_ = c.d();
            }
        }
    }

    /// Rejects non-diagonal Gram matrices.
    static QuadraticForm from_gram(const SquareMatrix& gram) {
        std::vector<QuadFieldElement> diag;
        for (std::size_t i = 0; i < gram.size(); ++i)
            for (std::size_t j = 0; j < gram.size(); ++j) {
                if (i == j) diag.push_back(gram(i, i));
                else if (!gram(i, j).is_zero())
                    throw std::invalid_argument("QuadraticForm: only diagonal Gram matrices are supported");
            }
        return QuadraticForm(std::move(diag));
    }

    /// -x0^2 + x1^2 + ... + x_{rank-1}^2
    static QuadraticForm standard(std::size_t rank) {
        std::vector<QuadFieldElement> c(rank, QuadFieldElement(1));
        c.at(0) = QuadFieldElement(-1);
        return QuadraticForm(std::move(c));
    }

    /// -sqrt(d) x0^2 + x1^2 + ... + x_{rank-1}^2
    static QuadraticForm sqrt_twisted(std::size_t rank, const Integer& d) {
        std::vector<QuadFieldElement> c(rank, QuadFieldElement(1));
        c.at(0) = -QuadFieldElement::sqrt_of(d);
        return QuadraticForm(std::move(c));
    }

    std::size_t rank() const { return coeffs_.size(); }
    const std::vector<QuadFieldElement>& coefficients() const { return coeffs_; }
    const QuadFieldElement& coefficient(std::size_t i) const { return coeffs_.at(i); }

    /// Field of definition: 1 for Q.
    const Integer& field_d() const { return d_; }
    bool is_rational() const { return d_ == 1; }

    SquareMatrix gram() const { return SquareMatrix::diagonal(std::span<const QuadFieldElement>(coeffs_)); }

private:
    std::vector<QuadFieldElement> coeffs_;
    Integer d_{1};
};

namespace detail {
inline void check_dim(const QuadraticForm& f, std::size_t n, const char* what) {
    if (n != f.rank())
        throw std::invalid_argument(std::string(what) + ": dimension " + std::to_string(n) + " does not match rank " +
                                    std::to_string(f.rank()));
}
} // namespace detail

/// x^T J y.
inline QuadFieldElement inner(const QuadraticForm& f, std::span<const QuadFieldElement> x,
                              std::span<const QuadFieldElement> y) {
    detail::check_dim(f, x.size(), "inner");
    detail::check_dim(f, y.size(), "inner");
    QuadFieldElement s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s += f.coefficient(i) * x[i] * y[i];
    return s;
}

inline QuadFieldElement norm(const QuadraticForm& f, std::span<const QuadFieldElement> x) { return inner(f, x, x); }

struct Signature {
    unsigned positives = 0;
    unsigned negatives = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature(const QuadraticForm& f, Embedding e) {
    Signature s;
    for (const auto& c : f.coefficients()) {
        int sg = c.sign(e);
        if (sg == 0) throw std::invalid_argument("signature: zero coefficient");
        (sg > 0 ? s.positives : s.negatives)++;
    }
    return s;
}

/**
 * Signature (n, 1) under the principal embedding and positive definite under the
 * conjugate one. Over Q the second condition is vacuous.
 */
inline Certificate is_admissible(const QuadraticForm& f) {
    if (f.rank() < 5) throw std::invalid_argument("is_admissible: rank must be at least 5 (n >= 4)");
    Certificate c{Statement::admissibility};
    auto p = signature(f, Embedding::principal);
    c.witness("rank", Integer(f.rank()))
        .witness("field_d", f.field_d())
        .witness("principal_positives", Integer(p.positives))
        .witness("principal_negatives", Integer(p.negatives));
    bool ok = p.negatives == 1;
    if (!f.is_rational()) {
        auto q = signature(f, Embedding::conjugate);
        c.witness("conjugate_positives", Integer(q.positives)).witness("conjugate_negatives", Integer(q.negatives));
        ok = ok && q.negatives == 0;
        c.tag("signature-conjugate");
    }
    c.tag("signature-principal");
    c.verdict = ok ? Verdict::verified : Verdict::failed;
    if (!ok) c.note = "form is not admissible";
    else c.note = f.is_rational() ? "signature (n,1) over Q" : "signature (n,1), definite at the conjugate embedding";
    return c;
}

/// I - (2/<w,w>) w w^T J.
inline SquareMatrix reflection(const QuadraticForm& f, std::span<const QuadFieldElement> w) {
    detail::check_dim(f, w.size(), "reflection");
    QuadFieldElement ww = norm(f, w);
    if (ww.is_zero()) throw std::invalid_argument("reflection: isotropic normal vector");
    QuadFieldElement scale = QuadFieldElement(2) / ww;
    SquareMatrix r = SquareMatrix::identity(f.rank());
    for (std::size_t i = 0; i < f.rank(); ++i) {
        if (w[i].is_zero()) continue;
        for (std::size_t j = 0; j < f.rank(); ++j)
            if (!w[j].is_zero()) r(i, j) -= scale * w[i] * w[j] * f.coefficient(j);
    }
    return r;
}

struct OrthogonalityCheck {
    bool orthogonal = false;
    /// Sign of g(0,0) under the principal embedding.
    int g00_sign = 0;
    explicit operator bool() const { return orthogonal; }
};

/// g^T J g == J exactly.
inline OrthogonalityCheck is_f_orthogonal(const QuadraticForm& f, const SquareMatrix& g) {
    detail::check_dim(f, g.size(), "is_f_orthogonal");
    const std::size_t r = f.rank();
    OrthogonalityCheck out{true, g(0, 0).sign(Embedding::principal)};
    for (std::size_t i = 0; i < r && out.orthogonal; ++i)
        for (std::size_t j = i; j < r; ++j) {
            QuadFieldElement s;
            for (std::size_t k = 0; k < r; ++k)
                if (!g(k, i).is_zero() && !g(k, j).is_zero()) s += g(k, i) * f.coefficient(k) * g(k, j);
            if (s != (i == j ? f.coefficient(i) : QuadFieldElement())) {
                out.orthogonal = false;
                break;
            }
        }
    return out;
}

enum class HyperplaneRelation { disjoint, equal, intersecting };

inline std::string_view to_string(HyperplaneRelation r) {
    switch (r) {
        case HyperplaneRelation::disjoint: return "disjoint";
        case HyperplaneRelation::equal: return "equal";
        case HyperplaneRelation::intersecting: return "intersecting";
    }
    return "?";
}

struct Disjointness {
    HyperplaneRelation relation{};
    /// Equality <v,w>^2 = <v,v><w,w> with non-proportional normals (meet at infinity).
    bool tangent = false;
    QuadFieldElement vv, ww, vw;
};

inline bool proportional(std::span<const QuadFieldElement> v, std::span<const QuadFieldElement> w) {
    if (v.size() != w.size()) return false;
    std::size_t pivot = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot == v.size()) return true;
    if (w[pivot].is_zero()) return std::all_of(w.begin(), w.end(), [](const auto& e) { return e.is_zero(); });
    QuadFieldElement ratio = w[pivot] / v[pivot];
    for (std::size_t i = 0; i < v.size(); ++i)
        if (w[i] != ratio * v[i]) return false;
    return true;
}

/**
 * Relative position of v^perp and w^perp in hyperbolic space for space-like v, w:
 * <v,w>^2 >= <v,v><w,w> means they do not meet (equal when proportional).
 */
inline Disjointness hyperplanes_disjoint(const QuadraticForm& f, std::span<const QuadFieldElement> v,
                                         std::span<const QuadFieldElement> w) {
    Disjointness out;
    out.vv = norm(f, v);
    out.ww = norm(f, w);
    out.vw = inner(f, v, w);
    if (out.vv.sign() <= 0 || out.ww.sign() <= 0)
        throw std::invalid_argument("hyperplanes_disjoint: normals must be space-like");
    if (proportional(v, w)) {
        out.relation = HyperplaneRelation::equal;
        return out;
    }
    int c = compare(out.vw * out.vw, out.vv * out.ww);
    out.relation = c >= 0 ? HyperplaneRelation::disjoint : HyperplaneRelation::intersecting;
    out.tangent = c == 0;
    return out;
}

/// arccosh(|<v,w>| / sqrt(<v,v><w,w>)); 0 for equal or tangent hyperplanes.
inline double hyperplane_distance(const QuadraticForm& f, std::span<const QuadFieldElement> v,
                                  std::span<const QuadFieldElement> w) {
    auto rel = hyperplanes_disjoint(f, v, w);
    if (rel.relation == HyperplaneRelation::intersecting)
        throw std::invalid_argument("hyperplane_distance: hyperplanes intersect");
    if (rel.relation == HyperplaneRelation::equal || rel.tangent) return 0.0;
    // arccosh(x) = asinh(sqrt(x^2 - 1)), with x^2 - 1 formed exactly
    QuadFieldElement excess = (rel.vw * rel.vw - rel.vv * rel.ww) / (rel.vv * rel.ww);
    return std::asinh(std::sqrt(excess.to_double()));
}

/// Smallest Z[1/N] containing every entry of the given rational matrices.
inline SubringOfQ denominator_ring(std::span<const SquareMatrix> matrices) {
    Integer l = 1;
    for (const auto& m : matrices)
        for (const auto& e : m.entries()) {
            if (!e.is_rational()) throw std::invalid_argument("denominator_ring: entry " + e.str() + " is not rational");
            l = lcm(l, den(e.x()));
        }
    return SubringOfQ(radical(l));
}

inline Vector make_vector(std::initializer_list<long long> coords) {
    Vector v;
    for (auto c : coords) v.emplace_back(Integer(c));
    return v;
}

/// (0, 1, 0, ..., 0): the normal of the fixed cut hyperplane {x1 = 0}.
inline Vector unit_normal_x1(std::size_t rank) {
    Vector v(rank);
    v.at(1) = QuadFieldElement(1);
    return v;
}

} // namespace cutglue
