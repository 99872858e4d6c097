#pragma once

/**
 * @file construct.hpp
 * @brief Explicit cut configurations: the witness vector w with adjoint trace
 * ring Z[1/d] over Q, and the Q(sqrt d) configuration w = (1, a, b1..b4, 0, ...).
 */

#include "cutglue/certificate.hpp"
#include "cutglue/configuration.hpp"
#include "cutglue/lorentz.hpp"
#include "cutglue/number_theory.hpp"
#include "cutglue/subring.hpp"
#include "cutglue/trace.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cutglue {

/// For each prime p | d: p^{e+1} where p^e || 4(n-1). Then Z[4(n-1)/b] = Z[1/d] = Z[2/b].
inline Integer build_level_b(unsigned n, const Integer& d) {
    if (n < 4) throw std::invalid_argument("build_level_b: n must be at least 4");
    if (d <= 1 || !is_squarefree(d)) throw std::invalid_argument("build_level_b: d = " + d.str() + " must be square-free and > 1");
    Integer k = 4 * (n - 1);
    Integer b = 1;
    for (const auto& pp : factor(d)) {
        unsigned e = k % pp.prime == 0 ? valuation(k, pp.prime) : 0;
        b *= boost::multiprecision::pow(pp.prime, e + 1);
    }
    return b;
}

/// Smallest w1 >= 1 with w1^2 > b and gcd(w1, b) = 1.
inline Integer choose_w1(const Integer& b) {
    if (b < 1) throw std::invalid_argument("choose_w1: b must be positive");
    for (Integer w = isqrt(b) + 1;; ++w)
        if (gcd(w, b) == 1) return w;
}

/**
 * Solves -x0^2 + x2^2 + x3^2 + ... = target with nonnegative coordinates.
 * Returns `vars` values ordered (x0, x2, x3, ...). Odd k: x2 = (k+1)/2, x0 = (k-1)/2
 * up to sign; even k: x3 = 1 and the odd remainder k-1 as before.
 */
inline std::vector<Integer> represent_by_hyperbolic(const Integer& target, std::size_t vars) {
    if (vars < 3) throw std::invalid_argument("represent_by_hyperbolic: needs at least 3 variables");
    std::vector<Integer> x(vars, Integer(0));
    if (target == 0) return x;
    Integer k = target;
    if (k % 2 == 0) {
        x[2] = 1;
        k -= 1;
    }
    x[1] = abs(Integer((k + 1) / 2));
    x[0] = abs(Integer((k - 1) / 2));
    return x;
}

/// Standard configuration over Q from an integral w.
inline CutConfiguration make_rational_configuration(unsigned n, std::vector<Integer> w) {
    Vector wv;
    for (auto& c : w) wv.emplace_back(std::move(c));
    return make_configuration(n, QuadraticForm::standard(n + 1), std::move(wv));
}

struct Construction {
    CutConfiguration config;
    Integer b;
    std::vector<Certificate> certificates;
    TraceRingBounds bounds;

    bool all_verified() const {
        return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.verified(); });
    }
};

/// Admissibility, disjointness, residue, trace-ring and nonarithmeticity certificates.
inline std::vector<Certificate> certify_configuration(const CutConfiguration& c, TraceRingBounds* bounds_out = nullptr,
                                                      std::optional<Integer> expected_d = std::nullopt) {
    std::vector<Certificate> out;
    if (c.form.rank() >= 5) out.push_back(is_admissible(c.form));

    Certificate dis{Statement::disjointness};
    dis.witness("vv", c.relation.vv).witness("ww", c.relation.ww).witness("vw", c.relation.vw);
    dis.witness("proportional", Integer(c.relation.relation == HyperplaneRelation::equal ? 1 : 0));
    dis.tag("inner-product-criterion");
    if (c.relation.tangent) dis.tag("tangent-at-infinity");
    dis.verdict = c.relation.relation == HyperplaneRelation::disjoint ? Verdict::verified : Verdict::failed;
    dis.note = "<v,w>^2 = " + (c.relation.vw * c.relation.vw).str() + " >= <v,v><w,w> = " +
               (c.relation.vv * c.relation.ww).str();
    out.push_back(std::move(dis));

    out.push_back(residue_certificate(residue_check(c)));
    if (c.over_rationals()) {
        std::vector<QuadFieldElement> w(c.w.begin(), c.w.end());
        auto t = trace_ring_bounds(c.n, w);
        if (bounds_out) *bounds_out = t;
        out.push_back(trace_ring_certificate(t, expected_d));
    }
    out.push_back(nonarithmeticity_certificate(c));
    return out;
}

/**
 * Builds w = (x0, w1, x2, ..., xn) with <w,w> = b and w1^2 > b, where b comes from
 * build_level_b. The trace-ring bounds pinch to Z[1/d].
 */
inline Construction construct_gamma_d(unsigned n, const Integer& d) {
    Integer b = build_level_b(n, d);
    Integer w1 = choose_w1(b);
    auto rest = represent_by_hyperbolic(b - w1 * w1, n);
    std::vector<Integer> w;
    w.reserve(n + 1);
    w.push_back(rest[0]);
    w.push_back(w1);
    w.insert(w.end(), rest.begin() + 1, rest.end());

    Construction out{make_rational_configuration(n, std::move(w)), b, {}, {}};
    if (out.config.norm_w != QuadFieldElement(b))
        throw InternalInconsistency("construct_gamma_d: <w,w> = " + out.config.norm_w.str() + " != b = " + b.str());
    out.certificates = certify_configuration(out.config, &out.bounds, d);
    for (const auto& c : out.certificates)
        if (!c.verified())
            throw InternalInconsistency("construct_gamma_d: " + std::string(to_string(c.statement)) +
                                        " certificate not verified: " + c.note);
    return out;
}

struct QuadfieldConstruction {
    CutConfiguration config;
    Certificate integrality;
    /// 4(n-1) a^2 / <w,w>
    QuadFieldElement xi;
};

/**
 * Configuration over f = -sqrt(d) x0^2 + x1^2 + ... + xn^2 with w = (1, a, b1, b2, b3, b4, 0, ...)
 * where b1^2 + ... + b4^2 = b, subject to a^2 + b >= sqrt(d) and 0 <= b < sqrt(d).
 * The integrality certificate is verified when 4(n-1)a^2/<w,w> is not in O_k and
 * failed otherwise.
 */
inline QuadfieldConstruction construct_quadfield(unsigned n, const Integer& d, const Integer& a, const Integer& b) {
    if (n < 5) throw std::invalid_argument("construct_quadfield: n must be at least 5");
    if (d <= 1 || !is_squarefree(d)) throw std::invalid_argument("construct_quadfield: d must be square-free and > 1");
    if (b < 0 || b * b >= d) throw std::invalid_argument("construct_quadfield: requires 0 <= b < sqrt(d)");
    Integer s = a * a + b;
    if (s < 0 || s * s < d) throw std::invalid_argument("construct_quadfield: requires a^2 + b >= sqrt(d)");

    QuadraticForm f = QuadraticForm::sqrt_twisted(n + 1, d);
    auto adm = is_admissible(f);
    if (!adm.verified()) throw std::invalid_argument("construct_quadfield: form is not admissible");

    auto bs = four_squares(b);
    Vector w(n + 1);
    w[0] = QuadFieldElement(1);
    w[1] = QuadFieldElement(a);
    for (std::size_t i = 0; i < 4; ++i) w[2 + i] = QuadFieldElement(bs[i]);

    QuadfieldConstruction out{make_configuration(n, std::move(f), std::move(w)), Certificate{Statement::quadfield_integrality}, {}};
    out.xi = QuadFieldElement(Integer(4 * (n - 1))) * out.config.w1 * out.config.w1 / out.config.norm_w;
    auto [tr, nm] = field_trace_norm(out.xi, d);
    Certificate& c = out.integrality;
    c.witness("d", d).witness("xi", out.xi).witness("norm_w", out.config.norm_w);
    c.witness("trace", tr).witness("norm", nm);
    c.tag("field-trace-norm");
    bool integral = is_algebraic_integer(out.xi);
    c.verdict = integral ? Verdict::failed : Verdict::verified;
    c.note = integral ? "4(n-1)a^2/<w,w> = " + out.xi.str() + " lies in O_k; no nonarithmeticity from this generator"
                      : "4(n-1)a^2/<w,w> = " + out.xi.str() + " is not in O_k";
    return out;
}

/// All (a, b) with 0 <= a <= bound meeting the constraints whose integrality certificate verifies.
inline std::vector<std::pair<Integer, Integer>> search_quadfield(unsigned n, const Integer& d, const Integer& bound) {
    std::vector<std::pair<Integer, Integer>> out;
    for (Integer a = 0; a <= bound; ++a)
        for (Integer b = 0; b * b < d; ++b) {
            Integer s = a * a + b;
            if (s * s < d) continue;
            if (construct_quadfield(n, d, a, b).integrality.verified()) out.emplace_back(a, b);
        }
    return out;
}

} // namespace cutglue
