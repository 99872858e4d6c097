#pragma once

/**
 * @file serialize.hpp
 * @brief JSON encoding of exact values, configurations and certificates.
 *
 * Rationals are {"num": "p", "den": "q"} with decimal strings; quadratic
 * irrationals are {"x": rational, "y": rational, "d": "d"}.
 */

#include "cutglue/certificate.hpp"
#include "cutglue/configuration.hpp"
#include "cutglue/congruence.hpp"
#include "cutglue/quadratic_field.hpp"

#include <json.hpp>

#include <string>

namespace cutglue {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return {{"num", num(q).str()}, {"den", den(q).str()}}; }

inline json to_json(const QuadFieldElement& q) {
    if (q.is_rational()) return to_json(q.x());
    return {{"x", to_json(q.x())}, {"y", to_json(q.y())}, {"d", q.d().str()}};
}

inline Rational rational_from_json(const json& j) {
    Integer p(j.at("num").get<std::string>());
    Integer q(j.at("den").get<std::string>());
    if (q <= 0) throw std::invalid_argument("rational_from_json: denominator must be positive");
    return Rational(p, q);
}

inline QuadFieldElement quad_from_json(const json& j) {
    if (j.contains("num")) return QuadFieldElement(rational_from_json(j));
    return {rational_from_json(j.at("x")), rational_from_json(j.at("y")), Integer(j.at("d").get<std::string>())};
}

inline json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(to_json(e));
    return a;
}

inline json to_json(const SquareMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const Certificate& c) {
    json w = json::object();
    for (const auto& [k, v] : c.witnesses) w[k] = to_json(v);
    return {{"statement", std::string(to_string(c.statement))},
            {"verdict", std::string(to_string(c.verdict))},
            {"witnesses", std::move(w)},
            {"method_tags", c.method_tags},
            {"note", c.note}};
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.statement = parse_statement(j.at("statement").get<std::string>());
    c.verdict = parse_verdict(j.at("verdict").get<std::string>());
    for (const auto& [k, v] : j.at("witnesses").items()) c.witnesses.emplace_back(k, quad_from_json(v));
    c.method_tags = j.at("method_tags").get<std::vector<std::string>>();
    c.note = j.value("note", "");
    return c;
}

inline json to_json(const CutConfiguration& c) {
    return {{"n", c.n},
            {"form", to_json(c.form.coefficients())},
            {"v", to_json(c.v)},
            {"w", to_json(c.w)},
            {"norm_w", to_json(c.norm_w)},
            {"w1", to_json(c.w1)},
            {"relation", std::string(to_string(c.relation.relation))},
            {"tangent", c.relation.tangent},
            {"rho1", to_json(c.rho1)},
            {"rho2", to_json(c.rho2)}};
}

inline json to_json(const CountResult& r) {
    json parts = json::array();
    for (const auto& p : r.parts) {
        json jp = {{"prime", p.prime.str()},
                   {"exponent", p.exponent},
                   {"value", p.value.str()},
                   {"method", std::string(to_string(p.method))},
                   {"verified", p.verified}};
        if (p.method == CountMethod::stabilization_extrapolated) jp["base_exponent"] = p.base_exponent;
        parts.push_back(std::move(jp));
    }
    return {{"value", r.value.str()},
            {"method", std::string(to_string(r.method))},
            {"verified", r.verified},
            {"parts", std::move(parts)}};
}

inline json to_json(const CongruenceLevel& l) {
    return {{"m", l.m.str()},
            {"provenance",
             {{"m_gt_2", l.m_gt_2}, {"m_ge_2w1sq", l.m_ge_2w1sq}, {"w1sq_ge_norm", l.w1sq_ge_norm}}}};
}

inline json to_json(const VolumeBound& vb, const QuadraticForm& form) {
    return {{"level", to_json(vb.level)},
            {"count", to_json(vb.count)},
            {"multiplier", vb.multiplier.str()},
            {"covolume_factor",
             {{"symbol", vb.covolume_factor}, {"n", vb.n}, {"form", to_json(form.coefficients())}}}};
}

} // namespace cutglue
