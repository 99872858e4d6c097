#pragma once

/**
 * @file recheck.hpp
 * @brief Recomputes a certificate's verdict from its witnesses alone.
 */

#include "cutglue/certificate.hpp"
#include "cutglue/quadratic_field.hpp"
#include "cutglue/subring.hpp"

#include <string>
#include <vector>

namespace cutglue {

namespace detail {
inline Integer witness_integer(const Certificate& c, std::string_view name) {
    const auto& q = c.at(name);
    if (!q.is_rational() || !is_integral(q.x()))
        throw std::invalid_argument("witness '" + std::string(name) + "' is not an integer");
    return num(q.x());
}
} // namespace detail

/// Verdict implied by the witnesses; equal to c.verdict for every certificate cutglue emits.
inline Verdict recheck(const Certificate& c) {
    using detail::witness_integer;
    auto pass = [](bool ok) { return ok ? Verdict::verified : Verdict::failed; };
    switch (c.statement) {
        case Statement::admissibility: {
            Integer rank = witness_integer(c, "rank");
            bool ok = witness_integer(c, "principal_negatives") == 1 && witness_integer(c, "principal_positives") == rank - 1;
            if (c.has("conjugate_negatives")) ok = ok && witness_integer(c, "conjugate_negatives") == 0;
            else ok = ok && witness_integer(c, "field_d") == 1;
            return pass(ok);
        }
        case Statement::disjointness: {
            const auto &vv = c.at("vv"), &ww = c.at("ww"), &vw = c.at("vw");
            bool ok = vv.sign() > 0 && ww.sign() > 0 && compare(vw * vw, vv * ww) >= 0 &&
                      witness_integer(c, "proportional") == 0;
            return pass(ok);
        }
        case Statement::residue: {
            const auto &tg = c.at("tr_g"), &tg2 = c.at("tr_g2"), &ta = c.at("tr_ad");
            const auto &gen = c.at("residue_generator"), &def = c.at("residue_defect");
            bool ok = ta == (tg * tg - tg2) / QuadFieldElement(2) && def == ta - gen && is_algebraic_integer(def);
            return pass(ok);
        }
        case Statement::trace_ring: {
            auto lower = canonicalize(c.at("lower_generator").as_rational());
            auto upper = canonicalize(c.at("upper_generator").as_rational());
            if (lower.d() != witness_integer(c, "lower_d") || upper.d() != witness_integer(c, "upper_d"))
                return Verdict::failed;
            if (!(lower == upper)) return Verdict::inconclusive;
            if (c.has("expected_d") && lower.d() != witness_integer(c, "expected_d")) return Verdict::failed;
            return Verdict::verified;
        }
        case Statement::nonarithmeticity: {
            bool any = !is_algebraic_integer(c.at("tr_g")) || !is_algebraic_integer(c.at("tr_ad")) ||
                       !is_algebraic_integer(c.at("residue_generator"));
            for (std::size_t i = 0; c.has("charpoly_c" + std::to_string(i)); ++i)
                any = any || !is_algebraic_integer(c.at("charpoly_c" + std::to_string(i)));
            return any ? Verdict::verified : Verdict::inconclusive;
        }
        case Statement::separation: {
            Integer m = witness_integer(c, "m"), w1sq = witness_integer(c, "w1_squared"), ww = witness_integer(c, "norm_w");
            bool ok = m > 2 && m >= 2 * ww && m >= 2 * w1sq && w1sq >= ww && ww > 0 && witness_integer(c, "violations") == 0;
            return pass(ok);
        }
        case Statement::volume_bound: {
            bool consistent = witness_integer(c, "multiplier") == 2 * witness_integer(c, "count");
            if (!consistent) return Verdict::failed;
            return witness_integer(c, "count_verified") == 1 ? Verdict::verified : Verdict::inconclusive;
        }
        case Statement::quadfield_integrality: {
            const auto& xi = c.at("xi");
            auto [t, n] = field_trace_norm(xi, witness_integer(c, "d"));
            if (t != c.at("trace").as_rational() || n != c.at("norm").as_rational()) return Verdict::failed;
            return is_algebraic_integer(xi) ? Verdict::failed : Verdict::verified;
        }
    }
    return Verdict::failed;
}

} // namespace cutglue
