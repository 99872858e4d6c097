#pragma once

/**
 * @file configuration.hpp
 * @brief A candidate glueing datum: the form, the fixed normal v = (0,1,0,...,0),
 * the second normal w, and the two reflections.
 */

#include "cutglue/lorentz.hpp"

#include <stdexcept>
#include <string>

namespace cutglue {

struct CutConfiguration {
    unsigned n = 0;
    QuadraticForm form = QuadraticForm::standard(1);
    Vector v;
    Vector w;
    QuadFieldElement norm_w;
    QuadFieldElement w1;
    SquareMatrix rho1;
    SquareMatrix rho2;
    /// rho1 * rho2
    SquareMatrix g;
    Disjointness relation;

    bool over_rationals() const { return form.is_rational(); }
};

/// Thrown when a configuration violates w1^2 >= <w,w> > 0 or has intersecting/equal hyperplanes.
struct InvalidConfiguration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * Validates and assembles a configuration. Requires n >= 4, integral coordinates
 * (rational integers, or algebraic integers over Q(sqrt d)), w1^2 >= <w,w> > 0 under
 * the principal embedding, and non-equal hyperplanes.
 */
inline CutConfiguration make_configuration(unsigned n, QuadraticForm form, Vector w) {
    if (n < 4) throw InvalidConfiguration("configuration: n must be at least 4, got " + std::to_string(n));
    if (form.rank() != n + 1)
        throw InvalidConfiguration("configuration: form rank " + std::to_string(form.rank()) + " != n + 1");
    if (w.size() != n + 1)
        throw InvalidConfiguration("configuration: w has " + std::to_string(w.size()) + " coordinates, expected " +
                                   std::to_string(n + 1));
    for (const auto& c : w)
        if (!is_algebraic_integer(c)) throw InvalidConfiguration("configuration: coordinate " + c.str() + " is not integral");
    if (form.coefficient(1) != QuadFieldElement(1))
        throw InvalidConfiguration("configuration: the x1 coefficient of the form must be 1");

    CutConfiguration c;
    c.n = n;
    c.form = std::move(form);
    c.v = unit_normal_x1(n + 1);
    c.w = std::move(w);
    c.norm_w = norm(c.form, c.w);
    c.w1 = c.w[1];
    if (c.norm_w.sign() <= 0) throw InvalidConfiguration("configuration: <w,w> = " + c.norm_w.str() + " is not positive");
    if (compare(c.w1 * c.w1, c.norm_w) < 0)
        throw InvalidConfiguration("configuration: w1^2 = " + (c.w1 * c.w1).str() + " < <w,w> = " + c.norm_w.str());
    c.relation = hyperplanes_disjoint(c.form, c.v, c.w);
    if (c.relation.relation != HyperplaneRelation::disjoint)
        throw InvalidConfiguration(std::string("configuration: hyperplanes are ") +
                                   std::string(to_string(c.relation.relation)));
    c.rho1 = reflection(c.form, c.v);
    c.rho2 = reflection(c.form, c.w);
    c.g = c.rho1 * c.rho2;
    return c;
}

} // namespace cutglue
