// Builds the cut data for a pair (n, d), prints the reflections' product trace,
// the adjoint trace ring and every certificate.
#include <cutglue/cutglue.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace cutglue;
    unsigned n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 5;
    Integer d = argc > 2 ? Integer(argv[2]) : Integer(3);

    Construction c = construct_gamma_d(n, d);
    std::cout << "b = " << c.b << ", w = (";
    for (std::size_t i = 0; i < c.config.w.size(); ++i) std::cout << (i ? ", " : "") << c.config.w[i].str();
    std::cout << "), <w,w> = " << c.config.norm_w.str() << '\n';

    auto r = residue_check(c.config);
    std::cout << "tr g = " << r.tr_g.str() << ", tr Ad g = " << r.tr_ad.str() << '\n';
    std::cout << "adjoint trace ring = " << c.bounds.lower.str() << '\n';
    std::cout << "distance between cuts = " << hyperplane_distance(c.config.form, c.config.v, c.config.w) << '\n';
    for (const auto& cert : c.certificates) std::cout << to_string(cert.statement) << ": " << to_string(cert.verdict) << '\n';
}
