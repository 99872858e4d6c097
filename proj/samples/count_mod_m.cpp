// Prints |O(Z/mZ)| for -x0^2 + x1^2 + ... + x_{r-1}^2 and how each prime part was obtained.
#include <cutglue/cutglue.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace cutglue;
    std::size_t rank = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 3;
    Integer m = argc > 2 ? Integer(argv[2]) : Integer(36);

    std::vector<Integer> diag(rank, Integer(1));
    diag[0] = -1;
    CountResult r = count_orthogonal_mod(diag, m);
    std::cout << "|O(Z/" << m << ")| = " << r.value << " [" << to_string(r.method) << "]\n";
    for (const auto& p : r.parts)
        std::cout << "  " << p.prime << "^" << p.exponent << ": " << p.value << " [" << to_string(p.method)
                  << (p.verified ? "" : ", unverified") << "]\n";
}
