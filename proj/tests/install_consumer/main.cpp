#include <iostream>

#include "specgenus/invariants.hpp"

int main() {
    const auto b = specgenus::homogeneous_closed(1, 4);
    std::cout << b.mu << ' ' << b.spectral_genus << '\n';
    return b.mu == specgenus::Rational(9) ? 0 : 1;
}
