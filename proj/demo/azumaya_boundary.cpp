// Walks points (alpha, beta) of the rank-one alternative algebra at q = -1 and reports the central
// character; the Azumaya locus misses exactly the curve 4 alpha beta = 1.
#include <iostream>

#include "qweyl/qweyl.hpp"

using namespace qweyl;

int main() {
    const ParameterSet p = validate(RawParameters{1, {2}, {1}, {}});
    for (const auto& s : azumaya_inequations(p, AlgebraKind::alternative)) std::cout << s << "\n";
    const Rational samples[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
    for (const auto& a : samples)
        for (const auto& b : samples) {
            const CentralPoint pt{{CycloNum::rational(2, a)}, {CycloNum::rational(2, b)}};
            const auto chi = central_character(p, pt, AlgebraKind::alternative);
            std::cout << "alpha=" << a << " beta=" << b << "  chi=" << chi[0].to_string()
                      << (is_azumaya_point(p, pt, AlgebraKind::alternative) ? "" : "  <- outside the Azumaya locus")
                      << "\n";
        }
}
