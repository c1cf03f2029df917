// PI degrees of the uniparameter families and of their prime factors by z_r.
#include <iostream>

#include "qweyl/qweyl.hpp"

using namespace qweyl;

int main() {
    std::cout << "case  n  ord  pideg  factors  prime-factor degrees (r = 1..n)\n";
    for (auto which : {PresetCase::A, PresetCase::B})
        for (int n = 1; n <= 3; ++n)
            for (std::int64_t ord : {3, 5}) {
                const ParameterSet p = validate(preset(which, n, ord));
                const auto h = weyl_exponent_matrix(p, AlgebraKind::maltsiniotis);
                const PiDegreeReport r = pi_degree_report(h, p.L());
                std::cout << (which == PresetCase::A ? "A" : "B") << "     " << n << "  " << ord << "    "
                          << r.pi_degree << "\t [";
                for (std::size_t k = 0; k < r.normal_form.factors.size(); ++k)
                    std::cout << (k ? " " : "") << r.normal_form.factors[k];
                std::cout << "]\t";
                for (int f = 1; f <= n; ++f)
                    std::cout << " " << pi_degree(weyl_exponent_matrix(p, AlgebraKind::maltsiniotis, f), p.L());
                std::cout << "\n";
            }
}
