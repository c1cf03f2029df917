// Builds the two-dimensional simple module of the rank-one algebra at q = -1 and prints its matrices.
#include <iostream>

#include "qweyl/qweyl.hpp"

using namespace qweyl;

static void print(const char* name, const Matrix& m) {
    std::cout << name << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "  ";
        for (std::size_t j = 0; j < m.cols(); ++j) std::cout << m(i, j).to_string() << (j + 1 < m.cols() ? "\t" : "\n");
    }
}

int main() {
    const ParameterSet p = validate(RawParameters{1, {2}, {1}, {}});
    for (bool torsion_side : {false, true}) {
        ModuleSpec spec;
        spec.mu = {p.one()};
        spec.gamma = {torsion_side ? -p.one() : p.one()};
        if (torsion_side) spec.I = {1};
        const Representation rep = construct_module(p, spec);
        std::cout << (torsion_side ? "I = {1}, gamma = -1\n" : "I = {}, gamma = 1\n");
        print("x", rep.X(1));
        print("y", rep.Y(1));
        print("z", z_matrix(rep, 1));
        const EigenData ed = extract_eigendata(p, rep);
        std::cout << "relations hold: " << all_pass(verify_module(p, rep, AlgebraKind::maltsiniotis))
                  << ", span dimension: " << burnside_span_dimension(rep) << ", alpha = " << ed.alpha[0].to_string()
                  << ", beta = " << ed.beta[0].to_string() << "\n\n";
    }
}
