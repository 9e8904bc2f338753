#pragma once

// Test-side enumeration of valid, globally coherent level-one parameters of
// rank n <= 4 built from elliptic, Sym^2-type and trivial-character blocks.
// The shapes keep the total dimension odd and avoid the combinations whose
// epsilon values are rejected (two Sym^2-type blocks, or a Sym^2-type block
// next to a quadratic one).

#include <string>
#include <vector>

#include "splift/params.hpp"

namespace splift::testgen {

inline Constituent elliptic(int a, int d) { // arch rho_{2a-1}
    return {elliptic_datum("f" + std::to_string(2 * a), 2 * a), d};
}

// m = 3 orthogonal datum with arch rho_{2b} + sgn
inline Constituent sym2_type(int b, int d) {
    CuspidalDatum tau;
    tau.kind = DatumKind::custom;
    tau.name = "o3_" + std::to_string(2 * b);
    tau.gl_rank = 3;
    tau.type = SelfDualType::orthogonal;
    tau.arch = ArchRep({ArchConstituent::rho(2 * b), ArchConstituent::sign()});
    return {tau, d};
}

inline Constituent quad(int d) { return {trivial_datum(), d}; }

// alphas <= 40: elliptic a <= 20 (alpha = 2a-1), Sym^2-type b <= 20 (alpha = 2b)
inline std::vector<GlobalAParameter> coherent_family(int max_a = 20) {
    using P = GlobalAParameter;
    std::vector<P> out;
    for (int d : {1, 3, 5, 7, 9}) out.push_back(P({quad(d)}));
    out.push_back(P({quad(1), quad(3), quad(5)}));
    for (int a = 1; a <= max_a; ++a) {
        out.push_back(P({elliptic(a, 2), quad(1)}));
        out.push_back(P({elliptic(a, 2), quad(3)}));
        out.push_back(P({elliptic(a, 2), quad(5)}));
        out.push_back(P({elliptic(a, 4), quad(1)}));
    }
    for (int b = 1; b <= max_a; ++b) {
        out.push_back(P({sym2_type(b, 1)}));
        out.push_back(P({sym2_type(b, 3)}));
    }
    for (int a = 1; a <= max_a; ++a)
        for (int b = 1; b <= max_a; ++b) out.push_back(P({elliptic(a, 2), sym2_type(b, 1)}));
    for (int a = 1; a <= max_a; ++a)
        for (int a2 = a + 1; a2 <= max_a; ++a2)
            out.push_back(P({elliptic(a, 2), elliptic(a2, 2), quad(1)}));
    return out;
}

} // namespace splift::testgen
