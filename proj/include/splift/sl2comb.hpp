#pragma once

#include <utility>
#include <vector>

#include "splift/errors.hpp"

namespace splift {

// S_{d1} (x) S_{d2} = S_{d1+d2-1} + S_{d1+d2-3} + ... + S_{|d1-d2|+1};
// min(d1,d2) summands, all of the same parity d1+d2-1.
std::vector<int> clebsch_gordan(int d1, int d2);

// One summand of the adjoint of a multiplicity-free orthogonal parameter
// with factors of dimensions N_i = m_i * d_i. Diagonal blocks are opaque
// (dimension only); cross blocks list the Clebsch-Gordan pieces of
// S_{d_i} (x) S_{d_j} with their GL-factor dimension m_i * m_j.
struct AdjointSummand {
    enum class Kind { diagonal, cross };
    Kind kind;
    int i;
    int j;       // cross: i < j; diagonal: j == i
    int d_alpha; // cross only: SL2 dimension of the summand
    long dimension;
};

// Enumerates all adjoint summands of a parameter with factor shapes
// (m_i, d_i). Diagonal blocks carry dimension N_i(N_i-1)/2; the total over
// all summands is N(N-1)/2 for N = sum of N_i.
std::vector<AdjointSummand> adjoint_summands(const std::vector<std::pair<int, int>>& factors);

} // namespace splift
