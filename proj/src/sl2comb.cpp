#include "splift/sl2comb.hpp"

#include <cstdlib>

namespace splift {

std::vector<int> clebsch_gordan(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw Error(errc::domain, "clebsch_gordan needs positive dimensions");
    std::vector<int> out;
    int lo = std::abs(d1 - d2) + 1;
    for (int d = d1 + d2 - 1; d >= lo; d -= 2) out.push_back(d);
    return out;
}

std::vector<AdjointSummand> adjoint_summands(const std::vector<std::pair<int, int>>& factors) {
    std::vector<AdjointSummand> out;
    const int r = static_cast<int>(factors.size());
    for (int i = 0; i < r; ++i) {
        long n = static_cast<long>(factors[i].first) * factors[i].second;
        out.push_back({AdjointSummand::Kind::diagonal, i, i, 0, n * (n - 1) / 2});
    }
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            long mm = static_cast<long>(factors[i].first) * factors[j].first;
            for (int d : clebsch_gordan(factors[i].second, factors[j].second))
                out.push_back({AdjointSummand::Kind::cross, i, j, d, mm * d});
        }
    }
    return out;
}

} // namespace splift
