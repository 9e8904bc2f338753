#pragma once

#include <string>
#include <vector>

#include "splift/ajpackets.hpp"
#include "splift/params.hpp"

namespace splift {

// m_{pi,psi} for the everywhere-unramified member with archimedean component
// the lowest weight module of vector weight k: 1 iff the archimedean
// lowest-weight character pulled back through the localization map equals
// epsilon_direct(psi). Finite places contribute trivially at level one.
// Throws not_adams_johnson / not_lowest_weight_packet when the preconditions
// fail.
int multiplicity(const GlobalAParameter& psi, const std::vector<int>& k);

// Weight vector of the lifted form: sorts
//   {k_1-1, ..., k_n-n} u {kt+d-1, ..., kt-d}
// decreasingly into mu and returns k'_i = mu_i + i. The union must be
// disjoint with all entries positive (interval_hypothesis_violated).
std::vector<int> lift_a_weights(const std::vector<int>& k, int kt, int d);

// Same with the two spin intervals
//   {j/2+kt+d-2, ..., j/2+kt-d-1} u {j/2+d, ..., j/2-d+1};
// requires kt > 2d+1, j > 2d-1 even, and k_i-i outside [j/2-d+1, j/2+kt+d-2].
std::vector<int> lift_b_weights(const std::vector<int>& k, int kt, int j, int d);

enum class LiftMode { a, b, general };

// tau_f[2d] +++ psi_g with a certified source: g_weights is a weight vector k
// with multiplicity(g, k) = 1. For rank-0 sources g is the trivial parameter
// 1[1] and g_weights is empty.
struct LiftSpec {
    LiftMode mode = LiftMode::a;
    GlobalAParameter g;
    std::vector<int> g_weights;
    CuspidalDatum f;
    int d = 1;
};

struct Factorization {
    std::string base;          // "L(s,g,std)" or "zeta(s)"
    bool spin = false;
    std::vector<int> shifts2;  // twice-shifts, factor i = L(s + shifts2[i]/2, f[, spin])
    std::string str() const;
};

struct LiftResult {
    LiftMode mode = LiftMode::a;
    GlobalAParameter psi_lift; // f constituent first, then the source
    CuspidalDatum f;
    int d = 1;
    std::vector<int> k_prime;
    int multiplicity = 0;
    bool automorphic = false;
    bool cuspidal = false;
    Factorization factorization;
};

// Builds psi_lift, derives k' from the localized restriction exponents, runs
// the multiplicity decision, and emits the symbolic factorization. Modes a/b
// enforce the respective interval hypotheses; mode general decides any
// discrete tau_f[2d] +++ psi_g whose localization is Adams-Johnson.
LiftResult evaluate_lift(const LiftSpec& spec);

// Named instances. Constraint violations throw named_instance_constraint.
LiftSpec miyawaki1_spec(int k);              // even k >= 12: g in S_k(SL2), f in S_{2k-4}, d=1
LiftSpec miyawaki2_spec(int k);              // even k >= 14: g in S_{k-2}(SL2), f in S_{2k-2}, d=1
LiftSpec ikeda_spec(int fweight, int d);     // rank-0 source, f in S_fweight
LiftSpec ibukiyama1_spec(int n0, int m);     // even n0 >= 2, even m > 2n0: f in S_{n0+2, 2m-3n0-2}(Sp2)
LiftSpec ibukiyama2_spec(int n0, int m);     // n0 >= 2, m >= 2n0+2: f in S_{2m-2n0}, g in S_{m-2n0+2, 2n0-2}(Sp2)

std::string mode_name(LiftMode m);

} // namespace splift
