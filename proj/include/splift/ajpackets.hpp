#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splift/params.hpp"

namespace splift {

// One block rho_alpha (x) S_d of an Adams-Johnson parameter. source tags the
// global constituent the block came from (-1 when standalone).
struct AJBlock {
    int alpha;
    int d;
    int source = -1;
};

// Archimedean parameter (+ rho_{alpha_i} (x) S_{d_i}) + sgn^delta (x) S_{d_0}
// with alpha_1 > ... > alpha_t, alpha_i + d_i odd, d_0 odd,
// delta = sum d_i mod 2, and the gap conditions
// alpha_i - alpha_{i+1} >= d_i + d_{i+1}, alpha_t >= d_t + d_0.
class AJParameter {
public:
    AJParameter(std::vector<AJBlock> blocks, int tail_delta, int tail_d, int tail_source = -1);

    const std::vector<AJBlock>& blocks() const { return blocks_; }
    int tail_delta() const { return tail_delta_; }
    int tail_d() const { return tail_d_; }
    int tail_source() const { return tail_source_; }

    int group_rank() const; // n with 2n+1 = 2 sum d_i + d_0
    // generators: one per block, plus the tail generator last
    size_t generator_count() const { return blocks_.size() + 1; }

    // positive restriction exponents (alpha_i+d_i-1)/2 .. (alpha_i-d_i+1)/2 of one block
    std::vector<int> block_exponents(size_t i) const;

private:
    std::vector<AJBlock> blocks_;
    int tail_delta_;
    int tail_d_;
    int tail_source_;
};

struct AJClassification {
    std::optional<AJParameter> parameter; // set iff violations is empty
    std::vector<std::string> violations;
};

// Sorts the two-dimensional factors by decreasing alpha, merges the quadratic
// tail, and checks the shape conditions. Repeated restriction exponents
// (equivalently: gap failures or a second quadratic factor) are violations.
AJClassification classify_adams_johnson(const std::vector<LocalArchFactor>& localized);

// throws not_adams_johnson on violations
AJParameter require_adams_johnson(const std::vector<LocalArchFactor>& localized);

// Packet member: one signature (p_i, q_i) with p_i + q_i = d_i per block.
struct AJMember {
    std::vector<std::pair<int, int>> signature;
};

// All members, prod (d_i + 1) of them.
std::vector<AJMember> packet_members(const AJParameter& psi);

// delta_i = 0 for even d_i, (-1)^{d_1 + ... + d_{i-1}} for odd d_i,
// in the canonical decreasing-alpha block order.
int delta_sign(const AJParameter& psi, size_t i);

// Character of A_psi attached to the member: (-1)^{(p_i - q_i - delta_i)/2}
// on the block generators, tail value forced by <z, .> = 1. Values are
// indexed blocks first, tail last.
SignCharacter member_character(const AJParameter& psi, const AJMember& w);

// Is the lowest weight module of vector weight k a member of this packet?
// Requires the discrete range k_n > n. On success returns its character
// (blocks first, tail last): (-1)^{(d_i - delta_i)/2} per block.
std::optional<SignCharacter> lowest_weight_test(const AJParameter& psi, const std::vector<int>& k);

// Infinitesimal character of the lowest weight module of weight k:
// {k_1-1, ..., k_n-n, 0, -(k_n-n), ..., -(k_1-1)} as a sorted multiset.
std::vector<int> infinitesimal_character(const std::vector<int>& k);

// Two distinct scalar weights k1 != k2 can share a packet only when n is
// even and {k1, k2} = {n/2, n/2+1}.
bool smo_exception(int n, int k1, int k2);

} // namespace splift
