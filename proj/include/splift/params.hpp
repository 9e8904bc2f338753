#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splift/archrep.hpp"
#include "splift/numeric.hpp"
#include "splift/qexp.hpp"

namespace splift {

// Exact value a + b*sqrt(p) with the prime implied by context
// (used for user-supplied spin Satake traces).
struct QuadValue {
    Rat a{0};
    Rat b{0};
};

enum class DatumKind { elliptic, sym2, trivial_char, siegel_spin, siegel_std, custom };

// A level-one self-dual cuspidal datum of a general linear group, given
// symbolically: GL rank m, self-dual type, archimedean parameter, optional
// Hecke eigenvalues of the underlying form. Trusted input; validate() checks
// internal coherence only.
struct CuspidalDatum {
    DatumKind kind = DatumKind::custom;
    std::string name;
    int gl_rank = 0; // m
    SelfDualType type = SelfDualType::orthogonal;
    ArchRep arch;
    int weight = 0;    // elliptic/sym2: weight of the underlying elliptic form
    int siegel_k = 0;  // siegel_spin/siegel_std: det-power k
    int siegel_j = 0;  // siegel_spin/siegel_std: Sym(j)
    std::optional<HeckeData> hecke;
    std::map<long, std::vector<QuadValue>> spin_traces; // siegel_spin: per-prime unit traces
};

// f in S_w(SL_2(Z)): m = 2 symplectic, arch rho_{w-1}
CuspidalDatum elliptic_datum(const std::string& name, int weight);
// Sym^2 of a weight-w elliptic form: m = 3 orthogonal, arch rho_{2w-2} + sgn
CuspidalDatum sym2_datum(const std::string& name, int weight);
// trivial Hecke character: m = 1 orthogonal
CuspidalDatum trivial_datum();
// degree-2 Siegel eigenform of weight det^k Sym(j) via its degree-4 transfer:
// m = 4 symplectic, arch rho_{j+2k-3} + rho_{j+1}
CuspidalDatum siegel_spin_datum(const std::string& name, int k, int j);
// degree-5 standard transfer of a degree-2 eigenform of weight det^k Sym(j):
// m = 5 orthogonal, arch rho_{2(k+j)-2} + rho_{2k-4} + 1
CuspidalDatum siegel_std_datum(const std::string& name, int k, int j);

// Formal sum tau_1[d_1] +++ ... +++ tau_r[d_r] with sum m_i d_i = 2n+1.
struct Constituent {
    CuspidalDatum tau;
    int d = 1;
};

class GlobalAParameter {
public:
    GlobalAParameter() = default;
    explicit GlobalAParameter(std::vector<Constituent> cs) : constituents_(std::move(cs)) {}

    const std::vector<Constituent>& constituents() const { return constituents_; }
    size_t rank() const { return constituents_.size(); } // r
    int total_dimension() const;                         // sum m_i d_i
    int group_rank() const;                              // n with 2n+1 = total dimension

    GlobalAParameter boxplus(const Constituent& c) const;

    std::string str() const;

private:
    std::vector<Constituent> constituents_;
};

// Free F_2-module with one generator per constituent; elements are index
// subsets encoded as bitmasks. z is the all-ones element.
class ComponentGroup {
public:
    explicit ComponentGroup(size_t rank) : rank_(rank) {}
    size_t rank() const { return rank_; }
    std::uint32_t z() const { return rank_ == 0 ? 0 : ((1u << rank_) - 1); }
    std::vector<std::uint32_t> elements() const;

private:
    size_t rank_;
};

// Character of a component group given by its values on basis generators.
class SignCharacter {
public:
    SignCharacter() = default;
    explicit SignCharacter(std::vector<int> basis_values) : values_(std::move(basis_values)) {}

    size_t rank() const { return values_.size(); }
    int on_generator(size_t i) const { return values_.at(i); }
    int operator()(std::uint32_t element) const;

    bool operator==(const SignCharacter& o) const { return values_ == o.values_; }

private:
    std::vector<int> values_; // each +1 or -1
};

// Checks every structural invariant; returns one message per violation.
std::vector<std::string> validate(const GlobalAParameter& psi);
bool is_valid(const GlobalAParameter& psi);

ComponentGroup component_group(const GlobalAParameter& psi);

// Central value of the Rankin-Selberg epsilon factor of a pair of
// constituents, computed archimedeanly (level one: finite factors trivial).
// Throws not_globally_coherent if any pairwise value is not real, and
// not_automorphically_realizable if a pair with d_i = d_j mod 2 deviates
// from +1. Entry (i,i) is +1.
std::vector<std::vector<int>> pairwise_epsilons(const GlobalAParameter& psi);

// eps(alpha_i) = prod_{j != i} eps(tau_i x tau_j)^{min(d_i, d_j)}
SignCharacter epsilon_direct(const GlobalAParameter& psi);

// Same character through the adjoint decomposition: product of pairwise
// epsilon values over cross summands of even SL2-dimension that the element
// flips. Subsets of odd total dimension are evaluated via the complement.
int epsilon_adjoint(const GlobalAParameter& psi, std::uint32_t element);
SignCharacter epsilon_adjoint_character(const GlobalAParameter& psi);

// One factor constituent (x) S_d of the archimedean localization, tagged
// with the index of the global constituent it came from.
struct LocalArchFactor {
    ArchConstituent constituent;
    int d;
    int source;
};

// Flattens each (tau_i, d_i) into archimedean factors; the basis-generator
// correspondence alpha_i -> sum of factors with source i is carried by the
// source tags.
std::vector<LocalArchFactor> localize_infinity(const GlobalAParameter& psi);

} // namespace splift
