#include "splift/params.hpp"

#include <algorithm>
#include <sstream>

#include "splift/sl2comb.hpp"

namespace splift {

CuspidalDatum elliptic_datum(const std::string& name, int weight) {
    if (weight < 2 || weight % 2 != 0)
        throw Error(errc::domain, "elliptic datum needs a positive even weight");
    CuspidalDatum t;
    t.kind = DatumKind::elliptic;
    t.name = name;
    t.gl_rank = 2;
    t.type = SelfDualType::symplectic;
    t.arch = ArchRep::rho(weight - 1);
    t.weight = weight;
    return t;
}

CuspidalDatum sym2_datum(const std::string& name, int weight) {
    if (weight < 2 || weight % 2 != 0)
        throw Error(errc::domain, "sym2 datum needs a positive even underlying weight");
    CuspidalDatum t;
    t.kind = DatumKind::sym2;
    t.name = name;
    t.gl_rank = 3;
    t.type = SelfDualType::orthogonal;
    t.arch = ArchRep({ArchConstituent::rho(2 * weight - 2), ArchConstituent::sign()});
    t.weight = weight;
    return t;
}

CuspidalDatum trivial_datum() {
    CuspidalDatum t;
    t.kind = DatumKind::trivial_char;
    t.name = "1";
    t.gl_rank = 1;
    t.type = SelfDualType::orthogonal;
    t.arch = ArchRep({ArchConstituent::trivial()});
    return t;
}

CuspidalDatum siegel_spin_datum(const std::string& name, int k, int j) {
    if (j < 1 || j % 2 != 0 || k < 3)
        throw Error(errc::domain, "degree-2 spin datum needs even j >= 2 and k >= 3");
    CuspidalDatum t;
    t.kind = DatumKind::siegel_spin;
    t.name = name;
    t.gl_rank = 4;
    t.type = SelfDualType::symplectic;
    t.arch = ArchRep({ArchConstituent::rho(j + 2 * k - 3), ArchConstituent::rho(j + 1)});
    t.siegel_k = k;
    t.siegel_j = j;
    return t;
}

CuspidalDatum siegel_std_datum(const std::string& name, int k, int j) {
    if (j < 1 || j % 2 != 0 || k < 4)
        throw Error(errc::domain, "degree-2 standard datum needs even j >= 2 and k >= 4");
    CuspidalDatum t;
    t.kind = DatumKind::siegel_std;
    t.name = name;
    t.gl_rank = 5;
    t.type = SelfDualType::orthogonal;
    t.arch = ArchRep({ArchConstituent::rho(2 * (k + j) - 2), ArchConstituent::rho(2 * k - 4),
                      ArchConstituent::trivial()});
    t.siegel_k = k;
    t.siegel_j = j;
    return t;
}

int GlobalAParameter::total_dimension() const {
    int s = 0;
    for (const auto& c : constituents_) s += c.tau.gl_rank * c.d;
    return s;
}

int GlobalAParameter::group_rank() const {
    int t = total_dimension();
    if (t % 2 == 0) throw Error(errc::domain, "parameter has even total dimension");
    return (t - 1) / 2;
}

GlobalAParameter GlobalAParameter::boxplus(const Constituent& c) const {
    std::vector<Constituent> cs;
    cs.reserve(constituents_.size() + 1);
    cs.push_back(c);
    cs.insert(cs.end(), constituents_.begin(), constituents_.end());
    return GlobalAParameter(std::move(cs));
}

std::string GlobalAParameter::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < constituents_.size(); ++i) {
        if (i) os << " +++ ";
        os << constituents_[i].tau.name << "[" << constituents_[i].d << "]";
    }
    return os.str();
}

std::vector<std::uint32_t> ComponentGroup::elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(1u << rank_);
    for (std::uint32_t m = 0; m < (1u << rank_); ++m) out.push_back(m);
    return out;
}

int SignCharacter::operator()(std::uint32_t element) const {
    int s = 1;
    for (size_t i = 0; i < values_.size(); ++i)
        if (element & (1u << i)) s *= values_[i];
    return s;
}

std::vector<std::string> validate(const GlobalAParameter& psi) {
    std::vector<std::string> v;
    const auto& cs = psi.constituents();
    if (cs.empty()) {
        v.push_back("parameter has no constituents");
        return v;
    }
    if (cs.size() > 31) {
        v.push_back("too many constituents");
        return v;
    }
    for (size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        std::string tag = c.tau.name + "[" + std::to_string(c.d) + "]";
        if (c.d < 1) v.push_back(tag + ": SL2 multiplicity must be positive");
        if (c.tau.gl_rank < 1) v.push_back(tag + ": GL rank must be positive");
        if (c.tau.arch.dimension() != c.tau.gl_rank)
            v.push_back(tag + ": archimedean parameter has dimension " +
                        std::to_string(c.tau.arch.dimension()) + ", expected " +
                        std::to_string(c.tau.gl_rank));
        // type consistency of the archimedean constituents
        for (const auto& a : c.tau.arch.constituents()) {
            if (c.tau.type == SelfDualType::symplectic) {
                if (!a.is_two_dim() || a.alpha() % 2 == 0)
                    v.push_back(tag + ": symplectic datum with non-symplectic constituent " + a.str());
            } else if (self_dual_type(a) != SelfDualType::orthogonal) {
                v.push_back(tag + ": orthogonal datum with symplectic constituent " + a.str());
            }
        }
        // d parity vs self-dual type
        if (c.d % 2 == 1 && c.tau.type != SelfDualType::orthogonal)
            v.push_back(tag + ": odd multiplicity requires an orthogonal datum");
        if (c.d % 2 == 0 && c.tau.type != SelfDualType::symplectic)
            v.push_back(tag + ": even multiplicity requires a symplectic datum");
        for (size_t j = i + 1; j < cs.size(); ++j) {
            if (cs[j].tau.name == c.tau.name) {
                if (cs[j].d == c.d)
                    v.push_back("constituent " + tag + " listed twice");
                if (!(cs[j].tau.arch == c.tau.arch) || cs[j].tau.gl_rank != c.tau.gl_rank)
                    v.push_back("name " + c.tau.name + " denotes two different data");
            }
        }
    }
    if (psi.total_dimension() % 2 == 0)
        v.push_back("total dimension " + std::to_string(psi.total_dimension()) + " is even");
    // level-one surrogate of the central character condition
    int det = 1;
    for (const auto& c : cs)
        if (c.d % 2 == 1) det *= det_at_minus_one(c.tau.arch);
    if (det != 1) v.push_back("central character condition fails: det product at -1 is -1");
    return v;
}

bool is_valid(const GlobalAParameter& psi) { return validate(psi).empty(); }

ComponentGroup component_group(const GlobalAParameter& psi) {
    return ComponentGroup(psi.rank());
}

std::vector<std::vector<int>> pairwise_epsilons(const GlobalAParameter& psi) {
    const auto& cs = psi.constituents();
    const size_t r = cs.size();
    std::vector<std::vector<int>> eps(r, std::vector<int>(r, 1));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = i + 1; j < r; ++j) {
            FourthRootUnit u = root_number_pair(cs[i].tau.arch, cs[j].tau.arch);
            if (!u.is_real())
                throw Error(errc::not_coherent,
                            "parameter not globally coherent: eps(" + cs[i].tau.name + " x " +
                                cs[j].tau.name + ") = " + u.str());
            int s = u.sign();
            if ((cs[i].d - cs[j].d) % 2 == 0 && s != 1)
                throw Error(errc::not_realizable,
                            "parameter not automorphically realizable: eps(" + cs[i].tau.name +
                                " x " + cs[j].tau.name + ") = -1 with d_i = d_j mod 2");
            eps[i][j] = eps[j][i] = s;
        }
    }
    return eps;
}

SignCharacter epsilon_direct(const GlobalAParameter& psi) {
    const auto& cs = psi.constituents();
    auto eps = pairwise_epsilons(psi);
    std::vector<int> values(cs.size(), 1);
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs.size(); ++j) {
            if (j == i) continue;
            if (std::min(cs[i].d, cs[j].d) % 2 == 1) values[i] *= eps[i][j];
        }
    return SignCharacter(std::move(values));
}

int epsilon_adjoint(const GlobalAParameter& psi, std::uint32_t element) {
    const auto& cs = psi.constituents();
    auto eps = pairwise_epsilons(psi);
    // elements with odd total dimension are not in SO; use the complement,
    // which differs by the central -1 where the character is defined to be 1
    long dim = 0;
    for (size_t i = 0; i < cs.size(); ++i)
        if (element & (1u << i)) dim += static_cast<long>(cs[i].tau.gl_rank) * cs[i].d;
    if (dim % 2 != 0) element = component_group(psi).z() ^ element;

    std::vector<std::pair<int, int>> shapes;
    shapes.reserve(cs.size());
    for (const auto& c : cs) shapes.emplace_back(c.tau.gl_rank, c.d);

    int s = 1;
    for (const auto& block : adjoint_summands(shapes)) {
        if (block.kind != AdjointSummand::Kind::cross) continue; // diagonal blocks act by +1
        if (block.d_alpha % 2 != 0) continue;
        bool in_i = element & (1u << block.i);
        bool in_j = element & (1u << block.j);
        if (in_i != in_j) s *= eps[block.i][block.j];
    }
    return s;
}

SignCharacter epsilon_adjoint_character(const GlobalAParameter& psi) {
    std::vector<int> values(psi.rank());
    for (size_t i = 0; i < psi.rank(); ++i)
        values[i] = epsilon_adjoint(psi, 1u << i);
    return SignCharacter(std::move(values));
}

std::vector<LocalArchFactor> localize_infinity(const GlobalAParameter& psi) {
    std::vector<LocalArchFactor> out;
    const auto& cs = psi.constituents();
    for (size_t i = 0; i < cs.size(); ++i)
        for (const auto& a : cs[i].tau.arch.constituents())
            out.push_back({a, cs[i].d, static_cast<int>(i)});
    return out;
}

} // namespace splift
