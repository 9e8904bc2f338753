#include "splift/archrep.hpp"

#include <algorithm>
#include <sstream>

namespace splift {

std::string FourthRootUnit::str() const {
    switch (e_) {
        case 0: return "1";
        case 1: return "i";
        case 2: return "-1";
        default: return "-i";
    }
}

std::string ArchConstituent::str() const {
    switch (kind_) {
        case Kind::two_dim: return "rho_" + std::to_string(alpha_);
        case Kind::trivial: return "1";
        default: return "sgn";
    }
}

int ArchRep::dimension() const {
    int d = 0;
    for (const auto& c : constituents_) d += c.dimension();
    return d;
}

ArchRep ArchRep::operator+(const ArchRep& o) const {
    std::vector<ArchConstituent> cs = constituents_;
    cs.insert(cs.end(), o.constituents_.begin(), o.constituents_.end());
    return ArchRep(std::move(cs));
}

bool ArchRep::operator==(const ArchRep& o) const {
    if (constituents_.size() != o.constituents_.size()) return false;
    auto a = constituents_;
    auto b = o.constituents_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string ArchRep::str() const {
    if (constituents_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < constituents_.size(); ++i) {
        if (i) os << " + ";
        os << constituents_[i].str();
    }
    return os.str();
}

int root_number_rho_rho(int a, int b) {
    if (a < 1 || b < 1)
        throw Error(errc::domain, "root_number_rho_rho needs positive indices; decompose rho_0 first");
    int hi = std::max(a, b);
    int lo = std::min(a, b);
    return (hi % 2 == 0 && lo % 2 == 1) ? -1 : 1;
}

FourthRootUnit root_number_rho_sgn(int a, int /*delta*/) {
    if (a < 1) throw Error(errc::domain, "root_number_rho_sgn needs alpha >= 1");
    return FourthRootUnit(a + 1);
}

FourthRootUnit root_number_pair(const ArchRep& a, const ArchRep& b) {
    if (a.empty() || b.empty()) throw Error(errc::domain, "root_number_pair needs nonempty representations");
    FourthRootUnit u(0);
    for (const auto& x : a.constituents()) {
        for (const auto& y : b.constituents()) {
            if (x.is_two_dim() && y.is_two_dim()) {
                u *= FourthRootUnit(root_number_rho_rho(x.alpha(), y.alpha()) == 1 ? 0 : 2);
            } else if (x.is_two_dim()) {
                u *= root_number_rho_sgn(x.alpha(), y.kind() == ArchConstituent::Kind::sign ? 1 : 0);
            } else if (y.is_two_dim()) {
                u *= root_number_rho_sgn(y.alpha(), x.kind() == ArchConstituent::Kind::sign ? 1 : 0);
            }
            // quadratic x quadratic contributes +1
        }
    }
    return u;
}

SelfDualType self_dual_type(const ArchConstituent& c) {
    if (c.is_two_dim() && c.alpha() % 2 == 1) return SelfDualType::symplectic;
    return SelfDualType::orthogonal;
}

int det_at_minus_one(const ArchRep& a) {
    int s = 1;
    for (const auto& c : a.constituents()) {
        switch (c.kind()) {
            case ArchConstituent::Kind::two_dim:
                if (c.alpha() % 2 == 0) s = -s; // (-1)^{alpha+1}
                break;
            case ArchConstituent::Kind::sign:
                s = -s;
                break;
            case ArchConstituent::Kind::trivial:
                break;
        }
    }
    return s;
}

std::vector<int> exponents_of_factor(const ArchConstituent& c, int d) {
    if (d < 1) throw Error(errc::domain, "exponents_of_factor needs d >= 1");
    std::vector<int> out;
    if (c.is_two_dim()) {
        out.reserve(2 * static_cast<size_t>(d));
        for (int l = 0; l < d; ++l) {
            int e2 = c.alpha() + d - 1 - 2 * l;
            out.push_back(e2);
            out.push_back(-e2);
        }
    } else {
        out.reserve(static_cast<size_t>(d));
        for (int l = 0; l < d; ++l) out.push_back(d - 1 - 2 * l);
    }
    return out;
}

} // namespace splift
