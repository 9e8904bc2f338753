#include "splift/lfunctions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace splift {

UnitMono unit_inverse(const UnitMono& m) {
    UnitMono out;
    for (const auto& [name, e] : m) out[name] = -e;
    return out;
}

std::string unit_str(const UnitMono& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : m) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

bool satake_invariants_hold(const SatakeParameter& c) {
    // closed under inversion
    auto key = [](const SatakeEigenvalue& e) {
        return std::make_pair(e.unit, e.e2);
    };
    std::multiset<std::pair<UnitMono, int>> all, inverted;
    for (const auto& e : c.eigenvalues) {
        all.insert(key(e));
        inverted.insert({unit_inverse(e.unit), -e.e2});
    }
    if (all != inverted) return false;
    // total product 1
    UnitMono prod;
    long e2 = 0;
    for (const auto& e : c.eigenvalues) {
        e2 += e.e2;
        for (const auto& [name, k] : e.unit) prod[name] += k;
    }
    if (e2 != 0) return false;
    for (const auto& [name, k] : prod)
        if (k != 0) return false;
    return true;
}

SatakeParameter satake_unramified(long p, const std::vector<std::pair<UnitMono, int>>& factors) {
    SatakeParameter c;
    c.p = p;
    for (const auto& [unit, d] : factors) {
        if (d < 1) throw Error(errc::domain, "satake factor with non-positive SL2 dimension");
        for (int l = 0; l < d; ++l) c.eigenvalues.push_back({unit, d - 1 - 2 * l});
    }
    if (!satake_invariants_hold(c))
        throw Error(errc::domain, "satake parameter is not self-dual with trivial determinant");
    return c;
}

std::vector<UnitMono> local_units(const CuspidalDatum& tau) {
    const std::string& u = tau.name;
    switch (tau.kind) {
        case DatumKind::trivial_char:
            return {UnitMono{}};
        case DatumKind::elliptic:
            return {{{u, 1}}, {{u, -1}}};
        case DatumKind::sym2:
            return {{{u, 2}}, UnitMono{}, {{u, -2}}};
        case DatumKind::siegel_spin:
            return {{{u + "#1", 1}}, {{u + "#2", 1}}, {{u + "#2", -1}}, {{u + "#1", -1}}};
        case DatumKind::siegel_std:
            return {{{u + "#1", 1}}, {{u + "#2", 1}}, UnitMono{}, {{u + "#2", -1}}, {{u + "#1", -1}}};
        default:
            throw Error(errc::missing_hecke, "no local unit model for datum " + tau.name);
    }
}

std::vector<std::pair<UnitMono, int>> local_factors(const GlobalAParameter& psi) {
    std::vector<std::pair<UnitMono, int>> out;
    for (const auto& c : psi.constituents())
        for (const auto& u : local_units(c.tau)) out.emplace_back(u, c.d);
    return out;
}

void add_binding(UnitBindings& b, const std::string& name, const HeckeData& data, long p) {
    auto it = data.ap.find(p);
    if (it == data.ap.end())
        throw Error(errc::missing_hecke,
                    "no Hecke eigenvalue at p = " + std::to_string(p) + " for " + name);
    // u + u^{-1} = a_p p^{-(w-1)/2}
    b.insert_or_assign(name, HalfPower::half_power(p, 1 - data.weight) * HalfPower(p, Rat(it->second)));
}

UnitBindings bindings_for(const GlobalAParameter& psi, long p) {
    UnitBindings b;
    for (const auto& c : psi.constituents()) {
        const auto& tau = c.tau;
        if ((tau.kind == DatumKind::elliptic || tau.kind == DatumKind::sym2) && tau.hecke)
            add_binding(b, tau.name, *tau.hecke, p);
        if (tau.kind == DatumKind::siegel_spin) {
            auto it = tau.spin_traces.find(p);
            if (it != tau.spin_traces.end()) {
                if (it->second.size() != 2)
                    throw Error(errc::parse, "spin traces at p = " + std::to_string(p) +
                                                 " must list two values");
                b.insert_or_assign(tau.name + "#1", HalfPower(p, it->second[0].a, it->second[0].b));
                b.insert_or_assign(tau.name + "#2", HalfPower(p, it->second[1].a, it->second[1].b));
            }
        }
    }
    return b;
}

std::string SymExpr::str(long p) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (m.empty()) {
            os << c.str();
        } else {
            os << "(" << c.str() << ")*" << unit_str(m);
        }
    }
    (void)p;
    return os.str();
}

SymExpr SymRing::constant(const HalfPower& v) const {
    SymExpr e;
    if (!v.is_zero()) e.terms.emplace(UnitMono{}, v);
    return e;
}

// Rewrites bound-unit exponents into {0,1} via u^2 = c u - 1, folding like
// terms after every step.
void SymRing::fold(std::map<UnitMono, HalfPower>& acc, const UnitMono& m, const HalfPower& c) const {
    if (c.is_zero()) return;
    for (const auto& [name, e] : m) {
        if (e == 0) continue;
        auto bit = bindings_.find(name);
        if (bit == bindings_.end()) continue;
        if (e == 1) continue;
        const HalfPower& trace = bit->second;
        if (e > 1) {
            // u^e = trace * u^{e-1} - u^{e-2}
            UnitMono m1 = m, m2 = m;
            if (--m1[name] == 0) m1.erase(name);
            m2[name] -= 2;
            if (m2[name] == 0) m2.erase(name);
            fold(acc, m1, c * trace);
            fold(acc, m2, -c);
        } else {
            // u^e = trace * u^{e+1} - u^{e+2}
            UnitMono m1 = m, m2 = m;
            if (++m1[name] == 0) m1.erase(name);
            m2[name] += 2;
            if (m2[name] == 0) m2.erase(name);
            fold(acc, m1, c * trace);
            fold(acc, m2, -c);
        }
        return;
    }
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

SymExpr SymRing::term(const UnitMono& m, const HalfPower& coeff) const {
    SymExpr e;
    UnitMono cleaned;
    for (const auto& [name, k] : m)
        if (k != 0) cleaned[name] = k;
    fold(e.terms, cleaned, coeff);
    return e;
}

SymExpr SymRing::add(const SymExpr& a, const SymExpr& b) const {
    SymExpr out = a;
    for (const auto& [m, c] : b.terms) fold(out.terms, m, c);
    return out;
}

SymExpr SymRing::sub(const SymExpr& a, const SymExpr& b) const {
    SymExpr out = a;
    for (const auto& [m, c] : b.terms) fold(out.terms, m, -c);
    return out;
}

SymExpr SymRing::mul(const SymExpr& a, const SymExpr& b) const {
    SymExpr out;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            UnitMono m = ma;
            for (const auto& [name, e] : mb) {
                m[name] += e;
                if (m[name] == 0) m.erase(name);
            }
            fold(out.terms, m, ca * cb);
        }
    }
    return out;
}

SymRing::Poly SymRing::poly_mul(const Poly& a, const Poly& b) const {
    Poly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = add(out[i + j], mul(a[i], b[j]));
    return out;
}

SymRing::Poly local_poly(const SatakeParameter& c, const SymRing& ring) {
    SymRing::Poly out = ring.poly_one();
    for (const auto& ev : c.eigenvalues) {
        SymRing::Poly factor(2);
        factor[0] = ring.constant(HalfPower::one(ring.prime()));
        factor[1] = ring.sub(ring.zero(),
                             ring.term(ev.unit, HalfPower::half_power(ring.prime(), ev.e2)));
        out = ring.poly_mul(out, factor);
    }
    return out;
}

std::string EulerFactor::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (i) os << " + ";
        os << "(" << coefficients[i].str() << ")";
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    return os.str();
}

EulerFactor std_euler_factor(const SatakeParameter& c, const UnitBindings& bindings) {
    SymRing ring(c.p, bindings);
    auto poly = local_poly(c, ring);
    EulerFactor f;
    f.p = c.p;
    for (const auto& coeff : poly) {
        if (coeff.terms.empty()) {
            f.coefficients.emplace_back(c.p);
            continue;
        }
        if (coeff.terms.size() != 1 || !coeff.terms.begin()->first.empty()) {
            std::string sym;
            for (const auto& [m, v] : coeff.terms)
                if (!m.empty()) { sym = unit_str(m); break; }
            throw Error(errc::missing_hecke,
                        "insufficient Hecke data: unit " + sym + " survives in a coefficient");
        }
        f.coefficients.push_back(coeff.terms.begin()->second);
    }
    return f;
}

EulerFactor hecke_euler_factor(const Int& ap, int weight, int shift2, long p) {
    if (weight < 2 || weight % 2 != 0) throw Error(errc::domain, "hecke factor needs even weight");
    EulerFactor f;
    f.p = p;
    f.coefficients.push_back(HalfPower::one(p));
    f.coefficients.push_back(-(HalfPower::half_power(p, -shift2) * HalfPower(p, Rat(ap))));
    f.coefficients.push_back(HalfPower::half_power(p, 2 * (weight - 1) - 2 * shift2));
    return f;
}

namespace {

SymRing::Poly euler_to_poly(const EulerFactor& f, const SymRing& ring) {
    SymRing::Poly out;
    out.reserve(f.coefficients.size());
    for (const auto& c : f.coefficients) out.push_back(ring.constant(c));
    return out;
}

} // namespace

VerifyResult verify_factorization(const LiftResult& lift, const HeckeData& f_data,
                                  const SatakeParameter& g_satake, long p) {
    if (g_satake.p != p) throw Error(errc::domain, "satake parameter prime mismatch");

    // The lift side reduces through the data stored on the parameter itself;
    // f_data only feeds the Hecke factors on the product side. Without stored
    // data for f the f_data bindings are shared, which checks the exponent
    // bookkeeping but not the eigenvalues.
    UnitBindings bindings = bindings_for(lift.psi_lift, p);
    if (!lift.factorization.spin) {
        if (!f_data.ap.count(p))
            throw Error(errc::missing_hecke, "no a_p for f at p = " + std::to_string(p));
        if (!bindings.count(lift.f.name)) add_binding(bindings, lift.f.name, f_data, p);
    }
    SymRing ring(p, bindings);

    auto left = local_poly(satake_unramified(p, local_factors(lift.psi_lift)), ring);

    auto right = local_poly(g_satake, ring);
    for (int shift2 : lift.factorization.shifts2) {
        if (lift.factorization.spin) {
            SymRing::Poly factor = ring.poly_one();
            for (const auto& u : local_units(lift.f)) {
                SymRing::Poly lin(2);
                lin[0] = ring.constant(HalfPower::one(p));
                lin[1] = ring.sub(ring.zero(), ring.term(u, HalfPower::half_power(p, -shift2)));
                factor = ring.poly_mul(factor, lin);
            }
            right = ring.poly_mul(right, factor);
        } else {
            right = ring.poly_mul(
                right, euler_to_poly(hecke_euler_factor(f_data.ap.at(p), f_data.weight, shift2, p),
                                     ring));
        }
    }

    size_t degree = std::max(left.size(), right.size());
    left.resize(degree);
    right.resize(degree);
    for (size_t i = 0; i < degree; ++i) {
        if (!(left[i] == right[i])) {
            std::ostringstream os;
            os << "coefficient of X^" << i << ": lift side " << left[i].str(p) << ", product side "
               << right[i].str(p);
            return {false, os.str()};
        }
    }
    return {true, ""};
}

} // namespace splift
