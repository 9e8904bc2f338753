#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "splift/lifting.hpp"
#include "splift/numeric.hpp"
#include "splift/params.hpp"
#include "splift/qexp.hpp"

namespace splift {

// Laurent monomial in named unit-circle Satake units; empty map is 1.
using UnitMono = std::map<std::string, int>;

UnitMono unit_inverse(const UnitMono& m);
std::string unit_str(const UnitMono& m);

// One eigenvalue unit * p^{e2/2} of an unramified Satake parameter,
// exponents doubled to stay integral.
struct SatakeEigenvalue {
    UnitMono unit;
    int e2 = 0;
};

// Semisimple conjugacy class of the dual group at p: a multiset of
// eigenvalues closed under inversion with total product 1.
struct SatakeParameter {
    long p = 0;
    std::vector<SatakeEigenvalue> eigenvalues;
};

bool satake_invariants_hold(const SatakeParameter& c);

// Satake parameter of the unique unramified member: each factor (unit, d)
// contributes the string unit * p^{(d-1)/2}, ..., unit * p^{-(d-1)/2}.
SatakeParameter satake_unramified(long p, const std::vector<std::pair<UnitMono, int>>& factors);

// Named-unit structure of the local component of a datum at an unramified
// prime: {u, u^-1} for elliptic data, {u^2, 1, u^-2} for sym2 data, etc.
std::vector<UnitMono> local_units(const CuspidalDatum& tau);

// Flattened (unit, d) list of the localization of psi at p.
std::vector<std::pair<UnitMono, int>> local_factors(const GlobalAParameter& psi);

// name -> u + u^{-1} in Q(sqrt p)
using UnitBindings = std::map<std::string, HalfPower>;

// Bindings supplied by the Hecke data stored on the parameter's constituents:
// elliptic/sym2 data give a_p p^{-(w-1)/2}, spin data give their stored traces.
UnitBindings bindings_for(const GlobalAParameter& psi, long p);
void add_binding(UnitBindings& b, const std::string& name, const HeckeData& data, long p);

// Element of Q(sqrt p)[u_1^{+-1}, ...] with bound units reduced modulo
// u^2 = c u - 1; unbound units stay symbolic.
class SymExpr {
public:
    std::map<UnitMono, HalfPower> terms; // no zero coefficients
    std::string str(long p) const;
    bool operator==(const SymExpr& o) const { return terms == o.terms; }
};

// Reduction context: fixed prime and unit bindings.
class SymRing {
public:
    SymRing(long p, UnitBindings bindings) : p_(p), bindings_(std::move(bindings)) {}

    long prime() const { return p_; }
    SymExpr zero() const { return SymExpr{}; }
    SymExpr constant(const HalfPower& v) const;
    SymExpr term(const UnitMono& m, const HalfPower& coeff) const;
    SymExpr add(const SymExpr& a, const SymExpr& b) const;
    SymExpr sub(const SymExpr& a, const SymExpr& b) const;
    SymExpr mul(const SymExpr& a, const SymExpr& b) const;

    using Poly = std::vector<SymExpr>; // coefficients of X^0, X^1, ...
    Poly poly_one() const { return {constant(HalfPower::one(p_))}; }
    Poly poly_mul(const Poly& a, const Poly& b) const;

private:
    void fold(std::map<UnitMono, HalfPower>& acc, const UnitMono& m, const HalfPower& c) const;
    long p_;
    UnitBindings bindings_;
};

// prod over eigenvalues of (1 - eigenvalue X), reduced in the ring
SymRing::Poly local_poly(const SatakeParameter& c, const SymRing& ring);

// Reciprocal (denominator) polynomial of a local L-factor, constant term 1.
struct EulerFactor {
    long p = 0;
    std::vector<HalfPower> coefficients;
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    std::string str() const;
};

// Degree-(2n+1) standard factor attached to a Satake parameter. All unit
// symbols must reduce through the bindings; leftovers raise
// insufficient_hecke_data.
EulerFactor std_euler_factor(const SatakeParameter& c, const UnitBindings& bindings = {});

// Classically normalized Hecke factor shifted by c = shift2/2:
// 1 - a_p p^{-c} X + p^{w-1-2c} X^2.
EulerFactor hecke_euler_factor(const Int& ap, int weight, int shift2, long p);

struct VerifyResult {
    bool match = false;
    std::string detail;
};

// Checks L_p(s, lift, std) = L_p(s, g, std) * prod_i L_p(s + shift_i, f[, spin])
// as an exact polynomial identity over Q(sqrt p) (symbolically in any unbound
// units). g_satake must use the same unit names as the parameter's data.
VerifyResult verify_factorization(const LiftResult& lift, const HeckeData& f_data,
                                  const SatakeParameter& g_satake, long p);

} // namespace splift
