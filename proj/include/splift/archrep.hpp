#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "splift/errors.hpp"

namespace splift {

// Fourth root of unity sqrt(-1)^e, e mod 4.
class FourthRootUnit {
public:
    explicit FourthRootUnit(int e = 0) : e_(((e % 4) + 4) % 4) {}

    int exponent() const { return e_; }
    bool is_real() const { return e_ % 2 == 0; }

    // +1 or -1; real values only
    int sign() const {
        if (!is_real()) throw Error(errc::not_coherent, "root number is not real");
        return e_ == 0 ? 1 : -1;
    }

    FourthRootUnit operator*(FourthRootUnit o) const { return FourthRootUnit(e_ + o.e_); }
    FourthRootUnit& operator*=(FourthRootUnit o) { return *this = *this * o; }
    bool operator==(FourthRootUnit o) const { return e_ == o.e_; }

    std::string str() const;

private:
    int e_;
};

enum class SelfDualType { orthogonal, symplectic };

// Irreducible self-dual summand of a real Weil-group representation:
// either the 2-dimensional rho_alpha (alpha >= 1) or a quadratic character.
// rho_0 is not representable; it decomposes as trivial + sign.
class ArchConstituent {
public:
    enum class Kind { two_dim, trivial, sign };

    static ArchConstituent rho(int alpha) {
        if (alpha < 1)
            throw Error(errc::domain, "rho_alpha requires alpha >= 1 (rho_0 splits as 1 + sgn)");
        return ArchConstituent(Kind::two_dim, alpha);
    }
    static ArchConstituent trivial() { return ArchConstituent(Kind::trivial, 0); }
    static ArchConstituent sign() { return ArchConstituent(Kind::sign, 0); }

    Kind kind() const { return kind_; }
    bool is_two_dim() const { return kind_ == Kind::two_dim; }
    bool is_quadratic() const { return kind_ != Kind::two_dim; }

    int alpha() const {
        if (!is_two_dim()) throw Error(errc::domain, "quadratic constituent has no alpha");
        return alpha_;
    }

    int dimension() const { return is_two_dim() ? 2 : 1; }

    bool operator==(const ArchConstituent& o) const { return kind_ == o.kind_ && alpha_ == o.alpha_; }
    bool operator<(const ArchConstituent& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        return alpha_ > o.alpha_; // larger alpha first
    }

    std::string str() const;

private:
    ArchConstituent(Kind k, int a) : kind_(k), alpha_(a) {}
    Kind kind_;
    int alpha_;
};

// Multiset of constituents; self-dual by construction.
class ArchRep {
public:
    ArchRep() = default;
    explicit ArchRep(std::vector<ArchConstituent> constituents) : constituents_(std::move(constituents)) {}
    ArchRep(std::initializer_list<ArchConstituent> cs) : constituents_(cs) {}

    static ArchRep rho(int alpha) { return ArchRep({ArchConstituent::rho(alpha)}); }

    const std::vector<ArchConstituent>& constituents() const { return constituents_; }
    bool empty() const { return constituents_.empty(); }
    int dimension() const;

    ArchRep operator+(const ArchRep& o) const; // direct sum

    // multiset equality
    bool operator==(const ArchRep& o) const;

    std::string str() const;

private:
    std::vector<ArchConstituent> constituents_;
};

// eps(rho_alpha (x) rho_beta) for positive alpha, beta, in either order:
// -1 exactly when max is even and min is odd, +1 otherwise.
int root_number_rho_rho(int a, int b);

// eps(rho_alpha (x) sgn^delta) = sqrt(-1)^{alpha+1}, independent of delta.
FourthRootUnit root_number_rho_sgn(int a, int delta);

// Multiplicative extension over all constituent pairs; pairs of quadratic
// characters contribute +1 by convention.
FourthRootUnit root_number_pair(const ArchRep& a, const ArchRep& b);

// rho_alpha is orthogonal iff alpha is even; quadratic characters are orthogonal.
SelfDualType self_dual_type(const ArchConstituent& c);

// Value at -1 of the determinant character: (-1)^{alpha+1} per rho_alpha,
// -1 per sgn, +1 per trivial.
int det_at_minus_one(const ArchRep& a);

// Restriction exponents of c (x) S_d as twice-exponent integers:
// rho_alpha gives +-(alpha+d-1-2l), quadratic characters give (d-1-2l), 0 <= l < d.
std::vector<int> exponents_of_factor(const ArchConstituent& c, int d);

} // namespace splift
