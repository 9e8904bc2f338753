#pragma once

#include <gmpxx.h>

#include <string>

#include "splift/errors.hpp"

namespace splift {

using Int = mpz_class;
using Rat = mpq_class;

// base^e as an exact rational, e may be negative
Rat rat_pow(long base, long e);

// Element a + b*sqrt(p) of the real quadratic ring used for Euler factor
// coefficients. p is a fixed prime per value; mixing primes is a logic error.
class HalfPower {
public:
    explicit HalfPower(long p) : p_(p) {}
    HalfPower(long p, Rat a, Rat b = Rat(0)) : a_(std::move(a)), b_(std::move(b)), p_(p) {
        a_.canonicalize();
        b_.canonicalize();
    }

    // p^{e2/2} with e2 a twice-exponent integer
    static HalfPower half_power(long p, long e2);
    static HalfPower one(long p) { return HalfPower(p, 1); }

    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    long prime() const { return p_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    HalfPower operator+(const HalfPower& o) const;
    HalfPower operator-(const HalfPower& o) const;
    HalfPower operator-() const { return HalfPower(p_, -a_, -b_); }
    HalfPower operator*(const HalfPower& o) const;
    HalfPower& operator+=(const HalfPower& o) { return *this = *this + o; }
    HalfPower& operator*=(const HalfPower& o) { return *this = *this * o; }

    bool operator==(const HalfPower& o) const { return p_ == o.p_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const HalfPower& o) const { return !(*this == o); }

    std::string str() const;

private:
    Rat a_{0};
    Rat b_{0};
    long p_;
};

} // namespace splift
