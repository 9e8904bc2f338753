#include "splift/numeric.hpp"

#include <sstream>

namespace splift {

Rat rat_pow(long base, long e) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(num);
    Rat r(1, num);
    r.canonicalize();
    return r;
}

HalfPower HalfPower::half_power(long p, long e2) {
    // e2 even: p^{e2/2} rational; e2 odd: p^{(e2-1)/2} * sqrt(p)
    if (e2 % 2 == 0) return HalfPower(p, rat_pow(p, e2 / 2));
    long q = (e2 - 1) / 2; // exact for odd e2, also when negative
    return HalfPower(p, Rat(0), rat_pow(p, q));
}

HalfPower HalfPower::operator+(const HalfPower& o) const {
    if (p_ != o.p_) throw Error(errc::domain, "HalfPower prime mismatch");
    return HalfPower(p_, a_ + o.a_, b_ + o.b_);
}

HalfPower HalfPower::operator-(const HalfPower& o) const {
    if (p_ != o.p_) throw Error(errc::domain, "HalfPower prime mismatch");
    return HalfPower(p_, a_ - o.a_, b_ - o.b_);
}

HalfPower HalfPower::operator*(const HalfPower& o) const {
    if (p_ != o.p_) throw Error(errc::domain, "HalfPower prime mismatch");
    // (a1 + b1 r)(a2 + b2 r) with r^2 = p
    return HalfPower(p_, a_ * o.a_ + b_ * o.b_ * p_, a_ * o.b_ + b_ * o.a_);
}

std::string HalfPower::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else if (a_ == 0) {
        os << b_ << "*sqrt(" << p_ << ")";
    } else {
        os << a_ << (b_ > 0 ? " + " : " - ") << abs(b_) << "*sqrt(" << p_ << ")";
    }
    return os.str();
}

} // namespace splift
