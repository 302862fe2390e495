#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qroot3 {

using Rat = mpq_class;

// Element r0 + r1*q of Q(q), q^2 + q + 1 = 0.
class Cyc {
public:
    Cyc() = default;
    Cyc(int v) : r0_(v) {}
    Cyc(long v) : r0_(v) {}
    Cyc(const Rat& v) : r0_(v) {}
    Cyc(const Rat& a, const Rat& b) : r0_(a), r1_(b) {}

    static Cyc frac(long num, long den) {
        Rat r(num, den);
        r.canonicalize();
        return Cyc(r);
    }
    static Cyc q() { return Cyc(Rat(0), Rat(1)); }
    static Cyc q2() { return Cyc(Rat(-1), Rat(-1)); }
    static Cyc qpow(int k);
    // sqrt(-3) = 2q + 1 for q = exp(2 pi i / 3)
    static Cyc sqrt_m3() { return Cyc(Rat(1), Rat(2)); }

    const Rat& r0() const { return r0_; }
    const Rat& r1() const { return r1_; }

    bool is_zero() const { return sgn(r0_) == 0 && sgn(r1_) == 0; }
    bool is_one() const { return r0_ == 1 && sgn(r1_) == 0; }
    bool is_rational() const { return sgn(r1_) == 0; }

    Cyc conj() const { return Cyc(r0_ - r1_, -r1_); }
    Rat norm() const { return r0_ * r0_ - r0_ * r1_ + r1_ * r1_; }
    // real part under q = (-1 + sqrt(-3))/2
    Rat re() const { return r0_ - r1_ / 2; }
    Cyc inv() const;

    Cyc& operator+=(const Cyc& o) { r0_ += o.r0_; r1_ += o.r1_; return *this; }
    Cyc& operator-=(const Cyc& o) { r0_ -= o.r0_; r1_ -= o.r1_; return *this; }
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o) { return *this *= o.inv(); }

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    Cyc operator-() const { return Cyc(-r0_, -r1_); }

    friend bool operator==(const Cyc& a, const Cyc& b) { return a.r0_ == b.r0_ && a.r1_ == b.r1_; }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }
    // arbitrary total order, used for canonical sorting only
    friend bool operator<(const Cyc& a, const Cyc& b) {
        if (a.r0_ != b.r0_) return a.r0_ < b.r0_;
        return a.r1_ < b.r1_;
    }

private:
    Rat r0_{0};
    Rat r1_{0};
};

// Human readable form, reparseable by the expression parser ("q^2", "(1+2*q)", "-1/3").
std::string to_string(const Cyc& c);
std::string rat_string(const Rat& r);
Rat parse_rat(const std::string& s);
std::ostream& operator<<(std::ostream& os, const Cyc& c);

inline Cyc conj(const Cyc& c) { return c.conj(); }

}  // namespace qroot3

namespace Eigen {
template <>
struct NumTraits<qroot3::Cyc> : GenericNumTraits<qroot3::Cyc> {
    using Real = qroot3::Cyc;
    using NonInteger = qroot3::Cyc;
    using Nested = qroot3::Cyc;
    static int digits10() { return 0; }  // exact, used only when printing
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
};
}  // namespace Eigen
