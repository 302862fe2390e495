#pragma once

#include <array>
#include <string>

#include "qroot3/linalg.hpp"

namespace qroot3 {

// Exterior algebra on theta1, theta2: basis 1, t1, t2, t1t2.
class Grass4 {
public:
    Grass4() = default;
    Grass4(int c) : Grass4(Cyc(c)) {}
    Grass4(const Cyc& c) { c_[0] = c; }
    Grass4(const Cyc& one, const Cyc& t1, const Cyc& t2, const Cyc& t12) : c_{one, t1, t2, t12} {}
    static Grass4 theta1() { return Grass4(0, 1, 0, 0); }
    static Grass4 theta2() { return Grass4(0, 0, 1, 0); }
    static Grass4 theta12() { return Grass4(0, 0, 0, 1); }

    const Cyc& operator[](int i) const { return c_[i]; }
    Cyc& operator[](int i) { return c_[i]; }
    bool is_zero() const;
    bool is_even() const { return c_[1].is_zero() && c_[2].is_zero(); }
    bool is_odd() const { return c_[0].is_zero() && c_[3].is_zero(); }

    Grass4& operator+=(const Grass4& o);
    Grass4& operator-=(const Grass4& o);
    friend Grass4 operator+(Grass4 a, const Grass4& b) { return a += b; }
    friend Grass4 operator-(Grass4 a, const Grass4& b) { return a -= b; }
    friend Grass4 operator*(const Grass4& a, const Grass4& b);
    Grass4& operator*=(const Grass4& o) { return *this = *this * o; }
    Grass4 operator-() const { return Grass4() - *this; }
    friend bool operator==(const Grass4& a, const Grass4& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Grass4& a, const Grass4& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Cyc, 4> c_{};
};

// Commutative ring Q(q)[xi1, xi2] / (xi1^3, xi2^3): basis xi1^i xi2^j at index 3i + j.
class Grass9 {
public:
    Grass9() = default;
    Grass9(int c) : Grass9(Cyc(c)) {}
    Grass9(const Cyc& c) { c_[0] = c; }
    static Grass9 xi(int i, int j, const Cyc& c = Cyc(1));

    const Cyc& operator[](int i) const { return c_[i]; }
    Cyc& operator[](int i) { return c_[i]; }
    bool is_zero() const;

    Grass9& operator+=(const Grass9& o);
    Grass9& operator-=(const Grass9& o);
    friend Grass9 operator+(Grass9 a, const Grass9& b) { return a += b; }
    friend Grass9 operator-(Grass9 a, const Grass9& b) { return a -= b; }
    friend Grass9 operator*(const Grass9& a, const Grass9& b);
    Grass9& operator*=(const Grass9& o) { return *this = *this * o; }
    Grass9 operator-() const { return Grass9() - *this; }
    friend bool operator==(const Grass9& a, const Grass9& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Grass9& a, const Grass9& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Cyc, 9> c_{};
};

using G4Matrix = Mat<Grass4>;
using G9Matrix = Mat<Grass9>;

// Entry order is kept (lhs entry times rhs entry), which matters for odd Grassmann entries.
G4Matrix matmul(const G4Matrix& a, const G4Matrix& b);
G9Matrix matmul(const G9Matrix& a, const G9Matrix& b);

}  // namespace qroot3

namespace Eigen {
template <>
struct NumTraits<qroot3::Grass4> : GenericNumTraits<qroot3::Grass4> {
    using Real = qroot3::Grass4;
    using NonInteger = qroot3::Grass4;
    using Nested = qroot3::Grass4;
    static int digits10() { return 0; }  // exact, used only when printing
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 8, AddCost = 32, MulCost = 64 };
};
template <>
struct NumTraits<qroot3::Grass9> : GenericNumTraits<qroot3::Grass9> {
    using Real = qroot3::Grass9;
    using NonInteger = qroot3::Grass9;
    using Nested = qroot3::Grass9;
    static int digits10() { return 0; }  // exact, used only when printing
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 16, AddCost = 64, MulCost = 128 };
};
}  // namespace Eigen
