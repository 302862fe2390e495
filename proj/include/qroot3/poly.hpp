#pragma once

#include <map>
#include <string>
#include <vector>

#include "qroot3/linalg.hpp"

namespace qroot3 {

// Polynomial over Q(q) in commuting variables that are real (conjugation acts on coefficients).
class Poly {
public:
    using Monomial = std::vector<int>;  // exponents, no trailing zeros

    Poly() = default;
    Poly(int c) : Poly(Cyc(c)) {}
    Poly(const Cyc& c);
    static Poly var(int i);

    const std::map<Monomial, Cyc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyc constant() const;

    Poly conj() const;
    // Set the listed variables to zero.
    Poly drop_vars(const std::vector<int>& vars) const;
    Cyc eval(const std::vector<Cyc>& point) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names) const;

private:
    void add_term(const Monomial& m, const Cyc& c);
    std::map<Monomial, Cyc> terms_;
};

using PolyVector = Vec<Poly>;
using PolyMatrix = Mat<Poly>;

PolyVector to_poly(const CycVector& v);
PolyMatrix to_poly(const CycMatrix& m);
bool is_zero(const PolyVector& v);
bool is_zero(const PolyMatrix& m);
Poly det(const PolyMatrix& m);  // cofactor expansion, small sizes only

}  // namespace qroot3

namespace Eigen {
template <>
struct NumTraits<qroot3::Poly> : GenericNumTraits<qroot3::Poly> {
    using Real = qroot3::Poly;
    using NonInteger = qroot3::Poly;
    using Nested = qroot3::Poly;
    static int digits10() { return 0; }  // exact, used only when printing
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 64
    };
};
}  // namespace Eigen
