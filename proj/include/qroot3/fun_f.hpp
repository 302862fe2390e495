#pragma once

#include <array>

#include "qroot3/algebra.hpp"
#include "qroot3/grassmann.hpp"
#include "qroot3/qplane.hpp"

// The 27-dimensional quantum group F with basis a^al b^be c^ga at index 9al + 3be + ga.
// d is eliminated through d = a^2 (1 + q bc).
namespace qroot3::fun_f {

using FElem = CycVector;

constexpr int kDim = 27;
constexpr int index(int al, int be, int ga) { return 9 * (al % 3) + 3 * be + ga; }

const AlgebraTable& algebra();
const HopfDescriptor& hopf();
// Same structure with Delta(a) replaced by a (x) a, used to exercise the checker.
HopfDescriptor corrupted_hopf();

FElem mono(int al, int be, int ga, const Cyc& c = Cyc(1));
FElem one();
FElem a();
FElem b();
FElem c();
FElem d();
FElem mul(const FElem& u, const FElem& v);
FElem pow(const FElem& u, int k);
FElem q_determinant();  // da - q^2 bc

CycVector coproduct(const FElem& u);  // in F (x) F
FElem antipode(const FElem& u);
Cyc counit(const FElem& u);
FElem star(const FElem& u);
CycVector star_tensor(const CycVector& t);  // star on each factor of F (x) F

// Coactions on M. Left lands in F (x) M (index 9f + z), right in M (x) F (index 27z + f).
CycVector coact_left(const qplane::MElem& z);
CycVector coact_right(const qplane::MElem& z);
Coaction left_coaction();
Coaction right_coaction();

G9Matrix ogievetsky_rep(const FElem& u);

// 3x3 matrices with entries in F, row-major.
using FMatrix = std::array<FElem, 9>;
FMatrix fmatmul(const FMatrix& x, const FMatrix& y);
FElem ftrace(const FMatrix& x);
// lambda'_i, with the same sqrt(3) scaling as qplane::gell_mann.
FMatrix lambda_prime(int i);
// The two matrices printed for lambda'_3 and sqrt(3) lambda'_8. For lambda'_8 the
// diagonal a-coefficients are the ones forced by (eps (x) id) lambda' = lambda.
FMatrix printed_lambda_prime(int i);
FMatrix printed_lambda8_literal();

Report verify();

}  // namespace qroot3::fun_f
