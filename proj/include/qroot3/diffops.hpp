#pragma once

#include <array>

#include "qroot3/wz_forms.hpp"

// Differential operators on M, stored as 9x9 matrices on the basis x^r y^s.
// d f = dx d_x(f) + dy d_y(f), with the functions to the right of dx, dy.
namespace qroot3::diffops {

using qplane::MElem;

CycMatrix mult(const MElem& f);  // left multiplication
const CycMatrix& partial_x_matrix();
const CycMatrix& partial_y_matrix();
MElem partial_x(const MElem& f);
MElem partial_y(const MElem& f);

// m[i][j] with i the lower and j the upper index, x = 0, y = 1.
using MMat2 = std::array<std::array<MElem, 2>, 2>;
MMat2 sigma(const MElem& f);  // f dx^j = dx^i sigma_i^j(f)
MMat2 tau(const MElem& f);    // dx^i f = tau_i^j(f) dx^j
MMat2 mmat_mul(const MMat2& a, const MMat2& b);
CycMatrix sigma_op(int i, int j);
CycMatrix tau_op(int i, int j);

// x^r y^s d_x^a d_y^b, at index 9 (3a + b) + 3r + s of the 81-dimensional basis.
CycMatrix monomial(int r, int s, int a, int b);
CycMatrix monomial_basis();  // 81 x 81, column k is the flattened monomial k
int basis_rank();
std::array<int, 5> order_counts();  // number of independent monomials of each order
// Coordinates of an arbitrary endomorphism in the monomial basis.
CycVector normal_form(const CycMatrix& op);
std::string format_normal_form(const CycVector& coords);

struct Scaling {
    CycMatrix mu_x, mu_y;
};
Scaling scaling_ops();

// The printed polynomial expressions for X+^L, X-^L, K^L, K-^L.
struct HDiffOps {
    CycMatrix xp, xm, k, kinv;
};
HDiffOps h_generators();

Report relations_report();
Report scaling_report();
Report h_generators_as_diffops();
Report verify();

}  // namespace qroot3::diffops
