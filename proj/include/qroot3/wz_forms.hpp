#pragma once

#include <array>

#include "qroot3/env_h.hpp"

// The reduced Wess-Zumino complex over M. Basis m g at index 9 g + z, where z is the
// M index of m and g runs over 1, dx, dy, dx dy; coefficients sit on the left.
namespace qroot3::wz_forms {

using WZForm = CycVector;

constexpr int kDim = 36;
enum Gen { One = 0, Dx = 1, Dy = 2, DxDy = 3 };
constexpr int index(int g, int z) { return 9 * g + z; }
constexpr int degree_of(int i) { return i < 9 ? 0 : i < 27 ? 1 : 2; }

const AlgebraTable& algebra();

WZForm basis(int r, int s, Gen g, const Cyc& c = Cyc(1));
WZForm from_function(const qplane::MElem& m, Gen g = One);
qplane::MElem coefficient(const WZForm& u, Gen g);
WZForm dx();
WZForm dy();
WZForm dxdy();
// Projection on a single degree.
WZForm part(const WZForm& u, int degree);

WZForm wz_mul(const WZForm& u, const WZForm& v);
WZForm d(const WZForm& u);
const CycMatrix& d_matrix();

// (dm)_x and (dm)_y as 3x3 matrices, from the closed formula.
struct DmPair {
    CycMatrix x, y;
};
DmPair dm_closed_form(const CycMatrix& m);
WZForm dm_matrix(const CycMatrix& m);              // Leibniz computation of d(m)
WZForm dm_from_closed_form(const CycMatrix& m);

// Actions of H: generators act on dx, dy as on x, y, products via the coproduct.
enum class Side { L, R };
CycMatrix action_matrix(const env_h::HElem& h, Side side);
WZForm h_act_on_forms(const env_h::HElem& h, const WZForm& u, Side side);
ModuleAction action_on_forms(Side side);

// Delta_R lands in WZ (x) F (index 27 w + f), Delta_L in F (x) WZ (index 36 f + w).
Coaction right_coaction();
Coaction left_coaction();

WZForm star_form(const WZForm& u);

struct Cohomology {
    int z = 0, b = 0, h = 0;
};
std::array<Cohomology, 3> cohomology();

Report manin_check();
Report structure_checks();  // associativity, Leibniz, d^2, dimensions
Report action_tables();
Report d_tables();
Report star_checks();
Report h_decomposition_of_forms();
Report rep_product_tables();
Report verify();

}  // namespace qroot3::wz_forms
