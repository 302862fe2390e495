#pragma once

#include "qroot3/env_h.hpp"

// Universal R-matrix of H and its image on the two-dimensional representation.
namespace qroot3::rmatrix {

// Dense element of H (x) H, index 27 i + j.
using TensorHH = CycVector;

// Cartan factor (1/3q)[...] and unipotent factor 1 + (q - q^-1) X- (x) X+ + 3q X-^2 (x) X+^2.
TensorHH cartan_factor();
TensorHH unipotent_factor();
TensorHH unipotent_factor(const Cyc& x2_coeff);  // with a free X-^2 (x) X+^2 coefficient
TensorHH universal_r();                          // the printed product formula
// Inverse built from the factors; the unipotent part is inverted as a finite geometric series.
TensorHH r_inverse();
TensorHH r_from(const Cyc& scale, const Cyc& x2_coeff);
TensorHH r_inverse_from(const Cyc& scale, const Cyc& x2_coeff);

// Scalar fixed by the counit, then the X-^2 (x) X+^2 coefficient searched on the grid a + bq, |a|, |b| <= 3,
// keeping the values for which R Delta R^-1 = Delta^op and both hexagon identities hold.
struct Normalization {
    bool found = false;
    Cyc scale{1}, x2_coeff{0};
    std::vector<Cyc> candidates;
};
Normalization search_normalization();
const Normalization& normalization();
TensorHH normalized_r();

TensorHH hh_mul(const TensorHH& a, const TensorHH& b);
Cyc coefficient(const TensorHH& t, const env_h::HElem& left, const env_h::HElem& right);
std::string format_hh(const TensorHH& t);

// Printed R, where the hexagon and counit/antipode identities are expected to fail, then the normalized R.
Report check_quasitriangularity();

struct Fundamental {
    CycMatrix rhat, S, A;  // 4 x 4 on x(x)x, x(x)y, y(x)x, y(x)y
};
Fundamental fundamental_rhat();
Report check_fundamental();
Report relations_from_projectors();

Report verify();

}  // namespace qroot3::rmatrix
