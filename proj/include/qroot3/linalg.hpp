#pragma once

#include <optional>
#include <vector>

#include "qroot3/cyc.hpp"

namespace qroot3 {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using CycMatrix = Mat<Cyc>;
using CycVector = Vec<Cyc>;

CycMatrix zeros(int rows, int cols);
CycVector zero_vector(int n);
CycMatrix identity(int n);
CycVector unit_vector(int n, int i);

bool is_zero(const CycMatrix& m);
bool is_zero(const CycVector& v);

CycMatrix conj(const CycMatrix& m);
CycMatrix adjoint(const CycMatrix& m);  // conjugate transpose
bool is_hermitian(const CycMatrix& m);
CycMatrix kron(const CycMatrix& a, const CycMatrix& b);
// Product skipping zero entries, much faster than the dense kernel on sparse operands.
CycMatrix matmul(const CycMatrix& a, const CycMatrix& b);
CycMatrix matpow(const CycMatrix& m, int k);
Cyc trace(const CycMatrix& m);

struct Rref {
    CycMatrix reduced;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

// Exact elimination; the pivot is the first nonzero entry in the column.
Rref rref(CycMatrix m);
int rank(const CycMatrix& m);
// Columns form a basis of the null space.
CycMatrix kernel(const CycMatrix& m);

struct SolveResult {
    bool consistent = false;
    CycVector particular;
    CycMatrix homogeneous;  // kernel basis as columns
};
SolveResult solve(const CycMatrix& a, const CycVector& b);

std::optional<CycMatrix> inverse(const CycMatrix& m);
Cyc det(const CycMatrix& m);

// Basis (as columns) of the column span.
CycMatrix column_basis(const CycMatrix& m);
bool in_column_span(const CycMatrix& basis, const CycVector& v);
// Coordinates of v in the column basis (which must have independent columns).
std::optional<CycVector> coordinates(const CycMatrix& basis, const CycVector& v);
CycMatrix hstack(const CycMatrix& a, const CycMatrix& b);

struct Inertia {
    int plus = 0;
    int minus = 0;
    int zero = 0;
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
    }
    friend bool operator<(const Inertia& a, const Inertia& b) {
        if (a.plus != b.plus) return a.plus < b.plus;
        if (a.minus != b.minus) return a.minus < b.minus;
        return a.zero < b.zero;
    }
};

// Inertia of a hermitian matrix by congruence diagonalization over Q(q).
// Diagonal entries of a hermitian matrix are rational, so signs are exact.
Inertia hermitian_inertia(const CycMatrix& g);

}  // namespace qroot3
