#include "qroot3/linalg.hpp"

#include <stdexcept>

namespace qroot3 {

CycMatrix zeros(int rows, int cols) { return CycMatrix::Constant(rows, cols, Cyc(0)); }
CycVector zero_vector(int n) { return CycVector::Constant(n, Cyc(0)); }

CycMatrix identity(int n) {
    CycMatrix m = zeros(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Cyc(1);
    return m;
}

CycVector unit_vector(int n, int i) {
    CycVector v = zero_vector(n);
    v(i) = Cyc(1);
    return v;
}

bool is_zero(const CycMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

bool is_zero(const CycVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

CycMatrix conj(const CycMatrix& m) {
    CycMatrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

CycMatrix adjoint(const CycMatrix& m) {
    CycMatrix r(m.cols(), m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
    return r;
}

bool is_hermitian(const CycMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return adjoint(m) == m;
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix r = zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b) {
    CycMatrix r = zeros(static_cast<int>(a.rows()), static_cast<int>(b.cols()));
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        for (Eigen::Index k = 0; k < b.rows(); ++k) {
            const Cyc& y = b(k, j);
            if (y.is_zero()) continue;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (!a(i, k).is_zero()) r(i, j) += a(i, k) * y;
        }
    return r;
}

CycMatrix matpow(const CycMatrix& m, int k) {
    CycMatrix r = identity(static_cast<int>(m.rows()));
    for (int i = 0; i < k; ++i) r = matmul(r, m);
    return r;
}

Cyc trace(const CycMatrix& m) {
    Cyc t;
    for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

Rref rref(CycMatrix m) {
    Rref out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        Cyc inv = m(r, c).inv();
        for (Eigen::Index j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Cyc f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const CycMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

CycMatrix kernel(const CycMatrix& m) {
    Rref rr = rref(m);
    const int n = static_cast<int>(m.cols());
    std::vector<int> isPivot(n, -1);
    for (size_t k = 0; k < rr.pivots.size(); ++k) isPivot[rr.pivots[k]] = static_cast<int>(k);
    std::vector<int> frees;
    for (int j = 0; j < n; ++j)
        if (isPivot[j] < 0) frees.push_back(j);
    CycMatrix ker = zeros(n, static_cast<int>(frees.size()));
    for (size_t f = 0; f < frees.size(); ++f) {
        int fc = frees[f];
        ker(fc, f) = Cyc(1);
        for (size_t k = 0; k < rr.pivots.size(); ++k) {
            const Cyc& e = rr.reduced(k, fc);
            if (!e.is_zero()) ker(rr.pivots[k], f) = -e;
        }
    }
    return ker;
}

SolveResult solve(const CycMatrix& a, const CycVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    CycMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    Rref rr = rref(aug);
    SolveResult res;
    res.homogeneous = kernel(a);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) {
        res.consistent = false;
        return res;
    }
    res.consistent = true;
    res.particular = zero_vector(static_cast<int>(a.cols()));
    for (size_t k = 0; k < rr.pivots.size(); ++k) res.particular(rr.pivots[k]) = rr.reduced(k, a.cols());
    return res;
}

std::optional<CycMatrix> inverse(const CycMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const Eigen::Index n = m.rows();
    CycMatrix aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = identity(static_cast<int>(n));
    Rref rr = rref(aug);
    if (static_cast<Eigen::Index>(rr.pivots.size()) < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
    return CycMatrix(rr.reduced.rightCols(n));
}

Cyc det(const CycMatrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("det: matrix not square");
    CycMatrix m = m0;
    const Eigen::Index n = m.rows();
    Cyc d(1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Cyc(0);
        if (p != c) { m.row(p).swap(m.row(c)); d = -d; }
        d *= m(c, c);
        Cyc inv = m(c, c).inv();
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Cyc f = m(i, c) * inv;
            for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

CycMatrix column_basis(const CycMatrix& m) {
    Rref rr = rref(m);
    CycMatrix b(m.rows(), static_cast<Eigen::Index>(rr.pivots.size()));
    for (size_t k = 0; k < rr.pivots.size(); ++k) b.col(k) = m.col(rr.pivots[k]);
    return b;
}

bool in_column_span(const CycMatrix& basis, const CycVector& v) {
    if (basis.cols() == 0) return is_zero(v);
    return solve(basis, v).consistent;
}

std::optional<CycVector> coordinates(const CycMatrix& basis, const CycVector& v) {
    if (basis.cols() == 0) {
        if (is_zero(v)) return CycVector(0);
        return std::nullopt;
    }
    SolveResult s = solve(basis, v);
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

CycMatrix hstack(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    CycMatrix r(a.rows(), a.cols() + b.cols());
    r.leftCols(a.cols()) = a;
    r.rightCols(b.cols()) = b;
    return r;
}

Inertia hermitian_inertia(const CycMatrix& g) {
    if (!is_hermitian(g)) throw std::invalid_argument("inertia: matrix is not hermitian");
    Inertia res;
    CycMatrix a = g;
    while (a.rows() > 0) {
        const Eigen::Index m = a.rows();
        Eigen::Index piv = -1;
        for (Eigen::Index i = 0; i < m; ++i)
            if (!a(i, i).is_zero()) { piv = i; break; }
        if (piv < 0) {
            Eigen::Index pi = -1, pj = -1;
            for (Eigen::Index i = 0; i < m && pi < 0; ++i)
                for (Eigen::Index j = i + 1; j < m; ++j)
                    if (!a(i, j).is_zero()) { pi = i; pj = j; break; }
            if (pi < 0) {
                res.zero += static_cast<int>(m);
                break;
            }
            // e_i -> e_i + conj(a_ij) e_j gives diagonal 2|a_ij|^2
            Cyc c = a(pi, pj).conj();
            Cyc cc = c.conj();
            for (Eigen::Index k = 0; k < m; ++k) a(k, pi) += c * a(k, pj);
            for (Eigen::Index k = 0; k < m; ++k) a(pi, k) += cc * a(pj, k);
            piv = pi;
        }
        const Cyc p = a(piv, piv);
        if (!p.is_rational()) throw std::logic_error("inertia: non-real diagonal pivot");
        if (sgn(p.r0()) > 0) ++res.plus;
        else ++res.minus;
        Cyc pinv = p.inv();
        CycMatrix next(m - 1, m - 1);
        for (Eigen::Index r = 0, rr = 0; r < m; ++r) {
            if (r == piv) continue;
            for (Eigen::Index s = 0, ss = 0; s < m; ++s) {
                if (s == piv) continue;
                Cyc v = a(r, s);
                if (!a(r, piv).is_zero() && !a(piv, s).is_zero()) v -= a(r, piv) * a(piv, s) * pinv;
                next(rr, ss) = v;
                ++ss;
            }
            ++rr;
        }
        a = std::move(next);
    }
    return res;
}

}  // namespace qroot3
