#include "qroot3/diffops.hpp"

#include <random>

namespace qroot3::diffops {

using namespace wz_forms;

namespace {

const Cyc kQ = Cyc::q();
const Cyc kQ2 = Cyc::q2();

// Columns: dx z, dy z for the nine basis functions, written in the left normal form.
struct RightNormal {
    CycMatrix to_left;    // 18 x 18 on the degree-one block
    CycMatrix from_left;  // inverse
};

const RightNormal& right_normal() {
    static const RightNormal rn = [] {
        RightNormal r;
        r.to_left = zeros(18, 18);
        for (int g = 0; g < 2; ++g)
            for (int z = 0; z < 9; ++z) {
                WZForm w = wz_mul(g == 0 ? dx() : dy(), from_function(qplane::algebra().basis(z)));
                r.to_left.col(9 * g + z) = w.segment(9, 18);
            }
        r.from_left = *inverse(r.to_left);
        return r;
    }();
    return rn;
}

// Coefficients (right of dx, right of dy) of a one-form.
std::pair<MElem, MElem> right_coords(const WZForm& w) {
    CycVector c = right_normal().from_left * CycVector(w.segment(9, 18));
    return {c.head(9), c.tail(9)};
}

CycMatrix build_partial(int which) {
    CycMatrix m = zeros(9, 9);
    for (int z = 0; z < 9; ++z) {
        auto [px, py] = right_coords(d(from_function(qplane::algebra().basis(z))));
        m.col(z) = which == 0 ? px : py;
    }
    return m;
}

MElem apply(const CycMatrix& op, const MElem& f) { return op * f; }

CycVector flatten(const CycMatrix& m) {
    CycVector v(81);
    for (int c = 0; c < 9; ++c)
        for (int r = 0; r < 9; ++r) v(9 * c + r) = m(r, c);
    return v;
}

const Rref& basis_rref() {
    static const Rref r = rref(monomial_basis());
    return r;
}

std::string mono_name(int k) {
    const int a = k / 27, b = k / 9 % 3, z = k % 9;
    std::string out = qplane::algebra().labels[z];
    auto part = [](const char* n, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(n) : std::string(n) + "^" + std::to_string(e);
    };
    for (const auto& p : {part("dd_x", a), part("dd_y", b)})
        if (!p.empty()) out = out == "1" ? p : out + "*" + p;
    return out;
}

}  // namespace

CycMatrix mult(const MElem& f) { return left_mult_matrix(qplane::algebra(), f); }

const CycMatrix& partial_x_matrix() {
    static const CycMatrix m = build_partial(0);
    return m;
}

const CycMatrix& partial_y_matrix() {
    static const CycMatrix m = build_partial(1);
    return m;
}

MElem partial_x(const MElem& f) { return apply(partial_x_matrix(), f); }
MElem partial_y(const MElem& f) { return apply(partial_y_matrix(), f); }

MMat2 sigma(const MElem& f) {
    MMat2 s;
    for (int j = 0; j < 2; ++j) {
        auto [cx, cy] = right_coords(wz_mul(from_function(f), j == 0 ? dx() : dy()));
        s[0][j] = cx;
        s[1][j] = cy;
    }
    return s;
}

MMat2 tau(const MElem& f) {
    MMat2 t;
    for (int i = 0; i < 2; ++i) {
        WZForm w = wz_mul(i == 0 ? dx() : dy(), from_function(f));
        t[i][0] = coefficient(w, Dx);
        t[i][1] = coefficient(w, Dy);
    }
    return t;
}

MMat2 mmat_mul(const MMat2& a, const MMat2& b) {
    MMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = qplane::mul(a[i][0], b[0][j]) + qplane::mul(a[i][1], b[1][j]);
    return c;
}

CycMatrix sigma_op(int i, int j) {
    CycMatrix m = zeros(9, 9);
    for (int z = 0; z < 9; ++z) m.col(z) = sigma(qplane::algebra().basis(z))[i][j];
    return m;
}

CycMatrix tau_op(int i, int j) {
    CycMatrix m = zeros(9, 9);
    for (int z = 0; z < 9; ++z) m.col(z) = tau(qplane::algebra().basis(z))[i][j];
    return m;
}

CycMatrix monomial(int r, int s, int a, int b) {
    return matmul(matmul(mult(qplane::mono(r, s)), matpow(partial_x_matrix(), a)), matpow(partial_y_matrix(), b));
}

CycMatrix monomial_basis() {
    CycMatrix B = zeros(81, 81);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int z = 0; z < 9; ++z) B.col(9 * (3 * a + b) + z) = flatten(monomial(z / 3, z % 3, a, b));
    return B;
}

int basis_rank() { return static_cast<int>(basis_rref().pivots.size()); }

std::array<int, 5> order_counts() {
    std::array<int, 5> out{};
    for (int o = 0; o < 5; ++o) {
        CycMatrix cols = zeros(81, 0);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a + b == o)
                    for (int z = 0; z < 9; ++z) {
                        CycMatrix c(81, 1);
                        c.col(0) = flatten(monomial(z / 3, z % 3, a, b));
                        cols = hstack(cols, c);
                    }
        out[o] = rank(cols);
    }
    return out;
}

CycVector normal_form(const CycMatrix& op) {
    static const CycMatrix inv = *inverse(monomial_basis());
    return inv * flatten(op);
}

std::string format_normal_form(const CycVector& coords) {
    std::string out;
    for (int k = 0; k < coords.size(); ++k) {
        if (coords(k).is_zero()) continue;
        const std::string c = to_string(coords(k));
        if (!out.empty()) out += " + ";
        out += (coords(k).is_one() ? "" : c + "*") + mono_name(k);
    }
    return out.empty() ? "0" : out;
}

Scaling scaling_ops() {
    const CycMatrix I = identity(9);
    const CycMatrix& Px = partial_x_matrix();
    const CycMatrix& Py = partial_y_matrix();
    CycMatrix xdx = matmul(mult(qplane::x()), Px), ydy = matmul(mult(qplane::y()), Py);
    return {I + (kQ2 - Cyc(1)) * (xdx + ydy), I + (kQ2 - Cyc(1)) * ydy};
}

HDiffOps h_generators() {
    const Cyc q = kQ, q2 = kQ2, one(1);
    auto M = [](int r, int s, int a, int b) { return monomial(r, s, a, b); };
    HDiffOps h;
    h.xp = M(1, 0, 0, 1) + (q - one) * M(1, 1, 0, 2);
    h.xm = M(0, 1, 1, 0) + (q - q2) * M(1, 1, 2, 0) + (one - q) * M(0, 2, 1, 1);
    h.k = M(0, 0, 0, 0) + (q - one) * M(1, 0, 1, 0) + (q2 - one) * M(0, 1, 0, 1) - Cyc(3) * q * M(2, 0, 2, 0) +
          Cyc(3) * (one - q) * M(2, 1, 2, 1) + Cyc(9) * M(2, 2, 2, 2);
    h.kinv = M(0, 0, 0, 0) + (q2 - one) * M(1, 0, 1, 0) + (q - one) * M(0, 1, 0, 1) - Cyc(3) * M(1, 1, 1, 1) -
             Cyc(3) * q * M(0, 2, 0, 2);
    return h;
}

Report relations_report() {
    Report rep;
    rep.title = "relations in D";
    const Cyc q = kQ, q2 = kQ2, one(1);
    const CycMatrix I = identity(9);
    const CycMatrix &Px = partial_x_matrix(), &Py = partial_y_matrix();
    const CycMatrix X = mult(qplane::x()), Y = mult(qplane::y());
    {
        bool ok = true;
        for (int z = 0; z < 9; ++z) {
            MElem f = qplane::algebra().basis(z);
            WZForm lhs = d(from_function(f));
            WZForm rhs = wz_mul(dx(), from_function(partial_x(f))) + wz_mul(dy(), from_function(partial_y(f)));
            ok = ok && lhs == rhs;
        }
        rep.add("d f = dx d_x(f) + dy d_y(f) for all basis f", ok);
    }
    rep.add("d_x(x) = 1, d_y(x) = 0, d_x(y) = 0, d_y(y) = 1",
            partial_x(qplane::x()) == qplane::one() && is_zero(partial_y(qplane::x())) &&
                is_zero(partial_x(qplane::y())) && partial_y(qplane::y()) == qplane::one());
    rep.add("d_x(x^2) = -q x", partial_x(qplane::mono(2, 0)) == qplane::mono(1, 0, -q));
    rep.add("d_y(y^2) = -q y", partial_y(qplane::mono(0, 2)) == qplane::mono(0, 1, -q));
    rep.add("d_x x = 1 + q^2 x d_x + (q^2 - 1) y d_y",
            matmul(Px, X) == I + q2 * matmul(X, Px) + (q2 - one) * matmul(Y, Py));
    rep.add("d_x y = q y d_x", matmul(Px, Y) == q * matmul(Y, Px));
    rep.add("d_y x = q x d_y", matmul(Py, X) == q * matmul(X, Py));
    rep.add("d_y y = 1 + q^2 y d_y", matmul(Py, Y) == I + q2 * matmul(Y, Py));
    rep.add("d_y d_x = q d_x d_y", matmul(Py, Px) == q * matmul(Px, Py));
    rep.add("d_x^3 = d_y^3 = 0", is_zero(matpow(Px, 3)) && is_zero(matpow(Py, 3)));
    {
        const MElem X1 = qplane::x(), Y1 = qplane::y();
        MMat2 sx = sigma(X1), sy = sigma(Y1);
        rep.add("sigma_x^x(x) = q^2 x, sigma_x^x(y) = q y", sx[0][0] == q2 * X1 && sy[0][0] == q * Y1);
        rep.add("sigma_x^y(x) = (q^2 - 1) y, sigma_x^y(y) = 0", sx[0][1] == (q2 - one) * Y1 && is_zero(sy[0][1]));
        rep.add("sigma_y^y(x) = q x, sigma_y^y(y) = q^2 y", sx[1][1] == q * X1 && sy[1][1] == q2 * Y1);
        rep.add("sigma_y^x = 0", is_zero(sigma_op(1, 0)));
    }
    {
        const CycMatrix sxx = sigma_op(0, 0), sxy = sigma_op(0, 1), syy = sigma_op(1, 1);
        rep.add("sigma_x^x sigma_x^y = q^2 sigma_x^y sigma_x^x", matmul(sxx, sxy) == q2 * matmul(sxy, sxx));
        rep.add("sigma_x^x sigma_y^y = sigma_y^y sigma_x^x", matmul(sxx, syy) == matmul(syy, sxx));
        rep.add("sigma_x^y sigma_y^y = q^2 sigma_y^y sigma_x^y", matmul(sxy, syy) == q2 * matmul(syy, sxy));
    }
    {
        bool tw = true, bim = true;
        std::string w;
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b) {
                MElem f = qplane::algebra().basis(a), g = qplane::algebra().basis(b);
                MElem fg = qplane::mul(f, g);
                MMat2 s = sigma(f);
                MElem dg[2] = {partial_x(g), partial_y(g)}, df[2] = {partial_x(f), partial_y(f)};
                MElem dfg[2] = {partial_x(fg), partial_y(fg)};
                for (int i = 0; i < 2; ++i) {
                    MElem rhs = qplane::mul(df[i], g) + qplane::mul(s[i][0], dg[0]) + qplane::mul(s[i][1], dg[1]);
                    if (rhs != dfg[i]) {
                        tw = false;
                        w = qplane::algebra().labels[a] + ", " + qplane::algebra().labels[b];
                    }
                }
                // bimodule form: right action by g, left action through sigma, as one-forms dx g1 + dy g2
                WZForm lhs = wz_mul(dx(), from_function(dfg[0])) + wz_mul(dy(), from_function(dfg[1]));
                WZForm right = wz_mul(wz_mul(dx(), from_function(df[0])) + wz_mul(dy(), from_function(df[1])),
                                      from_function(g));
                WZForm left = wz_mul(from_function(f),
                                     wz_mul(dx(), from_function(dg[0])) + wz_mul(dy(), from_function(dg[1])));
                bim = bim && lhs == right + left;
            }
        rep.add("d_i(fg) = d_i(f) g + sigma_i^j(f) d_j(g) on all basis pairs", tw, w);
        rep.add("underline-d is a derivation into the sigma-twisted bimodule", bim);
    }
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
        auto rnd = [&] {
            MElem z = zero_vector(9);
            for (int i = 0; i < 9; ++i) z(i) = Cyc::frac(num(rng), den(rng)) + Cyc::frac(num(rng), den(rng)) * kQ;
            return z;
        };
        bool s_ok = true, t_ok = true;
        for (int n = 0; n < 20; ++n) {
            MElem f = rnd(), g = rnd();
            MElem fg = qplane::mul(f, g);
            s_ok = s_ok && sigma(fg) == mmat_mul(sigma(f), sigma(g));
            t_ok = t_ok && tau(fg) == mmat_mul(tau(f), tau(g));
        }
        rep.add("sigma(fg) = sigma(f) sigma(g) for 20 random pairs", s_ok);
        rep.add("tau(fg) = tau(f) tau(g) for 20 random pairs", t_ok);
    }
    {
        rep.add("the 81 monomials x^r y^s d_x^a d_y^b have rank 81", basis_rank() == 81);
        auto c = order_counts();
        rep.add("order-graded ranks 9, 18, 27, 18, 9",
                c[0] == 9 && c[1] == 18 && c[2] == 27 && c[3] == 18 && c[4] == 9);
        CycMatrix op = matmul(Py, Px);
        CycVector nf = normal_form(op);
        CycMatrix back = zeros(9, 9);
        for (int k = 0; k < 81; ++k)
            if (!nf(k).is_zero()) back += nf(k) * monomial(k % 9 / 3, k % 3, k / 27, k / 9 % 3);
        rep.add("normal form of d_y d_x is q d_x d_y", back == op && nf(9 * 1 * 3 + 9 * 1) == q,
                format_normal_form(nf));
    }
    return rep;
}

Report scaling_report() {
    Report rep;
    rep.title = "scaling operators";
    const Cyc q2 = kQ2;
    Scaling s = scaling_ops();
    const CycMatrix X = mult(qplane::x()), Y = mult(qplane::y()), I = identity(9);
    rep.add("mu_x x = q^2 x mu_x", matmul(s.mu_x, X) == q2 * matmul(X, s.mu_x));
    rep.add("mu_x y = q^2 y mu_x", matmul(s.mu_x, Y) == q2 * matmul(Y, s.mu_x));
    rep.add("mu_y x = x mu_y", matmul(s.mu_y, X) == matmul(X, s.mu_y));
    rep.add("mu_y y = q^2 y mu_y", matmul(s.mu_y, Y) == q2 * matmul(Y, s.mu_y));
    rep.add("mu_x mu_y = mu_y mu_x", matmul(s.mu_x, s.mu_y) == matmul(s.mu_y, s.mu_x));
    rep.add("mu_x^3 = mu_y^3 = 1", matpow(s.mu_x, 3) == I && matpow(s.mu_y, 3) == I);
    rep.add("d_x x = mu_x + x d_x", matmul(partial_x_matrix(), X) == s.mu_x + matmul(X, partial_x_matrix()));
    rep.add("d_y y = mu_y + y d_y", matmul(partial_y_matrix(), Y) == s.mu_y + matmul(Y, partial_y_matrix()));
    return rep;
}

Report h_generators_as_diffops() {
    Report rep;
    rep.title = "H as differential operators";
    HDiffOps h = h_generators();
    Scaling s = scaling_ops();
    const CycMatrix Lp = env_h::left_action_matrix(env_h::xp()), Lm = env_h::left_action_matrix(env_h::xm()),
                    Lk = env_h::left_action_matrix(env_h::k()), Lki = env_h::left_action_matrix(env_h::kinv());
    const CycMatrix X = mult(qplane::x()), Y = mult(qplane::y());
    rep.add("X+^L = x d_y + (q - 1) xy d_y^2", h.xp == Lp);
    rep.add("X-^L = y d_x + (q - q^2) xy d_x^2 + (1 - q) y^2 d_x d_y", h.xm == Lm);
    rep.add("K^L = 1 + (q-1) x d_x + (q^2-1) y d_y - 3q x^2 d_x^2 + 3(1-q) x^2y d_x^2 d_y + 9 x^2y^2 d_x^2 d_y^2",
            h.k == Lk);
    rep.add("K-^L = 1 + (q^2-1) x d_x + (q-1) y d_y - 3 xy d_x d_y - 3q y^2 d_y^2", h.kinv == Lki);
    rep.add("K-^L = (K^L)^2", matmul(h.k, h.k) == h.kinv);
    rep.add("K-^L = mu_x mu_y", matmul(s.mu_x, s.mu_y) == Lki);
    rep.add("K^L = mu_x^2 mu_y^2", matmul(matpow(s.mu_x, 2), matpow(s.mu_y, 2)) == Lk);
    rep.add("X+^L = mu_y^2 x d_y", matmul(matmul(matpow(s.mu_y, 2), X), partial_y_matrix()) == Lp);
    rep.add("X-^L = q mu_x y d_x", kQ * matmul(matmul(s.mu_x, Y), partial_x_matrix()) == Lm);
    return rep;
}

Report verify() {
    Report rep;
    rep.title = "differential operators on M";
    rep.merge(relations_report());
    rep.merge(scaling_report());
    rep.merge(h_generators_as_diffops());
    return rep;
}

}  // namespace qroot3::diffops
