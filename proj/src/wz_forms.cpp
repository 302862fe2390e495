#include "qroot3/wz_forms.hpp"

#include <functional>
#include <map>

#include "qroot3/repmod.hpp"

namespace qroot3::wz_forms {

namespace {

const Cyc kQ = Cyc::q();
const Cyc kQ2 = Cyc::q2();

WZForm zero() { return zero_vector(kDim); }

// Left multiplication by an element of M.
WZForm lmul(const qplane::MElem& a, const WZForm& u) {
    WZForm r = zero();
    for (int g = 0; g < 4; ++g) r.segment(9 * g, 9) = qplane::mul(a, u.segment(9 * g, 9));
    return r;
}

// e_g e_h for the Manin generators, as (generator, scalar); scalar 0 means the product vanishes.
std::pair<int, Cyc> gen_product(int g, int h) {
    if (g == One) return {h, Cyc(1)};
    if (h == One) return {g, Cyc(1)};
    if (g == Dx && h == Dy) return {DxDy, Cyc(1)};
    if (g == Dy && h == Dx) return {DxDy, -kQ};  // dy dx = -q dx dy
    return {One, Cyc(0)};
}

// Right multiplication by a Manin generator.
WZForm rmul_gen(const WZForm& u, int h) {
    WZForm r = zero();
    for (int g = 0; g < 4; ++g) {
        auto [t, c] = gen_product(g, h);
        if (c.is_zero()) continue;
        r.segment(9 * t, 9) += c * u.segment(9 * g, 9);
    }
    return r;
}

// g x^r y^s brought to normal form.
WZForm move(int g, int r, int s) {
    if (g == One || (r == 0 && s == 0)) {
        WZForm u = zero();
        u(index(g, qplane::index(r, s))) = Cyc(1);
        return u;
    }
    const qplane::MElem X = qplane::x(), Y = qplane::y();
    if (g == DxDy) {
        // dx (dy m)
        WZForm inner = move(Dy, r, s), out = zero();
        for (int h = 0; h < 4; ++h)
            for (int z = 0; z < 9; ++z) {
                const Cyc& c = inner(index(h, z));
                if (c.is_zero()) continue;
                out += c * rmul_gen(move(Dx, z / 3, z % 3), h);
            }
        return out;
    }
    if (r > 0) {
        // dx x = q x dx, dy x = (q - 1) y dx + q^2 x dy
        if (g == Dx) return kQ * lmul(X, move(Dx, r - 1, s));
        return (kQ - Cyc(1)) * lmul(Y, move(Dx, r - 1, s)) + kQ2 * lmul(X, move(Dy, r - 1, s));
    }
    // dx y = q^2 y dx, dy y = q y dy
    if (g == Dx) return kQ2 * lmul(Y, move(Dx, 0, s - 1));
    return kQ * lmul(Y, move(Dy, 0, s - 1));
}

std::string label(int i) {
    static const char* gens[] = {"", "dx", "dy", "dx*dy"};
    const std::string m = qplane::algebra().labels[i % 9];
    const int g = i / 9;
    if (g == 0) return m;
    return m == "1" ? gens[g] : m + "*" + gens[g];
}

AlgebraTable build() {
    AlgebraTable a;
    a.name = "WZ";
    a.dim = kDim;
    for (int i = 0; i < kDim; ++i) a.labels.push_back(label(i));
    a.mult.resize(kDim * kDim);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const int g = i / 9, h = j / 9, z = j % 9;
            WZForm t = lmul(qplane::algebra().basis(i % 9), rmul_gen(move(g, z / 3, z % 3), h));
            a.mult[i * kDim + j] = to_sparse(t);
        }
    a.unit = unit_vector(kDim, 0);
    return a;
}

// d of a function x^r y^s.
WZForm dfun(int r, int s) {
    if (r > 0) return move(Dx, r - 1, s) + lmul(qplane::x(), dfun(r - 1, s));
    if (s > 0) return move(Dy, 0, s - 1) + lmul(qplane::y(), dfun(0, s - 1));
    return zero();
}

CycMatrix build_d() {
    CycMatrix D = zeros(kDim, kDim);
    for (int i = 0; i < 27; ++i) {
        const int z = i % 9;
        WZForm df = dfun(z / 3, z % 3);
        D.col(i) = i < 9 ? df : rmul_gen(df, i / 9);
    }
    return D;
}

std::vector<CycMatrix> build_actions(Side side) {
    const ModuleAction onM = side == Side::L ? env_h::left_action_on_M() : env_h::right_action_on_M();
    const HopfDescriptor& H = env_h::hopf();
    const int n = env_h::kDim;
    const int xi = qplane::index(1, 0), yi = qplane::index(0, 1);
    // h_i[g] for the Manin generators
    std::vector<std::array<WZForm, 4>> gen(n);
    for (int i = 0; i < n; ++i) {
        gen[i][One] = H.counit(i) * unit_vector(kDim, index(One, 0));
        for (int g : {Dx, Dy}) {
            const int src = g == Dx ? xi : yi;
            WZForm w = zero();
            w(index(Dx, 0)) = onM.rho[i](xi, src);
            w(index(Dy, 0)) = onM.rho[i](yi, src);
            gen[i][g] = w;
        }
    }
    const AlgebraTable& A = algebra();
    for (int i = 0; i < n; ++i) {
        WZForm w = zero();
        for (const auto& [k, c] : H.comult[i])
            w += c * multiply(A, gen[k / n][Dx], gen[k % n][Dy]);
        gen[i][DxDy] = w;
    }
    std::vector<CycMatrix> rho(n, zeros(kDim, kDim));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < kDim; ++b) {
            WZForm w = zero();
            const int z = b % 9, g = b / 9;
            for (const auto& [k, c] : H.comult[i]) {
                const int h1 = k / n, h2 = k % n;
                qplane::MElem m = onM.rho[h1].col(z);
                if (is_zero(m) || is_zero(gen[h2][g])) continue;
                w += c * lmul(m, gen[h2][g]);
            }
            rho[i].col(b) = w;
        }
    return rho;
}

const std::vector<CycMatrix>& actions(Side side) {
    static const std::vector<CycMatrix> l = build_actions(Side::L);
    static const std::vector<CycMatrix> r = build_actions(Side::R);
    return side == Side::L ? l : r;
}

}  // namespace

const AlgebraTable& algebra() {
    static const AlgebraTable table = build();
    return table;
}

WZForm basis(int r, int s, Gen g, const Cyc& c) {
    WZForm u = zero();
    u(index(g, qplane::index(r, s))) = c;
    return u;
}

WZForm from_function(const qplane::MElem& m, Gen g) {
    WZForm u = zero();
    u.segment(9 * g, 9) = m;
    return u;
}

qplane::MElem coefficient(const WZForm& u, Gen g) { return u.segment(9 * g, 9); }
WZForm dx() { return basis(0, 0, Dx); }
WZForm dy() { return basis(0, 0, Dy); }
WZForm dxdy() { return basis(0, 0, DxDy); }

WZForm part(const WZForm& u, int degree) {
    WZForm r = zero();
    for (int i = 0; i < kDim; ++i)
        if (degree_of(i) == degree) r(i) = u(i);
    return r;
}

WZForm wz_mul(const WZForm& u, const WZForm& v) { return multiply(algebra(), u, v); }

const CycMatrix& d_matrix() {
    static const CycMatrix D = build_d();
    return D;
}

WZForm d(const WZForm& u) { return d_matrix() * u; }

DmPair dm_closed_form(const CycMatrix& m) {
    auto e = [&](int i, int j) { return m(i - 1, j - 1); };
    const Cyc one(1), third = Cyc::frac(1, 3);
    DmPair p{zeros(3, 3), zeros(3, 3)};
    p.x(0, 0) = (e(1, 1) - e(3, 3)) * (one - kQ2);
    p.x(0, 1) = (e(1, 2) - e(3, 1)) * (kQ2 - kQ);
    p.x(0, 2) = (e(3, 2) - e(1, 3)) * (one - kQ);
    p.x(1, 0) = (e(2, 1) - e(1, 3)) * (kQ2 - kQ);
    p.x(1, 1) = (e(1, 1) - e(2, 2)) * (one - kQ);
    p.x(1, 2) = (e(2, 3) - e(1, 2)) * (one - kQ2);
    p.x(2, 0) = (e(2, 3) - e(3, 1)) * (one - kQ);
    p.x(2, 1) = (e(3, 2) - e(2, 1)) * (one - kQ2);
    p.x(2, 2) = (e(3, 3) - e(2, 2)) * (kQ2 - kQ);
    p.x *= third;
    p.y(0, 0) = e(1, 2);
    p.y(0, 1) = -kQ2 * e(1, 3);
    p.y(1, 1) = e(2, 3);
    p.y(1, 2) = -kQ2 * e(2, 1);
    p.y(2, 0) = -kQ2 * e(3, 2);
    p.y(2, 2) = e(3, 1);
    return p;
}

WZForm dm_matrix(const CycMatrix& m) { return d(from_function(qplane::from_matrix(m))); }

WZForm dm_from_closed_form(const CycMatrix& m) {
    DmPair p = dm_closed_form(m);
    return from_function(qplane::from_matrix(p.x), Dx) + from_function(qplane::from_matrix(p.y), Dy);
}

CycMatrix action_matrix(const env_h::HElem& h, Side side) {
    CycMatrix m = zeros(kDim, kDim);
    const auto& rho = actions(side);
    for (int i = 0; i < env_h::kDim; ++i)
        if (!h(i).is_zero()) m += h(i) * rho[i];
    return m;
}

WZForm h_act_on_forms(const env_h::HElem& h, const WZForm& u, Side side) { return action_matrix(h, side) * u; }

ModuleAction action_on_forms(Side side) { return {actions(side), side == Side::R}; }

Coaction right_coaction() {
    using namespace fun_f;
    const int nf = fun_f::kDim;
    const AlgebraTable& W = algebra();
    const AlgebraTable& F = fun_f::algebra();
    auto gen_image = [&](const FElem& u, const FElem& v) {  // dx (x) u + dy (x) v
        return CycVector(tensor_elem(dx(), u) + tensor_elem(dy(), v));
    };
    CycVector cdx = gen_image(a(), c()), cdy = gen_image(b(), fun_f::d());
    CycVector cdxdy = tensor_multiply(W, F, cdx, cdy);
    Coaction co;
    co.right = true;
    for (int w = 0; w < kDim; ++w) {
        const int z = w % 9, g = w / 9;
        CycVector fz = coact_right(qplane::algebra().basis(z));  // 27 z' + f
        CycVector t = zero_vector(kDim * nf);
        t.head(9 * nf) = fz;
        const CycVector* gi = g == Dx ? &cdx : g == Dy ? &cdy : g == DxDy ? &cdxdy : nullptr;
        co.image.push_back(gi ? tensor_multiply(W, F, t, *gi) : t);
    }
    return co;
}

Coaction left_coaction() {
    using namespace fun_f;
    const int nf = fun_f::kDim;
    const AlgebraTable& W = algebra();
    const AlgebraTable& F = fun_f::algebra();
    auto gen_image = [&](const FElem& u, const FElem& v) {  // u (x) dx + v (x) dy
        return CycVector(tensor_elem(u, dx()) + tensor_elem(v, dy()));
    };
    CycVector cdx = gen_image(a(), b()), cdy = gen_image(c(), fun_f::d());
    CycVector cdxdy = tensor_multiply(F, W, cdx, cdy);
    Coaction co;
    co.right = false;
    for (int w = 0; w < kDim; ++w) {
        const int z = w % 9, g = w / 9;
        CycVector fz = coact_left(qplane::algebra().basis(z));  // 9 f + z'
        CycVector t = zero_vector(kDim * nf);
        for (int f = 0; f < nf; ++f) t.segment(kDim * f, 9) = fz.segment(9 * f, 9);
        const CycVector* gi = g == Dx ? &cdx : g == Dy ? &cdy : g == DxDy ? &cdxdy : nullptr;
        co.image.push_back(gi ? tensor_multiply(F, W, t, *gi) : t);
    }
    return co;
}

WZForm star_form(const WZForm& u) {
    static const std::vector<WZForm> images = [] {
        std::vector<WZForm> out;
        for (int i = 0; i < kDim; ++i) {
            const int g = i / 9, z = i % 9;
            // (dx dy)* = dy* dx*
            WZForm sg = g == DxDy ? wz_mul(dy(), dx()) : WZForm(unit_vector(kDim, index(g, 0)));
            out.push_back(wz_mul(sg, from_function(qplane::star(qplane::algebra().basis(z)))));
        }
        return out;
    }();
    WZForm r = zero();
    for (int i = 0; i < kDim; ++i)
        if (!u(i).is_zero()) r += u(i).conj() * images[i];
    return r;
}

std::array<Cohomology, 3> cohomology() {
    const CycMatrix& D = d_matrix();
    std::array<Cohomology, 3> out;
    const int start[] = {0, 9, 27}, size[] = {9, 18, 9};
    for (int p = 0; p < 3; ++p) {
        CycMatrix Dp = D.block(0, start[p], kDim, size[p]);
        out[p].z = size[p] - rank(Dp);
        out[p].b = p == 0 ? 0 : rank(CycMatrix(D.block(0, start[p - 1], kDim, size[p - 1])));
        out[p].h = out[p].z - out[p].b;
    }
    return out;
}

namespace {

struct T {
    Cyc c;
    int r, s;
    Gen g;
};

WZForm W(std::initializer_list<T> ts) {
    WZForm u = zero();
    for (const auto& t : ts) u += basis(t.r, t.s, t.g, t.c);
    return u;
}

std::string fmt(const WZForm& u) { return format_element(algebra(), u); }

WZForm sparse_mul(const SparseVec& u, const SparseVec& v) {
    const AlgebraTable& A = algebra();
    WZForm r = zero();
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v)
            for (const auto& [n, e] : A.product(a, b)) r(n) += ca * cb * e;
    return r;
}

CycMatrix columns(const std::vector<WZForm>& vs) {
    CycMatrix m = zeros(kDim, static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i) m.col(static_cast<int>(i)) = vs[i];
    return m;
}

}  // namespace

Report manin_check() {
    Report rep;
    rep.title = "Manin dual";
    const Cyc q = kQ;
    rep.add("dx dx = 0", is_zero(wz_mul(dx(), dx())));
    rep.add("dy dy = 0", is_zero(wz_mul(dy(), dy())));
    WZForm rel = q * wz_mul(dx(), dy()) + wz_mul(dy(), dx());
    rep.add("q dx dy + dy dx = 0", is_zero(rel), fmt(rel));
    rep.add("dx dy + q^2 dy dx = 0", is_zero(WZForm(wz_mul(dx(), dy()) + kQ2 * wz_mul(dy(), dx()))));
    {
        // span{1, dx, dy, dx dy} is a subalgebra
        std::vector<WZForm> gens = {basis(0, 0, One), dx(), dy(), dxdy()};
        CycMatrix span = columns(gens);
        bool closed = true;
        for (const auto& u : gens)
            for (const auto& v : gens) closed = closed && in_column_span(span, wz_mul(u, v));
        rep.add("span{1, dx, dy, dx dy} is closed under the product", closed);
    }
    {
        CycMatrix E = zeros(2, 2);
        E(0, 1) = Cyc(1);
        E(1, 0) = -q;
        std::vector<CycMatrix> calE(3, zeros(2, 2));
        calE[0](0, 0) = Cyc(1);
        calE[1](0, 1) = q;
        calE[1](1, 0) = Cyc(1);
        calE[2](1, 1) = Cyc(1);
        const WZForm xi[2] = {dx(), dy()};
        for (int s = 0; s < 3; ++s) {
            Cyc tr = trace(CycMatrix(calE[s].transpose() * E));
            WZForm rel2 = zero();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) rel2 += calE[s](i, j) * wz_mul(xi[i], xi[j]);
            const std::string n = std::to_string(s + 1);
            rep.add("Tr(E^(" + n + ")^t E) = 0", tr.is_zero(), to_string(tr));
            rep.add("E^(" + n + ")_ij xi^i xi^j = 0 with xi = (dx, dy)", is_zero(rel2), fmt(rel2));
        }
        // the annihilator of E in 2x2 matrices is exactly 3-dimensional
        CycMatrix row = zeros(1, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) row(0, 2 * i + j) = E(i, j);
        rep.add("{E' : Tr(E'^t E) = 0} has dimension 3", kernel(row).cols() == 3);
    }
    return rep;
}

Report structure_checks() {
    Report rep;
    rep.title = "WZ complex structure";
    const AlgebraTable& A = algebra();
    const Cyc q = kQ, q2 = kQ2, one(1);
    rep.add("dim Omega^0/1/2 = 9/18/9", A.dim == 36);
    rep.add("x dx = q^2 dx x", wz_mul(basis(1, 0, One), dx()) == q2 * wz_mul(dx(), basis(1, 0, One)));
    rep.add("x dy = q dy x + (q^2 - 1) dx y",
            wz_mul(basis(1, 0, One), dy()) ==
                q * wz_mul(dy(), basis(1, 0, One)) + (q2 - one) * wz_mul(dx(), basis(0, 1, One)));
    rep.add("y dx = q dx y", wz_mul(basis(0, 1, One), dx()) == q * wz_mul(dx(), basis(0, 1, One)));
    rep.add("y dy = q^2 dy y", wz_mul(basis(0, 1, One), dy()) == q2 * wz_mul(dy(), basis(0, 1, One)));
    rep.add("xy = q yx", wz_mul(basis(1, 0, One), basis(0, 1, One)) == q * wz_mul(basis(0, 1, One), basis(1, 0, One)));
    {
        WZForm x = basis(1, 0, One), y = basis(0, 1, One);
        rep.add("x^3 = y^3 = 1", power(A, x, 3) == A.unit && power(A, y, 3) == A.unit);
    }
    WZForm dxx = wz_mul(dx(), basis(1, 0, One));
    rep.add("dx x = q x dx", dxx == basis(1, 0, Dx, q), fmt(dxx));
    WZForm dyx = wz_mul(dy(), basis(1, 0, One));
    rep.add("dy x = (q-1) y dx + q^2 x dy", dyx == W({{q - one, 0, 1, Dx}, {q2, 1, 0, Dy}}), fmt(dyx));
    rep.add("dx dy dx dy = 0", is_zero(wz_mul(dxdy(), dxdy())));
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < kDim && ok; ++i)
            for (int j = 0; j < kDim && ok; ++j) {
                if (degree_of(i) + degree_of(j) > 2 && !A.product(i, j).empty()) {
                    ok = false;
                    w = A.labels[i] + " * " + A.labels[j];
                }
            }
        rep.add("products of total degree > 2 vanish", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < kDim && ok; ++i)
            for (int j = 0; j < kDim && ok; ++j)
                for (int k = 0; k < kDim && ok; ++k)
                    if (sparse_mul(A.product(i, j), {{k, Cyc(1)}}) != sparse_mul({{i, Cyc(1)}}, A.product(j, k))) {
                        ok = false;
                        w = "(" + A.labels[i] + " " + A.labels[j] + ") " + A.labels[k];
                    }
        rep.add("associativity on all basis triples", ok, w);
    }
    const CycMatrix& D = d_matrix();
    rep.add("d(x) = dx, d(y) = dy, d(1) = 0",
            d(basis(1, 0, One)) == dx() && d(basis(0, 1, One)) == dy() && is_zero(d(A.unit)));
    rep.add("d(x^2) = -q^2 x dx", d(basis(2, 0, One)) == basis(1, 0, Dx, -q2), fmt(d(basis(2, 0, One))));
    {
        WZForm x = basis(1, 0, One);
        WZForm lhs = wz_mul(d(wz_mul(x, x)), x) + wz_mul(wz_mul(x, x), dx());
        rep.add("d(x^3) = (1 + q + q^2) x^2 dx = 0", is_zero(lhs) && is_zero(d(power(A, x, 3) - A.unit)), fmt(lhs));
    }
    rep.add("d^2 = 0 on all 36 basis forms", is_zero(matmul(D, D)));
    std::vector<SparseVec> Dcol;
    for (int i = 0; i < kDim; ++i) Dcol.push_back(to_sparse(D.col(i)));
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < kDim && ok; ++i)
            for (int j = 0; j < kDim && ok; ++j) {
                Cyc sign = degree_of(i) % 2 ? Cyc(-1) : Cyc(1);
                WZForm lhs = zero();
                for (const auto& [m, c] : A.product(i, j)) lhs += c * D.col(m);
                WZForm rhs = sparse_mul(Dcol[i], {{j, Cyc(1)}}) + sign * sparse_mul({{i, Cyc(1)}}, Dcol[j]);
                if (lhs != rhs) {
                    ok = false;
                    w = A.labels[i] + " * " + A.labels[j];
                }
            }
        rep.add("graded Leibniz rule on all basis pairs", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int i = 1; i <= 3 && ok; ++i)
            for (int j = 1; j <= 3 && ok; ++j) {
                CycMatrix m = qplane::elementary(i, j);
                if (dm_matrix(m) != dm_from_closed_form(m)) {
                    ok = false;
                    w = "E" + std::to_string(i) + std::to_string(j) + ": Leibniz " + fmt(dm_matrix(m)) + ", closed " +
                        fmt(dm_from_closed_form(m));
                }
            }
        rep.add("closed formula for dm agrees with the Leibniz computation", ok, w);
        DmPair p = dm_closed_form(qplane::elementary(1, 2));
        rep.add("m = E12: (dm)_y(1,1) = 1", p.y(0, 0).is_one());
        rep.add("d(identity) = 0", is_zero(dm_matrix(identity(3))) && is_zero(dm_from_closed_form(identity(3))));
    }
    return rep;
}

Report action_tables() {
    Report rep;
    rep.title = "H acting on one-forms";
    const Cyc q = kQ, q2 = kQ2, one(1);
    struct Row {
        WZForm b, k, p, m;
    };
    const WZForm Z = zero();
    // three printed tables of the left action
    std::vector<Row> rows = {
        {W({{one, 0, 0, Dx}}), W({{q, 0, 0, Dx}}), Z, W({{one, 0, 0, Dy}})},
        {W({{one, 2, 1, Dx}}), W({{q2, 2, 1, Dx}}), W({{q2, 0, 0, Dx}}), W({{-q2, 1, 2, Dx}, {one, 2, 1, Dy}})},
        {W({{one, 1, 2, Dx}}), W({{one, 1, 2, Dx}}), W({{-one, 2, 1, Dx}}), W({{q, 0, 0, Dx}, {one, 1, 2, Dy}})},
        {W({{one, 0, 0, Dy}}), W({{q2, 0, 0, Dy}}), W({{one, 0, 0, Dx}}), Z},
        {W({{one, 2, 1, Dy}}), W({{one, 2, 1, Dy}}), W({{q2, 0, 0, Dy}, {q, 2, 1, Dx}}), W({{-q, 1, 2, Dy}})},
        {W({{one, 1, 2, Dy}}), W({{q, 1, 2, Dy}}), W({{-one, 2, 1, Dy}, {q2, 1, 2, Dx}}), W({{one, 0, 0, Dy}})},

        {W({{one, 1, 0, Dx}}), W({{q2, 1, 0, Dx}}), Z, W({{q2, 0, 1, Dx}, {one, 1, 0, Dy}})},
        {W({{one, 0, 1, Dx}}), W({{one, 0, 1, Dx}}), W({{one, 1, 0, Dx}}), W({{one, 0, 1, Dy}})},
        {W({{one, 2, 2, Dx}}), W({{q, 2, 2, Dx}}), W({{-q, 0, 1, Dx}}), W({{-one, 1, 0, Dx}, {one, 2, 2, Dy}})},
        {W({{one, 1, 0, Dy}}), W({{one, 1, 0, Dy}}), W({{q, 1, 0, Dx}}), W({{q, 0, 1, Dy}})},
        {W({{one, 0, 1, Dy}}), W({{q, 0, 1, Dy}}), W({{one, 1, 0, Dy}, {q2, 0, 1, Dx}}), Z},
        {W({{one, 2, 2, Dy}}), W({{q2, 2, 2, Dy}}), W({{-q, 0, 1, Dy}, {one, 2, 2, Dx}}), W({{-q2, 1, 0, Dy}})},

        {W({{one, 2, 0, Dx}}), W({{one, 2, 0, Dx}}), Z, W({{-q, 1, 1, Dx}, {one, 2, 0, Dy}})},
        {W({{one, 1, 1, Dx}}), W({{q, 1, 1, Dx}}), W({{q, 2, 0, Dx}}), W({{one, 0, 2, Dx}, {one, 1, 1, Dy}})},
        {W({{one, 0, 2, Dx}}), W({{q2, 0, 2, Dx}}), W({{-q2, 1, 1, Dx}}), W({{one, 0, 2, Dy}})},
        {W({{one, 2, 0, Dy}}), W({{q, 2, 0, Dy}}), W({{q2, 2, 0, Dx}}), W({{-one, 1, 1, Dy}})},
        {W({{one, 1, 1, Dy}}), W({{q2, 1, 1, Dy}}), W({{q, 2, 0, Dy}, {one, 1, 1, Dx}}), W({{q2, 0, 2, Dy}})},
        {W({{one, 0, 2, Dy}}), W({{one, 0, 2, Dy}}), W({{-q2, 1, 1, Dy}, {q, 0, 2, Dx}}), Z},
    };
    const CycMatrix K = action_matrix(env_h::k(), Side::L), P = action_matrix(env_h::xp(), Side::L),
                    M = action_matrix(env_h::xm(), Side::L);
    for (const auto& r : rows) {
        const std::string b = fmt(r.b);
        WZForm k = K * r.b, p = P * r.b, m = M * r.b;
        rep.add("K^L[" + b + "] = " + fmt(r.k), k == r.k, fmt(k));
        rep.add("X+^L[" + b + "] = " + fmt(r.p), p == r.p, fmt(p));
        rep.add("X-^L[" + b + "] = " + fmt(r.m), m == r.m, fmt(m));
    }
    {
        WZForm v = P * basis(0, 1, Dy);
        rep.add("X+^L[y dy] = x dy + q^2 y dx", v == W({{one, 1, 0, Dy}, {q2, 0, 1, Dx}}), fmt(v));
    }
    for (Side side : {Side::L, Side::R}) {
        const std::string s = side == Side::L ? "L" : "R";
        rep.add("K^" + s + "[dx dy] = dx dy, X+/X- annihilate dx dy",
                action_matrix(env_h::k(), side) * dxdy() == dxdy() &&
                    is_zero(WZForm(action_matrix(env_h::xp(), side) * dxdy())) &&
                    is_zero(WZForm(action_matrix(env_h::xm(), side) * dxdy())));
        ModuleAction act = action_on_forms(side);
        rep.merge(check_module(env_h::hopf(), act), s + " on forms: ");
        rep.merge(check_module_algebra(env_h::hopf(), act, algebra()), s + " on forms: ");
        // agrees with the action on M on functions, and on dx, dy as on x, y
        const CycMatrix& D = d_matrix();
        bool cov = true, fun = true;
        std::string w;
        for (int i = 0; i < env_h::kDim; ++i) {
            const CycMatrix& A = act.rho[i];
            if (matmul(A, D) != matmul(D, A)) {
                cov = false;
                w = env_h::algebra().labels[i];
            }
            CycMatrix onM = side == Side::L ? env_h::left_action_matrix(env_h::algebra().basis(i))
                                            : env_h::right_action_matrix(env_h::algebra().basis(i));
            fun = fun && A.block(0, 0, 9, 9) == onM && is_zero(CycMatrix(A.block(9, 0, 27, 9)));
        }
        rep.add("h[d u] = d h[u] for all h and u (" + s + ")", cov, w);
        rep.add("action on functions coincides with the action on M (" + s + ")", fun);
        {
            // Omega^2 = M dx dy as H-modules
            bool ok = true;
            for (int i = 0; i < env_h::kDim; ++i)
                ok = ok && act.rho[i].block(27, 27, 9, 9) == act.rho[i].block(0, 0, 9, 9);
            rep.add("m -> m dx dy intertwines M and Omega^2 (" + s + ")", ok);
        }
        {
            // the action is dual to the coaction: h[w] = (id (x) <h,.>) Delta_R w, or (<h,.> (x) id) Delta_L w
            Coaction co = side == Side::L ? right_coaction() : left_coaction();
            const CycMatrix& Pm = env_h::pairing_matrix();
            const int nf = fun_f::kDim;
            bool ok = true;
            std::string w2;
            for (const char* g : {"K", "X+", "X-"}) {
                env_h::HElem h = env_h::generator(g);
                const CycMatrix Ah = action_matrix(h, side);
                for (int b = 0; b < kDim && ok; ++b) {
                    WZForm r = zero();
                    const CycVector& t = co.image[b];
                    for (int x = 0; x < kDim * nf; ++x) {
                        if (t(x).is_zero()) continue;
                        const int wi = side == Side::L ? x / nf : x % kDim;
                        const int fi = side == Side::L ? x % nf : x / kDim;
                        Cyc pr;
                        for (int e = 0; e < env_h::kDim; ++e)
                            if (!h(e).is_zero()) pr += h(e) * Pm(e, fi);
                        r(wi) += t(x) * pr;
                    }
                    if (r != Ah.col(b)) {
                        ok = false;
                        w2 = std::string(g) + " on " + algebra().labels[b];
                    }
                }
            }
            rep.add("action equals the dualized coaction (" + s + ")", ok, w2);
        }
    }
    return rep;
}

Report d_tables() {
    Report rep;
    rep.title = "d on adapted bases";
    const Cyc q = kQ, q2 = kQ2, one(1);
    std::vector<std::pair<WZForm, WZForm>> d0 = {
        {W({{one, 0, 0, One}}), zero()},
        {W({{one, 2, 1, One}}), W({{-q, 1, 1, Dx}, {one, 2, 0, Dy}})},
        {W({{one, 1, 2, One}}), W({{q, 0, 2, Dx}, {-q2, 1, 1, Dy}})},
        {W({{one, 1, 0, One}}), W({{one, 0, 0, Dx}})},
        {W({{one, 0, 1, One}}), W({{one, 0, 0, Dy}})},
        {W({{one, 2, 2, One}}), W({{-one, 1, 2, Dx}, {-q2, 2, 1, Dy}})},
        {W({{one, 2, 0, One}}), W({{-q2, 1, 0, Dx}})},
        {W({{one, 1, 1, One}}), W({{q2, 0, 1, Dx}, {one, 1, 0, Dy}})},
        {W({{one, 0, 2, One}}), W({{-q2, 0, 1, Dy}})},
    };
    std::vector<std::pair<WZForm, WZForm>> d1 = {
        {W({{one, 2, 1, Dx}, {-q2, 0, 0, Dy}}), W({{-q, 2, 0, DxDy}})},
        {W({{-one, 2, 1, Dy}, {q2, 1, 2, Dx}}), W({{-one, 1, 1, DxDy}})},
        {W({{-q, 0, 0, Dx}, {q, 1, 2, Dy}}), W({{q2, 0, 2, DxDy}})},
        {W({{one, 0, 0, Dx}}), zero()},
        {W({{one, 0, 0, Dy}}), zero()},
        {W({{one, 2, 1, Dy}, {q, 1, 2, Dx}}), zero()},
        {W({{one, 0, 1, Dy}}), zero()},
        {W({{one, 1, 0, Dy}, {q2, 0, 1, Dx}}), zero()},
        {W({{one, 1, 0, Dx}}), zero()},
        {W({{one, 1, 0, Dy}, {-q, 0, 1, Dx}}), W({{-q, 0, 0, DxDy}})},
        {W({{one, 0, 1, Dy}, {-q2, 2, 2, Dx}}), W({{-q2, 2, 1, DxDy}})},
        {W({{one, 2, 2, Dy}, {-one, 1, 0, Dx}}), W({{-one, 1, 2, DxDy}})},
        {W({{one, 1, 1, Dx}, {one, 2, 0, Dy}}), W({{one, 1, 0, DxDy}})},
        {W({{one, 1, 1, Dy}, {one, 0, 2, Dx}}), W({{-q, 0, 1, DxDy}})},
        {W({{one, 2, 0, Dx}}), zero()},
        {W({{one, 0, 2, Dy}}), zero()},
        {W({{one, 2, 0, Dy}, {-q, 1, 1, Dx}}), zero()},
        {W({{q, 0, 2, Dx}, {-q2, 1, 1, Dy}}), zero()},
    };
    for (const auto* table : {&d0, &d1})
        for (const auto& [u, du] : *table) {
            WZForm got = d(u);
            rep.add("d(" + fmt(u) + ") = " + (is_zero(du) ? std::string("0") : fmt(du)), got == du, fmt(got));
        }
    std::vector<WZForm> basis1;
    for (const auto& e : d1) basis1.push_back(e.first);
    rep.add("the adapted one-forms span Omega^1", rank(columns(basis1)) == 18);

    const CycMatrix& D = d_matrix();
    CycMatrix B1 = column_basis(D.block(0, 0, kDim, 9)), B2 = column_basis(D.block(0, 9, kDim, 18));
    // one-forms printed as exact
    std::vector<int> exact1 = {3, 4, 5, 6, 7, 8, 16, 17};
    bool ex = true;
    for (int i : exact1) ex = ex && in_column_span(B1, d1[i].first);
    rep.add("forms marked exact in Omega^1 lie in d(Omega^0)", ex);
    rep.add("x^2 dx, y^2 dy are closed and not exact",
            is_zero(d(d1[14].first)) && is_zero(d(d1[15].first)) &&
                rank(hstack(B1, columns({d1[14].first, d1[15].first}))) == B1.cols() + 2);
    bool ex2 = true;
    for (auto [r, s] : std::vector<std::pair<int, int>>{{0, 0}, {2, 1}, {1, 2}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}})
        ex2 = ex2 && in_column_span(B2, basis(r, s, DxDy));
    rep.add("two-forms m dx dy are exact for m != x^2y^2", ex2);
    rep.add("x^2y^2 dx dy is closed and not exact", !in_column_span(B2, basis(2, 2, DxDy)));

    auto h = cohomology();
    rep.add("Z^0 = 1, B^0 = 0, H^0 = 1", h[0].z == 1 && h[0].b == 0 && h[0].h == 1);
    rep.add("Z^1 = 10, B^1 = 8, H^1 = 2", h[1].z == 10 && h[1].b == 8 && h[1].h == 2,
            std::to_string(h[1].z) + "/" + std::to_string(h[1].b));
    rep.add("Z^2 = 9, B^2 = 8, H^2 = 1", h[2].z == 9 && h[2].b == 8 && h[2].h == 1,
            std::to_string(h[2].z) + "/" + std::to_string(h[2].b));
    rep.add("Euler characteristic 0", h[0].h - h[1].h + h[2].h == 0);
    return rep;
}

Report star_checks() {
    Report rep;
    rep.title = "star on forms";
    const AlgebraTable& A = algebra();
    rep.add("dx* = dx, dy* = dy", star_form(dx()) == dx() && star_form(dy()) == dy());
    rep.add("(dx dy)* = -q dx dy", star_form(dxdy()) == -kQ * dxdy(), fmt(star_form(dxdy())));
    rep.add("x* = x, y* = y", star_form(basis(1, 0, One)) == basis(1, 0, One) && star_form(basis(0, 1, One)) == basis(0, 1, One));
    std::vector<SparseVec> S;
    for (int i = 0; i < kDim; ++i) S.push_back(to_sparse(star_form(A.basis(i))));
    bool inv = true, anti = true, dstar = true, dfun = true;
    std::string w1, w2, w3;
    for (int i = 0; i < kDim; ++i) {
        WZForm e = A.basis(i);
        WZForm c = Cyc::q() * e;
        if (star_form(star_form(c)) != c) {
            inv = false;
            w1 = A.labels[i];
        }
        for (int j = 0; j < kDim && anti; ++j) {
            WZForm lhs = zero();
            for (const auto& [m, c] : A.product(i, j))
                for (const auto& [n, e] : S[m]) lhs(n) += c.conj() * e;
            if (lhs != sparse_mul(S[j], S[i])) {
                anti = false;
                w2 = A.labels[i] + " * " + A.labels[j];
            }
        }
        Cyc sign = degree_of(i) % 2 ? Cyc(-1) : Cyc(1);
        if (d(star_form(e)) != sign * star_form(d(e))) {
            dstar = false;
            w3 = A.labels[i];
        }
        if (i < 9) dfun = dfun && star_form(d(e)) == d(star_form(e));
    }
    rep.add("star is an antilinear involution", inv, w1);
    rep.add("star is antimultiplicative on all basis pairs", anti, w2);
    rep.add("d star w = (-1)^p star d w", dstar, w3);
    rep.add("(d a)* = d(a*) on functions", dfun);
    for (bool right : {true, false}) {
        Coaction co = right ? right_coaction() : left_coaction();
        const std::string s = right ? "Delta_R" : "Delta_L";
        rep.merge(check_comodule_algebra(fun_f::hopf(), co, A), s + " on forms: ");
        const int nf = fun_f::kDim;
        bool ok = true;
        std::string w;
        for (int i = 0; i < kDim && ok; ++i) {
            // star on each tensor factor
            const CycVector& t = co.image[i];
            CycVector lhs = zero_vector(kDim * nf);
            for (int x = 0; x < kDim * nf; ++x) {
                if (t(x).is_zero()) continue;
                const int wi = right ? x / nf : x % kDim, fi = right ? x % nf : x / kDim;
                WZForm sw = star_form(A.basis(wi));
                fun_f::FElem sf = fun_f::star(fun_f::algebra().basis(fi));
                lhs += t(x).conj() * (right ? tensor_elem(sw, sf) : tensor_elem(sf, sw));
            }
            WZForm se = star_form(A.basis(i));
            CycVector rhs = zero_vector(kDim * nf);
            for (int j = 0; j < kDim; ++j)
                if (!se(j).is_zero()) rhs += se(j) * co.image[j];
            if (lhs != rhs) {
                ok = false;
                w = A.labels[i];
            }
        }
        rep.add("(" + s + " w)* = " + s + "(w*)", ok, w);
    }
    {
        Coaction co = right_coaction();
        const int nf = fun_f::kDim;
        CycVector e = tensor_elem(dx(), fun_f::a()) + tensor_elem(dy(), fun_f::c());
        rep.add("Delta_R dx = dx (x) a + dy (x) c", co.image[index(Dx, 0)] == e && e.size() == kDim * nf);
    }
    return rep;
}

Report h_decomposition_of_forms() {
    Report rep;
    rep.title = "decomposition of one-forms";
    using repmod::builtin_rep;
    using repmod::fingerprint;
    const Cyc q = kQ, q2 = kQ2, one(1);
    const repmod::HRep R = repmod::from_module("Omega", action_on_forms(Side::L));
    const auto p = repmod::default_params();
    auto check = [&](const std::string& name, const std::vector<WZForm>& vs, const repmod::HRep& expect) {
        CycMatrix B = columns(vs);
        bool indep = rank(B) == B.cols();
        bool stable = indep && repmod::is_stable(R, B);
        bool same = stable && fingerprint(repmod::restrict(R, B)) == fingerprint(expect);
        rep.add(name + " is stable of type " + expect.name, indep && stable && same,
                !indep ? "dependent" : !stable ? "not stable" : same ? "" : "fingerprint differs");
    };
    auto sector = [&](std::vector<std::pair<int, int>> ms) {
        std::vector<WZForm> vs;
        for (auto [r, s] : ms)
            for (Gen g : {Dx, Dy}) vs.push_back(basis(r, s, g));
        return vs;
    };
    const std::vector<std::pair<int, int>> odd = {{0, 0}, {2, 1}, {1, 2}}, eve = {{1, 0}, {0, 1}, {2, 2}},
                                           irr = {{2, 0}, {1, 1}, {0, 2}};
    const repmod::HRep two = builtin_rep("2_eve"), irr3 = builtin_rep("3_irr"), eve3 = builtin_rep("3_eve", p),
                       odd3 = builtin_rep("3_odd", p);
    check("3_odd (x) 2", sector(odd), repmod::direct_sum({irr3, eve3}));
    check("3_eve (x) 2", sector(eve), repmod::direct_sum({irr3, odd3}));
    check("3_irr (x) 2", sector(irr), builtin_rep("6_eve"));
    check("span{dx, dy}", {dx(), dy()}, two);

    check("span{q x^2y dx - dy, -x^2y dy + q^2 xy^2 dx, -q dx + q xy^2 dy}",
          {W({{q, 2, 1, Dx}, {-one, 0, 0, Dy}}), W({{-one, 2, 1, Dy}, {q2, 1, 2, Dx}}),
           W({{-q, 0, 0, Dx}, {q, 1, 2, Dy}})},
          irr3);
    check("span{dx, dy, x^2y dy + q xy^2 dx}", {dx(), dy(), W({{one, 2, 1, Dy}, {q, 1, 2, Dx}})}, eve3);
    check("span{y dy, q x dy + y dx, x dx}",
          {basis(0, 1, Dy), W({{q, 1, 0, Dy}, {one, 0, 1, Dx}}), basis(1, 0, Dx)}, irr3);
    check("span{x^2y^2 dy - x dx, x dy - q y dx, y dy - q^2 x^2y^2 dx}",
          {W({{one, 2, 2, Dy}, {-one, 1, 0, Dx}}), W({{one, 1, 0, Dy}, {-q, 0, 1, Dx}}),
           W({{one, 0, 1, Dy}, {-q2, 2, 2, Dx}})},
          odd3);
    check("span{x dy - q y dx}", {W({{one, 1, 0, Dy}, {-q, 0, 1, Dx}})}, builtin_rep("1"));
    check("span{-q^2 x^2 dy + xy dx, -q xy dy + y^2 dx}",
          {W({{-q2, 2, 0, Dy}, {one, 1, 1, Dx}}), W({{-q, 1, 1, Dy}, {one, 0, 2, Dx}})}, two);
    check("span{dx dy}", {dxdy()}, builtin_rep("1"));
    {
        // 3_irr (x) 2 also holds 4_eve
        std::vector<WZForm> six = sector(irr);
        CycMatrix B = columns(six);
        repmod::HRep r6 = repmod::restrict(R, B);
        // its radical is the 4_eve
        CycMatrix rad = repmod::radical_of_module(r6);
        rep.add("3_irr (x) 2 has radical of type 4_eve",
                rad.cols() == 4 && fingerprint(repmod::restrict(r6, rad)) == fingerprint(builtin_rep("4_eve")));
    }
    {
        // the sector modules are the tensor products of the M sectors with span{dx, dy}
        repmod::HRep m = repmod::m_as_rep();
        CycMatrix D2 = columns({dx(), dy()});
        repmod::HRep two_forms = repmod::restrict(R, D2);
        bool ok = true;
        for (const auto* sec : {&odd, &eve, &irr}) {
            CycMatrix S = zeros(9, 3);
            for (int i = 0; i < 3; ++i) S((*sec)[i].first * 3 + (*sec)[i].second, i) = Cyc(1);
            repmod::HRep t = repmod::tensor(repmod::restrict(m, S), two_forms);
            repmod::HRep s = repmod::restrict(R, columns(sector(*sec)));
            ok = ok && t.Xp == s.Xp && t.Xm == s.Xm && t.K == s.K;
        }
        rep.add("m dx, m dy realize (M sector) (x) span{dx, dy} with the tensor product action", ok);
    }
    return rep;
}

Report rep_product_tables() {
    Report rep;
    rep.title = "products of representations";
    // Z3 grading: odd 0, eve 1, irr 2
    const char* names[] = {"3_odd", "3_eve", "3_irr"};
    auto fun_space = [](int grade, Gen g) {
        std::vector<WZForm> vs;
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s)
                if ((r + s) % 3 == grade) vs.push_back(basis(r, s, g));
        return vs;
    };
    auto one_forms = [&](int grade) {
        auto a = fun_space(grade, Dx), b = fun_space(grade, Dy);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    auto contained = [](const std::vector<WZForm>& U, const std::vector<WZForm>& V, const std::vector<WZForm>& T) {
        CycMatrix target = columns(T);
        for (const auto& u : U)
            for (const auto& v : V) {
                WZForm w = wz_mul(u, v);
                if (!is_zero(w) && !in_column_span(target, w)) return false;
            }
        return true;
    };
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const int c = (a + b) % 3;
            const std::string A = names[a], B = names[b], C = names[c];
            rep.add("M: " + A + " . " + B + " in " + C, contained(fun_space(a, One), fun_space(b, One), fun_space(c, One)));
            rep.add("Omega^1: (" + A + "(x)2) . (" + B + "(x)2) in " + C + " dx dy",
                    contained(one_forms(a), one_forms(b), fun_space(c, DxDy)));
            rep.add(A + " . (" + B + "(x)2) in " + C + "(x)2", contained(fun_space(a, One), one_forms(b), one_forms(c)));
            rep.add("(" + B + "(x)2) . " + A + " in " + C + "(x)2", contained(one_forms(b), fun_space(a, One), one_forms(c)));
            rep.add(A + " . " + B + " dx dy in " + C + " dx dy",
                    contained(fun_space(a, One), fun_space(b, DxDy), fun_space(c, DxDy)) &&
                        contained(fun_space(b, DxDy), fun_space(a, One), fun_space(c, DxDy)));
        }
    auto all = [&](int degree) {
        std::vector<WZForm> vs;
        for (int i = 0; i < kDim; ++i)
            if (degree_of(i) == degree) vs.push_back(algebra().basis(i));
        return vs;
    };
    rep.add("Omega^2 . Omega^2 = 0", contained(all(2), all(2), {}));
    rep.add("Omega^1 . Omega^2 = Omega^2 . Omega^1 = 0", contained(all(1), all(2), {}) && contained(all(2), all(1), {}));
    {
        bool central = true;
        for (int z = 0; z < 9; ++z) {
            WZForm m = algebra().basis(z);
            central = central && wz_mul(m, dxdy()) == wz_mul(dxdy(), m);
        }
        rep.add("dx dy is central in Omega^0", central);
    }
    return rep;
}

Report verify() {
    Report rep;
    rep.title = "Wess-Zumino complex";
    rep.merge(manin_check());
    rep.merge(structure_checks());
    rep.merge(action_tables());
    rep.merge(d_tables());
    rep.merge(star_checks());
    rep.merge(h_decomposition_of_forms());
    rep.merge(rep_product_tables());
    return rep;
}

}  // namespace qroot3::wz_forms
