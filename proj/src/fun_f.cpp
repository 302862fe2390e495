#include "qroot3/fun_f.hpp"

#include <stdexcept>

namespace qroot3::fun_f {

namespace {

std::string mono_label(int al, int be, int ga) {
    auto part = [](const char* g, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(e);
    };
    std::string out;
    for (const auto& p : {part("a", al), part("b", be), part("c", ga)}) {
        if (p.empty()) continue;
        out += (out.empty() ? "" : "*") + p;
    }
    return out.empty() ? "1" : out;
}

AlgebraTable build_algebra() {
    AlgebraTable t;
    t.name = "F";
    t.dim = kDim;
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga) t.labels.push_back(mono_label(al, be, ga));
    t.mult.resize(kDim * kDim);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const int al = i / 9, be = i / 3 % 3, ga = i % 3;
            const int al2 = j / 9, be2 = j / 3 % 3, ga2 = j % 3;
            if (be + be2 > 2 || ga + ga2 > 2) continue;  // b^3 = c^3 = 0
            // b^be c^ga a^al2 = q^(2 al2 (be + ga)) a^al2 b^be c^ga
            t.mult[i * kDim + j] = {{index(al + al2, be + be2, ga + ga2), Cyc::qpow(2 * al2 * (be + ga))}};
        }
    t.unit = unit_vector(kDim, 0);
    return t;
}

CycVector tensor_pow(const AlgebraTable& A, const CycVector& t, int k) {
    CycVector r = tensor_elem(A.unit, A.unit);
    for (int i = 0; i < k; ++i) r = tensor_multiply(A, A, r, t);
    return r;
}

HopfDescriptor build_hopf() {
    HopfDescriptor h;
    h.alg = algebra();
    const AlgebraTable& A = h.alg;
    CycVector da = tensor_elem(a(), a()) + tensor_elem(b(), c());
    CycVector db = tensor_elem(a(), b()) + tensor_elem(b(), d());
    CycVector dc = tensor_elem(c(), a()) + tensor_elem(d(), c());
    FElem sa = d(), sb = -Cyc::q2() * b(), sc = -Cyc::q() * c();
    h.comult.resize(kDim);
    h.counit = zero_vector(kDim);
    h.antipode = zeros(kDim, kDim);
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga) {
                const int i = index(al, be, ga);
                CycVector dl = tensor_multiply(A, A, tensor_pow(A, da, al),
                                               tensor_multiply(A, A, tensor_pow(A, db, be), tensor_pow(A, dc, ga)));
                h.comult[i] = to_sparse(dl);
                h.counit(i) = (be == 0 && ga == 0) ? Cyc(1) : Cyc(0);
                // S is an antimorphism
                h.antipode.col(i) = mul(pow(sc, ga), mul(pow(sb, be), pow(sa, al)));
            }
    return h;
}

qplane::MElem mx() { return qplane::x(); }
qplane::MElem my() { return qplane::y(); }

}  // namespace

const AlgebraTable& algebra() {
    static const AlgebraTable t = build_algebra();
    return t;
}

const HopfDescriptor& hopf() {
    static const HopfDescriptor h = build_hopf();
    return h;
}

HopfDescriptor corrupted_hopf() {
    HopfDescriptor h = hopf();
    h.comult[index(1, 0, 0)] = to_sparse(tensor_elem(a(), a()));
    return h;
}

FElem mono(int al, int be, int ga, const Cyc& c) {
    FElem u = zero_vector(kDim);
    if (be < 3 && ga < 3) u(index(al, be, ga)) = c;
    return u;
}

FElem one() { return mono(0, 0, 0); }
FElem a() { return mono(1, 0, 0); }
FElem b() { return mono(0, 1, 0); }
FElem c() { return mono(0, 0, 1); }
FElem d() { return mul(mono(2, 0, 0), one() + mono(0, 1, 1, Cyc::q())); }
FElem mul(const FElem& u, const FElem& v) { return multiply(algebra(), u, v); }
FElem pow(const FElem& u, int k) { return power(algebra(), u, k); }
FElem q_determinant() { return mul(d(), a()) - Cyc::q2() * mul(b(), c()); }

CycVector coproduct(const FElem& u) { return qroot3::coproduct(hopf(), u); }
FElem antipode(const FElem& u) { return qroot3::antipode(hopf(), u); }
Cyc counit(const FElem& u) { return qroot3::counit(hopf(), u); }

FElem star(const FElem& u) {
    FElem r = zero_vector(kDim);
    for (int i = 0; i < kDim; ++i) {
        if (u(i).is_zero()) continue;
        const int al = i / 9, be = i / 3 % 3, ga = i % 3;
        // (a^al b^be c^ga)* = c^ga b^be a^al
        r += u(i).conj() * mul(mono(0, be, ga), mono(al, 0, 0));
    }
    return r;
}

CycVector star_tensor(const CycVector& t) {
    CycVector r = zero_vector(kDim * kDim);
    for (int x = 0; x < kDim * kDim; ++x)
        if (!t(x).is_zero()) r += t(x).conj() * tensor_elem(star(unit_vector(kDim, x / kDim)), star(unit_vector(kDim, x % kDim)));
    return r;
}

namespace {

std::vector<CycVector> build_coaction(bool right) {
    const AlgebraTable& F = algebra();
    const AlgebraTable& M = qplane::algebra();
    CycVector cx, cy;
    if (right) {
        cx = tensor_elem(mx(), a()) + tensor_elem(my(), c());
        cy = tensor_elem(mx(), b()) + tensor_elem(my(), d());
    } else {
        cx = tensor_elem(a(), mx()) + tensor_elem(b(), my());
        cy = tensor_elem(c(), mx()) + tensor_elem(d(), my());
    }
    auto prod = [&](const CycVector& u, const CycVector& v) {
        return right ? tensor_multiply(M, F, u, v) : tensor_multiply(F, M, u, v);
    };
    CycVector unit = right ? tensor_elem(M.unit, F.unit) : tensor_elem(F.unit, M.unit);
    std::vector<CycVector> img(qplane::kDim);
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            CycVector t = unit;
            for (int k = 0; k < r; ++k) t = prod(t, cx);
            for (int k = 0; k < s; ++k) t = prod(t, cy);
            img[qplane::index(r, s)] = t;
        }
    return img;
}

CycVector apply_coaction(const std::vector<CycVector>& img, const qplane::MElem& z) {
    CycVector r = zero_vector(static_cast<int>(img[0].size()));
    for (int i = 0; i < qplane::kDim; ++i)
        if (!z(i).is_zero()) r += z(i) * img[i];
    return r;
}

}  // namespace

Coaction left_coaction() {
    static const std::vector<CycVector> img = build_coaction(false);
    return Coaction{img, false};
}

Coaction right_coaction() {
    static const std::vector<CycVector> img = build_coaction(true);
    return Coaction{img, true};
}

CycVector coact_left(const qplane::MElem& z) { return apply_coaction(left_coaction().image, z); }
CycVector coact_right(const qplane::MElem& z) { return apply_coaction(right_coaction().image, z); }

namespace {

G9Matrix perm(const Grass9& g) {
    G9Matrix m = G9Matrix::Constant(3, 3, Grass9());
    m(0, 1) = g;
    m(1, 2) = g;
    m(2, 0) = g;
    return m;
}

// The printed matrix for a with q -> q^-1. Together with b = xi1 P and c = xi2 P
// this satisfies ab = q ba and ac = q ca; the matrix as printed gives ab = q^-1 ba.
G9Matrix rep_a(bool printed = false) {
    const Cyc w = printed ? Cyc::q() : Cyc::q2();
    G9Matrix m = G9Matrix::Constant(3, 3, Grass9());
    Grass9 xx = Grass9::xi(1, 1);
    m(0, 0) = Grass9(1);
    m(0, 2) = xx;
    m(1, 0) = xx * Grass9(w);
    m(1, 1) = Grass9(w);
    m(2, 1) = xx * Grass9(w * w);
    m(2, 2) = Grass9(w * w);
    return m;
}

G9Matrix g9_identity() {
    G9Matrix m = G9Matrix::Constant(3, 3, Grass9());
    for (int i = 0; i < 3; ++i) m(i, i) = Grass9(1);
    return m;
}

G9Matrix g9_pow(const G9Matrix& m, int k) {
    G9Matrix r = g9_identity();
    for (int i = 0; i < k; ++i) r = matmul(r, m);
    return r;
}

}  // namespace

G9Matrix ogievetsky_rep(const FElem& u) {
    static const std::vector<G9Matrix> images = [] {
        std::vector<G9Matrix> v;
        G9Matrix A = rep_a(), B = perm(Grass9::xi(1, 0)), C = perm(Grass9::xi(0, 1));
        for (int al = 0; al < 3; ++al)
            for (int be = 0; be < 3; ++be)
                for (int ga = 0; ga < 3; ++ga) v.push_back(matmul(g9_pow(A, al), matmul(g9_pow(B, be), g9_pow(C, ga))));
        return v;
    }();
    G9Matrix r = G9Matrix::Constant(3, 3, Grass9());
    for (int i = 0; i < kDim; ++i) {
        if (u(i).is_zero()) continue;
        for (int e = 0; e < 9; ++e) r(e / 3, e % 3) += Grass9(u(i)) * images[i](e / 3, e % 3);
    }
    return r;
}

FMatrix fmatmul(const FMatrix& x, const FMatrix& y) {
    FMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            FElem s = zero_vector(kDim);
            for (int k = 0; k < 3; ++k) s += mul(x[3 * i + k], y[3 * k + j]);
            r[3 * i + j] = s;
        }
    return r;
}

FElem ftrace(const FMatrix& x) { return FElem(x[0] + x[4] + x[8]); }

FMatrix lambda_prime(int i) {
    qplane::MElem g = qplane::gell_mann(i).elem;
    CycVector t = coact_left(g);  // F (x) M
    FMatrix r;
    r.fill(zero_vector(kDim));
    for (int m = 0; m < qplane::kDim; ++m) {
        FElem f = zero_vector(kDim);
        for (int k = 0; k < kDim; ++k) f(k) = t(k * qplane::kDim + m);
        if (is_zero(f)) continue;
        CycMatrix mm = qplane::to_matrix(unit_vector(qplane::kDim, m));
        for (int e = 0; e < 9; ++e)
            if (!mm(e / 3, e % 3).is_zero()) r[e] += mm(e / 3, e % 3) * f;
    }
    return r;
}

namespace {

FElem lin(std::initializer_list<std::pair<Cyc, FElem>> terms, const Cyc& scale = Cyc(1)) {
    FElem r = zero_vector(kDim);
    for (const auto& [c, f] : terms) r += c * scale * f;
    return r;
}

FMatrix printed_lambda8(const std::array<Cyc, 3>& acoef) {
    const Cyc q = Cyc::q(), q2 = Cyc::q2(), one(1);
    FElem A = a(), A2 = mono(2, 0, 0), B = b(), B2 = mono(0, 2, 0), AB = mono(1, 1, 0);
    return {lin({{acoef[0], A}, {-q, A2}}), lin({{-q2, B}, {one, AB}}), lin({{-q, B2}}),
            lin({{-q, B2}}), lin({{acoef[1], A}, {-q2, A2}}), lin({{-q2, B}, {q2, AB}}),
            lin({{-q2, B}, {q, AB}}), lin({{-q, B2}}), lin({{acoef[2], A}, {-one, A2}})};
}

}  // namespace

FMatrix printed_lambda_prime(int i) {
    const Cyc q = Cyc::q(), q2 = Cyc::q2(), one(1), t = Cyc::frac(1, 3);
    FElem A = a(), A2 = mono(2, 0, 0), B = b(), B2 = mono(0, 2, 0), AB = mono(1, 1, 0);
    if (i == 3)
        return {lin({{one - q, A}, {one - q2, A2}}, t), lin({{one - q, B}, {q - q2, AB}}, t), lin({{one - q2, B2}}, t),
                lin({{one - q2, B2}}, t), lin({{q2 - one, A}, {q - one, A2}}, t), lin({{one - q, B}, {one - q, AB}}, t),
                lin({{one - q, B}, {q2 - one, AB}}, t), lin({{one - q2, B2}}, t), lin({{q - q2, A}, {q2 - q, A2}}, t)};
    if (i == 8) return printed_lambda8({-q2, -q, -one});
    throw std::out_of_range("printed_lambda_prime: only 3 and 8 are printed");
}

FMatrix printed_lambda8_literal() {
    const Cyc q = Cyc::q(), q2 = Cyc::q2(), one(1);
    return printed_lambda8({-q, -one, -q2});
}

namespace {

// Classical structure constants f_ijk of su(3), stored as rational r with f = r or r sqrt(3).
struct FEntry {
    int i, j, k;
    Rat r;
    bool sqrt3;
};

const std::vector<FEntry>& su3_constants() {
    static const std::vector<FEntry> f = {
        {1, 2, 3, Rat(1), false},     {1, 4, 7, Rat(1, 2), false},  {1, 5, 6, Rat(-1, 2), false},
        {2, 4, 6, Rat(1, 2), false},  {2, 5, 7, Rat(1, 2), false},  {3, 4, 5, Rat(1, 2), false},
        {3, 6, 7, Rat(-1, 2), false}, {4, 5, 8, Rat(1, 2), true},   {6, 7, 8, Rat(1, 2), true},
    };
    return f;
}

// Totally antisymmetric extension.
Rat su3_f(int i, int j, int k, bool& sqrt3) {
    sqrt3 = false;
    for (const auto& e : su3_constants()) {
        const int p[3] = {e.i, e.j, e.k};
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int s = 0; s < 6; ++s)
            if (p[perms[s][0]] == i && p[perms[s][1]] == j && p[perms[s][2]] == k) {
                sqrt3 = e.sqrt3;
                return s < 3 ? e.r : Rat(-e.r);
            }
    }
    return Rat(0);
}

bool scaled(int i) { return qplane::gell_mann(i).sqrt3_scaled; }

// Coefficient of Lambda_k in [Lambda_i, Lambda_j], Lambda = scaled lambda:
// 2 i f_ijk s_i s_j / s_k with i sqrt(3) = 2q + 1.
Cyc commutator_coefficient(int i, int j, int k) {
    bool s3 = false;
    Rat f = su3_f(i, j, k, s3);
    if (sgn(f) == 0) return Cyc(0);
    int e = (scaled(i) ? 1 : 0) + (scaled(j) ? 1 : 0) - (scaled(k) ? 1 : 0) - 1 + (s3 ? 1 : 0);
    Rat p = 1;
    if (e % 2 != 0) throw std::logic_error("odd power of sqrt(3) in su(3) constants");
    for (int n = 0; n < (e < 0 ? -e : e) / 2; ++n) p *= 3;
    if (e < 0) p = Rat(1) / p;
    return Cyc(Rat(2 * f * p)) * Cyc::sqrt_m3();
}

std::string fm_str(const FElem& u) { return format_element(algebra(), u); }

}  // namespace

Report verify() {
    Report rep;
    rep.title = "quantum group F";
    const Cyc q = Cyc::q(), q2 = Cyc::q2();
    FElem A = a(), B = b(), C = c(), D = d(), one_ = one();

    rep.add("ab = q ba", mul(A, B) == q * mul(B, A));
    rep.add("ac = q ca", mul(A, C) == q * mul(C, A));
    rep.add("bc = cb", mul(B, C) == mul(C, B));
    rep.add("bd = q db", mul(B, D) == q * mul(D, B));
    rep.add("cd = q dc", mul(C, D) == q * mul(D, C));
    rep.add("ad - da = (q - q^2) bc", mul(A, D) - mul(D, A) == (q - q2) * mul(B, C));
    rep.add("a^3 = d^3 = 1, b^3 = c^3 = 0",
            pow(A, 3) == one_ && pow(D, 3) == one_ && is_zero(pow(B, 3)) && is_zero(pow(C, 3)));
    rep.add("q-determinant da - q^2 bc = 1", q_determinant() == one_);
    rep.add("q-determinant ad - q bc = 1", mul(A, D) - q * mul(B, C) == one_);

    const HopfDescriptor& h = hopf();
    rep.merge(check_hopf(h), "F: ");
    rep.add("Delta d = c(x)b + d(x)d", coproduct(D) == tensor_elem(C, B) + tensor_elem(D, D));
    rep.add("S d = a", antipode(D) == A);
    rep.add("eps(d) = 1", counit(D).is_one());

    {  // corrupted fixture must fail with a witness
        Report bad = check_hopf(corrupted_hopf());
        bool caught = false;
        for (const auto& ch : bad.checks)
            if (!ch.pass && ch.name == "coproduct is an algebra morphism" && !ch.witness.empty()) caught = true;
        rep.add("corrupted Delta(a) = a(x)a is rejected with a witness", caught);
    }

    {  // star
        bool inv = true, anti = true, cop = true, ss = true;
        for (int i = 0; i < kDim; ++i) {
            FElem e = unit_vector(kDim, i);
            inv = inv && star(star(e)) == e && star(q * e) == q2 * star(e);
            cop = cop && coproduct(star(e)) == star_tensor(coproduct(e));
            ss = ss && antipode(star(antipode(star(e)))) == e;
            for (int j = 0; j < kDim && anti; ++j) {
                FElem f = unit_vector(kDim, j);
                anti = star(mul(e, f)) == mul(star(f), star(e));
            }
        }
        rep.add("star fixes a, b, c, d", star(A) == A && star(B) == B && star(C) == C && star(D) == D);
        rep.add("star is an antilinear involution", inv);
        rep.add("star is antimultiplicative", anti);
        rep.add("Delta(u*) = (Delta u)*", cop);
        rep.add("S * S * = id", ss);
    }

    {  // coactions
        const AlgebraTable& M = qplane::algebra();
        Coaction L = left_coaction(), R = right_coaction();
        rep.merge(check_comodule_algebra(h, L, M), "left coaction: ");
        rep.merge(check_comodule_algebra(h, R, M), "right coaction: ");
        CycVector lx = coact_left(mx()), ly = coact_left(my());
        CycVector rx = coact_right(mx()), ry = coact_right(my());
        rep.add("Delta_L x = a(x)x + b(x)y", lx == tensor_elem(A, mx()) + tensor_elem(B, my()));
        rep.add("Delta_R x = x(x)a + y(x)c", rx == tensor_elem(mx(), A) + tensor_elem(my(), C));
        const AlgebraTable& F = algebra();
        auto lm = [&](const CycVector& u, const CycVector& v) { return tensor_multiply(F, M, u, v); };
        auto rm = [&](const CycVector& u, const CycVector& v) { return tensor_multiply(M, F, u, v); };
        rep.add("Delta_L preserves xy = q yx", lm(lx, ly) == q * lm(ly, lx));
        rep.add("Delta_R preserves xy = q yx", rm(rx, ry) == q * rm(ry, rx));
        CycVector l1 = tensor_elem(F.unit, M.unit), r1 = tensor_elem(M.unit, F.unit);
        rep.add("Delta_L preserves x^3 = y^3 = 1", lm(lm(lx, lx), lx) == l1 && lm(lm(ly, ly), ly) == l1);
        rep.add("Delta_R preserves x^3 = y^3 = 1", rm(rm(rx, rx), rx) == r1 && rm(rm(ry, ry), ry) == r1);
        bool cov = true;
        for (int z = 0; z < qplane::kDim; ++z) {
            qplane::MElem e = unit_vector(qplane::kDim, z), es = qplane::star(e);
            CycVector l = coact_left(e), r = coact_right(e), ls = zero_vector(kDim * 9), rs = zero_vector(kDim * 9);
            for (int x = 0; x < kDim * 9; ++x) {
                if (!l(x).is_zero())
                    ls += l(x).conj() * tensor_elem(star(unit_vector(kDim, x / 9)), qplane::star(unit_vector(9, x % 9)));
                if (!r(x).is_zero())
                    rs += r(x).conj() *
                          tensor_elem(qplane::star(unit_vector(9, x / kDim)), star(unit_vector(kDim, x % kDim)));
            }
            cov = cov && ls == coact_left(es) && rs == coact_right(es);
        }
        rep.add("(Delta_{L,R} z)* = Delta_{L,R}(z*)", cov);
    }

    {  // faithful representation
        bool morph = true;
        std::string w;
        for (int i = 0; i < kDim && morph; ++i)
            for (int j = 0; j < kDim && morph; ++j) {
                FElem u = unit_vector(kDim, i), v = unit_vector(kDim, j);
                if (ogievetsky_rep(mul(u, v)) != matmul(ogievetsky_rep(u), ogievetsky_rep(v))) {
                    morph = false;
                    w = algebra().labels[i] + "*" + algebra().labels[j];
                }
            }
        rep.add("Ogievetsky representation is multiplicative (27^2 pairs)", morph, w);
        CycMatrix coeffs = zeros(81, kDim);
        for (int i = 0; i < kDim; ++i) {
            G9Matrix m = ogievetsky_rep(unit_vector(kDim, i));
            for (int e = 0; e < 9; ++e)
                for (int g = 0; g < 9; ++g) coeffs(9 * e + g, i) = m(e / 3, e % 3)[g];
        }
        rep.add("Ogievetsky representation has rank 27", rank(coeffs) == kDim);
        G9Matrix B9 = perm(Grass9::xi(1, 0)), C9 = perm(Grass9::xi(0, 1)), Ap = rep_a(true);
        rep.add("images of b and c are xi1 P and xi2 P", ogievetsky_rep(B) == B9 && ogievetsky_rep(C) == C9);
        bool lit = matmul(Ap, B9) == matmul(B9, Ap) * Grass9(q);
        rep.add_xfail("printed matrix for a satisfies ab = q ba", lit, "it gives ab = q^2 ba");
    }

    {  // not semisimple: the ideal generated by b is nilpotent
        bool ideal = true, nil = true;
        auto inI = [](const FElem& u) {
            for (int k = 0; k < kDim; ++k)
                if (!u(k).is_zero() && k / 3 % 3 == 0) return false;
            return true;
        };
        std::vector<int> I;
        for (int k = 0; k < kDim; ++k)
            if (k / 3 % 3 >= 1) I.push_back(k);
        for (int i : I)
            for (int j = 0; j < kDim; ++j) {
                FElem u = unit_vector(kDim, i), e = unit_vector(kDim, j);
                ideal = ideal && inI(mul(u, e)) && inI(mul(e, u));
            }
        for (int i : I)
            for (int j : I)
                for (int k : I) nil = nil && is_zero(mul(mul(unit_vector(kDim, i), unit_vector(kDim, j)), unit_vector(kDim, k)));
        rep.add("b generates a nonzero two-sided ideal I with I^3 = 0", ideal && nil && !I.empty());
    }

    {  // Gell-Mann matrices over F
        bool tr = true, orth = true, eps = true, comm = true;
        std::string w;
        std::vector<FMatrix> L;
        for (int i = 1; i <= 8; ++i) L.push_back(lambda_prime(i));
        for (int i = 1; i <= 8; ++i) {
            tr = tr && is_zero(ftrace(L[i - 1]));
            CycMatrix cl = qplane::classical_gell_mann(i);
            for (int e = 0; e < 9; ++e) eps = eps && counit(L[i - 1][e]) == cl(e / 3, e % 3);
            for (int j = 1; j <= 8; ++j) {
                Cyc s2 = scaled(i) ? Cyc(3) : Cyc(1);
                FElem expect = (i == j) ? FElem(Cyc(2) * s2 * one_) : FElem(zero_vector(kDim));
                if (ftrace(fmatmul(L[i - 1], L[j - 1])) != expect) {
                    orth = false;
                    w = "Tr(l'" + std::to_string(i) + " l'" + std::to_string(j) + ")";
                }
                FMatrix lhs = fmatmul(L[i - 1], L[j - 1]), rhs = fmatmul(L[j - 1], L[i - 1]);
                for (int e = 0; e < 9; ++e) {
                    FElem diff = lhs[e] - rhs[e];
                    for (int k = 1; k <= 8; ++k) diff -= commutator_coefficient(i, j, k) * L[k - 1][e];
                    comm = comm && is_zero(diff);
                }
            }
        }
        rep.add("Tr lambda'_i = 0 for the diagonal i = 3, 8", is_zero(ftrace(L[2])) && is_zero(ftrace(L[7])));
        rep.add_xfail("Tr lambda'_i = 0 for all i", tr, "Tr lambda'_1 = " + fm_str(ftrace(L[0])));
        bool diag = true;
        for (int i = 1; i <= 8; ++i) {
            Cyc s2 = scaled(i) ? Cyc(3) : Cyc(1);
            diag = diag && ftrace(fmatmul(L[i - 1], L[i - 1])) == FElem(Cyc(2) * s2 * one_);
        }
        rep.add("Tr(lambda'_i lambda'_i) = 2 (sqrt(3) scaling tracked)", diag);
        rep.add("Tr(lambda'_3 lambda'_8) = 0", is_zero(ftrace(fmatmul(L[2], L[7]))));
        rep.add_xfail("Tr(lambda'_i lambda'_j) = 2 delta_ij for all i, j", orth, w);
        rep.add("(eps (x) id) lambda'_i = lambda_i", eps);
        rep.add("[lambda'_i, lambda'_j] = 2i f_ijk lambda'_k", comm);
        bool p3 = true, p8 = true;
        FMatrix P3 = printed_lambda_prime(3), P8 = printed_lambda_prime(8);
        for (int e = 0; e < 9; ++e) {
            p3 = p3 && P3[e] == L[2][e];
            p8 = p8 && P8[e] == L[7][e];
        }
        rep.add("lambda'_3 matches the printed matrix", p3, p3 ? "" : fm_str(L[2][0]));
        rep.add("sqrt(3) lambda'_8 matches the printed matrix with diagonal a-terms corrected", p8);
        bool lit = true;
        FMatrix P8l = printed_lambda8_literal();
        for (int e = 0; e < 9; ++e) lit = lit && P8l[e] == L[7][e];
        rep.add_xfail("sqrt(3) lambda'_8 matches the printed matrix literally", lit,
                      "eps of the printed (1,1) entry is -2q, not 1");
    }
    return rep;
}

}  // namespace qroot3::fun_f
