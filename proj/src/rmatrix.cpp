#include "qroot3/rmatrix.hpp"

#include "qroot3/repmod.hpp"
#include "qroot3/wz_forms.hpp"

namespace qroot3::rmatrix {

using env_h::HElem;

namespace {

constexpr int kD = env_h::kDim;
const Cyc kQ = Cyc::q();
const Cyc kQ2 = Cyc::q2();

const TensorSpace& hh() {
    static const TensorSpace t({&env_h::algebra(), &env_h::algebra()});
    return t;
}

const TensorSpace& hhh() {
    static const TensorSpace t({&env_h::algebra(), &env_h::algebra(), &env_h::algebra()});
    return t;
}

TensorHH pure(const HElem& a, const HElem& b) { return tensor_elem(a, b); }

// Cartan part lives in span{K^a (x) K^b}; 9 coordinates at 3a + b.
CycVector cartan_coords(const TensorHH& t) {
    CycVector c = zero_vector(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) c(3 * a + b) = t(env_h::index(0, a, 0) * kD + env_h::index(0, b, 0));
    return c;
}

TensorHH from_cartan(const CycVector& c) {
    TensorHH t = zero_vector(kD * kD);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t(env_h::index(0, a, 0) * kD + env_h::index(0, b, 0)) = c(3 * a + b);
    return t;
}

TensorHH cartan_inverse(const TensorHH& t) {
    CycVector c = cartan_coords(t);
    CycMatrix m = zeros(9, 9);  // multiplication by c on the group algebra of Z3 x Z3
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int e = 0; e < 3; ++e)
                for (int f = 0; f < 3; ++f) m(3 * ((a + e) % 3) + (b + f) % 3, 3 * e + f) += c(3 * a + b);
    SolveResult s = solve(m, unit_vector(9, 0));
    if (!s.consistent) throw std::domain_error("Cartan factor is not invertible");
    return from_cartan(s.particular);
}

TensorHH hh_one() { return pure(env_h::one(), env_h::one()); }

bool eq(const TensorSpace::Elem& a, const TensorSpace::Elem& b) {
    return TensorSpace::is_zero(TensorSpace::difference(a, b));
}

TensorHH apply_first(const TensorHH& t, const CycMatrix& f) {
    TensorHH r = zero_vector(kD * kD);
    for (int i = 0; i < kD; ++i)
        for (int j = 0; j < kD; ++j) {
            const Cyc& c = t(i * kD + j);
            if (c.is_zero()) continue;
            for (int k = 0; k < kD; ++k)
                if (!f(k, i).is_zero()) r(k * kD + j) += c * f(k, i);
        }
    return r;
}

CycMatrix swap4() {
    CycMatrix p = zeros(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) p(2 * b + a, 2 * a + b) = Cyc(1);
    return p;
}

}  // namespace

TensorHH hh_mul(const TensorHH& a, const TensorHH& b) {
    return hh().to_dense(hh().multiply(hh().from_dense(a), hh().from_dense(b)));
}

Cyc coefficient(const TensorHH& t, const HElem& left, const HElem& right) {
    // Dual pairing with basis elements: read the coefficient of the pure tensor of two basis vectors.
    for (int i = 0; i < kD; ++i)
        if (!left(i).is_zero())
            for (int j = 0; j < kD; ++j)
                if (!right(j).is_zero()) return t(i * kD + j) / (left(i) * right(j));
    return Cyc(0);
}

std::string format_hh(const TensorHH& t) { return format_tensor({&env_h::algebra(), &env_h::algebra()}, t); }

TensorHH cartan_factor() {
    const Cyc one(1);
    const Cyc c[3][3] = {{one, one, one}, {one, kQ, kQ2}, {one, kQ2, kQ}};
    CycVector v = zero_vector(9);
    const Cyc pref = (Cyc(3) * kQ).inv();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) v(3 * a + b) = pref * c[a][b];
    return from_cartan(v);
}

TensorHH unipotent_factor(const Cyc& t) {
    using namespace env_h;
    return hh_one() + (kQ - kQ2) * pure(xm(), xp()) + t * pure(env_h::pow(xm(), 2), env_h::pow(xp(), 2));
}

TensorHH unipotent_factor() { return unipotent_factor(Cyc(3) * kQ); }

TensorHH r_from(const Cyc& scale, const Cyc& t) { return scale * hh_mul(cartan_factor(), unipotent_factor(t)); }

TensorHH r_inverse_from(const Cyc& scale, const Cyc& t) {
    TensorHH n = unipotent_factor(t) - hh_one();
    TensorHH uinv = hh_one() - n + hh_mul(n, n);
    return scale.inv() * hh_mul(uinv, cartan_inverse(cartan_factor()));
}

TensorHH universal_r() { return r_from(Cyc(1), Cyc(3) * kQ); }
TensorHH r_inverse() { return r_inverse_from(Cyc(1), Cyc(3) * kQ); }

namespace {

bool almost_cocommutative(const TensorHH& R, const TensorHH& Ri, std::string* w = nullptr) {
    bool ok = true;
    for (const auto& [name, h] :
         std::vector<std::pair<std::string, HElem>>{{"X+", env_h::xp()}, {"X-", env_h::xm()}, {"K", env_h::k()}}) {
        TensorHH del = env_h::coproduct(h);
        if (hh_mul(hh_mul(R, del), Ri) != flip(del, kD, kD)) {
            ok = false;
            if (w) *w += name + " ";
        }
    }
    return ok;
}

struct Legs {
    TensorSpace::Elem r12, r13, r23;
};

Legs legs(const TensorHH& R) {
    const TensorSpace::Elem r = hh().from_dense(R);
    return {hhh().embed(r, hh(), 0, 1), hhh().embed(r, hh(), 0, 2), hhh().embed(r, hh(), 1, 2)};
}

std::pair<bool, bool> hexagons(const TensorHH& R) {
    const Legs g = legs(R);
    const HopfDescriptor& H = env_h::hopf();
    return {eq(hhh().from_dense(coproduct_left(H, R)), hhh().multiply(g.r13, g.r23)),
            eq(hhh().from_dense(coproduct_right(H, R)), hhh().multiply(g.r13, g.r12))};
}

bool yang_baxter(const TensorHH& R) {
    const Legs g = legs(R);
    return eq(hhh().multiply(hhh().multiply(g.r12, g.r13), g.r23),
              hhh().multiply(hhh().multiply(g.r23, g.r13), g.r12));
}

// (eps (x) id) R and (id (x) eps) R
std::pair<HElem, HElem> counit_legs(const TensorHH& R) {
    HElem l = zero_vector(kD), r = zero_vector(kD);
    for (int i = 0; i < kD; ++i)
        for (int j = 0; j < kD; ++j) {
            const Cyc& c = R(i * kD + j);
            if (c.is_zero()) continue;
            l(j) += c * env_h::counit(env_h::algebra().basis(i));
            r(i) += c * env_h::counit(env_h::algebra().basis(j));
        }
    return {l, r};
}

void add_checks(Report& rep, const TensorHH& R, const TensorHH& Ri, const std::string& tag, bool printed) {
    rep.add(tag + "R R^-1 = R^-1 R = 1", hh_mul(R, Ri) == hh_one() && hh_mul(Ri, R) == hh_one());
    std::string w;
    rep.add(tag + "R Delta(h) R^-1 = Delta^op(h) for h = X+, X-, K", almost_cocommutative(R, Ri, &w), w);
    auto [h1, h2] = hexagons(R);
    auto [l, r] = counit_legs(R);
    const bool anti = apply_first(R, env_h::hopf().antipode) == Ri;
    const std::string lw = format_element(env_h::algebra(), l);
    // the printed prefactor is off by a scalar, which only the inhomogeneous identities detect
    auto add = [&](const std::string& name, bool pass, const std::string& wit = {}) {
        if (printed)
            rep.add_xfail(tag + name, pass, wit);
        else
            rep.add(tag + name, pass, wit);
    };
    add("(Delta (x) id) R = R13 R23", h1);
    add("(id (x) Delta) R = R13 R12", h2);
    add("(eps (x) id) R = 1", l == env_h::one(), lw);
    add("(id (x) eps) R = 1", r == env_h::one());
    add("(S (x) id) R = R^-1", anti);
    rep.add(tag + "R12 R13 R23 = R23 R13 R12", yang_baxter(R));
}

}  // namespace

Normalization search_normalization() {
    Normalization n;
    // the counit fixes the overall scalar: (eps (x) id) R is a multiple of 1
    const Cyc c = counit_legs(universal_r()).first(env_h::index(0, 0, 0));
    if (c.is_zero()) return n;
    n.scale = c.inv();
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            const Cyc t = Cyc(a) + Cyc(b) * kQ;
            const TensorHH R = r_from(n.scale, t);
            if (!almost_cocommutative(R, r_inverse_from(n.scale, t))) continue;
            auto [h1, h2] = hexagons(R);
            if (h1 && h2) n.candidates.push_back(t);
        }
    if (n.candidates.size() == 1) {
        n.found = true;
        n.x2_coeff = n.candidates[0];
    }
    return n;
}

const Normalization& normalization() {
    static const Normalization n = search_normalization();
    return n;
}

TensorHH normalized_r() {
    const Normalization& n = normalization();
    if (!n.found) throw std::runtime_error("no normalization of R passes the hexagon identities");
    return r_from(n.scale, n.x2_coeff);
}

Report check_quasitriangularity() {
    Report rep;
    rep.title = "quasi-triangular structure";
    add_checks(rep, universal_r(), r_inverse(), "printed: ", true);
    const Normalization& n = normalization();
    rep.add("a unique rescaling passes every identity", n.found,
            n.found ? "R' = " + to_string(n.scale) + " R, X-^2 (x) X+^2 coefficient " + to_string(n.x2_coeff)
                    : std::to_string(n.candidates.size()) + " candidates");
    if (n.found) {
        add_checks(rep, normalized_r(), r_inverse_from(n.scale, n.x2_coeff), "normalized: ", false);
        rep.add("the normalization keeps the printed X-^2 (x) X+^2 coefficient 3q", n.x2_coeff == Cyc(3) * kQ);
    }
    return rep;
}

Fundamental fundamental_rhat() {
    const repmod::HRep two = repmod::builtin_rep("2_eve");
    std::vector<CycMatrix> rho;
    for (int i = 0; i < kD; ++i) rho.push_back(repmod::rho(two, env_h::algebra().basis(i)));
    const TensorHH R = universal_r();
    CycMatrix rr = zeros(4, 4);
    for (int i = 0; i < kD; ++i)
        for (int j = 0; j < kD; ++j)
            if (!R(i * kD + j).is_zero()) rr += R(i * kD + j) * kron(rho[i], rho[j]);
    Fundamental f;
    f.rhat = matmul(swap4(), rr);
    // (q + q^-1) = -1 at this root of unity
    f.S = -(f.rhat + kQ2 * identity(4));
    f.A = f.rhat - kQ * identity(4);
    return f;
}

Report check_fundamental() {
    Report rep;
    rep.title = "R-hat on 2_eve";
    const Fundamental f = fundamental_rhat();
    const CycMatrix I = identity(4);
    {
        // the representation on span{x, y} inside M is the tabulated 2_eve
        const repmod::HRep two = repmod::builtin_rep("2_eve");
        const int ix = qplane::index(1, 0), iy = qplane::index(0, 1);
        bool ok = true;
        for (const HElem& h : {env_h::xp(), env_h::xm(), env_h::k()}) {
            CycMatrix L = env_h::left_action_matrix(h), sub(2, 2);
            const int id[2] = {ix, iy};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) sub(a, b) = L(id[a], id[b]);
            ok = ok && sub == repmod::rho(two, h);
        }
        rep.add("span{x, y} in M carries 2_eve in the basis (x, y)", ok);
    }
    rep.add("S + A = 1", f.S + f.A == I);
    rep.add("R-hat = q S - q^-1 A", f.rhat == kQ * f.S - kQ2 * f.A);
    rep.add("S^2 = S, A^2 = A", matmul(f.S, f.S) == f.S && matmul(f.A, f.A) == f.A);
    rep.add("S A = A S = 0", is_zero(matmul(f.S, f.A)) && is_zero(matmul(f.A, f.S)));
    rep.add("Tr S = 3, Tr A = 1", trace(f.S) == Cyc(3) && trace(f.A) == Cyc(1),
            to_string(trace(f.S)) + ", " + to_string(trace(f.A)));
    rep.add("R-hat has eigenvalue q with multiplicity 3 and -q^-1 with multiplicity 1",
            4 - rank(f.rhat - kQ * I) == 3 && 4 - rank(f.rhat + kQ2 * I) == 1);
    rep.add("rank A = 1", rank(f.A) == 1);
    return rep;
}

Report relations_from_projectors() {
    Report rep;
    rep.title = "relations from the projectors";
    const Fundamental f = fundamental_rhat();
    {
        const qplane::MElem gen[2] = {qplane::x(), qplane::y()};
        bool vanish = true, shape = true;
        for (int i = 0; i < 4; ++i) {
            qplane::MElem e = zero_vector(9);
            for (int j = 0; j < 4; ++j) e += f.A(i, j) * qplane::mul(gen[j / 2], gen[j % 2]);
            vanish = vanish && is_zero(e);
            // row i is c (xy - q yx)
            shape = shape && f.A(i, 0).is_zero() && f.A(i, 3).is_zero() && f.A(i, 2) == -kQ * f.A(i, 1);
        }
        rep.add("every row of A (xx, xy, yx, yy) is a multiple of xy - q yx", shape);
        rep.add("A (xx, xy, yx, yy) vanishes in M", vanish);
    }
    {
        using namespace wz_forms;
        const WZForm gen[2] = {dx(), dy()};
        bool vanish = true;
        for (int i = 0; i < 4; ++i) {
            WZForm e = zero_vector(kDim);
            for (int j = 0; j < 4; ++j) e += f.S(i, j) * wz_mul(gen[j / 2], gen[j % 2]);
            vanish = vanish && is_zero(e);
        }
        CycMatrix manin = zeros(4, 3);  // dx dx, dy dy, q dx dy + dy dx
        manin(0, 0) = Cyc(1);
        manin(3, 1) = Cyc(1);
        manin(1, 2) = kQ;
        manin(2, 2) = Cyc(1);
        CycMatrix rows = f.S.transpose();
        rep.add("rows of S span the relations dx^2, dy^2, q dx dy + dy dx",
                rank(rows) == 3 && rank(hstack(rows, manin)) == 3);
        rep.add("S (dx dx, dx dy, dy dx, dy dy) vanishes in the form algebra", vanish);
    }
    return rep;
}

Report verify() {
    Report rep;
    rep.title = "universal R-matrix";
    rep.merge(check_quasitriangularity());
    rep.merge(check_fundamental());
    rep.merge(relations_from_projectors());
    return rep;
}

}  // namespace qroot3::rmatrix
