#include "qroot3/env_h.hpp"

#include <functional>
#include <stdexcept>

namespace qroot3::env_h {

namespace {

const Cyc kQ = Cyc::q();
const Cyc kQ2 = Cyc::q2();

std::string mono_label(int al, int be, int ga) {
    auto part = [](const char* g, int e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(g) : std::string(g) + "^" + std::to_string(e);
    };
    std::string out;
    for (const auto& p : {part("X+", al), part("K", be), part("X-", ga)}) {
        if (p.empty()) continue;
        out += (out.empty() ? "" : "*") + p;
    }
    return out.empty() ? "1" : out;
}

// Right multiplication of a basis monomial by a generator: 0 = X+, 1 = K, 2 = X-.
CycVector times_gen(const CycVector& m, int g);

CycVector times_gen_basis(int i, int g) {
    const int al = i / 9, be = i / 3 % 3, ga = i % 3;
    CycVector r = zero_vector(kDim);
    switch (g) {
        case 2:
            if (ga < 2) r(index(al, be, ga + 1)) = Cyc(1);
            return r;
        case 1:  // X-^ga K = q^(2 ga) K X-^ga
            r(index(al, be + 1, ga)) = Cyc::qpow(2 * ga);
            return r;
        default: {
            if (ga == 0) {  // K^be X+ = q^(2 be) X+ K^be
                if (al < 2) r(index(al + 1, be, 0)) = Cyc::qpow(2 * be);
                return r;
            }
            // X- X+ = X+ X- - (K - K^2)/(q - q^2)
            CycVector m1 = unit_vector(kDim, index(al, be, ga - 1));
            CycVector t = times_gen(times_gen(m1, 0), 2);
            Cyc s = (kQ - kQ2).inv();
            t -= s * (times_gen(m1, 1) - times_gen(times_gen(m1, 1), 1));
            return t;
        }
    }
}

CycVector times_gen(const CycVector& m, int g) {
    CycVector r = zero_vector(kDim);
    for (int i = 0; i < kDim; ++i)
        if (!m(i).is_zero()) r += m(i) * times_gen_basis(i, g);
    return r;
}

AlgebraTable build_algebra() {
    AlgebraTable t;
    t.name = "H";
    t.dim = kDim;
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga) t.labels.push_back(mono_label(al, be, ga));
    t.mult.resize(kDim * kDim);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const int al = j / 9, be = j / 3 % 3, ga = j % 3;
            CycVector m = unit_vector(kDim, i);
            for (int n = 0; n < al; ++n) m = times_gen(m, 0);
            for (int n = 0; n < be; ++n) m = times_gen(m, 1);
            for (int n = 0; n < ga; ++n) m = times_gen(m, 2);
            t.mult[i * kDim + j] = to_sparse(m);
        }
    t.unit = unit_vector(kDim, 0);
    return t;
}

CycVector tensor_pow(const AlgebraTable& A, const CycVector& t, int n) {
    CycVector r = tensor_elem(A.unit, A.unit);
    for (int i = 0; i < n; ++i) r = tensor_multiply(A, A, r, t);
    return r;
}

HopfDescriptor build_hopf() {
    HopfDescriptor h;
    h.alg = algebra();
    const AlgebraTable& A = h.alg;
    CycVector dp = tensor_elem(xp(), one()) + tensor_elem(k(), xp());
    CycVector dk = tensor_elem(k(), k());
    CycVector dm = tensor_elem(xm(), kinv()) + tensor_elem(one(), xm());
    HElem sp = -mul(kinv(), xp()), sk = kinv(), sm = -mul(xm(), k());
    h.comult.resize(kDim);
    h.counit = zero_vector(kDim);
    h.antipode = zeros(kDim, kDim);
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga) {
                const int i = index(al, be, ga);
                h.comult[i] = to_sparse(tensor_multiply(
                    A, A, tensor_pow(A, dp, al), tensor_multiply(A, A, tensor_pow(A, dk, be), tensor_pow(A, dm, ga))));
                h.counit(i) = (al == 0 && ga == 0) ? Cyc(1) : Cyc(0);
                h.antipode.col(i) = mul(pow(sm, ga), mul(pow(sk, be), pow(sp, al)));
            }
    return h;
}

}  // namespace

const AlgebraTable& algebra() {
    static const AlgebraTable t = build_algebra();
    return t;
}

const HopfDescriptor& hopf() {
    static const HopfDescriptor h = build_hopf();
    return h;
}

HElem mono(int al, int be, int ga, const Cyc& c) {
    HElem h = zero_vector(kDim);
    if (al < 3 && ga < 3) h(index(al, be, ga)) = c;
    return h;
}

HElem one() { return mono(0, 0, 0); }
HElem xp() { return mono(1, 0, 0); }
HElem xm() { return mono(0, 0, 1); }
HElem k() { return mono(0, 1, 0); }
HElem kinv() { return mono(0, 2, 0); }
HElem mul(const HElem& g, const HElem& h) { return multiply(algebra(), g, h); }
HElem pow(const HElem& g, int n) { return power(algebra(), g, n); }

HElem casimir() { return mul(xp(), xm()) - Cyc::frac(1, 3) * (kQ2 * k() + kQ * kinv()); }

CycVector coproduct(const HElem& h) { return qroot3::coproduct(hopf(), h); }
HElem antipode(const HElem& h) { return qroot3::antipode(hopf(), h); }
Cyc counit(const HElem& h) { return qroot3::counit(hopf(), h); }

HElem star(const HElem& h) {
    static const std::vector<HElem> images = [] {
        std::vector<HElem> v(kDim);
        HElem sp = -kQ2 * xp(), sm = -kQ * xm();
        for (int i = 0; i < kDim; ++i) {
            const int al = i / 9, be = i / 3 % 3, ga = i % 3;
            v[i] = mul(pow(sm, ga), mul(pow(k(), be), pow(sp, al)));
        }
        return v;
    }();
    HElem r = zero_vector(kDim);
    for (int i = 0; i < kDim; ++i)
        if (!h(i).is_zero()) r += h(i).conj() * images[i];
    return r;
}

namespace {

// Generator functionals on F, evaluated on the word a..a b..b c..c.
enum Letter { LA, LB, LC };

Cyc letter_value(const std::string& gen, Letter l) {
    if (gen == "eps") return l == LA ? Cyc(1) : Cyc(0);
    if (gen == "K") return l == LA ? kQ : Cyc(0);
    if (gen == "K2") return l == LA ? kQ2 : Cyc(0);
    if (gen == "X+") return l == LB ? Cyc(1) : Cyc(0);
    if (gen == "X-") return l == LC ? Cyc(1) : Cyc(0);
    throw std::logic_error("letter_value");
}

std::vector<Letter> word(int f) {
    std::vector<Letter> w;
    for (int n = 0; n < f / 9; ++n) w.push_back(LA);
    for (int n = 0; n < f / 3 % 3; ++n) w.push_back(LB);
    for (int n = 0; n < f % 3; ++n) w.push_back(LC);
    return w;
}

// Delta X+ = X+ (x) 1 + K (x) X+ and Delta X- = X- (x) K^-1 + 1 (x) X- iterated along the word.
CycVector generator_functional(int g) {
    CycVector r = zero_vector(fun_f::kDim);
    for (int f = 0; f < fun_f::kDim; ++f) {
        std::vector<Letter> w = word(f);
        if (g == 1) {
            Cyc p(1);
            for (Letter l : w) p *= letter_value("K", l);
            r(f) = p;
            continue;
        }
        Cyc s;
        for (size_t i = 0; i < w.size(); ++i) {
            Cyc p(1);
            for (size_t j = 0; j < w.size(); ++j) {
                if (j < i) p *= letter_value(g == 0 ? "K" : "eps", w[j]);
                else if (j == i) p *= letter_value(g == 0 ? "X+" : "X-", w[j]);
                else p *= letter_value(g == 0 ? "eps" : "K2", w[j]);
            }
            s += p;
        }
        r(f) = s;
    }
    return r;
}

// P_{gh} (u) = P_g (u_1) P_h (u_2)
CycVector convolve(const CycVector& pg, const CycVector& ph) {
    const HopfDescriptor& F = fun_f::hopf();
    const int d = fun_f::kDim;
    CycVector r = zero_vector(d);
    for (int f = 0; f < d; ++f) {
        Cyc s;
        for (const auto& [idx, c] : F.comult[f]) {
            const Cyc& a = pg(idx / d);
            if (a.is_zero()) continue;
            const Cyc& b = ph(idx % d);
            if (!b.is_zero()) s += c * a * b;
        }
        r(f) = s;
    }
    return r;
}

CycMatrix build_pairing() {
    CycVector gens[3] = {generator_functional(0), generator_functional(1), generator_functional(2)};
    CycMatrix P = zeros(kDim, fun_f::kDim);
    for (int i = 0; i < kDim; ++i) {
        const int al = i / 9, be = i / 3 % 3, ga = i % 3;
        CycVector p = fun_f::hopf().counit;
        for (int n = 0; n < al; ++n) p = convolve(p, gens[0]);
        for (int n = 0; n < be; ++n) p = convolve(p, gens[1]);
        for (int n = 0; n < ga; ++n) p = convolve(p, gens[2]);
        P.row(i) = p.transpose();
    }
    return P;
}

}  // namespace

const CycMatrix& pairing_matrix() {
    static const CycMatrix P = build_pairing();
    return P;
}

Cyc pairing(const HElem& h, const fun_f::FElem& u) {
    const CycMatrix& P = pairing_matrix();
    Cyc s;
    for (int i = 0; i < kDim; ++i) {
        if (h(i).is_zero()) continue;
        for (int j = 0; j < fun_f::kDim; ++j)
            if (!u(j).is_zero() && !P(i, j).is_zero()) s += h(i) * P(i, j) * u(j);
    }
    return s;
}

CycMatrix action_on_F_matrix(const HElem& h) {
    const int d = fun_f::kDim;
    CycVector ph = (h.transpose() * pairing_matrix()).transpose();
    CycMatrix m = zeros(d, d);
    for (int f = 0; f < d; ++f)
        for (const auto& [idx, c] : fun_f::hopf().comult[f])
            if (!ph(idx % d).is_zero()) m(idx / d, f) += c * ph(idx % d);
    return m;
}

fun_f::FElem act_on_F(const HElem& h, const fun_f::FElem& u) { return action_on_F_matrix(h) * u; }

namespace {

CycMatrix action_matrix(const HElem& h, bool left) {
    const int n = qplane::kDim, d = fun_f::kDim;
    CycVector ph = (h.transpose() * pairing_matrix()).transpose();
    CycMatrix m = zeros(n, n);
    const Coaction co = left ? fun_f::right_coaction() : fun_f::left_coaction();
    for (int z = 0; z < n; ++z) {
        const CycVector& t = co.image[z];
        if (left) {  // M (x) F
            for (int x = 0; x < n * d; ++x)
                if (!t(x).is_zero() && !ph(x % d).is_zero()) m(x / d, z) += t(x) * ph(x % d);
        } else {  // F (x) M
            for (int x = 0; x < n * d; ++x)
                if (!t(x).is_zero() && !ph(x / n).is_zero()) m(x % n, z) += t(x) * ph(x / n);
        }
    }
    return m;
}

std::vector<CycMatrix> all_actions(bool left) {
    std::vector<CycMatrix> v;
    for (int i = 0; i < kDim; ++i) v.push_back(action_matrix(unit_vector(kDim, i), left));
    return v;
}

CycMatrix combine(const std::vector<CycMatrix>& rho, const HElem& h) {
    CycMatrix m = zeros(static_cast<int>(rho[0].rows()), static_cast<int>(rho[0].cols()));
    for (int i = 0; i < kDim; ++i)
        if (!h(i).is_zero()) m += h(i) * rho[i];
    return m;
}

}  // namespace

ModuleAction left_action_on_M() {
    static const std::vector<CycMatrix> rho = all_actions(true);
    return ModuleAction{rho, false};
}

ModuleAction right_action_on_M() {
    static const std::vector<CycMatrix> rho = all_actions(false);
    return ModuleAction{rho, true};
}

CycMatrix left_action_matrix(const HElem& h) { return combine(left_action_on_M().rho, h); }
CycMatrix right_action_matrix(const HElem& h) { return combine(right_action_on_M().rho, h); }
qplane::MElem act_left_on_M(const HElem& h, const qplane::MElem& z) { return left_action_matrix(h) * z; }
qplane::MElem act_right_on_M(const HElem& h, const qplane::MElem& z) { return right_action_matrix(h) * z; }

HElem generator(const std::string& name) {
    if (name == "X+") return xp();
    if (name == "X-") return xm();
    if (name == "K") return k();
    if (name == "K-") return kinv();
    throw std::invalid_argument("unknown generator " + name);
}

const std::vector<ActionEntry>& action_table() {
    static const std::vector<ActionEntry> t = [] {
        using qplane::mono;
        const Cyc one(1), q = kQ, q2 = kQ2;
        auto Z = [] { return zero_vector(qplane::kDim); };
        // basis: 1, x^2y, xy^2, x, y, x^2y^2, x^2, xy, y^2 as in the printed table
        struct Row {
            int r, s;
            qplane::MElem k, p, m;
        };
        std::vector<Row> left = {
            {0, 0, mono(0, 0), Z(), Z()},
            {2, 1, mono(2, 1, q), mono(0, 0, q2), mono(1, 2, -one)},
            {1, 2, mono(1, 2, q2), mono(2, 1, -one), mono(0, 0, q2)},
            {1, 0, mono(1, 0, q), Z(), mono(0, 1)},
            {0, 1, mono(0, 1, q2), mono(1, 0), Z()},
            {2, 2, mono(2, 2), mono(0, 1, -q), mono(1, 0, -q)},
            {2, 0, mono(2, 0, q2), Z(), mono(1, 1, -q2)},
            {1, 1, mono(1, 1), mono(2, 0, q), mono(0, 2, q)},
            {0, 2, mono(0, 2, q), mono(1, 1, -q2), Z()},
        };
        std::vector<Row> right = {
            {0, 0, mono(0, 0), Z(), Z()},
            {2, 1, mono(2, 1, q), mono(1, 2, -one), mono(0, 0)},
            {1, 2, mono(1, 2, q2), mono(0, 0), mono(2, 1, -one)},
            {1, 0, mono(1, 0, q), mono(0, 1), Z()},
            {0, 1, mono(0, 1, q2), Z(), mono(1, 0)},
            {2, 2, mono(2, 2), mono(1, 0, -one), mono(0, 1, -one)},
            {2, 0, mono(2, 0, q2), mono(1, 1, -one), Z()},
            {1, 1, mono(1, 1), mono(0, 2), mono(2, 0)},
            {0, 2, mono(0, 2, q), Z(), mono(1, 1, -one)},
        };
        std::vector<ActionEntry> out;
        for (char side : {'R', 'L'})
            for (const auto& row : side == 'L' ? left : right) {
                const int b = qplane::index(row.r, row.s);
                out.push_back({side, "K", b, row.k});
                out.push_back({side, "X+", b, row.p});
                out.push_back({side, "X-", b, row.m});
            }
        return out;
    }();
    return t;
}

Structural structural_zero() { return {zeros(3, 3), G4Matrix::Constant(3, 3, Grass4())}; }

Structural structural_identity() {
    Structural s = structural_zero();
    for (int i = 0; i < 3; ++i) {
        s.b1(i, i) = Cyc(1);
        s.b2(i, i) = Grass4(1);
    }
    return s;
}

Structural smul(const Structural& a, const Structural& b) { return {a.b1 * b.b1, matmul(a.b2, b.b2)}; }
Structural sadd(const Structural& a, const Structural& b) { return {a.b1 + b.b1, a.b2 + b.b2}; }

Structural sscale(const Cyc& c, const Structural& a) {
    Structural r = a;
    r.b1 = c * a.b1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.b2(i, j) = Grass4(c) * a.b2(i, j);
    return r;
}

bool operator==(const Structural& a, const Structural& b) { return a.b1 == b.b1 && a.b2 == b.b2; }

Structural elementary_E(int i, int j) {
    Structural s = structural_zero();
    s.b1(i - 1, j - 1) = Cyc(1);
    return s;
}

Structural elementary_F(int i, int j, const Grass4& g) {
    Structural s = structural_zero();
    s.b2(i - 1, j - 1) = g;
    return s;
}

namespace {

std::vector<Structural> build_structural() {
    const Grass4 t1 = Grass4::theta1(), t2 = Grass4::theta2();
    const Grass4 half = Grass4(1) - Grass4(Cyc::frac(1, 2)) * Grass4::theta12();
    Structural P = sadd(sadd(elementary_E(1, 2), elementary_E(2, 3)),
                        sadd(elementary_F(1, 2, half), sadd(elementary_F(2, 3, t1), elementary_F(3, 1, t1))));
    Structural M = sadd(sadd(sscale(Cyc(-1), elementary_E(2, 1)), sscale(Cyc(-1), elementary_E(3, 2))),
                        sadd(elementary_F(2, 1, half), sadd(elementary_F(1, 3, t2), elementary_F(3, 2, -t2))));
    Structural K = structural_zero();
    K.b1(0, 0) = kQ2;
    K.b1(1, 1) = Cyc(1);
    K.b1(2, 2) = kQ;  // q^-2
    K.b2(0, 0) = Grass4(kQ);
    K.b2(1, 1) = Grass4(kQ2);
    K.b2(2, 2) = Grass4(1);
    auto spow = [](const Structural& s, int n) {
        Structural r = structural_identity();
        for (int i = 0; i < n; ++i) r = smul(r, s);
        return r;
    };
    std::vector<Structural> v;
    for (int al = 0; al < 3; ++al)
        for (int be = 0; be < 3; ++be)
            for (int ga = 0; ga < 3; ++ga) v.push_back(smul(spow(P, al), smul(spow(K, be), spow(M, ga))));
    return v;
}

}  // namespace

Structural structural_rep(const HElem& h) {
    static const std::vector<Structural> images = build_structural();
    Structural r = structural_zero();
    for (int i = 0; i < kDim; ++i)
        if (!h(i).is_zero()) r = sadd(r, sscale(h(i), images[i]));
    return r;
}

CycVector structural_coords(const Structural& s) {
    CycVector v = zero_vector(45);
    for (int e = 0; e < 9; ++e) {
        v(e) = s.b1(e / 3, e % 3);
        for (int g = 0; g < 4; ++g) v(9 + 4 * e + g) = s.b2(e / 3, e % 3)[g];
    }
    return v;
}

HElem regular_action(Regular kind, const HElem& x, const HElem& y) {
    switch (kind) {
        case Regular::L: return mul(x, y);
        case Regular::R: return mul(y, x);
        case Regular::Lp: return mul(y, antipode(x));
        case Regular::Rp: return mul(antipode(x), y);
    }
    return y;
}

ModuleAction regular_module(Regular kind) {
    ModuleAction act;
    act.right = kind == Regular::R || kind == Regular::Rp;
    for (int i = 0; i < kDim; ++i) {
        CycMatrix m = zeros(kDim, kDim);
        for (int j = 0; j < kDim; ++j) m.col(j) = regular_action(kind, unit_vector(kDim, i), unit_vector(kDim, j));
        act.rho.push_back(m);
    }
    return act;
}

namespace {

// A word of operators on M: "X+", "X-", "K", "K-" act on the left, "x", "y" multiply.
struct OpTerm {
    Cyc coef;
    std::vector<std::string> word;
};

CycMatrix op_of(const std::string& s) {
    if (s == "x") return left_mult_matrix(qplane::algebra(), qplane::x());
    if (s == "y") return left_mult_matrix(qplane::algebra(), qplane::y());
    return left_action_matrix(generator(s));
}

Rat weight_of(const std::string& s) {
    if (s == "X+") return 1;
    if (s == "X-") return -1;
    if (s == "K" || s == "K-") return 0;
    if (s == "x") return Rat(1, 2);
    return Rat(-1, 2);
}

}  // namespace

Report commutation_with_coordinates() {
    Report rep;
    rep.title = "H^L against coordinate multiplication";
    struct Relation {
        std::string name;
        std::vector<OpTerm> lhs, rhs;
    };
    const Cyc one(1);
    std::vector<Relation> rels = {
        {"X+ x = q x X+", {{one, {"X+", "x"}}}, {{kQ, {"x", "X+"}}}},
        {"X- x = y K^-1 + x X-", {{one, {"X-", "x"}}}, {{one, {"y", "K-"}}, {one, {"x", "X-"}}}},
        {"K x = q x K", {{one, {"K", "x"}}}, {{kQ, {"x", "K"}}}},
        {"X+ y = x + q^2 y X+", {{one, {"X+", "y"}}}, {{one, {"x"}}, {kQ2, {"y", "X+"}}}},
        {"X- y = y X-", {{one, {"X-", "y"}}}, {{one, {"y", "X-"}}}},
        {"K y = q^2 y K", {{one, {"K", "y"}}}, {{kQ2, {"y", "K"}}}},
    };
    bool weights = true;
    for (const auto& r : rels) {
        auto eval = [](const std::vector<OpTerm>& ts) {
            CycMatrix m = zeros(qplane::kDim, qplane::kDim);
            for (const auto& t : ts) {
                CycMatrix w = identity(qplane::kDim);
                for (const auto& s : t.word) w = w * op_of(s);
                m += t.coef * w;
            }
            return m;
        };
        rep.add(r.name + " as 9x9 operators", eval(r.lhs) == eval(r.rhs));
        std::vector<Rat> ws;
        for (const auto* side : {&r.lhs, &r.rhs})
            for (const auto& t : *side) {
                Rat w = 0;
                for (const auto& s : t.word) w += weight_of(s);
                ws.push_back(w);
            }
        for (const auto& w : ws) weights = weights && w == ws[0];
    }
    rep.add("relations are homogeneous for weights X+ 1, K 0, X- -1, x 1/2, y -1/2", weights);
    return rep;
}

namespace {

std::string hl(int i) { return algebra().labels[i]; }

}  // namespace

Report verify() {
    Report rep;
    rep.title = "quantum group H";
    const AlgebraTable& A = algebra();
    HElem P = xp(), M = xm(), K = k(), K2 = kinv(), I = one();
    rep.add("K X+ = q^2 X+ K", mul(K, P) == kQ2 * mul(P, K));
    rep.add("K X- = q^-2 X- K", mul(K, M) == kQ * mul(M, K));
    rep.add("[X+, X-] = (K - K^-1)/(q - q^-1)", mul(P, M) - mul(M, P) == (kQ - kQ2).inv() * (K - K2));
    rep.add("K^3 = 1, X+^3 = X-^3 = 0", pow(K, 3) == I && is_zero(pow(P, 3)) && is_zero(pow(M, 3)));
    rep.merge(check_hopf(hopf()), "H: ");
    rep.add("Delta X- = X-(x)K^-1 + 1(x)X-", coproduct(M) == tensor_elem(M, K2) + tensor_elem(I, M));
    rep.add("S X+ = -K^-1 X+, S X- = -X- K, S K = K^-1",
            antipode(P) == -mul(K2, P) && antipode(M) == -mul(M, K) && antipode(K) == K2);
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < kDim && ok; ++i) {
            HElem e = unit_vector(kDim, i);
            if (antipode(antipode(e)) != mul(mul(K2, e), K)) {
                ok = false;
                w = hl(i);
            }
        }
        rep.add("S^2 u = K^-1 u K", ok, w);
    }
    {
        HElem C = casimir();
        bool central = true;
        for (int i = 0; i < kDim; ++i) central = central && mul(C, A.basis(i)) == mul(A.basis(i), C);
        rep.add("Casimir is central", central);
        Structural s = structural_rep(C);
        bool b1 = s.b1 == CycMatrix(Cyc::frac(-2, 3) * identity(3));
        Grass4 t12 = Grass4::theta12(), third(Cyc::frac(1, 3));
        bool b2 = s.b2(0, 0) == third - t12 && s.b2(1, 1) == third - t12 && s.b2(2, 2) == third + t12;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (r != c) b2 = b2 && s.b2(r, c).is_zero();
        rep.add("structural Casimir: block1 = -2/3, block2 = diag(1/3 - t1t2, 1/3 - t1t2, 1/3 + t1t2)", b1 && b2);
    }

    // pairing
    {
        using namespace fun_f;
        rep.add("pairing generator table",
                pairing(K, a()) == kQ && pairing(K, b()).is_zero() && pairing(K, c()).is_zero() &&
                    pairing(K, d()) == kQ2 && pairing(P, a()).is_zero() && pairing(P, b()).is_one() &&
                    pairing(P, c()).is_zero() && pairing(P, d()).is_zero() && pairing(M, a()).is_zero() &&
                    pairing(M, b()).is_zero() && pairing(M, c()).is_one() && pairing(M, d()).is_zero());
        rep.add("pairing matrix has rank 27", rank(pairing_matrix()) == kDim);
        bool unit = true;
        for (int j = 0; j < fun_f::kDim; ++j) {
            FElem u = unit_vector(fun_f::kDim, j);
            unit = unit && pairing(I, u) == fun_f::counit(u);
        }
        for (int i = 0; i < kDim; ++i) unit = unit && pairing(A.basis(i), fun_f::one()) == counit(A.basis(i));
        rep.add("<1, u> = eps(u) and <h, 1> = eps(h)", unit);
        const CycMatrix& Pm = pairing_matrix();
        bool prod = true, cop = true;
        std::string w1, w2;
        const HopfDescriptor& Fh = fun_f::hopf();
        for (int g = 0; g < kDim && prod; ++g)
            for (int h = 0; h < kDim && prod; ++h) {
                for (int f = 0; f < fun_f::kDim && prod; ++f) {
                    Cyc lhs, rhs;
                    for (const auto& [idx, c] : A.product(g, h)) lhs += c * Pm(idx, f);
                    for (const auto& [idx, c] : Fh.comult[f]) rhs += c * Pm(g, idx / fun_f::kDim) * Pm(h, idx % fun_f::kDim);
                    if (lhs != rhs) {
                        prod = false;
                        w1 = "<" + hl(g) + "*" + hl(h) + ", " + fun_f::algebra().labels[f] + ">";
                    }
                }
            }
        for (int h = 0; h < kDim && cop; ++h)
            for (int u = 0; u < fun_f::kDim && cop; ++u)
                for (int v = 0; v < fun_f::kDim && cop; ++v) {
                    Cyc lhs;
                    for (const auto& [idx, c] : hopf().comult[h]) lhs += c * Pm(idx / kDim, u) * Pm(idx % kDim, v);
                    Cyc rhs;
                    for (const auto& [idx, c] : fun_f::algebra().product(u, v)) rhs += c * Pm(h, idx);
                    if (lhs != rhs) {
                        cop = false;
                        w2 = hl(h);
                    }
                }
        rep.add("<gh, u> = <g (x) h, Delta u> (all basis triples)", prod, w1);
        rep.add("<Delta h, u (x) v> = <h, uv> (all basis triples)", cop, w2);
    }

    // action on F
    {
        using namespace fun_f;
        FElem Fa = a(), Fb = b(), Fc = c(), Fd = d();
        bool table = is_zero(act_on_F(P, Fa)) && act_on_F(P, Fb) == Fa && act_on_F(M, Fa) == Fb &&
                is_zero(act_on_F(M, Fb)) && act_on_F(K, Fa) == kQ * Fa && act_on_F(K, Fb) == kQ2 * Fb &&
                is_zero(act_on_F(P, Fc)) && act_on_F(P, Fd) == Fc && act_on_F(M, Fc) == Fd &&
                is_zero(act_on_F(M, Fd)) && act_on_F(K, Fc) == kQ * Fc && act_on_F(K, Fd) == kQ2 * Fd;
        rep.add("generator action on a, b, c, d", table);
        ModuleAction onF;
        for (int i = 0; i < kDim; ++i) onF.rho.push_back(action_on_F_matrix(A.basis(i)));
        rep.merge(check_module(hopf(), onF), "H on F: ");
        rep.merge(check_module_algebra(hopf(), onF, fun_f::algebra()), "H on F: ");
        bool inv = true;
        const int d = fun_f::kDim;
        for (const HElem& g : {P, M, K}) {
            CycMatrix act = action_on_F_matrix(g);
            for (int u = 0; u < d; ++u) {
                CycVector lhs = fun_f::coproduct(act.col(u));
                CycVector rhs = zero_vector(d * d);
                for (const auto& [idx, c] : fun_f::hopf().comult[u])
                    rhs += c * tensor_elem(unit_vector(d, idx / d), act.col(idx % d));
                inv = inv && lhs == rhs;
            }
        }
        rep.add("Delta o h[.] = (id (x) h[.]) o Delta", inv);
    }

    // actions on M
    {
        bool tab = true;
        std::string w;
        for (const auto& e : action_table()) {
            HElem g = generator(e.gen);
            qplane::MElem z = unit_vector(qplane::kDim, e.basis);
            qplane::MElem got = e.side == 'L' ? act_left_on_M(g, z) : act_right_on_M(g, z);
            if (got != e.expected) {
                tab = false;
                w = std::string(1, e.side) + " " + e.gen + "[" + qplane::algebra().labels[e.basis] + "]";
            }
        }
        rep.add("Table of H acting on M (54 entries)", tab, w);
        rep.merge(check_module(hopf(), left_action_on_M()), "H^L on M: ");
        rep.merge(check_module_algebra(hopf(), left_action_on_M(), qplane::algebra()), "H^L on M: ");
        rep.merge(check_module(hopf(), right_action_on_M()), "H^R on M: ");
        rep.merge(check_module_algebra(hopf(), right_action_on_M(), qplane::algebra()), "H^R on M: ");
        rep.merge(commutation_with_coordinates());
    }

    // stars
    {
        bool inv = true, anti = true, cop = true, ss = true, dual = true, cov = true;
        std::string w;
        for (int i = 0; i < kDim; ++i) {
            HElem e = A.basis(i);
            inv = inv && star(star(e)) == e && star(kQ * e) == kQ2 * star(e);
            for (int j = 0; j < kDim && anti; ++j) anti = star(mul(e, A.basis(j))) == mul(star(A.basis(j)), star(e));
            CycVector de = coproduct(e), ds = zero_vector(kDim * kDim);
            for (int x = 0; x < kDim * kDim; ++x)
                if (!de(x).is_zero())
                    ds += de(x).conj() * tensor_elem(star(A.basis(x / kDim)), star(A.basis(x % kDim)));
            cop = cop && coproduct(star(e)) == ds;
            ss = ss && antipode(star(antipode(star(e)))) == e;
            for (int f = 0; f < fun_f::kDim; ++f) {
                fun_f::FElem u = unit_vector(fun_f::kDim, f);
                if (pairing(star(e), u) != pairing(e, fun_f::star(fun_f::antipode(u))).conj()) {
                    dual = false;
                    w = "<" + hl(i) + "*, " + fun_f::algebra().labels[f] + ">";
                }
            }
        }
        for (const HElem& g : {P, M, K}) {
            CycMatrix L = left_action_matrix(g), Ls = left_action_matrix(star(antipode(g)));
            for (int z = 0; z < qplane::kDim; ++z) {
                qplane::MElem e = unit_vector(qplane::kDim, z);
                cov = cov && L * qplane::star(e) == qplane::star(Ls * e);
            }
        }
        rep.add("X+* = -q^2 X+, X-* = -q X-, K* = K", star(P) == -kQ2 * P && star(M) == -kQ * M && star(K) == K);
        rep.add("star is an antilinear involution", inv);
        rep.add("star is antimultiplicative", anti);
        rep.add("Delta(h*) = (Delta h)*", cop);
        rep.add("S * S * = id", ss);
        rep.add("<h*, u> = conj <h, (Su)*>", dual, w);
        rep.add("h(z*) = [(Sh)* z]* on M", cov);
    }

    // structural realization
    {
        bool morph = true;
        std::string w;
        for (int i = 0; i < kDim && morph; ++i)
            for (int j = 0; j < kDim && morph; ++j)
                if (!(structural_rep(to_dense(A.product(i, j), kDim)) ==
                      smul(structural_rep(A.basis(i)), structural_rep(A.basis(j))))) {
                    morph = false;
                    w = hl(i) + "*" + hl(j);
                }
        rep.add("structural realization is multiplicative (27^2 pairs)", morph, w);
        CycMatrix coords = zeros(45, kDim);
        for (int i = 0; i < kDim; ++i) coords.col(i) = structural_coords(structural_rep(A.basis(i)));
        rep.add("structural realization is injective (rank 27)", rank(coords) == kDim);
        bool parity = true;
        for (int i = 0; i < kDim; ++i) {
            Structural s = structural_rep(A.basis(i));
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    bool offblock = (r == 2) != (c == 2);
                    parity = parity && (offblock ? s.b2(r, c).is_odd() : s.b2(r, c).is_even());
                }
        }
        rep.add("block2 has the even/odd parity pattern", parity);
    }

    // regular actions
    {
        const Regular kinds[4] = {Regular::L, Regular::R, Regular::Lp, Regular::Rp};
        const char* names[4] = {"L", "R", "L'", "R'"};
        for (int n = 0; n < 4; ++n) {
            ModuleAction act = regular_module(kinds[n]);
            Report m = check_module(hopf(), act);
            rep.add(std::string("regular action ") + names[n] + " is a " + (act.right ? "right" : "left") + " module",
                    m.ok());
            Report ma = check_module_algebra(hopf(), act, algebra());
            std::string wit = ma.checks.empty() ? "" : ma.checks[0].witness;
            rep.add(std::string("regular action ") + names[n] + " is not a module algebra", !ma.ok() && !wit.empty(),
                    wit);
        }
        rep.add("R[X+] K = q^2 X+ K", regular_action(Regular::R, P, K) == kQ2 * mul(P, K));
        rep.add("L'[X+] K = -X+", regular_action(Regular::Lp, P, K) == -P);
    }
    return rep;
}

}  // namespace qroot3::env_h
