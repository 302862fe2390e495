#include "qroot3/qplane.hpp"

#include <stdexcept>

namespace qroot3::qplane {

namespace {

std::string mono_label(int r, int s) {
    std::string out;
    if (r) out += r == 1 ? "x" : "x^2";
    if (s) out += std::string(out.empty() ? "" : "*") + (s == 1 ? "y" : "y^2");
    return out.empty() ? "1" : out;
}

AlgebraTable build() {
    AlgebraTable a;
    a.name = "M";
    a.dim = kDim;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) a.labels.push_back(mono_label(r, s));
    a.mult.resize(kDim * kDim);
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t)
                for (int u = 0; u < 3; ++u)
                    // y^s x^t = q^(2st) x^t y^s
                    a.mult[index(r, s) * kDim + index(t, u)] = {{index(r + t, s + u), Cyc::qpow(2 * s * t)}};
    a.unit = unit_vector(kDim, 0);
    return a;
}

}  // namespace

const AlgebraTable& algebra() {
    static const AlgebraTable table = build();
    return table;
}

MElem mono(int r, int s, const Cyc& c) {
    MElem z = zero_vector(kDim);
    z(index(r, s)) = c;
    return z;
}

MElem one() { return mono(0, 0); }
MElem x() { return mono(1, 0); }
MElem y() { return mono(0, 1); }
MElem mul(const MElem& a, const MElem& b) { return multiply(algebra(), a, b); }
MElem pow(const MElem& a, int k) { return power(algebra(), a, k); }

CycMatrix x_matrix() {
    CycMatrix m = zeros(3, 3);
    m(0, 0) = Cyc(1);
    m(1, 1) = Cyc::q2();  // q^-1
    m(2, 2) = Cyc::q();   // q^-2
    return m;
}

CycMatrix y_matrix() {
    CycMatrix m = zeros(3, 3);
    m(0, 1) = Cyc(1);
    m(1, 2) = Cyc(1);
    m(2, 0) = Cyc(1);
    return m;
}

CycMatrix elementary(int i, int j) {
    CycMatrix m = zeros(3, 3);
    m(i - 1, j - 1) = Cyc(1);
    return m;
}

MElem elementary_expansion(int i, int j) {
    // E_ij = (1/3) sum_r q^(r(i-1)) x^r y^(j-i)
    MElem z = zero_vector(kDim);
    const int s = ((j - i) % 3 + 3) % 3;
    for (int r = 0; r < 3; ++r) z(index(r, s)) = Cyc::qpow(r * (i - 1)) * Cyc::frac(1, 3);
    return z;
}

CycMatrix to_matrix(const MElem& z) {
    CycMatrix X = x_matrix(), Y = y_matrix();
    CycMatrix out = zeros(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            const Cyc& c = z(index(r, s));
            if (c.is_zero()) continue;
            out += c * (matpow(X, r) * matpow(Y, s));
        }
    return out;
}

MElem from_matrix(const CycMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw std::invalid_argument("from_matrix: expected a 3x3 matrix");
    MElem z = zero_vector(kDim);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (!m(i - 1, j - 1).is_zero()) z += m(i - 1, j - 1) * elementary_expansion(i, j);
    return z;
}

namespace {

MElem combo(std::initializer_list<std::tuple<int, int, Cyc>> terms, const Cyc& scale) {
    MElem z = zero_vector(kDim);
    for (const auto& [r, s, c] : terms) z(index(r, s)) += c * scale;
    return z;
}

}  // namespace

GellMann gell_mann(int i) {
    const Cyc q = Cyc::q(), q2 = Cyc::q2(), one(1), third = Cyc::frac(1, 3);
    const Cyc si = Cyc::sqrt_m3();  // sqrt(3) i
    switch (i) {
        case 1:
            return {combo({{0, 1, one}, {1, 1, one}, {0, 2, one}, {2, 1, one}, {1, 2, q}, {2, 2, q2}}, third), false};
        case 2:
            return {combo({{0, 1, one}, {1, 1, one}, {0, 2, -one}, {2, 1, one}, {1, 2, -q}, {2, 2, -q2}}, -si * third),
                    true};
        case 3:
            return {combo({{1, 0, one - q}, {2, 0, one - q2}}, third), false};
        case 4:
            return {combo({{0, 1, one}, {1, 1, q2}, {0, 2, one}, {2, 1, q}, {1, 2, one}, {2, 2, one}}, third), false};
        case 5:
            return {combo({{0, 1, one}, {1, 1, q2}, {0, 2, -one}, {2, 1, q}, {1, 2, -one}, {2, 2, -one}}, si * third),
                    true};
        case 6:
            return {combo({{0, 1, one}, {1, 1, q}, {0, 2, one}, {2, 1, q2}, {1, 2, q2}, {2, 2, q}}, third), false};
        case 7:
            return {combo({{0, 1, one}, {1, 1, q}, {0, 2, -one}, {2, 1, q2}, {1, 2, -q2}, {2, 2, -q}}, -si * third),
                    true};
        case 8:
            return {combo({{1, 0, q2}, {2, 0, q}}, -one), true};
        default:
            throw std::out_of_range("gell_mann: index must be in 1..8");
    }
}

CycMatrix classical_gell_mann(int i) {
    const Cyc si = Cyc::sqrt_m3();
    auto E = [](int a, int b) { return elementary(a, b); };
    switch (i) {
        case 1: return E(1, 2) + E(2, 1);
        case 2: return -si * E(1, 2) + si * E(2, 1);
        case 3: return E(1, 1) - E(2, 2);
        case 4: return E(1, 3) + E(3, 1);
        case 5: return -si * E(1, 3) + si * E(3, 1);
        case 6: return E(2, 3) + E(3, 2);
        case 7: return -si * E(2, 3) + si * E(3, 2);
        case 8: return E(1, 1) + E(2, 2) - Cyc(2) * E(3, 3);
        default: throw std::out_of_range("classical_gell_mann: index must be in 1..8");
    }
}

CycMatrix charge_conjugation() {
    CycMatrix c = zeros(3, 3);
    c(0, 0) = Cyc(1);
    c(1, 2) = Cyc(1);
    c(2, 1) = Cyc(1);
    return c;
}

MElem star(const MElem& z) {
    MElem out = zero_vector(kDim);
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            // (x^r y^s)* = y^s x^r = q^(2rs) x^r y^s
            out(index(r, s)) = z(index(r, s)).conj() * Cyc::qpow(2 * r * s);
    return out;
}

CycMatrix star_matrix(const CycMatrix& m) {
    CycMatrix c = charge_conjugation();
    return adjoint(CycMatrix(c * m * c));  // C is its own inverse
}

std::vector<MElem> real_basis() {
    const Cyc q = Cyc::q(), q2 = Cyc::q2();
    return {mono(0, 0), mono(1, 0), mono(0, 1), mono(2, 0), mono(1, 1, q), mono(0, 2), mono(2, 1, q2),
            mono(1, 2, q2), mono(2, 2, q)};
}

namespace {

int grade(int idx) { return (idx / 3 + idx % 3) % 3; }  // 2: irr, 1: eve, 0: odd

}  // namespace

Split decompose(const MElem& z) {
    Split s{zero_vector(kDim), zero_vector(kDim), zero_vector(kDim)};
    for (int i = 0; i < kDim; ++i) {
        int g = grade(i);
        (g == 2 ? s.irr : g == 1 ? s.eve : s.odd)(i) = z(i);
    }
    return s;
}

bool in_irr(const MElem& z) { return is_zero(CycVector(z - decompose(z).irr)); }
bool in_eve(const MElem& z) { return is_zero(CycVector(z - decompose(z).eve)); }
bool in_odd(const MElem& z) { return is_zero(CycVector(z - decompose(z).odd)); }

Sector sector(const MElem& z) {
    if (is_zero(z)) return Sector::Zero;
    if (in_irr(z)) return Sector::Irr;
    if (in_eve(z)) return Sector::Eve;
    if (in_odd(z)) return Sector::Odd;
    return Sector::Mixed;
}

Cyc D3(const Cyc& a, const Cyc& b, const Cyc& c) { return a * a * a + b * b * b + c * c * c - Cyc(3) * a * b * c; }
Cyc T3(const Cyc& a, const Cyc& b, const Cyc& c) { return a * a - b * c; }

MElem invert(const MElem& z) {
    const Cyc q = Cyc::q(), q2 = Cyc::q2();
    auto closed = [&](const Cyc& a, const Cyc& b, const Cyc& c, const MElem& e0, const MElem& e1, const MElem& e2) {
        Cyc d = D3(a, b, c);
        if (d.is_zero()) throw std::domain_error("invert: element is not invertible (D = 0)");
        Cyc di = d.inv();
        return MElem(di * (T3(a, b, c) * e0 + T3(c, a, b) * e1 + T3(b, c, a) * e2));
    };
    switch (sector(z)) {
        case Sector::Odd: {
            // z = a00 1 + a12 q^2 xy^2 + a21 q^2 x^2y
            Cyc a00 = z(index(0, 0)), a12 = z(index(1, 2)) * q, a21 = z(index(2, 1)) * q;
            return closed(a00, a12, a21, mono(0, 0), mono(1, 2, q2), mono(2, 1, q2));
        }
        case Sector::Eve: {
            // z = a10 x + a01 y + a22 q x^2y^2, inverse in irr
            Cyc a10 = z(index(1, 0)), a01 = z(index(0, 1)), a22 = z(index(2, 2)) * q2;
            return closed(a10, a01, a22, mono(2, 0), mono(1, 1, q), mono(0, 2));
        }
        case Sector::Irr: {
            // z = a20 x^2 + a11 q xy + a02 y^2, inverse in eve
            Cyc a20 = z(index(2, 0)), a11 = z(index(1, 1)) * q2, a02 = z(index(0, 2));
            return closed(a20, a11, a02, mono(1, 0), mono(0, 1), mono(2, 2, q));
        }
        default: {
            auto inv = inverse(to_matrix(z));
            if (!inv) throw std::domain_error("invert: singular element");
            return from_matrix(*inv);
        }
    }
}

TriadicSeries triadic(int order) {
    if (order < 1) throw std::invalid_argument("triadic: order must be >= 1");
    TriadicSeries s;
    s.order = order;
    s.c0.assign(order + 1, Rat(0));
    s.c1.assign(order + 1, Rat(0));
    s.c2.assign(order + 1, Rat(0));
    Rat fact = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        Rat v = Rat(1) / fact;
        if (k % 3 == 0) s.c0[k] = v;
        if (k % 3 == 2) s.c1[k] = v;
        if (k % 3 == 1) s.c2[k] = v;
    }
    return s;
}

std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size() && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Rat> triadic_D(const TriadicSeries& s) {
    auto cube = [](const std::vector<Rat>& a) { return series_mul(series_mul(a, a), a); };
    std::vector<Rat> a = cube(s.c0), b = cube(s.c1), c = cube(s.c2), p = series_mul(series_mul(s.c0, s.c1), s.c2);
    std::vector<Rat> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i] + c[i] - 3 * p[i];
    return r;
}

ISeries iseries_mul(const ISeries& a, const ISeries& b) {
    const size_t n = a.re.size();
    ISeries r{std::vector<MElem>(n, zero_vector(kDim)), std::vector<MElem>(n, zero_vector(kDim))};
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) {
            // (A + iB)(C + iD) = AC - BD + i(AD + BC)
            r.re[i + j] += mul(a.re[i], b.re[j]) - mul(a.im[i], b.im[j]);
            r.im[i + j] += mul(a.re[i], b.im[j]) + mul(a.im[i], b.re[j]);
        }
    return r;
}

ISeries iseries_star(const ISeries& a) {
    ISeries r = a;
    for (size_t i = 0; i < a.re.size(); ++i) {
        r.re[i] = star(a.re[i]);
        r.im[i] = -star(a.im[i]);
    }
    return r;
}

namespace {

// Adds c * i^k t^k * z into the series.
void add_ik(ISeries& s, int k, const Rat& c, const MElem& z) {
    if (sgn(c) == 0) return;
    switch (k % 4) {
        case 0: s.re[k] += Cyc(c) * z; break;
        case 1: s.im[k] += Cyc(c) * z; break;
        case 2: s.re[k] -= Cyc(c) * z; break;
        default: s.im[k] -= Cyc(c) * z; break;
    }
}

ISeries empty_series(int order) {
    return {std::vector<MElem>(order + 1, zero_vector(kDim)), std::vector<MElem>(order + 1, zero_vector(kDim))};
}

}  // namespace

ISeries exp_series(const MElem& w, int order) {
    ISeries s = empty_series(order);
    MElem wk = one();
    Rat fact = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            fact *= k;
            wk = mul(wk, w);
        }
        add_ik(s, k, Rat(1) / fact, wk);
    }
    return s;
}

ISeries triadic_unitary(const TriadicSeries& ts, const MElem& w, const MElem& w2) {
    ISeries s = empty_series(ts.order);
    for (int k = 0; k <= ts.order; ++k) {
        add_ik(s, k, ts.c0[k], one());
        add_ik(s, k, ts.c2[k], w);
        add_ik(s, k, ts.c1[k], w2);
    }
    return s;
}

bool is_one(const ISeries& s) {
    for (size_t k = 0; k < s.re.size(); ++k) {
        if (!is_zero(s.im[k])) return false;
        if (s.re[k] != (k == 0 ? one() : zero_vector(kDim))) return false;
    }
    return true;
}

bool equal(const ISeries& a, const ISeries& b) { return a.re == b.re && a.im == b.im; }

Report triadic_report(int order) {
    Report rep;
    rep.title = "triadic functions";
    TriadicSeries ts = triadic(order);
    std::vector<Rat> d = triadic_D(ts);
    bool dOne = d[0] == 1;
    for (int k = 1; k <= order; ++k) dOne = dOne && sgn(d[k]) == 0;
    rep.add("D(C0,C1,C2) = 1 through order " + std::to_string(order), dOne);
    bool deriv = true;
    for (int k = 0; k < order; ++k) {
        deriv = deriv && ts.c1[k] == ts.c0[k + 1] * (k + 1);
        deriv = deriv && ts.c2[k] == ts.c1[k + 1] * (k + 1);
    }
    rep.add("C1 = C0' and C2 = C1'", deriv);

    const Cyc q2 = Cyc::q2();
    MElem w1 = mono(1, 2, q2), w2 = mono(2, 1, q2);
    rep.add("q^2 x y^2 and q^2 x^2 y are star-fixed", star(w1) == w1 && star(w2) == w2);
    rep.add("(q^2 x y^2)^2 = q^2 x^2 y", mul(w1, w1) == w2);
    ISeries u0 = exp_series(one(), order);
    ISeries u1 = triadic_unitary(ts, w1, w2);
    ISeries u2 = triadic_unitary(ts, w2, w1);
    rep.add("u0 u0* = 1", is_one(iseries_mul(u0, iseries_star(u0))));
    rep.add("u1 = exp(i t q^2 x y^2) in triadic form", equal(u1, exp_series(w1, order)));
    rep.add("u2 = exp(i t q^2 x^2 y) in triadic form", equal(u2, exp_series(w2, order)));
    rep.add("u1 u1* = 1", is_one(iseries_mul(u1, iseries_star(u1))));
    rep.add("u2 u2* = 1", is_one(iseries_mul(u2, iseries_star(u2))));
    rep.add("u1 u2 = u2 u1", equal(iseries_mul(u1, u2), iseries_mul(u2, u1)));
    return rep;
}

Report verify() {
    Report rep;
    rep.title = "reduced quantum plane M";
    const AlgebraTable& A = algebra();
    bool ok = true;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            MElem p = to_dense(A.product(i, j), kDim);
            ok = ok && to_matrix(p) == CycMatrix(to_matrix(A.basis(i)) * to_matrix(A.basis(j)));
        }
    rep.add("products agree with 3x3 matrices (81 pairs)", ok);
    rep.add("xy = q yx", mul(x(), y()) == Cyc::q() * mul(y(), x()));
    rep.add("x^3 = y^3 = 1", pow(x(), 3) == one() && pow(y(), 3) == one());
    ok = true;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) ok = ok && to_matrix(elementary_expansion(i, j)) == elementary(i, j);
    rep.add("elementary matrices expand as stated", ok);
    ok = true;
    for (int i = 0; i < kDim; ++i) ok = ok && from_matrix(to_matrix(A.basis(i))) == A.basis(i);
    rep.add("from_matrix o to_matrix = id", ok);
    ok = true;
    for (int i = 1; i <= 8; ++i) ok = ok && to_matrix(gell_mann(i).elem) == classical_gell_mann(i);
    rep.add("Gell-Mann expansions match classical matrices", ok);
    ok = true;
    for (int i = 0; i < kDim; ++i) {
        MElem e = A.basis(i);
        ok = ok && star(star(e)) == e && to_matrix(star(e)) == star_matrix(to_matrix(e));
        for (int j = 0; j < kDim; ++j) ok = ok && star(mul(e, A.basis(j))) == mul(star(A.basis(j)), star(e));
    }
    rep.add("star involutive, antimultiplicative, equals (C m C^-1)^dagger", ok);
    ok = true;
    for (const auto& b : real_basis()) ok = ok && star(b) == b;
    CycMatrix rb(kDim, kDim);
    for (int i = 0; i < kDim; ++i) rb.col(i) = real_basis()[i];
    rep.add("real basis is star-fixed and spans M", ok && rank(rb) == kDim);
    ok = true;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            MElem a = A.basis(i), b = A.basis(j), p = mul(a, b);
            Sector si = sector(a), sj = sector(b);
            if (si == Sector::Odd && sj == Sector::Odd) ok = ok && in_odd(p);
            if (si == Sector::Eve && sj == Sector::Eve) ok = ok && in_irr(p);
            if (si == Sector::Irr && sj == Sector::Irr) ok = ok && in_eve(p);
        }
    rep.add("odd.odd in odd, eve.eve in irr, irr.irr in eve", ok);
    rep.merge(triadic_report(12));
    return rep;
}

}  // namespace qroot3::qplane
