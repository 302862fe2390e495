#include "qroot3/repmod.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qroot3::repmod {

namespace {

const Cyc kQ = Cyc::q();
const Cyc kQ2 = Cyc::q2();
const Cyc kS = Cyc::sqrt_m3();  // i sqrt(3)

CycMatrix entries(int n, std::initializer_list<std::tuple<int, int, Cyc>> es) {
    CycMatrix m = zeros(n, n);
    for (const auto& [r, c, v] : es) m(r, c) = v;
    return m;
}

CycMatrix diag(std::initializer_list<Cyc> d) {
    CycMatrix m = zeros(static_cast<int>(d.size()), static_cast<int>(d.size()));
    int i = 0;
    for (const auto& v : d) m(i, i) = v, ++i;
    return m;
}

HRep make(const std::string& name, CycMatrix xp, CycMatrix xm, CycMatrix k, std::vector<Cyc> params = {}) {
    HRep r;
    r.name = name;
    r.dim = static_cast<int>(k.rows());
    r.Xp = std::move(xp);
    r.Xm = std::move(xm);
    r.K = std::move(k);
    r.params = std::move(params);
    return r;
}

// rational coordinates of a matrix over Q(q)
CycVector flatten(const CycMatrix& m) {
    CycVector v = zero_vector(static_cast<int>(2 * m.size()));
    int k = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            v(k++) = Cyc(m(i, j).r0());
            v(k++) = Cyc(m(i, j).r1());
        }
    return v;
}

CycMatrix unflatten(const CycVector& v, int n) {
    CycMatrix m = zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = Cyc(v(2 * (i * n + j)).r0(), v(2 * (i * n + j) + 1).r0());
    return m;
}

}  // namespace

const std::vector<std::string>& catalogue() {
    static const std::vector<std::string> c = {"1", "2_eve", "3_irr", "3_eve", "3_odd", "4_eve", "5_odd", "6_eve", "6_odd"};
    return c;
}

bool needs_params(const std::string& name) { return name == "3_eve" || name == "3_odd"; }

std::vector<Cyc> default_params() { return {Cyc(1), Cyc(2)}; }

HRep builtin_rep(const std::string& name, const std::vector<Cyc>& params) {
    const Cyc one(1), h = Cyc::frac(1, 2);
    if (needs_params(name) && params.size() != 2)
        throw std::invalid_argument(name + " needs two parameters l1, l2");
    if (!needs_params(name) && !params.empty()) throw std::invalid_argument(name + " takes no parameters");
    if (name == "1") return make(name, zeros(1, 1), zeros(1, 1), identity(1));
    if (name == "2_eve") return make(name, entries(2, {{0, 1, one}}), entries(2, {{1, 0, one}}), diag({kQ, kQ2}));
    if (name == "3_irr")
        return make(name, entries(3, {{0, 1, one}, {1, 2, one}}), entries(3, {{1, 0, -one}, {2, 1, -one}}),
                    diag({kQ2, one, kQ}));
    if (name == "3_odd") {
        const Cyc& l1 = params[0];
        const Cyc& l2 = params[1];
        return make(name, entries(3, {{0, 1, one}, {2, 0, l2}}), entries(3, {{1, 0, one}, {2, 1, l1}}),
                    diag({kQ, kQ2, one}), params);
    }
    if (name == "3_eve") {
        const Cyc& l1 = params[0];
        const Cyc& l2 = params[1];
        return make(name, entries(3, {{0, 1, one}, {1, 2, l2}}), entries(3, {{0, 2, -l1}, {1, 0, one}}),
                    diag({kQ, kQ2, one}), params);
    }
    if (name == "4_eve")
        return make(name, entries(4, {{0, 1, one}, {1, 3, one}}), entries(4, {{0, 2, -one}, {1, 0, one}}),
                    diag({kQ, kQ2, one, one}));
    if (name == "5_odd")
        return make(name, entries(5, {{0, 2, one}, {1, 3, one}, {4, 1, one}}),
                    entries(5, {{2, 0, one}, {3, 1, one}, {4, 2, one}}), diag({kQ, kQ, kQ2, kQ2, one}));
    if (name == "6_eve")
        return make(name, entries(6, {{0, 2, one}, {1, 2, -h}, {1, 3, one}, {3, 5, one}, {4, 0, one}}),
                    entries(6, {{1, 4, -one}, {2, 0, one}, {3, 0, -h}, {3, 1, one}, {5, 2, -one}}),
                    diag({kQ, kQ, kQ2, kQ2, one, one}));
    if (name == "6_odd")
        return make(name, entries(6, {{0, 2, one}, {1, 3, one}, {2, 4, one}, {5, 1, one}}),
                    entries(6, {{1, 4, one}, {2, 0, one}, {3, 1, one}, {5, 2, one}}),
                    diag({kQ, kQ, kQ2, kQ2, one, one}));
    throw std::invalid_argument("unknown representation " + name);
}

Report check_relations(const HRep& r) {
    Report rep;
    rep.title = "H relations on " + r.name;
    const int n = r.dim;
    CycMatrix Kinv = r.K * r.K;
    rep.add("K X+ = q^2 X+ K", r.K * r.Xp == kQ2 * (r.Xp * r.K));
    rep.add("K X- = q^-2 X- K", r.K * r.Xm == kQ * (r.Xm * r.K));
    rep.add("[X+, X-] = (K - K^-1)/(q - q^-1)",
            CycMatrix(r.Xp * r.Xm - r.Xm * r.Xp) == CycMatrix((kQ - kQ2).inv() * (r.K - Kinv)));
    rep.add("K^3 = 1", matpow(r.K, 3) == identity(n));
    rep.add("X+^3 = X-^3 = 0", is_zero(matpow(r.Xp, 3)) && is_zero(matpow(r.Xm, 3)));
    return rep;
}

namespace {

std::vector<CycMatrix> basis_images(const HRep& r) {
    CycMatrix P[3] = {identity(r.dim), r.Xp, matmul(r.Xp, r.Xp)};
    CycMatrix Kp[3] = {identity(r.dim), r.K, matmul(r.K, r.K)};
    CycMatrix M[3] = {identity(r.dim), r.Xm, matmul(r.Xm, r.Xm)};
    std::vector<CycMatrix> out;
    for (int i = 0; i < env_h::kDim; ++i) out.push_back(matmul(P[i / 9], matmul(Kp[i / 3 % 3], M[i % 3])));
    return out;
}

CycMatrix combine(const std::vector<CycMatrix>& imgs, const env_h::HElem& h) {
    CycMatrix m = zeros(static_cast<int>(imgs[0].rows()), static_cast<int>(imgs[0].cols()));
    for (int i = 0; i < env_h::kDim; ++i)
        if (!h(i).is_zero()) m += h(i) * imgs[i];
    return m;
}

}  // namespace

CycMatrix rho(const HRep& r, const env_h::HElem& h) { return combine(basis_images(r), h); }

CycMatrix casimir(const HRep& r) {
    return r.Xp * r.Xm - Cyc::frac(1, 3) * (kQ2 * r.K + kQ * CycMatrix(r.K * r.K));
}

HRep tensor(const HRep& a, const HRep& b) {
    CycMatrix Ia = identity(a.dim), Ib = identity(b.dim);
    CycMatrix Kb2 = b.K * b.K;
    return make(a.name + "x" + b.name, kron(a.Xp, Ib) + kron(a.K, b.Xp), kron(a.Xm, Kb2) + kron(Ia, b.Xm),
                kron(a.K, b.K));
}

HRep direct_sum(const std::vector<HRep>& reps) {
    int n = 0;
    std::string name;
    for (const auto& r : reps) {
        n += r.dim;
        name += (name.empty() ? "" : "+") + r.name;
    }
    HRep s = make(name, zeros(n, n), zeros(n, n), zeros(n, n));
    int o = 0;
    for (const auto& r : reps) {
        s.Xp.block(o, o, r.dim, r.dim) = r.Xp;
        s.Xm.block(o, o, r.dim, r.dim) = r.Xm;
        s.K.block(o, o, r.dim, r.dim) = r.K;
        o += r.dim;
    }
    return s;
}

HRep from_module(const std::string& name, const ModuleAction& act) {
    auto at = [&](const env_h::HElem& h) {
        CycMatrix m = zeros(static_cast<int>(act.rho[0].rows()), static_cast<int>(act.rho[0].cols()));
        for (int i = 0; i < env_h::kDim; ++i)
            if (!h(i).is_zero()) m += h(i) * act.rho[i];
        return m;
    };
    return make(name, at(env_h::xp()), at(env_h::xm()), at(env_h::k()));
}

bool is_stable(const HRep& r, const CycMatrix& basis) {
    for (const CycMatrix* g : {&r.Xp, &r.Xm, &r.K})
        for (int c = 0; c < basis.cols(); ++c)
            if (!in_column_span(basis, *g * basis.col(c))) return false;
    return true;
}

HRep restrict(const HRep& r, const CycMatrix& basis) {
    const int m = static_cast<int>(basis.cols());
    auto sub = [&](const CycMatrix& g) {
        CycMatrix out = zeros(m, m);
        for (int c = 0; c < m; ++c) {
            auto co = coordinates(basis, g * basis.col(c));
            if (!co) throw std::invalid_argument("restrict: subspace is not stable");
            out.col(c) = *co;
        }
        return out;
    };
    return make(r.name + "|sub", sub(r.Xp), sub(r.Xm), sub(r.K));
}

HRep quotient(const HRep& r, const CycMatrix& sub) {
    // complete the subspace basis with unit vectors
    CycMatrix full = sub;
    std::vector<int> extra;
    for (int i = 0; i < r.dim; ++i) {
        CycMatrix t = hstack(full, unit_vector(r.dim, i));
        if (rank(t) > full.cols()) {
            full = t;
            extra.push_back(i);
        }
    }
    const int s = static_cast<int>(sub.cols()), m = static_cast<int>(extra.size());
    auto q = [&](const CycMatrix& g) {
        CycMatrix out = zeros(m, m);
        for (int c = 0; c < m; ++c) {
            CycVector co = *coordinates(full, g * unit_vector(r.dim, extra[c]));
            out.col(c) = co.tail(m);
        }
        (void)s;
        return out;
    };
    return make(r.name + "/sub", q(r.Xp), q(r.Xm), q(r.K));
}

CycMatrix cyclic_submodule(const HRep& r, const CycMatrix& vectors) {
    CycMatrix span = column_basis(vectors);
    while (true) {
        CycMatrix next = span;
        for (const CycMatrix* g : {&r.Xp, &r.Xm, &r.K}) next = hstack(next, *g * span);
        CycMatrix b = column_basis(next);
        if (b.cols() == span.cols()) return span;
        span = b;
    }
}

const CycMatrix& jacobson_radical() {
    static const CycMatrix J = [] {
        // coordinates carrying a theta-free part: all of block 1, the body of block 2
        std::vector<int> body;
        for (int e = 0; e < 9; ++e) body.push_back(e);
        for (int e = 0; e < 9; ++e) body.push_back(9 + 4 * e);
        CycMatrix A = zeros(static_cast<int>(body.size()), env_h::kDim);
        for (int i = 0; i < env_h::kDim; ++i) {
            CycVector c = env_h::structural_coords(env_h::structural_rep(unit_vector(env_h::kDim, i)));
            for (size_t k = 0; k < body.size(); ++k) A(static_cast<int>(k), i) = c(body[k]);
        }
        return kernel(A);
    }();
    return J;
}

CycMatrix radical_of_module(const HRep& r) {
    const CycMatrix& J = jacobson_radical();
    const std::vector<CycMatrix> imgs = basis_images(r);
    CycMatrix all = zeros(r.dim, 0);
    for (int j = 0; j < J.cols(); ++j) all = hstack(all, combine(imgs, J.col(j)));
    if (rank(all) == 0) return zeros(r.dim, 0);
    return column_basis(all);
}

namespace {

HRep structural_module(const std::string& name, const std::vector<env_h::Structural>& basis) {
    const int m = static_cast<int>(basis.size());
    CycMatrix B = zeros(45, m);
    for (int i = 0; i < m; ++i) B.col(i) = env_h::structural_coords(basis[i]);
    auto act = [&](const env_h::HElem& h) {
        env_h::Structural g = env_h::structural_rep(h);
        CycMatrix out = zeros(m, m);
        for (int i = 0; i < m; ++i) {
            auto co = coordinates(B, env_h::structural_coords(env_h::smul(g, basis[i])));
            if (!co) throw std::logic_error("structural module " + name + " is not stable");
            out.col(i) = *co;
        }
        return out;
    };
    return make(name, act(env_h::xp()), act(env_h::xm()), act(env_h::k()));
}

}  // namespace

HRep column_module(const std::string& name) {
    using env_h::elementary_E;
    using env_h::elementary_F;
    const Grass4 t1 = Grass4::theta1(), t2 = Grass4::theta2(), t12 = Grass4::theta12(), one(1);
    if (name == "3_irr") return structural_module(name, {elementary_E(1, 2), elementary_E(2, 2), elementary_E(3, 2)});
    if (name == "6_eve")
        return structural_module(name, {elementary_F(1, 1, one), elementary_F(1, 1, t12), elementary_F(2, 1, one),
                                        elementary_F(2, 1, t12), elementary_F(3, 1, t1), elementary_F(3, 1, t2)});
    if (name == "6_odd")
        return structural_module(name, {elementary_F(1, 3, t1), elementary_F(1, 3, t2), elementary_F(2, 3, t1),
                                        elementary_F(2, 3, t2), elementary_F(3, 3, one), elementary_F(3, 3, t12)});
    throw std::invalid_argument("no column module " + name);
}

CycMatrix family_subspace(const std::string& which, const Cyc& l1, const Cyc& l2) {
    CycMatrix b = zeros(6, 3);
    if (which == "3_odd") {  // theta_l F13, theta_l F23, t1t2 F33 inside 6_odd
        b(0, 0) = l1, b(1, 0) = l2;
        b(2, 1) = l1, b(3, 1) = l2;
        b(5, 2) = Cyc(1);
    } else if (which == "3_eve") {  // t1t2 F11, t1t2 F21, theta_l F31 inside 6_eve
        b(1, 0) = Cyc(1);
        b(3, 1) = Cyc(1);
        b(4, 2) = l1, b(5, 2) = l2;
    } else {
        throw std::invalid_argument("no family " + which);
    }
    return b;
}

// ---------------------------------------------------------------- metrics

namespace {

// rho(h*) for the generators: X+* = -q^2 X+, X-* = -q X-, K* = K
std::vector<std::pair<CycMatrix, CycMatrix>> star_pairs(const HRep& r) {
    return {{r.Xp, -kQ2 * r.Xp}, {r.Xm, -kQ * r.Xm}, {r.K, r.K}};
}

}  // namespace

bool is_invariant_metric(const HRep& r, const CycMatrix& g) {
    if (!is_hermitian(g)) return false;
    for (const auto& [h, hs] : star_pairs(r))
        if (CycMatrix(adjoint(h) * g) != CycMatrix(g * hs)) return false;
    return true;
}

std::vector<CycMatrix> invariant_metric_space(const HRep& r) {
    const int n = r.dim, unknowns = 2 * n * n;
    auto pairs = star_pairs(r);
    std::vector<CycVector> cols;
    for (int u = 0; u < unknowns; ++u) {
        CycMatrix g = zeros(n, n);
        g((u / 2) / n, (u / 2) % n) = (u % 2 == 0) ? Cyc(1) : kQ;
        std::vector<CycVector> parts;
        parts.push_back(flatten(adjoint(g) - g));
        for (const auto& [h, hs] : pairs) parts.push_back(flatten(adjoint(h) * g - g * hs));
        CycVector col = zero_vector(static_cast<int>(parts.size()) * unknowns);
        for (size_t p = 0; p < parts.size(); ++p) col.segment(static_cast<int>(p) * unknowns, unknowns) = parts[p];
        cols.push_back(col);
    }
    CycMatrix A = zeros(static_cast<int>(cols[0].size()), unknowns);
    for (int u = 0; u < unknowns; ++u) A.col(u) = cols[u];
    CycMatrix ker = kernel(A);
    std::vector<CycMatrix> out;
    for (int c = 0; c < ker.cols(); ++c) out.push_back(unflatten(ker.col(c), n));
    return out;
}

Inertia signature(const CycMatrix& g) { return hermitian_inertia(g); }

std::string signature_string(const Inertia& s) {
    return std::string(s.plus, '+') + std::string(s.minus, '-') + std::string(s.zero, '0');
}

const std::vector<MetricFamily>& printed_metrics() {
    static const std::vector<MetricFamily> fams = [] {
        const Cyc one(1);
        std::vector<MetricFamily> f;
        f.push_back({"1", {"t"}, {identity(1)}, 1, "+"});
        f.push_back({"3_irr", {"t"}, {entries(3, {{0, 2, -kQ2}, {1, 1, one}, {2, 0, -kQ}})}, 1, "++-"});
        f.push_back({"6_odd",
                     {"t", "beta"},
                     {entries(6, {{0, 3, kQ}, {1, 2, -kQ}, {2, 1, -kQ2}, {3, 0, kQ2}, {4, 5, one}, {5, 4, one}}),
                      entries(6, {{4, 4, one}})},
                     2,
                     "+++---"});
        f.push_back({"5_odd",
                     {"gamma", "beta", "Re g", "Im g"},
                     {entries(5, {{0, 2, kS * kQ}, {2, 0, -kS * kQ2}}), entries(5, {{1, 3, kS * kQ}, {3, 1, -kS * kQ2}}),
                      entries(5, {{0, 3, one}, {1, 2, -kQ2}, {2, 1, -kQ}, {3, 0, one}}),
                      entries(5, {{0, 3, kQ}, {1, 2, -kQ}, {2, 1, -kQ2}, {3, 0, kQ2}})},
                     4,
                     "++--0"});
        f.push_back({"3_odd", {"t"}, {entries(3, {{0, 1, kS * kQ}, {1, 0, -kS * kQ2}})}, 1, "+-0"});
        f.push_back({"6_eve",
                     {"t", "beta"},
                     {entries(6, {{0, 3, -kS * kQ},
                                  {1, 2, -kS * kQ},
                                  {2, 1, kS * kQ2},
                                  {3, 0, kS * kQ2},
                                  {4, 5, kS},
                                  {5, 4, -kS}}),
                      entries(6, {{0, 2, kS * kQ}, {2, 0, -kS * kQ2}})},
                     2,
                     "+++---"});
        f.push_back({"4_eve",
                     {"alpha", "beta", "Re g", "Im g"},
                     {entries(4, {{2, 2, one}}), entries(4, {{3, 3, one}}), entries(4, {{2, 3, one}, {3, 2, one}}),
                      entries(4, {{2, 3, kQ}, {3, 2, kQ2}})},
                     4,
                     "parameter-dependent"});
        f.push_back({"3_eve", {"t"}, {entries(3, {{2, 2, one}})}, 1, "+00"});
        f.push_back({"2_eve", {"t"}, {entries(2, {{0, 1, kS * kQ}, {1, 0, -kS * kQ2}})}, 1, "+-"});
        return f;
    }();
    return fams;
}

namespace {

HRep rep_for(const std::string& name) {
    return needs_params(name) ? builtin_rep(name, default_params()) : builtin_rep(name);
}

}  // namespace

MetricSummary metric_summary(const MetricFamily& f) {
    MetricSummary s;
    s.rep = f.rep;
    s.solved_dim = static_cast<int>(invariant_metric_space(rep_for(f.rep)).size());
    // the first parameter is the overall scale (or alpha), kept positive
    const std::vector<Cyc> first = {Cyc(1), Cyc(2), Cyc::frac(1, 3)};
    const std::vector<Cyc> rest = {Cyc(-2), Cyc(-1), Cyc::frac(1, 2), Cyc(1), Cyc(3)};
    const int k = static_cast<int>(f.basis.size());
    std::vector<int> idx(k, 0);
    int max_rank = 0;
    std::vector<std::pair<int, Inertia>> points;
    while (true) {
        CycMatrix g = zeros(static_cast<int>(f.basis[0].rows()), static_cast<int>(f.basis[0].cols()));
        for (int i = 0; i < k; ++i) g += (i == 0 ? first[idx[i]] : rest[idx[i]]) * f.basis[i];
        Inertia in = signature(g);
        int rk = in.plus + in.minus;
        max_rank = std::max(max_rank, rk);
        points.push_back({rk, in});
        s.histogram[signature_string(in)]++;
        int i = 0;
        for (; i < k; ++i) {
            if (++idx[i] < static_cast<int>(i == 0 ? first.size() : rest.size())) break;
            idx[i] = 0;
        }
        if (i == k) break;
    }
    // generic = the signatures attained where the rank is maximal
    std::set<std::string> generic;
    for (const auto& [rk, in] : points)
        if (rk == max_rank) generic.insert(signature_string(in));
    s.generic = generic.size() == 1 ? *generic.begin() : "parameter-dependent";
    return s;
}

// ---------------------------------------------------------------- fingerprints

Fingerprint fingerprint(const HRep& r) {
    const int n = r.dim;
    Fingerprint f;
    f.push_back(n);
    CycMatrix P2 = matmul(r.Xp, r.Xp), M2 = matmul(r.Xm, r.Xm);
    f.push_back(rank(r.Xp));
    f.push_back(rank(P2));
    f.push_back(rank(r.Xm));
    f.push_back(rank(M2));
    for (int e = 0; e < 3; ++e) f.push_back(n - rank(CycMatrix(r.K - Cyc::qpow(e) * identity(n))));
    CycMatrix C = casimir(r);
    for (const Cyc& c : {Cyc::frac(-2, 3), Cyc::frac(1, 3)}) {
        CycMatrix D = C - c * identity(n);
        // generalized eigenspace: kernels of D^k until they stop growing
        CycMatrix Dk = D, gen = kernel(D);
        while (true) {
            Dk = matmul(Dk, D);
            CycMatrix next = kernel(Dk);
            if (next.cols() == gen.cols()) break;
            gen = next;
        }
        f.push_back(static_cast<int>(gen.cols()));
        f.push_back(gen.cols() == 0 ? 0 : rank(matmul(D, gen)));
    }
    f.push_back(rank(matmul(r.Xp, r.Xm)));
    f.push_back(rank(matmul(r.Xm, r.Xp)));
    // vectors killed by both X+ and X-, and the joint image
    CycMatrix stacked(2 * n, n);
    stacked << r.Xp, r.Xm;
    f.push_back(n - rank(stacked));
    f.push_back(rank(hstack(r.Xp, r.Xm)));
    // radical J.V and socle (the vectors killed by J)
    const CycMatrix& J = jacobson_radical();
    const std::vector<CycMatrix> imgs = basis_images(r);
    CycMatrix img = zeros(n, 0), ann = zeros(0, n);
    for (int j = 0; j < J.cols(); ++j) {
        CycMatrix m = combine(imgs, J.col(j));
        img = hstack(img, m);
        CycMatrix t(ann.rows() + n, n);
        t << ann, m;
        ann = t;
    }
    f.push_back(rank(img));
    f.push_back(n - rank(ann));
    return f;
}

namespace {

const std::map<std::string, Fingerprint>& catalogue_prints() {
    static const std::map<std::string, Fingerprint> m = [] {
        std::map<std::string, Fingerprint> out;
        for (const auto& name : catalogue()) out[name] = fingerprint(rep_for(name));
        return out;
    }();
    return m;
}

std::string fp_string(const Fingerprint& f) {
    std::string s = "(";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + ")";
}

}  // namespace

Report fingerprint_certificate() {
    Report rep;
    rep.title = "fingerprint separation";
    const auto& prints = catalogue_prints();
    bool distinct = true;
    std::string w;
    for (auto a = prints.begin(); a != prints.end(); ++a)
        for (auto b = std::next(a); b != prints.end(); ++b)
            if (a->second == b->second) {
                distinct = false;
                w = a->first + " ~ " + b->first;
            }
    rep.add("catalogued indecomposables have pairwise distinct fingerprints", distinct, w);
    // family members keep their fingerprint away from degenerate parameters
    bool stable = true;
    for (const char* fam : {"3_eve", "3_odd"})
        for (const auto& l : std::vector<std::pair<int, int>>{{1, 1}, {-1, 3}, {2, 5}, {1, -1}})
            stable = stable && fingerprint(builtin_rep(fam, {Cyc(l.first), Cyc(l.second)})) == prints.at(fam);
    rep.add("3_eve / 3_odd fingerprints do not depend on generic parameters", stable);
    // no catalogued module is a sum of smaller catalogued ones
    bool indecomposable = true;
    for (const auto& [name, fp] : prints) {
        std::vector<std::string> labels;
        for (const auto& l : catalogue())
            if (l != name) labels.push_back(l);
        std::function<bool(size_t, Fingerprint)> find = [&](size_t i, Fingerprint rest) -> bool {
            if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) return true;
            if (i == labels.size()) return false;
            const Fingerprint& p = prints.at(labels[i]);
            Fingerprint cur = rest;
            while (true) {
                if (find(i + 1, cur)) return true;
                for (size_t k = 0; k < cur.size(); ++k) cur[k] -= p[k];
                if (std::any_of(cur.begin(), cur.end(), [](int v) { return v < 0; })) return false;
            }
        };
        if (find(0, fp)) {
            indecomposable = false;
            w = name;
        }
    }
    rep.add("no catalogued fingerprint is a sum of other catalogued fingerprints", indecomposable, w);
    return rep;
}

const std::vector<TensorEntry>& tensor_table() {
    static const std::vector<TensorEntry> t = {
        {"2_eve", "2_eve", {{"1", 1}, {"3_irr", 1}}},
        {"2_eve", "3_irr", {{"6_eve", 1}}},
        {"3_irr", "3_irr", {{"6_odd", 1}, {"3_irr", 1}}},
        {"6_eve", "2_eve", {{"6_odd", 1}, {"3_irr", 2}}},
        {"6_odd", "2_eve", {{"6_eve", 1}, {"3_irr", 2}}},
        {"6_eve", "3_irr", {{"6_eve", 2}, {"3_irr", 2}}},
        {"6_odd", "3_irr", {{"6_eve", 2}, {"3_irr", 2}}},
        {"6_eve", "6_eve", {{"6_eve", 2}, {"6_odd", 2}, {"3_irr", 4}}},
        {"6_eve", "6_odd", {{"6_eve", 2}, {"6_odd", 2}, {"3_irr", 4}}},
        {"6_odd", "6_odd", {{"6_eve", 2}, {"6_odd", 2}, {"3_irr", 4}}},
        // reversed factors
        {"3_irr", "2_eve", {{"6_eve", 1}}},
        {"6_odd", "6_eve", {{"6_eve", 2}, {"6_odd", 2}, {"3_irr", 4}}},
    };
    return t;
}

std::vector<std::map<std::string, int>> decompose_tensor(const HRep& a, const HRep& b) {
    Fingerprint target = fingerprint(tensor(a, b));
    const auto& prints = catalogue_prints();
    const std::vector<std::string>& labels = catalogue();
    std::vector<std::map<std::string, int>> found;
    std::map<std::string, int> cur;
    std::function<void(size_t, Fingerprint)> search = [&](size_t i, Fingerprint rest) {
        if (found.size() >= 16) return;
        if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
            found.push_back(cur);
            return;
        }
        if (i == labels.size()) return;
        const Fingerprint& p = prints.at(labels[i]);
        int count = 0;
        while (true) {
            if (count > 0) cur[labels[i]] = count;
            search(i + 1, rest);
            for (size_t k = 0; k < rest.size(); ++k) rest[k] -= p[k];
            ++count;
            if (std::any_of(rest.begin(), rest.end(), [](int v) { return v < 0; })) break;
        }
        cur.erase(labels[i]);
    };
    search(0, target);
    return found;
}

std::string format_multiset(const std::map<std::string, int>& m) {
    std::string s;
    const auto& labels = catalogue();
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
        auto f = m.find(*it);
        if (f == m.end() || f->second == 0) continue;
        std::string label = *it == "2_eve" ? "2" : *it;
        s += (s.empty() ? "" : " + ") + (f->second == 1 ? label : std::to_string(f->second) + "(" + label + ")");
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- M

HRep m_as_rep() { return from_module("M", env_h::left_action_on_M()); }

const std::vector<int>& adapted_order() {
    using qplane::index;
    static const std::vector<int> o = {index(2, 0), index(1, 1), index(0, 2), index(1, 0), index(0, 1),
                                       index(2, 2), index(0, 0), index(2, 1), index(1, 2)};
    return o;
}

namespace {

// identification order: x^2, xy, y^2 | x, y, x^2y^2 | x^2y, xy^2, 1
const std::vector<int>& id_order() {
    using qplane::index;
    static const std::vector<int> o = {index(2, 0), index(1, 1), index(0, 2), index(1, 0), index(0, 1),
                                       index(2, 2), index(2, 1), index(1, 2), index(0, 0)};
    return o;
}

std::vector<env_h::Structural> id_targets() {
    using env_h::elementary_E;
    using env_h::elementary_F;
    const Grass4 t12 = Grass4::theta12(), td = Grass4::theta1() - Grass4::theta2();
    return {elementary_E(1, 2),      elementary_E(2, 2),      elementary_E(3, 2),
            elementary_F(1, 1, t12), elementary_F(2, 1, t12), elementary_F(3, 1, td),
            elementary_F(1, 3, td),  elementary_F(2, 3, td),  elementary_F(3, 3, t12)};
}

CycMatrix permuted(const CycMatrix& m, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    CycMatrix out = zeros(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out(a, b) = m(order[a], order[b]);
    return out;
}

}  // namespace

Identification identification() {
    Identification id;
    id.targets = id_targets();
    id.target = structural_module("3_irr+3_eve+3_odd", id.targets);
    HRep M = m_as_rep();
    const auto& ord = id_order();
    std::vector<std::pair<CycMatrix, CycMatrix>> gens = {{permuted(M.Xp, ord), id.target.Xp},
                                                         {permuted(M.Xm, ord), id.target.Xm},
                                                         {permuted(M.K, ord), id.target.K}};
    // T = diag(s): s_a rhoM_ab - rhoW_ab s_b = 0
    CycMatrix A = zeros(3 * 81, 9);
    int row = 0;
    for (const auto& [m, w] : gens)
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b, ++row) {
                A(row, a) += m(a, b);
                A(row, b) -= w(a, b);
            }
    CycMatrix ker = kernel(A);
    CycVector s = zero_vector(9);
    for (int c = 0; c < ker.cols(); ++c) s += ker.col(c);
    // normalize each block on its first vector
    for (int blk = 0; blk < 3; ++blk) {
        Cyc f = s(3 * blk);
        if (f.is_zero()) continue;
        Cyc fi = f.inv();
        for (int k = 0; k < 3; ++k) s(3 * blk + k) *= fi;
    }
    id.scalars.assign(s.data(), s.data() + 9);
    id.intertwiner = zeros(9, 9);
    for (int k = 0; k < 9; ++k) id.intertwiner(k, ord[k]) = s(k);
    return id;
}

Cyc form_formula(int p, int t, int r, int s) {
    if ((p + r) != 2 || (t + s) != 2) return Cyc(0);
    Cyc br = s == 0 ? kQ2 : (s == 1 ? kQ : Cyc(1));
    return kQ2 * br;
}

CycMatrix invariant_form_on_M() {
    CycMatrix g = zeros(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) g(i, j) = form_formula(i / 3, i % 3, j / 3, j % 3);
    return g;
}

Cyc form(const qplane::MElem& a, const qplane::MElem& b) {
    return (adjoint(CycMatrix(a)) * invariant_form_on_M() * b)(0, 0);
}

namespace {

CycMatrix charge_B() { return entries(3, {{0, 2, kQ2}, {1, 1, Cyc(1)}, {2, 0, kQ}}); }

// operators l on M paired with the operator of l*
std::vector<std::pair<CycMatrix, CycMatrix>> star_operators() {
    const AlgebraTable& A = qplane::algebra();
    std::vector<std::pair<CycMatrix, CycMatrix>> ops;
    for (const qplane::MElem& z : {qplane::x(), qplane::y()})
        ops.push_back({left_mult_matrix(A, z), left_mult_matrix(A, qplane::star(z))});
    for (const env_h::HElem& h : {env_h::xp(), env_h::xm(), env_h::k()})
        ops.push_back({env_h::left_action_matrix(h), env_h::left_action_matrix(env_h::star(h))});
    return ops;
}

}  // namespace

CycMatrix solved_form_on_M() {
    // G L = (L*)^dagger G and G^dagger = G, rational unknowns
    const int n = 9, unknowns = 2 * n * n;
    auto ops = star_operators();
    std::vector<CycVector> cols;
    for (int u = 0; u < unknowns; ++u) {
        CycMatrix g = zeros(n, n);
        g((u / 2) / n, (u / 2) % n) = (u % 2 == 0) ? Cyc(1) : kQ;
        CycVector col = flatten(adjoint(g) - g);
        for (const auto& [l, ls] : ops) {
            CycVector part = flatten(g * l - adjoint(ls) * g);
            CycVector joined(col.size() + part.size());
            joined << col, part;
            col = joined;
        }
        cols.push_back(col);
    }
    CycMatrix A = zeros(static_cast<int>(cols[0].size()), unknowns);
    for (int u = 0; u < unknowns; ++u) A.col(u) = cols[u];
    CycMatrix ker = kernel(A);
    if (ker.cols() != 1) return zeros(n, 0);
    CycMatrix g = unflatten(ker.col(0), n);
    const int xy = qplane::index(1, 1);
    return g(xy, xy).inv() * g;
}

Cyc form_trace(const qplane::MElem& a, const qplane::MElem& b) {
    CycMatrix m = charge_B().transpose() * qplane::charge_conjugation() *
                  qplane::star_matrix(qplane::to_matrix(a)) * qplane::to_matrix(b);
    return Cyc::frac(1, 3) * trace(m);
}

Report check_invariance_conditions() {
    Report rep;
    rep.title = "invariance of the scalar product on M";
    const CycMatrix G = invariant_form_on_M();
    auto sp = [&](const CycVector& a, const CycVector& b) { return (adjoint(CycMatrix(a)) * G * b)(0, 0); };
    {
        bool ok = true;
        std::string w;
        for (const auto& [l, ls] : star_operators())
            if (CycMatrix(G * l) != CycMatrix(adjoint(ls) * G)) ok = false;
        rep.add("(z, l.z') = (l*.z, z') for l = x, y, X+, X-, K", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                CycVector z = unit_vector(9, i), w = unit_vector(9, j);
                ok = ok && sp(z, w) == sp(qplane::one(), qplane::mul(qplane::star(z), w));
            }
        rep.add("(z, z') = (1, z* z')", ok);
    }
    {
        // ((S h_1)* . z, h_2 . w) = eps(h) (z, w) for every basis h
        const HopfDescriptor& H = env_h::hopf();
        std::vector<CycMatrix> L(env_h::kDim), LS(env_h::kDim);
        for (int i = 0; i < env_h::kDim; ++i) {
            CycVector e = unit_vector(env_h::kDim, i);
            L[i] = env_h::left_action_matrix(e);
            LS[i] = env_h::left_action_matrix(env_h::star(env_h::antipode(e)));
        }
        bool ok = true;
        std::string w;
        for (int h = 0; h < env_h::kDim; ++h) {
            CycMatrix lhs = zeros(9, 9);
            for (const auto& [idx, c] : H.comult[h])
                lhs += c * CycMatrix(adjoint(LS[idx / env_h::kDim]) * G * L[idx % env_h::kDim]);
            if (lhs != CycMatrix(H.counit(h) * G)) {
                ok = false;
                w = env_h::algebra().labels[h];
            }
        }
        rep.add("((S h_1)*.z, h_2.w) = eps(h)(z, w) for all basis h, z, w", ok, w);
    }
    {
        // (Delta_R z, Delta_R w) = (z, w) 1_F
        const int d = fun_f::kDim;
        const Coaction co = fun_f::right_coaction();
        bool ok = true;
        std::string w;
        for (int z = 0; z < 9; ++z)
            for (int v = 0; v < 9; ++v) {
                fun_f::FElem acc = zero_vector(d);
                const CycVector& tz = co.image[z];
                const CycVector& tv = co.image[v];
                for (int i = 0; i < 9 * d; ++i) {
                    if (tz(i).is_zero()) continue;
                    fun_f::FElem ti = fun_f::star(tz(i) * unit_vector(d, i % d));
                    for (int j = 0; j < 9 * d; ++j) {
                        if (tv(j).is_zero() || G(i / d, j / d).is_zero()) continue;
                        acc += G(i / d, j / d) * fun_f::mul(ti, tv(j) * unit_vector(d, j % d));
                    }
                }
                if (acc != G(z, v) * fun_f::one()) {
                    ok = false;
                    w = qplane::algebra().labels[z] + ", " + qplane::algebra().labels[v];
                }
            }
        rep.add("(Delta_R z, Delta_R w) = (z, w) 1 on all basis pairs", ok, w);
        // (z, Delta_R w) = ((1 (x) S) Delta_R z, w)
        bool ok2 = true;
        for (int z = 0; z < 9; ++z)
            for (int v = 0; v < 9; ++v) {
                fun_f::FElem lhs = zero_vector(d), rhs = zero_vector(d);
                const CycVector& tz = co.image[z];
                const CycVector& tv = co.image[v];
                for (int j = 0; j < 9 * d; ++j)
                    if (!tv(j).is_zero()) lhs += G(z, j / d) * tv(j) * unit_vector(d, j % d);
                for (int i = 0; i < 9 * d; ++i)
                    if (!tz(i).is_zero())
                        rhs += G(i / d, v) * fun_f::star(fun_f::antipode(tz(i) * unit_vector(d, i % d)));
                if (lhs != rhs) {
                    ok2 = false;
                    w = qplane::algebra().labels[z] + ", " + qplane::algebra().labels[v];
                }
            }
        rep.add("(z, Delta_R w) = ((1 (x) S) Delta_R z, w) on all basis pairs", ok2, w);
    }
    rep.add("(K.xy, K.xy) = (xy, xy) = 1",
            sp(env_h::act_left_on_M(env_h::k(), qplane::mono(1, 1)), env_h::act_left_on_M(env_h::k(), qplane::mono(1, 1)))
                .is_one());
    return rep;
}

// ---------------------------------------------------------------- reports

Report verify_reps() {
    Report rep;
    rep.title = "indecomposable representations";
    for (const auto& name : catalogue()) rep.merge(check_relations(rep_for(name)), name + ": ");
    rep.merge(check_relations(builtin_rep("3_odd", {Cyc(0), Cyc(0)})), "3_odd(0,0): ");
    rep.add("3_irr has K = diag(q^2, 1, q)", builtin_rep("3_irr").K == diag({kQ2, Cyc(1), kQ}));
    rep.add("6_odd has dimension 6", builtin_rep("6_odd").dim == 6);
    {
        // tensor products use Delta of H
        HRep a = builtin_rep("2_eve"), b = builtin_rep("3_irr");
        HRep t = tensor(a, b);
        bool ok = true;
        for (const env_h::HElem& h : {env_h::xp(), env_h::xm(), env_h::k()}) {
            CycVector dh = env_h::coproduct(h);
            CycMatrix m = zeros(6, 6);
            for (int i = 0; i < env_h::kDim * env_h::kDim; ++i)
                if (!dh(i).is_zero())
                    m += dh(i) * kron(rho(a, unit_vector(env_h::kDim, i / env_h::kDim)),
                                      rho(b, unit_vector(env_h::kDim, i % env_h::kDim)));
            ok = ok && m == rho(t, h);
        }
        rep.add("tensor product matrices agree with the coproduct of H", ok);
        rep.merge(check_relations(t), "2 (x) 3_irr: ");
    }
    return rep;
}

Report verify_metrics() {
    Report rep;
    rep.title = "invariant metrics";
    for (const auto& f : printed_metrics()) {
        HRep r = rep_for(f.rep);
        auto space = invariant_metric_space(r);
        bool solved_ok = true;
        for (const auto& g : space) solved_ok = solved_ok && is_invariant_metric(r, g);
        rep.add(f.rep + ": solved metrics are hermitian and invariant", solved_ok);
        rep.add(f.rep + ": solved space has " + std::to_string(f.real_params) + " real parameters",
                static_cast<int>(space.size()) == f.real_params, std::to_string(space.size()));
        bool printed_ok = true;
        CycMatrix span = zeros(2 * r.dim * r.dim, 0), solved = span;
        for (const auto& g : f.basis) {
            printed_ok = printed_ok && is_invariant_metric(r, g);
            span = hstack(span, flatten(g));
        }
        for (const auto& g : space) solved = hstack(solved, flatten(g));
        rep.add(f.rep + ": printed family is invariant", printed_ok);
        rep.add(f.rep + ": printed family spans the solved space",
                rank(span) == static_cast<int>(space.size()) && rank(hstack(span, solved)) == rank(span));
        MetricSummary s = metric_summary(f);
        rep.add(f.rep + ": generic signature " + f.claimed, s.generic == f.claimed, s.generic);
    }
    {
        // scaling and congruence leave the signature alone
        CycMatrix g = printed_metrics()[5].basis[0] + Cyc(3) * printed_metrics()[5].basis[1];
        Inertia s0 = signature(g);
        bool ok = signature(Cyc::frac(7, 2) * g) == s0;
        CycMatrix P = identity(6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i < j) P(i, j) = Cyc::frac((i + 2 * j) % 5 - 2, 3);
        ok = ok && signature(CycMatrix(adjoint(P) * g * P)) == s0;
        rep.add("signature is invariant under scaling and congruence", ok);
    }
    return rep;
}

Report verify_lattice() {
    Report rep;
    rep.title = "submodules and radicals";
    rep.add("Jacobson radical of H has dimension 13", jacobson_radical().cols() == 13,
            std::to_string(jacobson_radical().cols()));
    {
        bool ok = true;
        const CycMatrix& J = jacobson_radical();
        for (int a = 0; a < J.cols(); ++a)
            for (int i = 0; i < env_h::kDim; ++i) {
                CycVector e = unit_vector(env_h::kDim, i);
                ok = ok && in_column_span(J, env_h::mul(e, J.col(a))) && in_column_span(J, env_h::mul(J.col(a), e));
            }
        rep.add("the radical is a two-sided ideal", ok);
    }
    struct Pim {
        const char* name;
        int radical;
    };
    for (const Pim& p : {Pim{"6_eve", 4}, Pim{"6_odd", 5}, Pim{"3_irr", 0}}) {
        HRep col = column_module(p.name);
        rep.merge(check_relations(col), std::string("column ") + p.name + ": ");
        rep.add(std::string("column module ") + p.name + " matches the catalogue fingerprint",
                fingerprint(col) == fingerprint(builtin_rep(p.name)));
        CycMatrix rad = radical_of_module(col);
        rep.add(std::string("radical of ") + p.name + " has dimension " + std::to_string(p.radical),
                rad.cols() == p.radical, std::to_string(rad.cols()));
        rep.add(std::string("radical of printed ") + p.name + " has dimension " + std::to_string(p.radical),
                radical_of_module(builtin_rep(p.name)).cols() == p.radical);
        HRep top = rad.cols() == 0 ? col : quotient(col, rad);
        const char* irr = p.radical == 4 ? "2_eve" : (p.radical == 5 ? "1" : "3_irr");
        rep.add(std::string(p.name) + " / radical is " + irr + " (dimension " + std::to_string(6 - p.radical) + ")",
                fingerprint(top) == fingerprint(builtin_rep(irr)) && radical_of_module(top).cols() == 0);
        bool simple = true;
        for (int i = 0; i < top.dim; ++i)
            simple = simple && cyclic_submodule(top, unit_vector(top.dim, i)).cols() == top.dim;
        rep.add(std::string(p.name) + " / radical is generated by each basis vector", simple);
    }
    {
        bool ok = true, gen = true, inv = true, same = true;
        HRep odd = column_module("6_odd"), eve = column_module("6_eve");
        for (const auto& l : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, -1}, {2, 3}, {-3, 5}}) {
            Cyc l1(l.first), l2(l.second);
            CycMatrix so = family_subspace("3_odd", l1, l2), se = family_subspace("3_eve", l1, l2);
            ok = ok && is_stable(odd, so) && is_stable(eve, se);
            gen = gen && cyclic_submodule(odd, so.col(0)).cols() == 3 && cyclic_submodule(eve, se.col(2)).cols() == 3;
            inv = inv && cyclic_submodule(odd, so.col(2)).cols() == 1 &&
                  cyclic_submodule(eve, se.col(0)).cols() == 2;
            same = same && fingerprint(restrict(odd, so)) == fingerprint(builtin_rep("3_odd", {l1, l2})) &&
                   fingerprint(restrict(eve, se)) == fingerprint(builtin_rep("3_eve", {l1, l2}));
        }
        rep.add("theta_l families of 3-dimensional submodules are stable", ok);
        rep.add("family members are cyclic on theta_l F13 / theta_l F31", gen);
        rep.add("3_odd(l) contains the invariant line t1t2 F33, 3_eve(l) the plane t1t2 F11, t1t2 F21", inv);
        rep.add("family members match the catalogued 3_odd / 3_eve", same);
    }
    {
        HRep r = builtin_rep("3_odd", default_params());
        rep.add("cyclic submodule of the invariant vector of 3_odd is 1-dimensional",
                cyclic_submodule(r, unit_vector(3, 2)).cols() == 1);
    }
    return rep;
}

Report verify_tensor() {
    Report rep;
    rep.title = "tensor products";
    rep.merge(fingerprint_certificate());
    for (const auto& e : tensor_table()) {
        HRep a = builtin_rep(e.a), b = builtin_rep(e.b);
        auto found = decompose_tensor(a, b);
        int dim = 0;
        std::vector<HRep> parts;
        for (const auto& [l, n] : e.expected) {
            dim += n * rep_for(l).dim;
            for (int i = 0; i < n; ++i) parts.push_back(rep_for(l));
        }
        std::string label = (e.a == "2_eve" ? "2" : e.a) + " x " + (e.b == "2_eve" ? "2" : e.b);
        bool fp = fingerprint(direct_sum(parts)) == fingerprint(tensor(a, b));
        bool unique = found.size() == 1 && found[0] == e.expected;
        std::string w = found.empty() ? "no match" : format_multiset(found[0]);
        if (found.size() > 1) w += " and " + std::to_string(found.size() - 1) + " more";
        rep.add(label + " = " + format_multiset(e.expected), dim == a.dim * b.dim && fp && unique, w);
    }
    return rep;
}

Report verify_m() {
    Report rep;
    rep.title = "M as a representation";
    HRep M = m_as_rep();
    rep.merge(check_relations(M), "M: ");
    {
        auto basis_of = [](std::initializer_list<std::pair<int, int>> ms) {
            CycMatrix b = zeros(9, 0);
            for (auto [r, s] : ms) b = hstack(b, unit_vector(9, qplane::index(r, s)));
            return b;
        };
        CycMatrix irr = basis_of({{2, 0}, {1, 1}, {0, 2}}), eve = basis_of({{1, 0}, {0, 1}, {2, 2}}),
                  odd = basis_of({{0, 0}, {2, 1}, {1, 2}});
        rep.add("span(x^2, xy, y^2), span(x, y, x^2y^2), span(1, x^2y, xy^2) are stable",
                is_stable(M, irr) && is_stable(M, eve) && is_stable(M, odd));
        rep.add("the three pieces are 3_irr, 3_eve, 3_odd",
                fingerprint(restrict(M, irr)) == fingerprint(builtin_rep("3_irr")) &&
                    fingerprint(restrict(M, eve)) == fingerprint(builtin_rep("3_eve", default_params())) &&
                    fingerprint(restrict(M, odd)) == fingerprint(builtin_rep("3_odd", default_params())));
        rep.add("3_eve contains a stable plane, 3_odd a stable line",
                cyclic_submodule(M, unit_vector(9, qplane::index(1, 0))).cols() == 2 &&
                    cyclic_submodule(M, unit_vector(9, qplane::index(0, 0))).cols() == 1);
    }
    Identification id = identification();
    {
        bool nonzero = std::all_of(id.scalars.begin(), id.scalars.end(), [](const Cyc& c) { return !c.is_zero(); });
        rep.add("identification scalars solve the intertwining equations", nonzero);
        bool ok = true;
        for (const env_h::HElem& h : {env_h::xp(), env_h::xm(), env_h::k()})
            ok = ok && CycMatrix(id.intertwiner * rho(M, h)) == CycMatrix(rho(id.target, h) * id.intertwiner);
        rep.add("T rho_M(h) = rho_W(h) T for X+, X-, K", ok);
        rep.add("T is invertible", rank(id.intertwiner) == 9);
    }
    {
        // X+ on the targets and on M, entry by entry
        const auto& ord = id_order();
        struct Img {
            int to;  // -1 for zero
            Cyc c;
        };
        const Cyc one(1);
        const std::vector<Img> structural = {{-1, 0}, {0, one}, {1, one}, {-1, 0}, {3, one},
                                             {4, -one}, {8, -one}, {6, one}, {-1, 0}};
        const std::vector<Img> onM = {{-1, 0}, {0, kQ}, {1, -kQ2}, {-1, 0}, {3, one},
                                      {4, -kQ}, {8, kQ2}, {6, -one}, {-1, 0}};
        int s_ok = 0, m_ok = 0, match = 0;
        for (int k = 0; k < 9; ++k) {
            CycVector w = id.target.Xp.col(k);
            CycVector want = zero_vector(9);
            if (structural[k].to >= 0) want(structural[k].to) = structural[k].c;
            s_ok += w == want;
            qplane::MElem z = env_h::act_left_on_M(env_h::xp(), unit_vector(9, ord[k]));
            qplane::MElem zw = zero_vector(9);
            if (onM[k].to >= 0) zw(ord[onM[k].to]) = onM[k].c;
            m_ok += z == zw;
            match += structural[k].to == onM[k].to;
        }
        rep.add("X+ on the structural targets (9 entries)", s_ok == 9, std::to_string(s_ok));
        rep.add("X+^L on M (9 entries)", m_ok == 9, std::to_string(m_ok));
        rep.add("the two X+ tables agree under the identification (9 entries)", match == 9, std::to_string(match));
    }
    // invariant form
    {
        CycMatrix G = invariant_form_on_M();
        rep.add("scalar product is hermitian", is_hermitian(G));
        CycMatrix S = solved_form_on_M();
        rep.add("scalar product is the unique solution of the *-representation conditions with (xy, xy) = 1",
                S.cols() == 9 && S == G);
        CycMatrix B = charge_B();
        CycMatrix blocks = zeros(9, 9);
        blocks.block(0, 0, 3, 3) = B;
        blocks.block(3, 6, 3, 3) = B;
        blocks.block(6, 3, 3, 3) = B;
        rep.add("block form [[B,0,0],[0,0,B],[0,B,0]] in the adapted basis", permuted(G, adapted_order()) == blocks);
        using qplane::index;
        std::vector<int> witt = {index(2, 1), index(1, 2), index(2, 2), index(0, 2), index(0, 1),
                                 index(1, 0), index(0, 0), index(2, 0), index(1, 1)};
        CycMatrix U = diag({Cyc(1), kQ, kQ, kQ});
        CycMatrix W = zeros(9, 9);
        W.block(0, 4, 4, 4) = U;
        W.block(4, 0, 4, 4) = adjoint(U);
        W(8, 8) = Cyc(1);
        CycMatrix Gw = permuted(G, witt);
        rep.add("Witt form [[0,U,0],[U^dagger,0,0],[0,0,1]] with U = diag(1,q,q,q)", Gw == W);
        rep.add("trace and determinant of the Witt form equal 1", trace(Gw).is_one() && det(Gw).is_one());
        bool tr = true, tr2 = true;
        std::string w;
        CycMatrix C = qplane::charge_conjugation();
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                qplane::MElem a = unit_vector(9, i), b = unit_vector(9, j);
                if (form_trace(a, b) != G(i, j)) {
                    tr = false;
                    w = qplane::algebra().labels[i] + ", " + qplane::algebra().labels[j];
                }
                CycMatrix m = B.transpose() * adjoint(qplane::to_matrix(a)) * C * qplane::to_matrix(b);
                tr2 = tr2 && Cyc::frac(1, 3) * trace(m) == G(i, j);
            }
        rep.add("(m1, m2) = 1/3 Tr(B^t C m1* m2) on all 81 pairs", tr, w);
        rep.add("(m1, m2) = 1/3 Tr(B^t m1^dagger C m2) on all 81 pairs", tr2);
        rep.add("(1, 1) = 0 and (1, xy) = 0",
                G(index(0, 0), index(0, 0)).is_zero() && G(index(0, 0), index(1, 1)).is_zero());
        rep.add("hermitian inertia (5,4)", signature(G) == Inertia{5, 4, 0});
        // u, v, w, t, s basis
        auto vec = [](std::initializer_list<std::tuple<int, int, int>> t) {
            CycVector v = zero_vector(9);
            for (auto [r, s, c] : t) v(qplane::index(r, s)) = Cyc(c);
            return v;
        };
        std::vector<CycVector> basis = {vec({{0, 1, -1}, {2, 1, 1}}), vec({{0, 1, 1}, {2, 1, 1}}),
                                        vec({{0, 0, -1}, {2, 2, 1}}), vec({{0, 0, 1}, {2, 2, 1}}),
                                        vec({{1, 0, -1}, {1, 2, 1}}), vec({{1, 0, 1}, {1, 2, 1}}),
                                        vec({{2, 0, -1}, {0, 2, 1}}), vec({{2, 0, 1}, {0, 2, 1}}),
                                        vec({{1, 1, 1}})};
        CycMatrix P = zeros(9, 9);
        for (int k = 0; k < 9; ++k) P.col(k) = basis[k];
        CycMatrix Gu = adjoint(P) * G * P;
        CycMatrix want = zeros(9, 9);
        const Cyc d = kQ - kQ2;
        want(0, 0) = Cyc(-2);
        want(1, 1) = Cyc(2);
        for (int b = 0; b < 3; ++b) {
            int o = 2 + 2 * b;
            want(o, o) = Cyc(1);
            want(o, o + 1) = d;
            want(o + 1, o) = -d;
            want(o + 1, o + 1) = Cyc(-1);
        }
        want(8, 8) = Cyc(1);
        rep.add("Gram matrix in the u, v, w, t, s basis", Gu == want);
        CycMatrix re = zeros(9, 9);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) re(i, j) = Cyc(Gu(i, j).re());
        rep.add("real part is diag(-2, 2, 1, -1, 1, -1, 1, -1, 1)",
                re == diag({Cyc(-2), Cyc(2), Cyc(1), Cyc(-1), Cyc(1), Cyc(-1), Cyc(1), Cyc(-1), Cyc(1)}));
        rep.add("real part has inertia (5,4)", signature(re) == Inertia{5, 4, 0});
    }
    rep.merge(check_invariance_conditions());
    return rep;
}

Report verify() {
    Report rep;
    rep.title = "representations of H";
    rep.merge(verify_reps());
    rep.merge(verify_metrics());
    rep.merge(verify_lattice());
    rep.merge(verify_tensor());
    rep.merge(verify_m());
    return rep;
}

}  // namespace qroot3::repmod
