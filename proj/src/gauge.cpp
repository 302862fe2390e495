#include "qroot3/gauge.hpp"

#include <random>
#include <stdexcept>

namespace qroot3::gauge {

using namespace wz_forms;

namespace {

const Cyc kQ = Cyc::q();
const Cyc kQ2 = Cyc::q2();

PolyForm pzero() { return PolyForm::Constant(wz_forms::kDim, Poly()); }

WZForm term(const Cyc& c, int r, int s, Gen g) { return wz_forms::basis(r, s, g, c); }

std::vector<WZForm> build_param_forms() {
    const Cyc q = kQ, q2 = kQ2, one(1);
    return {
        // 3_irr inside 3_odd (x) 2
        term(q, 2, 1, Dx) - term(one, 0, 0, Dy),
        term(q2, 1, 2, Dx) - term(one, 2, 1, Dy),
        q * (term(one, 0, 0, Dx) - term(one, 1, 2, Dy)),
        // 3_irr inside 3_eve (x) 2
        term(q2, 0, 1, Dy),
        term(one, 0, 1, Dx) + term(q, 1, 0, Dy),
        term(q2, 1, 0, Dx),
        // 3_eve
        term(one, 0, 0, Dy),
        term(q, 1, 2, Dx) + term(one, 2, 1, Dy),
        term(one, 0, 0, Dx),
        // 3_odd
        q * (term(one, 1, 0, Dx) - term(one, 2, 2, Dy)),
        q * (term(q, 0, 1, Dx) - term(one, 1, 0, Dy)),
        q * (term(one, 2, 2, Dx) - term(q, 0, 1, Dy)),
        // 6_eve
        term(one, 1, 1, Dx) - term(q2, 2, 0, Dy),
        term(one, 0, 2, Dx) - term(q, 1, 1, Dy),
        term(q, 2, 0, Dx),
        term(q, 0, 2, Dy),
        q2 * (term(one, 1, 1, Dx) + term(one, 2, 0, Dy)),
        q * (term(one, 1, 1, Dy) + term(one, 0, 2, Dx)),
    };
}

template <class T>
Vec<T> mul_t(const Vec<T>& u, const Vec<T>& v) {
    const AlgebraTable& A = wz_forms::algebra();
    Vec<T> r = Vec<T>::Constant(A.dim, T(0));
    for (int i = 0; i < A.dim; ++i) {
        if (u(i) == T(0)) continue;
        for (int j = 0; j < A.dim; ++j) {
            if (v(j) == T(0)) continue;
            const T uv = u(i) * v(j);
            for (const auto& [k, c] : A.product(i, j)) r(k) += T(c) * uv;
        }
    }
    return r;
}

template <class T>
Vec<T> d_t(const Vec<T>& u) {
    const CycMatrix& D = d_matrix();
    Vec<T> r = Vec<T>::Constant(wz_forms::kDim, T(0));
    for (int j = 0; j < wz_forms::kDim; ++j) {
        if (u(j) == T(0)) continue;
        for (int i = 0; i < wz_forms::kDim; ++i)
            if (!D(i, j).is_zero()) r(i) += T(D(i, j)) * u(j);
    }
    return r;
}

template <class T>
Vec<T> curvature_t(const Vec<T>& w) {
    return d_t(w) + mul_t(w, w);
}

template <class T>
Vec<T> gauge_t(const Vec<T>& w, const qplane::MElem& u) {
    qplane::MElem ui = qplane::invert(u);
    Vec<T> U = from_function(u).template cast<T>(), Ui = from_function(ui).template cast<T>();
    Vec<T> du = d(from_function(u)).template cast<T>();
    return mul_t(mul_t(Ui, w), U) + mul_t(Ui, du);
}

bool supported_on(const PolyForm& u, const std::vector<int>& idx) {
    for (int i = 0; i < u.size(); ++i) {
        if (u(i).is_zero()) continue;
        bool in = false;
        for (int j : idx) in = in || j == i;
        if (!in) return false;
    }
    return true;
}

std::vector<int> sector_indices(int grade) {
    std::vector<int> out;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            if ((r + s) % 3 == grade) out.push_back(wz_forms::index(DxDy, qplane::index(r, s)));
    return out;
}

}  // namespace

const std::vector<std::string>& param_names() {
    static const std::vector<std::string> n = {"a_i1", "a_i2", "a_i3", "b_i1", "b_i2", "b_i3",
                                               "a_e1", "a_e2", "a_e3", "b_o1", "b_o2", "b_o3",
                                               "c1",   "c2",   "c3",   "c4",   "c5",   "c6"};
    return n;
}

const std::vector<std::string>& variable_names() {
    static const std::vector<std::string> n = [] {
        std::vector<std::string> v;
        for (const auto& p : param_names()) v.push_back("re_" + p);
        for (const auto& p : param_names()) v.push_back("im_" + p);
        return v;
    }();
    return n;
}

Poly symbolic_param(int k) { return Poly::var(k) + Poly(Cyc::sqrt_m3()) * Poly::var(kParams + k); }

const std::vector<Block>& blocks() {
    static const std::vector<Block> b = {Block::Irr3, Block::IrrPrime3, Block::Eve3, Block::Odd3, Block::Eve6};
    return b;
}

std::string block_name(Block b) {
    switch (b) {
        case Block::Irr3: return "3i";
        case Block::IrrPrime3: return "3i'";
        case Block::Eve3: return "3e";
        case Block::Odd3: return "3o";
        case Block::Eve6: return "6e";
    }
    return "?";
}

std::vector<int> block_params(Block b) {
    switch (b) {
        case Block::Irr3: return {0, 1, 2};
        case Block::IrrPrime3: return {3, 4, 5};
        case Block::Eve3: return {6, 7, 8};
        case Block::Odd3: return {9, 10, 11};
        case Block::Eve6: return {12, 13, 14, 15, 16, 17};
    }
    return {};
}

const std::vector<WZForm>& param_forms() {
    static const std::vector<WZForm> f = build_param_forms();
    return f;
}

Connection from_form(const WZForm& w) {
    if (!is_zero(WZForm(w - part(w, 1)))) throw std::invalid_argument("a connection is a one-form");
    return {to_poly(w), std::nullopt};
}

Connection from_params(const std::vector<Poly>& params) {
    if (params.size() != kParams) throw std::invalid_argument("expected 18 parameters");
    PolyForm w = pzero();
    for (int k = 0; k < kParams; ++k) {
        if (params[k].is_zero()) continue;
        const WZForm& f = param_forms()[k];
        for (int i = 0; i < wz_forms::kDim; ++i)
            if (!f(i).is_zero()) w(i) += Poly(f(i)) * params[k];
    }
    return {w, params};
}

Connection from_values(const std::vector<Cyc>& values) {
    std::vector<Poly> p;
    for (const auto& v : values) p.emplace_back(v);
    return from_params(p);
}

Connection symbolic(const std::vector<Block>& support) {
    std::vector<Poly> p(kParams);
    for (Block b : support)
        for (int k : block_params(b)) p[k] = symbolic_param(k);
    return from_params(p);
}

PolyForm poly_mul(const PolyForm& u, const PolyForm& v) { return mul_t(u, v); }
PolyForm poly_d(const PolyForm& u) { return d_t(u); }

PolyForm poly_star(const PolyForm& u) {
    PolyForm r = pzero();
    for (int i = 0; i < wz_forms::kDim; ++i) {
        if (u(i).is_zero()) continue;
        WZForm s = star_form(wz_forms::algebra().basis(i));
        Poly c = u(i).conj();
        for (int j = 0; j < wz_forms::kDim; ++j)
            if (!s(j).is_zero()) r(j) += Poly(s(j)) * c;
    }
    return r;
}

WZForm curvature(const WZForm& omega) { return curvature_t(omega); }
PolyForm curvature(const Connection& c) { return curvature_t(c.omega); }

WZForm gauge_transform(const WZForm& omega, const qplane::MElem& u) { return gauge_t(omega, u); }

Connection gauge_transform(const Connection& c, const qplane::MElem& u) {
    return {gauge_t(c.omega, u), std::nullopt};
}

std::string sector_label(const PolyForm& two_form) {
    if (is_zero(two_form)) return "0";
    const char* names[] = {"3_odd", "3_eve", "3_irr"};
    for (int g = 0; g < 3; ++g)
        if (supported_on(two_form, sector_indices(g))) return names[g];
    return "mixed";
}

bool in_submodule(const PolyForm& two_form, const std::string& which) {
    if (which == "1") return supported_on(two_form, {wz_forms::index(DxDy, 0)});
    if (which == "2")
        return supported_on(two_form,
                            {wz_forms::index(DxDy, qplane::index(1, 0)), wz_forms::index(DxDy, qplane::index(0, 1))});
    throw std::invalid_argument("unknown submodule " + which);
}

Classification classify_curvature(const Connection& c) {
    if (!c.params) throw std::invalid_argument("classification needs a parameter-built connection");
    std::optional<Block> found;
    for (Block b : blocks()) {
        bool any = false;
        for (int k : block_params(b)) any = any || !(*c.params)[k].is_zero();
        if (!any) continue;
        if (found) throw std::invalid_argument("parameters span several blocks");
        found = b;
    }
    if (!found) throw std::invalid_argument("connection has no parameters set");
    PolyForm dphi = poly_d(c.omega), phi2 = poly_mul(c.omega, c.omega);
    Classification out;
    out.block = *found;
    out.dphi_zero = is_zero(dphi);
    out.phi2_zero = is_zero(phi2);
    out.dphi = sector_label(dphi);
    out.phi2 = sector_label(phi2);
    out.rho = sector_label(PolyForm(dphi + phi2));
    return out;
}

Connection hermitian_projection(const Connection& c) {
    if (c.params) {
        std::vector<Poly> re;
        for (const auto& p : *c.params) re.push_back(Poly(Cyc::frac(1, 2)) * (p + p.conj()));
        return from_params(re);
    }
    PolyForm h = c.omega + poly_star(c.omega);
    for (int i = 0; i < h.size(); ++i) h(i) = Poly(Cyc::frac(1, 2)) * h(i);
    return {h, std::nullopt};
}

bool is_hermitian(const Connection& c) { return poly_star(c.omega) == c.omega; }

std::string format_poly_form(const PolyForm& u) {
    const AlgebraTable& A = wz_forms::algebra();
    std::string out;
    for (int i = 0; i < u.size(); ++i) {
        if (u(i).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + u(i).str(variable_names()) + ")*" + A.labels[i];
    }
    return out.empty() ? "0" : out;
}

Report verify() {
    Report rep;
    rep.title = "connections and curvature";
    const auto& F = param_forms();
    {
        CycMatrix B = zeros(wz_forms::kDim, kParams);
        for (int k = 0; k < kParams; ++k) B.col(k) = F[k];
        rep.add("the 18 parameter one-forms are a basis of Omega^1", rank(B) == 18);
        bool fixed = true;
        std::string w;
        for (int k = 0; k < kParams; ++k)
            if (star_form(F[k]) != F[k]) {
                fixed = false;
                w = param_names()[k];
            }
        rep.add("each parameter one-form is star-invariant", fixed, w);
    }
    rep.add("omega = 0 gives rho = 0", is_zero(curvature(zero_vector(wz_forms::kDim))));

    // block structure, for symbolic complex parameters
    struct Expect {
        Block b;
        bool dphi_zero, phi2_zero;
        std::string rho;
    };
    const std::vector<Expect> bullets = {
        {Block::Irr3, false, true, "3_irr"},
        {Block::Eve3, true, false, "3_odd"},
        {Block::IrrPrime3, true, false, "3_irr"},
        {Block::Odd3, false, true, "3_odd"},
        {Block::Eve6, false, false, "3_eve"},
    };
    for (const auto& e : bullets) {
        Classification c = classify_curvature(symbolic({e.b}));
        std::string got = std::string(c.dphi_zero ? "dphi = 0" : "dphi != 0") + ", " +
                          (c.phi2_zero ? "phi^2 = 0" : "phi^2 != 0") + ", rho in " + c.rho;
        rep.add("block " + block_name(e.b) + ": " + (e.dphi_zero ? "dphi = 0" : "dphi != 0") + ", " +
                    (e.phi2_zero ? "phi^2 = 0" : "phi^2 != 0") + ", rho in " + e.rho,
                c.dphi_zero == e.dphi_zero && c.phi2_zero == e.phi2_zero && c.rho == e.rho, got);
    }
    {
        Connection c = symbolic({Block::Irr3});
        rep.add("block 3i: dphi in 3_irr", sector_label(poly_d(c.omega)) == "3_irr");
        Connection o = symbolic({Block::Odd3});
        rep.add("block 3o: dphi in 3_odd", sector_label(poly_d(o.omega)) == "3_odd");
        Connection s = symbolic({Block::Eve6});
        PolyForm dphi = poly_d(s.omega), phi2 = poly_mul(s.omega, s.omega);
        rep.add("block 6e: dphi in 2, phi^2 in 3_eve",
                !is_zero(dphi) && in_submodule(dphi, "2") && sector_label(phi2) == "3_eve");
    }
    {
        // hermitian 3_eve connection
        Connection c = symbolic({Block::Eve3});
        std::vector<int> imag;
        for (int k = 0; k < kParams; ++k) imag.push_back(kParams + k);
        PolyForm rho = curvature(c);
        for (int i = 0; i < rho.size(); ++i) rho(i) = rho(i).drop_vars(imag);
        Poly ae1 = Poly::var(6), ae2 = Poly::var(7), ae3 = Poly::var(8);
        PolyForm expect = pzero();
        expect(wz_forms::index(DxDy, 0)) = (ae1 * ae3 - ae2 * ae2) * Poly(Cyc(1) - kQ);
        rep.add("hermitian 3_eve: rho = (a_e1 a_e3 - a_e2^2)(1 - q) dx dy", rho == expect, format_poly_form(rho));
        rep.add("hermitian 3_eve: rho lies in the singlet", in_submodule(rho, "1"));
        Connection h = hermitian_projection(c);
        rep.add("hermitian projection of a 3_eve connection is hermitian", is_hermitian(h));
        rep.add("hermitian projection is idempotent", hermitian_projection(h).omega == h.omega);
    }
    {
        // phi = phi* iff all parameters are real
        Connection all = symbolic(blocks());
        PolyForm diff = all.omega - poly_star(all.omega);
        bool ok = true;
        for (int i = 0; i < diff.size(); ++i) {
            std::vector<int> real;
            for (int k = 0; k < kParams; ++k) real.push_back(k);
            ok = ok && diff(i).drop_vars(real) == diff(i);  // only imaginary parts survive
        }
        rep.add("phi - phi* involves only the imaginary parts of the parameters", ok && !is_zero(diff));
        Connection h = hermitian_projection(all);
        rep.add("projection of the general connection is hermitian", is_hermitian(h));
        Connection numeric = from_form(Cyc::sqrt_m3() * dx());
        rep.add("projection of sqrt(-3) dx is 0", is_zero(hermitian_projection(numeric).omega));
        // with parameters, projecting the parameters agrees with (phi + phi*)/2
        Connection plain{all.omega, std::nullopt};
        rep.add("parameter projection equals (phi + phi*)/2", hermitian_projection(plain).omega == h.omega);
    }

    std::mt19937 rng(20240531);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    auto rnd = [&] { return Cyc::frac(num(rng), den(rng)) + Cyc::frac(num(rng), den(rng)) * kQ; };
    auto random_one_form = [&] {
        WZForm w = zero_vector(wz_forms::kDim);
        for (int i = 9; i < 27; ++i) w(i) = rnd();
        return w;
    };
    {
        bool cov = true, cross = true;
        std::string w;
        int done = 0;
        while (done < 20) {
            WZForm om = random_one_form(), om2 = random_one_form();
            qplane::MElem u = zero_vector(qplane::kDim);
            for (int i = 0; i < qplane::kDim; ++i) u(i) = rnd();
            qplane::MElem ui;
            try {
                ui = qplane::invert(u);
            } catch (const std::domain_error&) {
                continue;
            }
            ++done;
            WZForm rho = curvature(om);
            WZForm lhs = curvature(gauge_transform(om, u));
            WZForm rhs = wz_mul(wz_mul(from_function(ui), rho), from_function(u));
            if (lhs != rhs) {
                cov = false;
                w = "sample " + std::to_string(done);
            }
            WZForm c = curvature(WZForm(om + om2)) - rho - curvature(om2);
            cross = cross && c == wz_mul(om, om2) + wz_mul(om2, om);
        }
        rep.add("rho(omega') = u^-1 rho(omega) u for 20 random pairs", cov, w);
        rep.add("rho(w1 + w2) - rho(w1) - rho(w2) = w1 w2 + w2 w1", cross);
    }
    {
        WZForm om = random_one_form();
        rep.add("u = 1 leaves omega unchanged", gauge_transform(om, qplane::one()) == om);
        WZForm lhs = curvature(gauge_transform(om, qplane::x()));
        WZForm rhs = wz_mul(wz_mul(basis(2, 0, One), curvature(om)), basis(1, 0, One));
        rep.add("u = x: rho' = x^2 rho x", lhs == rhs);
        bool threw = false;
        try {
            gauge_transform(om, qplane::elementary_expansion(1, 1));
        } catch (const std::domain_error&) {
            threw = true;
        }
        rep.add("non-invertible u is rejected", threw);
    }
    {
        // symbolic gauge covariance for the full connection and u = 1 + x
        Connection all = symbolic(blocks());
        qplane::MElem u = qplane::one() + qplane::x();
        PolyForm lhs = curvature(gauge_transform(all, u));
        PolyForm rhs = poly_mul(poly_mul(to_poly(from_function(qplane::invert(u))), curvature(all)),
                                to_poly(from_function(u)));
        rep.add("symbolic covariance with u = 1 + x", lhs == rhs);
    }
    {
        bool threw = false;
        try {
            classify_curvature(symbolic({Block::Eve3, Block::Odd3}));
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        rep.add("mixed-block input is rejected", threw);
    }
    return rep;
}

}  // namespace qroot3::gauge
