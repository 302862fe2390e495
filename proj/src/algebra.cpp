#include "qroot3/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace qroot3 {

SparseVec to_sparse(const CycVector& v) {
    SparseVec s;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) s.emplace_back(static_cast<int>(i), v(i));
    return s;
}

CycVector to_dense(const SparseVec& s, int dim) {
    CycVector v = zero_vector(dim);
    for (const auto& [i, c] : s) v(i) += c;
    return v;
}

void Report::add(std::string name, bool pass, std::string witness) {
    checks.push_back(Check{std::move(name), pass, std::move(witness)});
}

void Report::add_xfail(std::string name, bool pass, std::string witness) {
    checks.push_back(Check{std::move(name), pass, std::move(witness), true});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks) checks.push_back(Check{prefix + c.name, c.pass, c.witness, c.xfail});
}

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.ok() ? 0 : 1;
    return n;
}

std::string format_report(const Report& r) {
    std::ostringstream os;
    if (!r.title.empty()) os << "== " << r.title << "\n";
    for (const auto& c : r.checks) {
        const char* tag = c.xfail ? (c.pass ? "XPASS " : "XFAIL ") : (c.pass ? "PASS " : "FAIL ");
        os << tag << c.name;
        if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    return os.str();
}

CycVector multiply(const AlgebraTable& a, const CycVector& u, const CycVector& v) {
    CycVector r = zero_vector(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        if (u(i).is_zero()) continue;
        for (int j = 0; j < a.dim; ++j) {
            if (v(j).is_zero()) continue;
            Cyc s = u(i) * v(j);
            for (const auto& [k, c] : a.product(i, j)) r(k) += s * c;
        }
    }
    return r;
}

CycVector power(const AlgebraTable& a, const CycVector& u, int k) {
    CycVector r = a.unit;
    for (int i = 0; i < k; ++i) r = multiply(a, r, u);
    return r;
}

CycMatrix left_mult_matrix(const AlgebraTable& a, const CycVector& u) {
    CycMatrix m = zeros(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j) m.col(j) = multiply(a, u, a.basis(j));
    return m;
}

CycMatrix right_mult_matrix(const AlgebraTable& a, const CycVector& u) {
    CycMatrix m = zeros(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j) m.col(j) = multiply(a, a.basis(j), u);
    return m;
}

AlgebraTable tensor(const AlgebraTable& a, const AlgebraTable& b) {
    AlgebraTable t;
    t.name = a.name + "(x)" + b.name;
    t.dim = a.dim * b.dim;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j) t.labels.push_back(a.labels[i] + "(x)" + b.labels[j]);
    t.mult.resize(static_cast<size_t>(t.dim) * t.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < a.dim; ++k)
                for (int l = 0; l < b.dim; ++l) {
                    SparseVec& out = t.mult[static_cast<size_t>(i * b.dim + j) * t.dim + (k * b.dim + l)];
                    for (const auto& [m, c] : a.product(i, k))
                        for (const auto& [n, d] : b.product(j, l)) out.emplace_back(m * b.dim + n, c * d);
                }
    t.unit = tensor_elem(a.unit, b.unit);
    return t;
}

CycVector tensor_elem(const CycVector& u, const CycVector& v) {
    CycVector r = zero_vector(static_cast<int>(u.size() * v.size()));
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (u(i).is_zero()) continue;
        for (Eigen::Index j = 0; j < v.size(); ++j)
            if (!v(j).is_zero()) r(i * v.size() + j) = u(i) * v(j);
    }
    return r;
}

CycVector tensor_multiply(const AlgebraTable& a, const AlgebraTable& b, const CycVector& u, const CycVector& v) {
    const int n = a.dim * b.dim;
    CycVector r = zero_vector(n);
    SparseVec su = to_sparse(u), sv = to_sparse(v);
    for (const auto& [x, cx] : su) {
        const int i = x / b.dim, j = x % b.dim;
        for (const auto& [y, cy] : sv) {
            const int k = y / b.dim, l = y % b.dim;
            Cyc s = cx * cy;
            for (const auto& [m, c] : a.product(i, k))
                for (const auto& [p, d] : b.product(j, l)) r(m * b.dim + p) += s * c * d;
        }
    }
    return r;
}

CycVector flip(const CycVector& t, int dimV, int dimW) {
    CycVector r = zero_vector(dimV * dimW);
    for (int i = 0; i < dimV; ++i)
        for (int j = 0; j < dimW; ++j) r(j * dimV + i) = t(i * dimW + j);
    return r;
}

std::string format_element(const AlgebraTable& a, const CycVector& v) {
    return format_tensor({&a}, v);
}

std::string format_tensor(const std::vector<const AlgebraTable*>& factors, const CycVector& v) {
    std::string out;
    for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
        if (v(idx).is_zero()) continue;
        long rem = idx;
        std::vector<std::string> parts(factors.size());
        for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
            parts[f] = factors[f]->labels[rem % factors[f]->dim];
            rem /= factors[f]->dim;
        }
        std::string mono;
        for (size_t f = 0; f < parts.size(); ++f) mono += (f ? "(x)" : "") + parts[f];
        std::string term;
        if (mono == "1") term = to_string(v(idx));
        else if (v(idx).is_one()) term = mono;
        else if (v(idx) == Cyc(-1)) term = "-" + mono;
        else term = to_string(v(idx)) + "*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

CycVector coproduct(const HopfDescriptor& h, const CycVector& u) {
    const int d = h.alg.dim;
    CycVector r = zero_vector(d * d);
    for (int i = 0; i < d; ++i) {
        if (u(i).is_zero()) continue;
        for (const auto& [k, c] : h.comult[i]) r(k) += u(i) * c;
    }
    return r;
}

Cyc counit(const HopfDescriptor& h, const CycVector& u) {
    Cyc s;
    for (int i = 0; i < h.alg.dim; ++i)
        if (!u(i).is_zero() && !h.counit(i).is_zero()) s += u(i) * h.counit(i);
    return s;
}

CycVector antipode(const HopfDescriptor& h, const CycVector& u) { return h.antipode * u; }

CycVector coproduct_left(const HopfDescriptor& h, const CycVector& t) {
    const long d = h.alg.dim;
    CycVector r = zero_vector(static_cast<int>(d * d * d));
    for (long x = 0; x < d * d; ++x) {
        if (t(x).is_zero()) continue;
        const long i = x / d, j = x % d;
        for (const auto& [k, c] : h.comult[i]) r(k * d + j) += t(x) * c;
    }
    return r;
}

CycVector coproduct_right(const HopfDescriptor& h, const CycVector& t) {
    const long d = h.alg.dim;
    CycVector r = zero_vector(static_cast<int>(d * d * d));
    for (long x = 0; x < d * d; ++x) {
        if (t(x).is_zero()) continue;
        const long i = x / d, j = x % d;
        for (const auto& [k, c] : h.comult[j]) r(i * d * d + k) += t(x) * c;
    }
    return r;
}

namespace {

std::string lbl(const AlgebraTable& a, int i) { return a.labels[i]; }

// m (f (x) g) Delta(e_i) for linear maps f, g given as matrices.
CycVector apply_mult_pair(const HopfDescriptor& h, int i, const CycMatrix* f, const CycMatrix* g) {
    const int d = h.alg.dim;
    CycVector r = zero_vector(d);
    for (const auto& [k, c] : h.comult[i]) {
        CycVector left = h.alg.basis(k / d), right = h.alg.basis(k % d);
        if (f) left = (*f) * left;
        if (g) right = (*g) * right;
        r += c * multiply(h.alg, left, right);
    }
    return r;
}

}  // namespace

Report check_hopf(const HopfDescriptor& h) {
    Report rep;
    rep.title = "Hopf axioms for " + h.alg.name;
    const AlgebraTable& A = h.alg;
    const int d = A.dim;

    {  // associativity
        std::string w;
        bool ok = true;
        std::vector<Cyc> lhs(d), rhs(d);
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
                for (int k = 0; k < d && ok; ++k) {
                    std::fill(lhs.begin(), lhs.end(), Cyc(0));
                    std::fill(rhs.begin(), rhs.end(), Cyc(0));
                    for (const auto& [m, c] : A.product(i, j))
                        for (const auto& [n, e] : A.product(m, k)) lhs[n] += c * e;
                    for (const auto& [m, c] : A.product(j, k))
                        for (const auto& [n, e] : A.product(i, m)) rhs[n] += c * e;
                    if (lhs != rhs) {
                        ok = false;
                        w = "(" + lbl(A, i) + "*" + lbl(A, j) + ")*" + lbl(A, k);
                    }
                }
        rep.add("associativity", ok, w);
    }
    {  // unit
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            CycVector e = A.basis(i);
            if (multiply(A, A.unit, e) != e || multiply(A, e, A.unit) != e) {
                ok = false;
                w = lbl(A, i);
            }
        }
        rep.add("unit law", ok, w);
    }
    std::vector<CycVector> delta(d);
    for (int i = 0; i < d; ++i) delta[i] = to_dense(h.comult[i], d * d);
    {  // coassociativity
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i)
            if (coproduct_left(h, delta[i]) != coproduct_right(h, delta[i])) {
                ok = false;
                w = lbl(A, i);
            }
        rep.add("coassociativity", ok, w);
    }
    {  // counit
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            CycVector l = zero_vector(d), r = zero_vector(d);
            for (const auto& [k, c] : h.comult[i]) {
                l(k % d) += c * h.counit(k / d);
                r(k / d) += c * h.counit(k % d);
            }
            if (l != A.basis(i) || r != A.basis(i)) {
                ok = false;
                w = lbl(A, i);
            }
        }
        rep.add("counit law", ok, w);
    }
    {  // Delta is an algebra morphism
        bool ok = coproduct(h, A.unit) == tensor_elem(A.unit, A.unit);
        std::string w = ok ? "" : "Delta(1) != 1(x)1";
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
                CycVector lhs = coproduct(h, to_dense(A.product(i, j), d));
                CycVector rhs = tensor_multiply(A, A, delta[i], delta[j]);
                if (lhs != rhs) {
                    ok = false;
                    w = "Delta(" + lbl(A, i) + "*" + lbl(A, j) + ") != Delta(" + lbl(A, i) + ")Delta(" + lbl(A, j) +
                        ")";
                }
            }
        rep.add("coproduct is an algebra morphism", ok, w);
    }
    {  // counit is an algebra morphism
        bool ok = counit(h, A.unit).is_one();
        std::string w = ok ? "" : "eps(1) != 1";
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
                if (counit(h, to_dense(A.product(i, j), d)) != h.counit(i) * h.counit(j)) {
                    ok = false;
                    w = "eps(" + lbl(A, i) + "*" + lbl(A, j) + ")";
                }
        rep.add("counit is an algebra morphism", ok, w);
    }
    {  // antipode
        bool ok = true;
        std::string w;
        for (int i = 0; i < d && ok; ++i) {
            CycVector expect = h.counit(i) * A.unit;
            if (apply_mult_pair(h, i, &h.antipode, nullptr) != expect ||
                apply_mult_pair(h, i, nullptr, &h.antipode) != expect) {
                ok = false;
                w = lbl(A, i);
            }
        }
        rep.add("antipode axiom", ok, w);
    }
    return rep;
}

Report check_module(const HopfDescriptor& h, const ModuleAction& act) {
    Report rep;
    rep.title = "module axioms";
    const AlgebraTable& A = h.alg;
    const int d = A.dim;
    const int n = static_cast<int>(act.rho[0].rows());
    auto rho_of = [&](const CycVector& u) {
        CycMatrix m = zeros(n, n);
        for (int i = 0; i < d; ++i)
            if (!u(i).is_zero()) m += u(i) * act.rho[i];
        return m;
    };
    // nonzero entries per column, the action matrices are mostly sparse
    std::vector<std::vector<std::vector<std::pair<int, Cyc>>>> cols(d);
    for (int i = 0; i < d; ++i) {
        cols[i].resize(n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r)
                if (!act.rho[i](r, c).is_zero()) cols[i][c].push_back({r, act.rho[i](r, c)});
    }
    auto product = [&](int a, int b) {
        CycMatrix m = zeros(n, n);
        for (int c = 0; c < n; ++c)
            for (const auto& [k, y] : cols[b][c])
                for (const auto& [r, x] : cols[a][k]) m(r, c) += x * y;
        return m;
    };
    bool ok = rho_of(A.unit) == identity(n);
    std::string w = ok ? "" : "unit acts nontrivially";
    for (int i = 0; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j) {
            CycMatrix lhs = rho_of(to_dense(A.product(i, j), d));
            CycMatrix rhs = act.right ? product(j, i) : product(i, j);
            if (lhs != rhs) {
                ok = false;
                w = "rho(" + A.labels[i] + "*" + A.labels[j] + ")";
            }
        }
    rep.add(act.right ? "right module" : "left module", ok, w);
    return rep;
}

Report check_module_algebra(const HopfDescriptor& h, const ModuleAction& act, const AlgebraTable& v) {
    Report rep;
    rep.title = "module-algebra axioms";
    const AlgebraTable& A = h.alg;
    const int d = A.dim, n = v.dim;
    std::vector<std::vector<SparseVec>> cols(d, std::vector<SparseVec>(n));
    for (int i = 0; i < d; ++i)
        for (int z = 0; z < n; ++z) cols[i][z] = to_sparse(act.rho[i].col(z));
    bool ok = true;
    std::string w;
    for (int i = 0; i < d && ok; ++i) {
        // h[1] = eps(h) 1
        if (act.rho[i] * v.unit != h.counit(i) * v.unit) {
            ok = false;
            w = A.labels[i] + "[1] != eps(" + A.labels[i] + ")1";
            break;
        }
        for (int z = 0; z < n && ok; ++z)
            for (int y = 0; y < n && ok; ++y) {
                CycVector diff = zero_vector(n);
                for (const auto& [k, c] : v.product(z, y))
                    for (const auto& [r, x] : cols[i][k]) diff(r) += c * x;
                for (const auto& [k, c] : h.comult[i])
                    for (const auto& [s, a] : cols[k / d][z])
                        for (const auto& [t, b] : cols[k % d][y]) {
                            Cyc f = c * a * b;
                            for (const auto& [r, x] : v.product(s, t)) diff(r) -= f * x;
                        }
                if (!is_zero(diff)) {
                    ok = false;
                    w = A.labels[i] + "[" + v.labels[z] + "*" + v.labels[y] + "] != " + A.labels[i] + "_1[" +
                        v.labels[z] + "]" + A.labels[i] + "_2[" + v.labels[y] + "]";
                }
            }
    }
    rep.add("module-algebra (twisted Leibniz)", ok, w);
    return rep;
}

Report check_comodule_algebra(const HopfDescriptor& h, const Coaction& co, const AlgebraTable& v) {
    Report rep;
    rep.title = "comodule-algebra axioms";
    const AlgebraTable& F = h.alg;
    const int d = F.dim, n = v.dim;
    auto coact = [&](const CycVector& z) {
        CycVector r = zero_vector(n * d);
        for (int i = 0; i < n; ++i)
            if (!z(i).is_zero()) r += z(i) * co.image[i];
        return r;
    };
    {  // coassociativity
        bool ok = true;
        std::string w;
        for (int z = 0; z < n && ok; ++z) {
            const CycVector& t = co.image[z];
            CycVector lhs = zero_vector(n * d * d), rhs = zero_vector(n * d * d);
            for (int x = 0; x < n * d; ++x) {
                if (t(x).is_zero()) continue;
                if (co.right) {  // t in V (x) F
                    const int vi = x / d, fi = x % d;
                    // (Delta_R (x) id)
                    const CycVector& inner = co.image[vi];
                    for (int y = 0; y < n * d; ++y)
                        if (!inner(y).is_zero()) lhs(static_cast<long>(y) * d + fi) += t(x) * inner(y);
                    // (id (x) Delta)
                    for (const auto& [k, c] : h.comult[fi]) rhs(static_cast<long>(vi) * d * d + k) += t(x) * c;
                } else {  // t in F (x) V
                    const int fi = x / n, vi = x % n;
                    // (id (x) Delta_L)
                    const CycVector& inner = co.image[vi];
                    for (int y = 0; y < n * d; ++y)
                        if (!inner(y).is_zero()) lhs(static_cast<long>(fi) * d * n + y) += t(x) * inner(y);
                    // (Delta (x) id)
                    for (const auto& [k, c] : h.comult[fi]) rhs(static_cast<long>(k) * n + vi) += t(x) * c;
                }
            }
            if (lhs != rhs) {
                ok = false;
                w = v.labels[z];
            }
        }
        rep.add("coaction coassociativity", ok, w);
    }
    {  // counit
        bool ok = true;
        std::string w;
        for (int z = 0; z < n && ok; ++z) {
            CycVector r = zero_vector(n);
            const CycVector& t = co.image[z];
            for (int x = 0; x < n * d; ++x) {
                if (t(x).is_zero()) continue;
                if (co.right) r(x / d) += t(x) * h.counit(x % d);
                else r(x % n) += t(x) * h.counit(x / n);
            }
            if (r != v.basis(z)) {
                ok = false;
                w = v.labels[z];
            }
        }
        rep.add("coaction counit", ok, w);
    }
    {  // algebra morphism
        bool ok = true;
        std::string w;
        CycVector one = co.right ? tensor_elem(v.unit, F.unit) : tensor_elem(F.unit, v.unit);
        if (coact(v.unit) != one) {
            ok = false;
            w = "unit";
        }
        for (int z = 0; z < n && ok; ++z)
            for (int y = 0; y < n && ok; ++y) {
                CycVector lhs = coact(to_dense(v.product(z, y), n));
                CycVector rhs = co.right ? tensor_multiply(v, F, co.image[z], co.image[y])
                                         : tensor_multiply(F, v, co.image[z], co.image[y]);
                if (lhs != rhs) {
                    ok = false;
                    w = v.labels[z] + "*" + v.labels[y];
                }
            }
        rep.add("coaction is an algebra morphism", ok, w);
    }
    return rep;
}

TensorSpace::TensorSpace(std::vector<const AlgebraTable*> factors) : factors_(std::move(factors)) {
    stride_.assign(factors_.size(), 1);
    for (int f = static_cast<int>(factors_.size()) - 1; f >= 0; --f) {
        stride_[f] = total_;
        total_ *= factors_[f]->dim;
    }
    for (const auto* a : factors_) {
        int u = -1;
        for (int i = 0; i < a->dim; ++i)
            if (!a->unit(i).is_zero()) {
                if (u >= 0 || !a->unit(i).is_one()) throw std::invalid_argument("TensorSpace: unit must be a basis element");
                u = i;
            }
        unitIndex_.push_back(u);
    }
}

long TensorSpace::index(const std::vector<int>& ids) const {
    long r = 0;
    for (size_t f = 0; f < ids.size(); ++f) r += ids[f] * stride_[f];
    return r;
}

std::vector<int> TensorSpace::split(long idx) const {
    std::vector<int> ids(factors_.size());
    for (size_t f = 0; f < factors_.size(); ++f) {
        ids[f] = static_cast<int>(idx / stride_[f]);
        idx %= stride_[f];
    }
    return ids;
}

TensorSpace::Elem TensorSpace::basis_product(long i, long j) const {
    std::vector<int> a = split(i), b = split(j);
    Elem acc;
    acc[0] = Cyc(1);
    for (size_t f = 0; f < factors_.size(); ++f) {
        const SparseVec& p = factors_[f]->product(a[f], b[f]);
        Elem next;
        for (const auto& [k, c] : acc)
            for (const auto& [m, e] : p) {
                Cyc& slot = next[k + m * stride_[f]];
                slot += c * e;
            }
        acc.swap(next);
        if (acc.empty()) break;
    }
    for (auto it = acc.begin(); it != acc.end();) it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

TensorSpace::Elem TensorSpace::multiply(const Elem& u, const Elem& v) const {
    Elem r;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v) {
            Cyc s = a * b;
            for (const auto& [k, c] : basis_product(i, j)) r[k] += s * c;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

void TensorSpace::add_to(Elem& acc, const Elem& u, const Cyc& s) {
    for (const auto& [k, c] : u) {
        Cyc& slot = acc[k];
        slot += s * c;
        if (slot.is_zero()) acc.erase(k);
    }
}

TensorSpace::Elem TensorSpace::scaled(const Elem& u, const Cyc& s) {
    Elem r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : u) r[k] = s * c;
    return r;
}

bool TensorSpace::is_zero(const Elem& u) {
    for (const auto& [k, c] : u)
        if (!c.is_zero()) return false;
    return true;
}

TensorSpace::Elem TensorSpace::difference(const Elem& u, const Elem& v) {
    Elem r = u;
    add_to(r, v, Cyc(-1));
    return r;
}

TensorSpace::Elem TensorSpace::one() const {
    Elem r;
    r[index(unitIndex_)] = Cyc(1);
    return r;
}

TensorSpace::Elem TensorSpace::from_dense(const CycVector& v) const {
    Elem r;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) r[i] = v(i);
    return r;
}

CycVector TensorSpace::to_dense(const Elem& e) const {
    CycVector v = zero_vector(static_cast<int>(total_));
    for (const auto& [k, c] : e) v(k) = c;
    return v;
}

TensorSpace::Elem TensorSpace::embed(const Elem& two, const TensorSpace& pair, int s1, int s2) const {
    Elem r;
    for (const auto& [k, c] : two) {
        std::vector<int> p = pair.split(k);
        std::vector<int> ids = unitIndex_;
        ids[s1] = p[0];
        ids[s2] = p[1];
        r[index(ids)] += c;
    }
    return r;
}

}  // namespace qroot3
