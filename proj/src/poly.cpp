#include "qroot3/poly.hpp"

#include <sstream>

namespace qroot3 {

namespace {

Poly::Monomial trim(Poly::Monomial m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

Poly::Monomial mono_mul(const Poly::Monomial& a, const Poly::Monomial& b) {
    Poly::Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

}  // namespace

Poly::Poly(const Cyc& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

Poly Poly::var(int i) {
    Poly p;
    Monomial m(i + 1, 0);
    m[i] = 1;
    p.terms_[m] = Cyc(1);
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Cyc Poly::constant() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Cyc(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Cyc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::conj() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
    return r;
}

Poly Poly::drop_vars(const std::vector<int>& vars) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int v : vars)
            if (v < static_cast<int>(m.size()) && m[v] > 0) keep = false;
        if (keep) r.add_term(m, c);
    }
    return r;
}

Cyc Poly::eval(const std::vector<Cyc>& point) const {
    Cyc s;
    for (const auto& [m, c] : terms_) {
        Cyc t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) t *= point.at(i);
        s += t;
    }
    return s;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [m, c] : a.terms_)
        for (const auto& [n, d] : b.terms_) r.add_term(trim(mono_mul(m, n)), c * d);
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "v" + std::to_string(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coef = to_string(c);
        std::string term;
        if (mono.empty()) term = coef;
        else if (c.is_one()) term = mono;
        else if (c == Cyc(-1)) term = "-" + mono;
        else term = coef + "*" + mono;
        if (first) os << term;
        else if (term[0] == '-') os << " - " << term.substr(1);
        else os << " + " << term;
        first = false;
    }
    return os.str();
}

PolyVector to_poly(const CycVector& v) {
    PolyVector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Poly(v(i));
    return r;
}

PolyMatrix to_poly(const CycMatrix& m) {
    PolyMatrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Poly(m(i, j));
    return r;
}

bool is_zero(const PolyVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

bool is_zero(const PolyMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

Poly det(const PolyMatrix& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Poly(1);
    if (n == 1) return m(0, 0);
    Poly s;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        Poly t = m(0, j) * det(minor);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

}  // namespace qroot3
