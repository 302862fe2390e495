#include "qroot3/grassmann.hpp"

namespace qroot3 {

bool Grass4::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Grass4& Grass4::operator+=(const Grass4& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

Grass4& Grass4::operator-=(const Grass4& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

Grass4 operator*(const Grass4& a, const Grass4& b) {
    Grass4 r;
    r.c_[0] = a.c_[0] * b.c_[0];
    r.c_[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
    r.c_[2] = a.c_[0] * b.c_[2] + a.c_[2] * b.c_[0];
    r.c_[3] = a.c_[0] * b.c_[3] + a.c_[3] * b.c_[0] + a.c_[1] * b.c_[2] - a.c_[2] * b.c_[1];
    return r;
}

namespace {

std::string join_terms(const std::vector<std::pair<Cyc, std::string>>& terms) {
    std::string out;
    for (const auto& [c, sym] : terms) {
        if (c.is_zero()) continue;
        std::string t;
        if (sym.empty()) t = to_string(c);
        else if (c.is_one()) t = sym;
        else if (c == Cyc(-1)) t = "-" + sym;
        else t = to_string(c) + "*" + sym;
        if (out.empty()) out = t;
        else if (t[0] == '-') out += " - " + t.substr(1);
        else out += " + " + t;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string Grass4::str() const {
    return join_terms({{c_[0], ""}, {c_[1], "t1"}, {c_[2], "t2"}, {c_[3], "t1*t2"}});
}

Grass9 Grass9::xi(int i, int j, const Cyc& c) {
    Grass9 g;
    if (i < 3 && j < 3) g.c_[3 * i + j] = c;
    return g;
}

bool Grass9::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Grass9& Grass9::operator+=(const Grass9& o) {
    for (int i = 0; i < 9; ++i) c_[i] += o.c_[i];
    return *this;
}

Grass9& Grass9::operator-=(const Grass9& o) {
    for (int i = 0; i < 9; ++i) c_[i] -= o.c_[i];
    return *this;
}

Grass9 operator*(const Grass9& a, const Grass9& b) {
    Grass9 r;
    for (int x = 0; x < 9; ++x) {
        if (a.c_[x].is_zero()) continue;
        for (int y = 0; y < 9; ++y) {
            if (b.c_[y].is_zero()) continue;
            int i = x / 3 + y / 3, j = x % 3 + y % 3;
            if (i < 3 && j < 3) r.c_[3 * i + j] += a.c_[x] * b.c_[y];
        }
    }
    return r;
}

std::string Grass9::str() const {
    std::vector<std::pair<Cyc, std::string>> terms;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::string s;
            if (i) s += i == 1 ? "xi1" : "xi1^2";
            if (j) s += std::string(s.empty() ? "" : "*") + (j == 1 ? "xi2" : "xi2^2");
            terms.emplace_back(c_[3 * i + j], s);
        }
    return join_terms(terms);
}

G4Matrix matmul(const G4Matrix& a, const G4Matrix& b) {
    G4Matrix r = G4Matrix::Constant(a.rows(), b.cols(), Grass4());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

G9Matrix matmul(const G9Matrix& a, const G9Matrix& b) {
    G9Matrix r = G9Matrix::Constant(a.rows(), b.cols(), Grass9());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

}  // namespace qroot3
