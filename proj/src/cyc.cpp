#include "qroot3/cyc.hpp"

#include <array>
#include <sstream>

namespace qroot3 {

Cyc Cyc::qpow(int k) {
    k %= 3;
    if (k < 0) k += 3;
    if (k == 0) return Cyc(1);
    if (k == 1) return q();
    return q2();
}

Cyc& Cyc::operator*=(const Cyc& o) {
    Rat a = r0_ * o.r0_ - r1_ * o.r1_;
    Rat b = r0_ * o.r1_ + r1_ * o.r0_ - r1_ * o.r1_;
    r0_ = std::move(a);
    r1_ = std::move(b);
    return *this;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(q)");
    Rat n = norm();
    Cyc c = conj();
    return Cyc(c.r0_ / n, c.r1_ / n);
}

std::string rat_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

namespace {

std::string scaled(const Rat& r, const char* sym) {
    if (r == 1) return sym;
    if (r == -1) return std::string("-") + sym;
    return rat_string(r) + "*" + sym;
}

}  // namespace

std::string to_string(const Cyc& c) {
    const Rat& a = c.r0();
    const Rat& b = c.r1();
    // three ways of writing c on two of {1, q, q^2}
    std::array<std::array<Rat, 2>, 3> forms = {{{a, b}, {a - b, -b}, {b - a, -a}}};
    const char* syms[3][2] = {{"", "q"}, {"", "q^2"}, {"q", "q^2"}};
    int best = 0, bestCount = 3;
    for (int k = 0; k < 3; ++k) {
        int n = (sgn(forms[k][0]) != 0) + (sgn(forms[k][1]) != 0);
        if (n < bestCount) { bestCount = n; best = k; }
    }
    if (bestCount == 0) return "0";
    std::string parts[2];
    int np = 0;
    for (int j = 0; j < 2; ++j) {
        const Rat& r = forms[best][j];
        if (sgn(r) == 0) continue;
        const char* s = syms[best][j];
        parts[np++] = (*s == 0) ? rat_string(r) : scaled(r, s);
    }
    if (np == 1) return parts[0];
    std::string out = "(" + parts[0];
    if (parts[1][0] == '-') out += parts[1];
    else out += "+" + parts[1];
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << to_string(c); }

}  // namespace qroot3
