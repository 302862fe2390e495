#include "qroot3/expr.hpp"

#include <cctype>

#include "qroot3/env_h.hpp"
#include "qroot3/fun_f.hpp"
#include "qroot3/wz_forms.hpp"

namespace qroot3::expr {

ParseError::ParseError(size_t p, const std::string& msg)
    : std::runtime_error("parse error at " + std::to_string(p) + ": " + msg), pos(p) {}

Context context_from_name(const std::string& name) {
    if (name == "M") return Context::M;
    if (name == "F") return Context::F;
    if (name == "H") return Context::H;
    if (name == "WZ") return Context::WZ;
    throw std::invalid_argument("unknown algebra '" + name + "' (expected M, F, H or WZ)");
}

std::string context_name(Context c) {
    switch (c) {
        case Context::M: return "M";
        case Context::F: return "F";
        case Context::H: return "H";
        case Context::WZ: return "WZ";
    }
    return "?";
}

const AlgebraTable& context_algebra(Context c) {
    switch (c) {
        case Context::M: return qplane::algebra();
        case Context::F: return fun_f::algebra();
        case Context::H: return env_h::algebra();
        case Context::WZ: return wz_forms::algebra();
    }
    throw std::logic_error("bad context");
}

const std::vector<std::string>& generator_names(Context c) {
    static const std::vector<std::string> m = {"x", "y"}, f = {"a", "b", "c", "d"}, h = {"X+", "X-", "K-", "K"},
                                          wz = {"dx", "dy", "x", "y"};
    switch (c) {
        case Context::M: return m;
        case Context::F: return f;
        case Context::H: return h;
        case Context::WZ: return wz;
    }
    return m;
}

namespace {

CycVector generator(Context c, const std::string& g) {
    switch (c) {
        case Context::M: return g == "x" ? qplane::x() : qplane::y();
        case Context::F:
            if (g == "a") return fun_f::a();
            if (g == "b") return fun_f::b();
            if (g == "c") return fun_f::c();
            return fun_f::d();
        case Context::H:
            if (g == "X+") return env_h::xp();
            if (g == "X-") return env_h::xm();
            if (g == "K") return env_h::k();
            return env_h::kinv();
        case Context::WZ:
            if (g == "dx") return wz_forms::dx();
            if (g == "dy") return wz_forms::dy();
            return wz_forms::from_function(g == "x" ? qplane::x() : qplane::y());
    }
    throw std::logic_error("bad context");
}

class Parser {
public:
    Parser(const std::string& s, Context c) : src_(s), ctx_(c), alg_(context_algebra(c)) {}

    CycVector run() {
        skip();
        if (pos_ >= src_.size()) throw ParseError(pos_, "empty expression");
        CycVector v = expr();
        skip();
        if (pos_ < src_.size()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return v;
    }

private:
    const std::string& src_;
    Context ctx_;
    const AlgebraTable& alg_;
    size_t pos_ = 0;

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    CycVector scalar(const Cyc& c) { return c * alg_.unit; }

    CycVector expr() {
        CycVector acc = scalar(Cyc(0));
        char c = peek();
        bool neg = false;
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++pos_;
        }
        acc = term();
        if (neg) acc = -acc;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            CycVector t = term();
            acc = c == '+' ? CycVector(acc + t) : CycVector(acc - t);
        }
        return acc;
    }

    bool starts_atom() {
        char c = peek();
        if (c == '(' || std::isdigit(static_cast<unsigned char>(c))) return true;
        if (c == 'q') return true;
        return !match_generator().empty();
    }

    CycVector term() {
        CycVector acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = multiply(alg_, acc, factor());
            } else if (starts_atom()) {
                acc = multiply(alg_, acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    CycVector factor() {
        CycVector a = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            if (pos_ < src_.size() && src_[pos_] == '-') throw ParseError(pos_, "negative exponent");
            long e = integer();
            a = power(alg_, a, static_cast<int>(e));
        }
        return a;
    }

    long integer() {
        skip();
        const size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected an integer");
        if (pos_ - start > 9) throw ParseError(start, "integer too large");
        return std::stol(src_.substr(start, pos_ - start));
    }

    // longest generator name at the cursor
    std::string match_generator() {
        std::string best;
        for (const auto& g : generator_names(ctx_))
            if (src_.compare(pos_, g.size(), g) == 0 && g.size() > best.size()) best = g;
        return best;
    }

    CycVector atom() {
        char c = peek();
        if (c == '\0') throw ParseError(pos_, "unexpected end of input");
        if (c == '(') {
            ++pos_;
            CycVector v = expr();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = integer();
            if (peek() == '/') {
                const size_t slash = pos_;
                ++pos_;
                skip();
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError(slash, "division is only allowed between integer literals");
                long d = integer();
                if (d == 0) throw ParseError(slash, "division by zero");
                return scalar(Cyc::frac(n, d));
            }
            return scalar(Cyc(n));
        }
        std::string g = match_generator();
        if (!g.empty()) {
            pos_ += g.size();
            return generator(ctx_, g);
        }
        if (c == 'q') {
            ++pos_;
            return scalar(Cyc::q());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() && std::isalpha(static_cast<unsigned char>(src_[end]))) ++end;
            throw ParseError(pos_, "'" + src_.substr(pos_, end - pos_) + "' is not a generator of " +
                                       context_name(ctx_));
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }
};

}  // namespace

CycVector parse(const std::string& src, Context ctx) { return Parser(src, ctx).run(); }

std::string format(const CycVector& v, Context ctx) { return format_element(context_algebra(ctx), v); }

}  // namespace qroot3::expr
