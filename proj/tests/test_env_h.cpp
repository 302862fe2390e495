#include <doctest.h>

#include "qroot3/env_h.hpp"

using namespace qroot3;
using namespace qroot3::env_h;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();
}

TEST_CASE("products in H") {
    CHECK(mul(k(), xp()) == q2 * mul(xp(), k()));
    CHECK(mul(xp(), xm()) - mul(xm(), xp()) == (q - q2).inv() * (k() - kinv()));
    CHECK(is_zero(mul(pow(xp(), 2), xp())));
    CHECK(mul(k(), kinv()) == one());
}

TEST_CASE("Hopf structure of H") {
    CHECK(coproduct(xm()) == tensor_elem(xm(), kinv()) + tensor_elem(one(), xm()));
    CHECK(antipode(xp()) == -mul(kinv(), xp()));
    CHECK(antipode(antipode(xp())) == q * xp());
    CHECK(antipode(antipode(xp())) == mul(mul(kinv(), xp()), k()));
}

TEST_CASE("pairing with F") {
    CHECK(pairing(k(), fun_f::a()) == q);
    CHECK(pairing(k(), fun_f::d()) == q2);
    CHECK(pairing(xp(), fun_f::b()) == Cyc(1));
    CHECK(pairing(xm(), fun_f::c()) == Cyc(1));
    CHECK(rank(pairing_matrix()) == 27);
}

TEST_CASE("Casimir") {
    HElem C = casimir();
    for (const HElem& h : {xp(), xm(), k()}) CHECK(mul(C, h) == mul(h, C));
    Structural s = structural_rep(C);
    CHECK(s.b1 == Cyc::frac(-2, 3) * identity(3));
    CHECK(s.b2(1, 1) == Grass4(Cyc::frac(1, 3), 0, 0, -1));
}

TEST_CASE("action on F") {
    CHECK(act_on_F(xm(), fun_f::a()) == fun_f::b());
    CHECK(act_on_F(k(), fun_f::d()) == q2 * fun_f::d());
    for (int i = 0; i < fun_f::kDim; ++i) {
        fun_f::FElem u = fun_f::algebra().basis(i);
        CycVector lhs = fun_f::coproduct(act_on_F(xp(), u));
        CycVector del = fun_f::coproduct(u), rhs = zero_vector(27 * 27);
        for (int a = 0; a < 27; ++a) {
            CycVector right = zero_vector(27);
            for (int b = 0; b < 27; ++b) right(b) = del(a * 27 + b);
            rhs += tensor_elem(fun_f::algebra().basis(a), act_on_F(xp(), right));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("action on M") {
    using qplane::mono;
    CHECK(act_left_on_M(xp(), qplane::y()) == qplane::x());
    CHECK(act_right_on_M(xm(), mono(2, 1)) == qplane::one());
    CHECK(act_left_on_M(k(), mono(1, 1)) == mono(1, 1));
    CHECK(action_table().size() == 54);
    for (const auto& e : action_table()) {
        qplane::MElem z = qplane::algebra().basis(e.basis);
        qplane::MElem got = e.side == 'L' ? act_left_on_M(generator(e.gen), z) : act_right_on_M(generator(e.gen), z);
        CHECK(got == e.expected);
    }
    CycMatrix X = left_mult_matrix(qplane::algebra(), qplane::x());
    CycMatrix Y = left_mult_matrix(qplane::algebra(), qplane::y());
    CycMatrix P = left_action_matrix(xp()), K = left_action_matrix(k());
    CHECK(is_zero(CycMatrix(matmul(P, X) - q * matmul(X, P))));
    CHECK(is_zero(CycMatrix(matmul(K, Y) - q2 * matmul(Y, K))));
}

TEST_CASE("star on H") {
    CHECK(star(xm()) == -q * xm());
    CHECK(star(star(xp())) == xp());
    CHECK(pairing(star(xp()), fun_f::b()) == pairing(xp(), fun_f::star(fun_f::antipode(fun_f::b()))).conj());
}

TEST_CASE("structural realization") {
    Structural s = structural_rep(k());
    CycMatrix d = zeros(3, 3);
    d(0, 0) = q2;
    d(1, 1) = Cyc(1);
    d(2, 2) = q;
    CHECK(s.b1 == d);
    CycMatrix coords = zeros(45, 27);
    for (int i = 0; i < 27; ++i) coords.col(i) = structural_coords(structural_rep(algebra().basis(i)));
    CHECK(rank(coords) == 27);
}

TEST_CASE("regular actions") {
    CHECK(regular_action(Regular::R, xp(), k()) == q2 * mul(xp(), k()));
    CHECK(regular_action(Regular::Lp, xp(), k()) == -xp());
}
