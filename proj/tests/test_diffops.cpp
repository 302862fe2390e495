#include <doctest.h>

#include "qroot3/diffops.hpp"

using namespace qroot3;
using namespace qroot3::diffops;
using qplane::mono;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();
}

TEST_CASE("partial derivatives") {
    CHECK(partial_x(qplane::x()) == qplane::one());
    CHECK(is_zero(partial_y(qplane::x())));
    CHECK(partial_x(mono(2, 0)) == mono(1, 0, -q));
    CHECK(partial_y(mono(0, 2)) == mono(0, 1, -q));
    CHECK(is_zero(matpow(partial_x_matrix(), 3)));
}

TEST_CASE("twisting morphisms") {
    MMat2 s = sigma(qplane::x());
    CHECK(s[0][0] == q2 * qplane::x());
    CHECK(s[0][1] == (q2 - Cyc(1)) * qplane::y());
    for (int z = 0; z < 9; ++z) CHECK(is_zero(sigma(qplane::algebra().basis(z))[1][0]));
    MMat2 t = tau(qplane::y());
    CHECK(t[0][0] == q2 * qplane::y());
}

TEST_CASE("commutation relations") {
    const CycMatrix X = mult(qplane::x()), Y = mult(qplane::y()), I = identity(9);
    const CycMatrix &Px = partial_x_matrix(), &Py = partial_y_matrix();
    CHECK(matmul(Px, X) == I + q2 * matmul(X, Px) + (q2 - Cyc(1)) * matmul(Y, Py));
    CHECK(matmul(Py, Px) == q * matmul(Px, Py));
    Scaling s = scaling_ops();
    CHECK(matmul(s.mu_x, X) == q2 * matmul(X, s.mu_x));
    CHECK(matpow(s.mu_x, 3) == I);
    CHECK(matmul(Px, X) == s.mu_x + matmul(X, Px));
}

TEST_CASE("H generators as differential operators") {
    HDiffOps h = h_generators();
    CHECK(h.xp == env_h::left_action_matrix(env_h::xp()));
    Scaling s = scaling_ops();
    CHECK(matmul(matpow(s.mu_x, 2), matpow(s.mu_y, 2)) == env_h::left_action_matrix(env_h::k()));
    CHECK(q * matmul(matmul(s.mu_x, mult(qplane::y())), partial_x_matrix()) ==
          env_h::left_action_matrix(env_h::xm()));
}

TEST_CASE("monomial basis") {
    CHECK(basis_rank() == 81);
    auto c = order_counts();
    CHECK(c == std::array<int, 5>{9, 18, 27, 18, 9});
    CycVector nf = normal_form(identity(9));
    CHECK(nf == unit_vector(81, 0));
    CHECK(format_normal_form(normal_form(partial_x_matrix())) == "dd_x");
}

TEST_CASE("full report") { CHECK(verify().ok()); }
