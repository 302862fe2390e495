#include <doctest.h>

#include "qroot3/env_h.hpp"
#include "qroot3/fun_f.hpp"
#include "qroot3/poly.hpp"

using namespace qroot3;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();

bool has_failure_with_witness(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.ok() && !c.witness.empty()) return true;
    return false;
}
}  // namespace

TEST_CASE("cyclotomic arithmetic") {
    CHECK(q * q2 == Cyc(1));
    CHECK(Cyc(1) + q + q2 == Cyc(0));
    CHECK(q.conj() == q2);
    CHECK(Cyc::sqrt_m3() * Cyc::sqrt_m3() == Cyc(-3));
    CHECK(Cyc::frac(2, 4) == Cyc::frac(1, 2));
    CHECK((Cyc(3) + q).inv() * (Cyc(3) + q) == Cyc(1));
    CHECK(to_string(q2) == "q^2");
    CHECK(to_string(Cyc(0)) == "0");
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK_THROWS(parse_rat("1/0"));
}

TEST_CASE("exact linear algebra") {
    CHECK(rank(identity(3)) == 3);
    CycMatrix m = zeros(2, 2);
    m(0, 0) = q;
    m(0, 1) = Cyc(1);
    m(1, 0) = q2;
    m(1, 1) = q2 * q2;
    CHECK(rank(m) == 1);
    CHECK(kernel(m).cols() == 1);
    CHECK(is_zero(CycMatrix(m * kernel(m))));
    CycMatrix a = identity(3);
    a(0, 2) = q;
    a(2, 1) = Cyc::frac(1, 3);
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(matmul(a, *inv) == identity(3));
    CHECK(!inverse(m));
}

TEST_CASE("hermitian inertia") {
    CycMatrix g = zeros(3, 3);
    g(0, 2) = q2;
    g(2, 0) = q;
    g(1, 1) = Cyc(1);
    Inertia s = hermitian_inertia(g);
    CHECK(s.plus == 2);
    CHECK(s.minus == 1);
    CHECK(s.zero == 0);
}

TEST_CASE("polynomials with conjugation on coefficients") {
    Poly a = Poly::var(0), b = Poly::var(1);
    Poly p = q * a * b + Cyc(2) * a;
    CHECK(p.conj() == q2 * a * b + Cyc(2) * a);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(p.eval({Cyc(1), Cyc(1)}) == q + Cyc(2));
}

TEST_CASE("Hopf checker") {
    CHECK(check_hopf(fun_f::hopf()).ok());
    CHECK(check_hopf(env_h::hopf()).ok());
    Report bad = check_hopf(fun_f::corrupted_hopf());
    CHECK_FALSE(bad.ok());
    CHECK(has_failure_with_witness(bad));
}

TEST_CASE("module checkers") {
    CHECK(check_module_algebra(env_h::hopf(), env_h::left_action_on_M(), qplane::algebra()).ok());
    CHECK(check_comodule_algebra(fun_f::hopf(), fun_f::right_coaction(), qplane::algebra()).ok());
    ModuleAction reg = env_h::regular_module(env_h::Regular::L);
    CHECK(check_module(env_h::hopf(), reg).ok());
    Report ma = check_module_algebra(env_h::hopf(), reg, env_h::algebra());
    CHECK_FALSE(ma.ok());
    CHECK(has_failure_with_witness(ma));
}

TEST_CASE("tensor space products agree with the dense tensor product") {
    TensorSpace hh({&env_h::algebra(), &env_h::algebra()});
    CycVector u = tensor_elem(env_h::xp(), env_h::k()), v = tensor_elem(env_h::xm(), env_h::xp());
    CycVector dense = tensor_multiply(env_h::algebra(), env_h::algebra(), u, v);
    CHECK(hh.to_dense(hh.multiply(hh.from_dense(u), hh.from_dense(v))) == dense);
    CHECK(flip(flip(u, 27, 27), 27, 27) == u);
}
