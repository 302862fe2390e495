#include <doctest.h>

#include <random>

#include "qroot3/wz_forms.hpp"

using namespace qroot3;
using namespace qroot3::wz_forms;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();

WZForm fn(int r, int s, Gen g = One, const Cyc& c = Cyc(1)) { return basis(r, s, g, c); }
}  // namespace

TEST_CASE("Manin relations") {
    CHECK(is_zero(wz_mul(dx(), dx())));
    CHECK(is_zero(wz_mul(dy(), dy())));
    CHECK(is_zero(CycVector(q * wz_mul(dx(), dy()) + wz_mul(dy(), dx()))));
    CHECK(manin_check().ok());
}

TEST_CASE("commutation of coordinates and differentials") {
    CHECK(wz_mul(dx(), from_function(qplane::x())) == fn(1, 0, Dx, q));
    CHECK(wz_mul(dy(), from_function(qplane::x())) == fn(0, 1, Dx, q - Cyc(1)) + fn(1, 0, Dy, q2));
    CHECK(wz_mul(dx(), from_function(qplane::y())) == fn(0, 1, Dx, q2));
    CHECK(wz_mul(dy(), from_function(qplane::y())) == fn(0, 1, Dy, q));
    CHECK(is_zero(wz_mul(dxdy(), dxdy())));
}

TEST_CASE("exterior derivative") {
    CHECK(d(fn(2, 0)) == fn(1, 0, Dx, -q2));
    CHECK(is_zero(d(wz_mul(fn(2, 0), from_function(qplane::x())))));
    for (int i = 0; i < kDim; ++i) CHECK(is_zero(d(d(algebra().basis(i)))));
    CHECK(is_zero(d(from_function(qplane::one()))));
}

TEST_CASE("closed form of d on matrices") {
    CycMatrix E12 = qplane::elementary(1, 2);
    DmPair p = dm_closed_form(E12);
    CHECK(p.y(0, 0) == Cyc(1));
    CHECK(is_zero(dm_matrix(identity(3))));
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> n(-3, 3);
    for (int k = 0; k < 5; ++k) {
        CycMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = Cyc(n(rng)) + Cyc(n(rng)) * q;
        CHECK(dm_matrix(m) == dm_from_closed_form(m));
    }
}

TEST_CASE("H acting on forms") {
    CHECK(h_act_on_forms(env_h::xp(), fn(0, 1, Dy), Side::L) == fn(1, 0, Dy) + fn(0, 1, Dx, q2));
    CHECK(h_act_on_forms(env_h::k(), dxdy(), Side::L) == dxdy());
    CHECK(is_zero(h_act_on_forms(env_h::xp(), dx(), Side::L)));
    CHECK(h_act_on_forms(env_h::xm(), dx(), Side::L) == dy());
    for (const env_h::HElem& h : {env_h::xp(), env_h::xm()}) CHECK(is_zero(h_act_on_forms(h, dxdy(), Side::L)));
}

TEST_CASE("cohomology") {
    auto c = cohomology();
    CHECK(c[0].z == 1);
    CHECK(c[0].b == 0);
    CHECK(c[0].h == 1);
    CHECK(c[1].z == 10);
    CHECK(c[1].b == 8);
    CHECK(c[1].h == 2);
    CHECK(c[2].z == 9);
    CHECK(c[2].b == 8);
    CHECK(c[2].h == 1);
    CHECK(c[0].h - c[1].h + c[2].h == 0);
}

TEST_CASE("star on forms") {
    CHECK(star_form(dx()) == dx());
    CHECK(star_form(dxdy()) == -q * dxdy());
    for (int i = 0; i < kDim; ++i) {
        WZForm w = algebra().basis(i);
        const int p = degree_of(i);
        CHECK(d(star_form(w)) == (p % 2 ? Cyc(-1) : Cyc(1)) * star_form(d(w)));
    }
}

TEST_CASE("top degree products vanish") {
    for (int i = 27; i < kDim; ++i)
        for (int j = 9; j < kDim; ++j) CHECK(is_zero(wz_mul(algebra().basis(i), algebra().basis(j))));
}
