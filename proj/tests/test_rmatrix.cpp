#include <doctest.h>

#include "qroot3/rmatrix.hpp"

using namespace qroot3;
using namespace qroot3::rmatrix;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();
}

TEST_CASE("factors of the printed formula") {
    CHECK(coefficient(cartan_factor(), env_h::one(), env_h::one()) == (Cyc(3) * q).inv());
    CHECK(coefficient(unipotent_factor(), env_h::xm(), env_h::xp()) == q - q2);
    const TensorHH R = universal_r();
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j)
            if (i / 9 > 0) CHECK(R(i * 27 + j).is_zero());  // no X+ on the left
}

TEST_CASE("quasi-triangularity") {
    const TensorHH R = universal_r(), Ri = r_inverse();
    CHECK(hh_mul(R, Ri) == tensor_elem(env_h::one(), env_h::one()));
    TensorHH del = env_h::coproduct(env_h::k());
    CHECK(hh_mul(hh_mul(R, del), Ri) == flip(del, 27, 27));
    const Normalization& n = normalization();
    REQUIRE(n.found);
    CHECK(n.scale == q);
    CHECK(n.x2_coeff == Cyc(3) * q);
    CHECK(check_quasitriangularity().ok());
}

TEST_CASE("fundamental R-hat") {
    Fundamental f = fundamental_rhat();
    CHECK(trace(f.S) == Cyc(3));
    CHECK(trace(f.A) == Cyc(1));
    CHECK(f.S + f.A == identity(4));
    CHECK(rank(f.A) == 1);
    CHECK(relations_from_projectors().ok());
}
