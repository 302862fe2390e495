#include <doctest.h>

#include <random>

#include "qroot3/fun_f.hpp"

using namespace qroot3;
using namespace qroot3::fun_f;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();
}

TEST_CASE("products in F") {
    CHECK(mul(c(), a()) == q2 * mul(a(), c()));
    CHECK(mul(a(), pow(a(), 2)) == one());
    CHECK(is_zero(mul(pow(b(), 2), b())));
    CHECK(pow(d(), 3) == one());
    CHECK(mul(d(), a()) - q2 * mul(b(), c()) == one());
    CHECK(is_zero(FElem(mul(a(), d()) - mul(d(), a()) - (q - q2) * mul(b(), c()))));
}

TEST_CASE("Hopf structure of F") {
    CHECK(coproduct(a()) == tensor_elem(a(), a()) + tensor_elem(b(), c()));
    CHECK(antipode(b()) == -q2 * b());
    CHECK(counit(a()) == Cyc(1));
    CHECK(counit(b()).is_zero());
}

TEST_CASE("star on F") {
    CHECK(star(a()) == a());
    CHECK(star(q * mul(a(), b())) == q * mul(a(), b()));
    CHECK(antipode(star(antipode(star(b())))) == b());
}

TEST_CASE("coactions on M") {
    CHECK(coact_left(qplane::x()) == tensor_elem(a(), qplane::x()) + tensor_elem(b(), qplane::y()));
    for (int z = 0; z < 9; ++z) {
        CycVector t = coact_right(qplane::algebra().basis(z));
        qplane::MElem back = zero_vector(9);
        for (int i = 0; i < 9; ++i)
            for (int f = 0; f < kDim; ++f) back(i) += t(i * kDim + f) * counit(algebra().basis(f));
        CHECK(back == qplane::algebra().basis(z));
    }
    CHECK(coact_right(qplane::pow(qplane::x(), 3)) == tensor_elem(qplane::one(), one()));
}

TEST_CASE("Ogievetsky representation") {
    G9Matrix B = ogievetsky_rep(b());
    CHECK(B(0, 1) == Grass9::xi(1, 0));
    CHECK(B(1, 2) == Grass9::xi(1, 0));
    CHECK(B(2, 0) == Grass9::xi(1, 0));
    CHECK(B(0, 0).is_zero());
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> n(-2, 2), idx(0, kDim - 1);
    for (int k = 0; k < 20; ++k) {
        FElem u = Cyc(n(rng)) * algebra().basis(idx(rng)) + Cyc(n(rng)) * algebra().basis(idx(rng));
        FElem v = Cyc(n(rng)) * algebra().basis(idx(rng)) + q * algebra().basis(idx(rng));
        CHECK((ogievetsky_rep(mul(u, v)) == matmul(ogievetsky_rep(u), ogievetsky_rep(v))));
    }
}

TEST_CASE("lambda prime over F") {
    FMatrix l3 = lambda_prime(3);
    CHECK(l3[0] == Cyc::frac(1, 3) * ((Cyc(1) - q) * a() + (Cyc(1) - q2) * pow(a(), 2)));
    CHECK(is_zero(ftrace(lambda_prime(3))));
    CHECK(is_zero(ftrace(lambda_prime(8))));
}
