#include <doctest.h>

#include <random>

#include "qroot3/qplane.hpp"

using namespace qroot3;
using namespace qroot3::qplane;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();

MElem random_elem(std::mt19937& rng) {
    std::uniform_int_distribution<int> n(-4, 4), d(1, 3);
    MElem z = zero_vector(9);
    for (int i = 0; i < 9; ++i) z(i) = Cyc::frac(n(rng), d(rng)) + Cyc::frac(n(rng), d(rng)) * q;
    return z;
}
}  // namespace

TEST_CASE("products in M") {
    CHECK(mul(y(), x()) == mono(1, 1, q2));
    CHECK(mul(mono(2, 0), x()) == one());
    CHECK(mul(mono(1, 1), mono(1, 1)) == mono(2, 2, q2));
    CHECK(pow(y(), 3) == one());
}

TEST_CASE("matrix realization") {
    CHECK(from_matrix(elementary(1, 1)) == Cyc::frac(1, 3) * (one() + x() + mono(2, 0)));
    CycMatrix X = to_matrix(x());
    CHECK(X(0, 0) == Cyc(1));
    CHECK(X(1, 1) == q2);
    CHECK(X(2, 2) == q);
    for (int i = 0; i < 9; ++i) CHECK(from_matrix(to_matrix(algebra().basis(i))) == algebra().basis(i));
    std::mt19937 rng(11);
    for (int n = 0; n < 10; ++n) {
        MElem a = random_elem(rng), b = random_elem(rng);
        CHECK(to_matrix(mul(a, b)) == matmul(to_matrix(a), to_matrix(b)));
    }
}

TEST_CASE("Gell-Mann expansions") {
    CHECK(gell_mann(3).elem == Cyc::frac(1, 3) * ((Cyc(1) - q) * x() + (Cyc(1) - q2) * mono(2, 0)));
    GellMann g8 = gell_mann(8);
    CHECK(g8.sqrt3_scaled);
    CHECK(g8.elem == -(q2 * x() + q * mono(2, 0)));
    for (int i = 1; i <= 8; ++i) {
        CHECK(trace(to_matrix(gell_mann(i).elem)) == Cyc(0));
        CHECK(to_matrix(gell_mann(i).elem) == classical_gell_mann(i));
    }
}

TEST_CASE("star on M") {
    CHECK(star(x()) == x());
    CHECK(star(q * mono(1, 1)) == q2 * star(mono(1, 1)));
    CHECK(star(mono(1, 1)) == mono(1, 1, q2));
    std::mt19937 rng(5);
    for (int n = 0; n < 10; ++n) {
        MElem a = random_elem(rng), b = random_elem(rng);
        CHECK(star(star(a)) == a);
        CHECK(star(mul(a, b)) == mul(star(b), star(a)));
        CHECK(to_matrix(star(a)) == star_matrix(to_matrix(a)));
    }
}

TEST_CASE("sector decomposition") {
    Split s = decompose(mono(2, 1));
    CHECK(is_zero(s.irr));
    CHECK(is_zero(s.eve));
    CHECK(s.odd == mono(2, 1));
    CHECK(decompose(x()).eve == x());
    std::mt19937 rng(3);
    MElem z = random_elem(rng);
    Split t = decompose(z);
    CHECK(t.irr + t.eve + t.odd == z);
    CHECK(sector(mono(1, 1)) == Sector::Irr);
}

TEST_CASE("inverses") {
    CHECK(invert(one()) == one());
    CHECK(invert(x()) == mono(2, 0));
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> n(-5, 5);
    for (int k = 0; k < 10; ++k) {
        MElem z = Cyc(n(rng)) * one() + Cyc(n(rng)) * mono(1, 2) + Cyc(n(rng)) * mono(2, 1);
        if (det(to_matrix(z)).is_zero()) continue;
        MElem w = invert(z);
        CHECK(mul(z, w) == one());
        CHECK(in_odd(w));
    }
}

TEST_CASE("triadic functions") {
    TriadicSeries s = triadic(12);
    CHECK(s.c0[0] == 1);
    CHECK(s.c0[1] == 0);
    CHECK(s.c0[3] == Rat(1, 6));
    std::vector<Rat> D = triadic_D(s);
    CHECK(D[0] == 1);
    for (size_t k = 1; k < D.size(); ++k) CHECK(D[k] == 0);
}
