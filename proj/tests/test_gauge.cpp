#include <doctest.h>

#include "qroot3/gauge.hpp"

using namespace qroot3;
using namespace qroot3::gauge;

namespace {
const Cyc q = Cyc::q();

Connection block_values(Block b, const std::vector<int>& vals) {
    std::vector<Cyc> v(kParams, Cyc(0));
    auto idx = block_params(b);
    for (size_t i = 0; i < idx.size() && i < vals.size(); ++i) v[idx[i]] = Cyc(vals[i]);
    return from_values(v);
}
}  // namespace

TEST_CASE("zero connection is flat") { CHECK(is_zero(curvature(wz_forms::WZForm(zero_vector(36))))); }

TEST_CASE("hermitian 3e connection") {
    Connection c = hermitian_projection(symbolic({Block::Eve3}));
    PolyForm rho = curvature(c);
    auto idx = block_params(Block::Eve3);
    REQUIRE(idx.size() == 3);
    Poly a1 = Poly::var(idx[0]), a2 = Poly::var(idx[1]), a3 = Poly::var(idx[2]);
    PolyForm want = to_poly(CycVector(wz_forms::dxdy()));
    want *= (a1 * a3 - a2 * a2) * Poly(Cyc(1) - q);
    CHECK(is_zero(PolyForm(rho - want)));
}

TEST_CASE("classification of the single-block curvatures") {
    Classification irr = classify_curvature(symbolic({Block::Irr3}));
    CHECK(irr.phi2_zero);
    CHECK(irr.rho == "3_irr");
    Classification irr2 = classify_curvature(symbolic({Block::IrrPrime3}));
    CHECK(irr2.dphi_zero);
    CHECK(irr2.rho == "3_irr");
    Classification odd = classify_curvature(symbolic({Block::Odd3}));
    CHECK(odd.phi2_zero);
    CHECK(odd.rho == "3_odd");
    Classification eve = classify_curvature(symbolic({Block::Eve3}));
    CHECK(eve.dphi_zero);
    CHECK(eve.rho == "3_odd");
    Classification six = classify_curvature(symbolic({Block::Eve6}));
    CHECK(six.rho == "3_eve");
    CHECK_THROWS_AS(classify_curvature(symbolic({Block::Eve3, Block::Odd3})), std::invalid_argument);
}

TEST_CASE("gauge transformations") {
    Connection c = block_values(Block::Eve6, {1, -2, 3, 1, 0, 2});
    wz_forms::WZForm w(c.omega.size());
    for (int i = 0; i < w.size(); ++i) w(i) = c.omega(i).constant();
    CHECK(gauge_transform(w, qplane::one()) == w);
    wz_forms::WZForm w2 = gauge_transform(w, qplane::x());
    wz_forms::WZForm r = curvature(w), r2 = curvature(w2);
    using wz_forms::from_function;
    CHECK(r2 == wz_forms::wz_mul(wz_forms::wz_mul(from_function(qplane::mono(2, 0)), r), from_function(qplane::x())));
    CHECK_THROWS_AS(gauge_transform(w, qplane::elementary_expansion(1, 1)), std::domain_error);
}

TEST_CASE("hermitian projection") {
    Connection c = block_values(Block::Eve3, {1, 2, 3});
    CHECK(is_hermitian(c));
    CHECK(is_hermitian(hermitian_projection(symbolic({Block::Irr3}))));
    std::vector<Cyc> v(kParams, Cyc(0));
    v[block_params(Block::Eve3)[0]] = Cyc::sqrt_m3();
    Connection im = from_values(v);
    Connection p = hermitian_projection(im);
    CHECK(is_zero(p.omega));
}
