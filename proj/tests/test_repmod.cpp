#include <doctest.h>

#include "qroot3/repmod.hpp"

using namespace qroot3;
using namespace qroot3::repmod;

namespace {
const Cyc q = Cyc::q(), q2 = Cyc::q2();

const MetricFamily& family(const std::string& rep) {
    for (const auto& f : printed_metrics())
        if (f.rep == rep) return f;
    throw std::runtime_error("no family " + rep);
}
}  // namespace

TEST_CASE("catalogue of indecomposables") {
    CycMatrix d = zeros(3, 3);
    d(0, 0) = q2;
    d(1, 1) = Cyc(1);
    d(2, 2) = q;
    CHECK(builtin_rep("3_irr").K == d);
    HRep two = builtin_rep("2_eve");
    CHECK(two.Xp(0, 1) == Cyc(1));
    CHECK(two.Xp(0, 0).is_zero());
    CHECK(two.Xp(1, 0).is_zero());
    CHECK(builtin_rep("6_odd").dim == 6);
    for (const auto& n : catalogue())
        CHECK(check_relations(builtin_rep(n, needs_params(n) ? default_params() : std::vector<Cyc>{})).ok());
    CHECK_THROWS_AS(builtin_rep("3_eve"), std::invalid_argument);
}

TEST_CASE("invariant metrics") {
    auto space = invariant_metric_space(builtin_rep("3_irr"));
    REQUIRE(space.size() == 1);
    CycMatrix g = zeros(3, 3);
    g(0, 2) = -q2;
    g(1, 1) = Cyc(1);
    g(2, 0) = -q;
    CHECK(rank(hstack(space[0].reshaped(9, 1), g.reshaped(9, 1))) == 1);
    CHECK(signature_string(signature(g)) == "++-");
    CHECK(invariant_metric_space(builtin_rep("6_odd")).size() == 2);
    CHECK(invariant_metric_space(builtin_rep("4_eve")).size() == 4);
    CHECK(metric_summary(family("6_eve")).generic == "+++---");
    CHECK(metric_summary(family("5_odd")).generic == "++--0");
}

TEST_CASE("radicals and tops") {
    CHECK(radical_of_module(builtin_rep("6_eve")).cols() == 4);
    CHECK(radical_of_module(builtin_rep("6_odd")).cols() == 5);
    CHECK(radical_of_module(builtin_rep("3_irr")).cols() == 0);
    HRep odd = builtin_rep("3_odd", default_params());
    CHECK(cyclic_submodule(odd, unit_vector(3, 2)).cols() == 1);
}

TEST_CASE("tensor products") {
    auto two = builtin_rep("2_eve");
    auto d = decompose_tensor(two, two);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == std::map<std::string, int>{{"1", 1}, {"3_irr", 1}});
    auto e = decompose_tensor(two, builtin_rep("3_irr"));
    REQUIRE(e.size() == 1);
    CHECK(e[0] == std::map<std::string, int>{{"6_eve", 1}});
    CHECK(tensor_table().size() == 12);
}

TEST_CASE("invariant form on M") {
    using qplane::mono;
    CHECK(form(mono(1, 1), mono(1, 1)) == Cyc(1));
    CHECK(form(qplane::one(), mono(1, 1)).is_zero());
    CHECK(form(qplane::one(), qplane::one()).is_zero());
    for (int p = 0; p < 3; ++p)
        for (int t = 0; t < 3; ++t)
            for (int r = 0; r < 3; ++r)
                for (int s = 0; s < 3; ++s) CHECK(form(mono(p, t), mono(r, s)) == form_formula(p, t, r, s));
    CHECK(invariant_form_on_M() == solved_form_on_M());
    CHECK(is_hermitian(invariant_form_on_M()));
    CHECK(signature(invariant_form_on_M()) == Inertia{5, 4, 0});
}

TEST_CASE("M decomposes as 3_irr + 3_eve + 3_odd") {
    Identification id = identification();
    HRep M = m_as_rep();
    for (const env_h::HElem& h : {env_h::xp(), env_h::xm(), env_h::k()})
        CHECK(matmul(id.intertwiner, rho(M, h)) == matmul(rho(id.target, h), id.intertwiner));
    CHECK(rank(id.intertwiner) == 9);
}
