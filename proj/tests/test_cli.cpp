#include <doctest.h>

#include <random>

#include "qroot3/json_io.hpp"
#include "qroot3/qplane.hpp"
#include "qroot3/tables.hpp"

using namespace qroot3;
using namespace qroot3::expr;

TEST_CASE("parsing and normal forms") {
    CHECK(format(parse("y x", Context::M), Context::M) == "q^2*x*y");
    CHECK(is_zero(parse("a^3 - 1", Context::F)));
    CHECK(is_zero(parse("X+^3", Context::H)));
    CHECK(parse("xy", Context::M) == parse("x*y", Context::M));
    CHECK(parse("K K-", Context::H) == parse("1", Context::H));
    CHECK(parse("-1/3 + q^2", Context::M) == parse("(q^2 - 1/3)", Context::M));
    CHECK(parse("dy dx", Context::WZ) == parse("-q dx dy", Context::WZ));
    CHECK(is_zero(parse("q dx dy + dy dx", Context::WZ)));
    CHECK(parse("2(x + y)^2", Context::M) == Cyc(2) * parse("x^2 + x y + y x + y^2", Context::M));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("", Context::M), ParseError);
    CHECK_THROWS_AS(parse("x +", Context::M), ParseError);
    CHECK_THROWS_AS(parse("x^-1", Context::M), ParseError);
    CHECK_THROWS_AS(parse("1/q", Context::M), ParseError);
    CHECK_THROWS_AS(parse("a", Context::M), ParseError);
    CHECK_THROWS_AS(parse("(x", Context::M), ParseError);
    CHECK_THROWS_AS(parse("1/0", Context::M), ParseError);
    try {
        parse("x + $", Context::M);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
    CHECK_THROWS_AS(context_from_name("Q"), std::invalid_argument);
}

TEST_CASE("print and parse are inverse") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> n(-3, 3), d(1, 4);
    for (Context c : {Context::M, Context::F, Context::H, Context::WZ}) {
        const AlgebraTable& a = context_algebra(c);
        for (int k = 0; k < 12; ++k) {
            CycVector v = zero_vector(a.dim);
            for (int i = 0; i < a.dim; ++i)
                if (n(rng) > 1) v(i) = Cyc::frac(n(rng), d(rng)) + Cyc::frac(n(rng), d(rng)) * Cyc::q();
            CHECK(parse(format(v, c), c) == v);
        }
    }
}

TEST_CASE("json") {
    json_io::Json j = json_io::element_to_json(qplane::x(), Context::M);
    CHECK(j["algebra"] == "M");
    CHECK(j["coeffs"].size() == 9);
    CHECK(j["coeffs"][qplane::index(1, 0)]["r0"] == "1");
    CHECK(j["coeffs"][qplane::index(1, 0)]["r1"] == "0");
    CHECK(j.dump().rfind("{\"algebra\":\"M\",\"coeffs\":[", 0) == 0);

    std::mt19937 rng(8);
    std::uniform_int_distribution<int> n(-9, 9), d(1, 7);
    const std::vector<Context> ctxs = {Context::M, Context::F, Context::H, Context::WZ};
    for (int k = 0; k < 50; ++k) {
        Context c = ctxs[k % 4];
        CycVector v(context_algebra(c).dim);
        for (int i = 0; i < v.size(); ++i) v(i) = Cyc::frac(n(rng), d(rng)) + Cyc::frac(n(rng), d(rng)) * Cyc::q();
        Context back = Context::M;
        CycVector w = json_io::element_from_json(json_io::Json::parse(json_io::element_to_json(v, c).dump()), &back);
        CHECK(back == c);
        CHECK(w == v);
    }
    CycMatrix m = identity(3);
    m(0, 1) = Cyc::frac(-2, 3) * Cyc::q();
    CHECK(json_io::matrix_from_json(json_io::matrix_to_json(m)) == m);
    CHECK_THROWS(json_io::element_from_json(json_io::Json::parse(R"({"algebra":"M","coeffs":[]})")));
    CHECK_THROWS(json_io::cyc_from_json(json_io::Json::parse(R"({"r0":"1/0","r1":"0"})")));
}

TEST_CASE("tables") {
    tables::Table a = tables::build("actions");
    CHECK(a.rows.size() == 54);
    CHECK(a.all_match());
    CHECK(tables::render_json(a).size() == 54);
    tables::Table c = tables::build("cohomology");
    CHECK(c.all_match());
    CHECK(c.rows[1][1] == "10");
    tables::Table p = tables::build("pairing");
    CHECK(p.rows.size() == 12);
    CHECK(p.all_match());
    CHECK(tables::render_text(p) == tables::render_text(tables::build("pairing")));
    CHECK_THROWS_AS(tables::build("nope"), std::invalid_argument);
}
