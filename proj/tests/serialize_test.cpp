#include "glmn/errors.hpp"
#include "glmn/serialize.hpp"

#include <doctest.h>

using namespace glmn;
using nlohmann::json;

TEST_CASE("rational round trip")
{
    for (const Rational& q : {make_rational(0), make_rational(-7, 3), make_rational(241, 49152)})
        CHECK(rational_from_json(to_json(q)) == q);
    CHECK(to_json(make_rational(3, 6)) == "1/2");
    CHECK(rational_from_json(json(5)) == 5);
    CHECK_THROWS_AS(rational_from_json(json("x/2")), ParameterError);
}

TEST_CASE("weight and block round trip")
{
    const Weight w(SuperParams(3, 2), {2, 0, -1, 4, 1});
    CHECK(weight_from_json(to_json(w)) == w);
    CHECK(to_json(w).dump() == R"({"coeffs":[2,0,-1,4,1],"m":3,"n":2})");
    const BlockDescriptor b = atypicality(Weight::zero(SuperParams(3, 2)));
    CHECK(block_from_json(to_json(b)) == b);
    CHECK_THROWS_AS(weight_from_json(json::parse(R"({"m":1})")), ParameterError);
}

TEST_CASE("report and quasipolynomial round trip")
{
    const InvariantReport r{3, 2, 2, 1, 2, 2, 0};
    CHECK(report_from_json(to_json(r)) == r);
    QuasiPolynomial q;
    q.period = 2;
    q.polys = {{make_rational(1), make_rational(1, 2)}, {make_rational(-1, 3), make_rational(1, 2)}};
    const QuasiPolynomial back = quasipolynomial_from_json(to_json(q));
    CHECK(back.period == 2);
    CHECK(back.polys == q.polys);
    json bad = to_json(q);
    bad["period"] = 3;
    CHECK_THROWS_AS(quasipolynomial_from_json(bad), ParameterError);
}

TEST_CASE("pair sets and traces serialize")
{
    const auto s = build_S(SuperParams(2, 1), 1, 61);
    const json j = to_json(s);
    CHECK(j.at("pairs").size() == 21);
    CHECK(weight_from_json(j.at("pairs")[0].at("mu")) == s.pairs[0].first);
    const auto tr = gl11_minimal_resolution({Gl11Target::Kind::Simple, 0}, 3);
    const json t = to_json(tr);
    CHECK(t.size() == 4);
    CHECK(t[3].at("total_dim") == 16);
    CHECK(t[3].at("summands").size() == 4);
}

TEST_CASE("matrix csv")
{
    Matrix m(2, 2);
    m.at(0, 0) = make_rational(1, 2);
    m.at(1, 1) = make_rational(-3);
    CHECK(to_csv(m) == "1/2,0\n0,-3\n");
}
