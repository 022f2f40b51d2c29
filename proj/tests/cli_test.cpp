#include "glmn/cli.hpp"
#include "glmn/errors.hpp"
#include "glmn/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace glmn;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("weight spec grids")
{
    const auto g = cli::parse_weight_spec("0..1,2,-1..0");
    CHECK(g.size() == 4);
    CHECK(g.front() == std::vector<std::int64_t>{0, 2, -1});
    CHECK(g.back() == std::vector<std::int64_t>{1, 2, 0});
    CHECK_THROWS_AS(cli::parse_weight_spec("1,,2"), ParameterError);
    CHECK_THROWS_AS(cli::parse_weight_spec("a,1"), ParameterError);
    CHECK_THROWS_AS(cli::parse_weight_spec("3..1"), ParameterError);
}

TEST_CASE("classify")
{
    auto r = run({"classify", "--m", "2", "--n", "1", "--weight", "0,0,0"});
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j.at("block").at("k") == 1);
    CHECK(j.at("block").at("core_left") == json::array({2}));
    CHECK(j.at("block").at("core_right") == json::array());
    CHECK(block_from_json(j.at("block")) == atypicality(weight_from_json(j.at("weight"))));

    r = run({"classify", "--m", "2", "--n", "1", "--weight", "0,1,0"});
    CHECK(r.code == cli::kExitDomain);
    CHECK(r.err.find("not dominant") != std::string::npos);

    CHECK(run({"classify", "--m", "2", "--n", "1", "--weight", "0,x,0"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--m", "2", "--n", "1", "--weight", "0,0"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--m", "1", "--n", "2", "--weight", "0,0,0"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);

    r = run({"classify", "--m", "2", "--n", "1", "--weight", "0..1,0,0", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("# glmn-classify v1\n", 0) == 0);
}

TEST_CASE("classify from a file and by sampling")
{
    const std::string path = "cli_test_weights.txt";
    {
        std::ofstream f(path);
        f << "# weights\n0,0,0\n\n1,1,0\n";
    }
    auto r = run({"classify", "--m", "2", "--n", "1", "--weights-file", path, "--format", "csv"});
    std::remove(path.c_str());
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("0;0;0,true,1") != std::string::npos);
    CHECK(r.out.find("1;1;0,true,0") != std::string::npos);

    const auto a = run({"classify", "--m", "3", "--n", "2", "--sample", "5", "--seed", "11"});
    const auto b = run({"classify", "--m", "3", "--n", "2", "--sample", "5", "--seed", "11"});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).size() == 5);
}

TEST_CASE("invariants")
{
    auto r = run({"invariants", "--m", "1", "--n", "1", "--weight", "0,0", "--kind", "simple"});
    REQUIRE(r.code == cli::kExitOk);
    json j = json::parse(r.out);
    CHECK(j.at("report").at("complexity") == 2);
    CHECK(j.at("report").at("z_invariant") == 2);

    r = run({"invariants", "--m", "2", "--n", "1", "--weight", "0,0,0", "--kind", "kac", "--verify"});
    REQUIRE(r.code == cli::kExitOk);
    j = json::parse(r.out);
    CHECK(j.at("verdict") == "AGREE");
    bool saw = false;
    for (const auto& c : j.at("verify"))
        if (c.at("check") == "rank_variety_plus_dim") {
            CHECK(c.at("formula") == 2);
            CHECK(c.at("measured") == 2);
            CHECK(c.at("status") == "AGREE");
            saw = true;
        }
    CHECK(saw);

    r = run({"invariants", "--m", "2", "--n", "1", "--weight", "1,1,0", "--kind", "simple"});
    j = json::parse(r.out);
    CHECK(report_from_json(j.at("report")) == InvariantReport{});

    r = run({"invariants", "--m", "3", "--n", "3", "--weight", "0,0,0,0,0,0", "--kind", "simple",
             "--verify"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("SKIPPED") != std::string::npos);

    CHECK(run({"invariants", "--m", "2", "--n", "1", "--weight", "0,0,0", "--kind", "verma"}).code ==
          cli::kExitUsage);
}

TEST_CASE("ehrhart")
{
    auto r = run({"ehrhart", "--k", "2", "--dmin", "1", "--dmax", "12"});
    REQUIRE(r.code == cli::kExitOk);
    const json j = json::parse(r.out);
    CHECK(j.at("degree") == 3);
    CHECK(j.at("volume") == "241/49152");
    CHECK(j.at("rows").size() == 12);
    for (const auto& row : j.at("rows"))
        CHECK(row.at("count_ge_Q") == true);
    CHECK(run({"ehrhart", "--k", "2", "--dmin", "1", "--dmax", "12"}).out == r.out);

    r = run({"ehrhart", "--k", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(json::parse(r.out).at("point") == json::array({-1, -1}));

    r = run({"ehrhart", "--k", "2", "--dmin", "250", "--dmax", "300", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("# warning: truncated at d=256") != std::string::npos);

    CHECK(run({"ehrhart", "--k", "5"}).code == cli::kExitDomain);
    CHECK(run({"ehrhart", "--k", "2", "--dmin", "5", "--dmax", "2"}).code == cli::kExitUsage);
}

TEST_CASE("resolve")
{
    auto r = run({"resolve", "--weight", "0,0", "--kind", "simple", "--depth", "15"});
    REQUIRE(r.code == cli::kExitOk);
    json j = json::parse(r.out);
    CHECK(j.at("complexity").at("measured") == 2);
    CHECK(j.at("complexity").at("verdict") == "AGREE");
    CHECK(j.at("z_invariant").at("measured") == 2);

    r = run({"resolve", "--weight", "0,0", "--kind", "kac", "--depth", "15", "--kl-window", "2"});
    REQUIRE(r.code == cli::kExitOk);
    j = json::parse(r.out);
    CHECK(j.at("complexity").at("measured") == 1);
    CHECK(j.at("kl").size() == 25);

    CHECK(run({"resolve", "--depth", "26"}).code == cli::kExitUsage);
    CHECK(run({"resolve", "--weight", "1,0"}).code == cli::kExitDomain);
    CHECK(run({"resolve", "--m", "2", "--weight", "0,0,0"}).code == cli::kExitUsage);
}
