#include <catch2/catch_amalgamated.hpp>
#include <mtp/cli.hpp>

#include <json.hpp>

using namespace mtp;
using nlohmann::json;

TEST_CASE("sign reports on the half-line") {
    auto r = cli::run({"sign", "2/3*x + x*cos(x) - sin(x)"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "no constant sign on (0,+inf)\n");

    auto s = cli::run({"sign", "2/3*x + 1/3*x*cos(x) - sin(x)"});
    CHECK(s.exit_code == 0);
    CHECK(s.out == "F(x) > 0 on (0,+inf)\n");
}

TEST_CASE("factor JSON output matches the worked factorization") {
    auto r = cli::run({"factor", "1 - sin(x)^3", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["task"] == "factor");
    CHECK(j["input"] == "1 - sin(x)^3");
    CHECK(j["constant"] == "-1/2");
    REQUIRE(j["factors"].size() == 2);
    CHECK(j["factors"][0]["expr"] == "cos(2*x) - 2*sin(x) - 3");
    CHECK(j["factors"][0]["exponent"] == 1);
    CHECK(j["factors"][1]["expr"] == "cos(1/2*x) - sin(1/2*x)");
    CHECK(j["factors"][1]["exponent"] == 2);
    // round trip: the emitted factor strings parse back to the same MTPs
    FactorizationResult res = factorize(parse_mtp("1 - sin(x)^3"));
    for (std::size_t i = 0; i < res.factors.size(); ++i) {
        CHECK(parse_mtp(j["factors"][i]["expr"].get<std::string>()) == res.factors[i].display);
    }
}

TEST_CASE("bound subcommand") {
    auto r = cli::run({"bound", "2/3*x + 1/3*x*cos(x) - sin(x)", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "bounded");
    CHECK(j["bound"] == "111/64");

    auto u = cli::run({"bound", "2/3*x + x*cos(x) - sin(x)"});
    CHECK(u.out == "positive roots are unbounded\n");
}

TEST_CASE("sign with --upto") {
    auto r = cli::run({"sign", "x*cos(x) - sin(x)", "--upto", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "F(x) < 0 on (0, 1)\n");
}

TEST_CASE("trace carries the exact intermediates") {
    auto r = cli::run({"sign", "2/3*x + 1/3*x*cos(x) - sin(x)", "--format", "json", "--trace"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.contains("trace"));
    bool saw_f1 = false, saw_realroot = false, saw_arctan = false, saw_c0 = false;
    for (const auto& step : j["trace"]) {
        std::string name = step["step"], detail = step["detail"];
        if (name.ends_with(".f1")) saw_f1 = detail == "1/9*x^2*s^2 + s^2 - 4/3*x*s + 1/3*x^2";
        if (name.ends_with(".realroot_g"))
            saw_realroot = detail == "[[-111/64,-221/128],[0,0],[221/128,111/64]]";
        if (name == "sign.arctan_poly")
            saw_arctan = detail == "3*t^4*arctan(t) - 2*t^2*arctan(t) + 3*arctan(t) + 3*t^3 - 3*t";
        if (name == "C0") saw_c0 = true;
    }
    CHECK(saw_f1);
    CHECK(saw_realroot);
    CHECK(saw_arctan);
    CHECK(saw_c0);
}

TEST_CASE("deterministic output") {
    auto a = cli::run({"sign", "1 - sin(x)^3", "--format", "json", "--trace"});
    auto b = cli::run({"sign", "1 - sin(x)^3", "--format", "json", "--trace"});
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("error handling and exit codes") {
    auto bad = cli::run({"sign", "2*"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("position") != std::string::npos);

    auto usage = cli::run({"frobnicate", "x"});
    CHECK(usage.exit_code == 2);

    auto zero_t = cli::run({"sign", "sin(x)", "--upto", "0"});
    CHECK(zero_t.exit_code == 2);

    auto badcap = cli::run({"sign", "sin(x)", "--max-taylor-degree", "4"});
    CHECK(badcap.exit_code == 2);
}
