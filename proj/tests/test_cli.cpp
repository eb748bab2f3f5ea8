#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galois/cli.hpp"

using namespace galois;

TEST_CASE("analyze: lemniscatic curve reports fourteen lines, exit 0") {
    RunConfig cfg;
    cfg.roots = {{Rational(1, 2), Rational(-1, 2), Rational(0)}};
    cfg.json_output = true;
    auto res = run_analyze(cfg);
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.output);
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["counts"]["lines"] == 14);
    CHECK(j["counts"]["v4"] == 6);
    CHECK(j["counts"]["z4"] == 8);
    CHECK(j["allClaimsPass"] == true);
    for (const auto& c : j["claims"]) CHECK(c["status"] == "pass");
}

TEST_CASE("analyze: generic curve reports six lines") {
    RunConfig cfg;
    cfg.roots = {{Rational(1), Rational(2), Rational(-3)}};
    cfg.json_output = true;
    auto res = run_analyze(cfg);
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.output);
    CHECK(j["counts"]["lines"] == 6);
    CHECK(j["counts"]["z4"] == 0);
}

TEST_CASE("analyze accepts --pq and factors the cubic") {
    RunConfig cfg;
    cfg.pq = {Rational(-28), Rational(24)}; // roots 1, 2, -3
    cfg.json_output = true;
    auto res = run_analyze(cfg);
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.output);
    CHECK(j["counts"]["lines"] == 6);
    CHECK(j["curve"]["p"] == "-28");

    RunConfig bad;
    bad.pq = {Rational(1), Rational(1)}; // irrational roots
    CHECK_THROWS_AS(run_analyze(bad), Error);
}

TEST_CASE("analyze: usage errors") {
    RunConfig cfg;
    cfg.roots = {{Rational(1), Rational(1), Rational(-2)}};
    CHECK_THROWS_AS(run_analyze(cfg), Error); // repeated root

    RunConfig cfg2;
    CHECK_THROWS_AS(run_analyze(cfg2), Error); // no curve

    RunConfig cfg3;
    cfg3.roots = {{Rational(1), Rational(2), Rational(-3)}};
    cfg3.tolerance = 1.0; // out of the allowed range
    CHECK_THROWS_AS(run_analyze(cfg3), Error);
}

TEST_CASE("determinism: identical config gives byte-identical JSON") {
    RunConfig cfg;
    cfg.roots = {{Rational(1, 2), Rational(-1, 2), Rational(0)}};
    cfg.json_output = true;
    cfg.seed = 777;
    auto a = run_analyze(cfg);
    auto b = run_analyze(cfg);
    CHECK(a.output == b.output);
}

TEST_CASE("enumerate-groups") {
    RunConfig cfg;
    cfg.omega = Complex(0, 1);
    cfg.json_output = true;
    auto res = run_enumerate_groups(cfg);
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.output);
    CHECK(j["count"] == 14);
    CHECK(j["symmetryOrder"] == 4);
    CHECK(j["outsideCatalog"] == false);

    cfg.omega = Complex(0, 2);
    Json j2 = Json::parse(run_enumerate_groups(cfg).output);
    CHECK(j2["count"] == 6);
    CHECK(j2["symmetryOrder"] == 2);

    cfg.omega = Complex(0.5, 0.8660254037844386); // primitive sixth root
    Json j6 = Json::parse(run_enumerate_groups(cfg).output);
    CHECK(j6["count"] == 6);
    CHECK(j6["symmetryOrder"] == 6);
    CHECK(j6["outsideCatalog"] == true);
}

TEST_CASE("verify-line") {
    RunConfig cfg;
    cfg.roots = {{Rational(1, 2), Rational(-1, 2), Rational(0)}};
    cfg.line_label = "edge(0,1)";
    auto res = run_verify_line(cfg);
    CHECK(res.exit_code == 0);

    cfg.line_label = "l(2,2)";
    CHECK(run_verify_line(cfg).exit_code == 0);

    cfg.line_label = "edge(9,9)";
    CHECK_THROWS_AS(run_verify_line(cfg), Error);
}

TEST_CASE("project subcommand") {
    RunConfig cfg;
    cfg.roots = {{Rational(1, 2), Rational(-1, 2), Rational(0)}};
    cfg.center = "4:1:0:0"; // vertex Q3
    cfg.json_output = true;
    auto res = run_project(cfg);
    CHECK(res.exit_code == 0);
    Json j = Json::parse(res.output);
    CHECK(j["classification"] == "vertex");
    CHECK(j["projection"]["isConicSquare"] == true);

    cfg.center = "4:1:0:1"; // on edge(0,3)
    cfg.verify_galois_point = true;
    auto res2 = run_project(cfg);
    CHECK(res2.exit_code == 0);
    Json j2 = Json::parse(res2.output);
    CHECK(j2["classification"] == "on-galois-line");
    CHECK(j2["lineLabel"] == "edge(0,3)");
    CHECK(j2["galoisPoint"]["verified"] == true);

    cfg.center = "1:1:1:1";
    auto res3 = run_project(cfg);
    Json j3 = Json::parse(res3.output);
    CHECK(j3["classification"] == "generic");
    CHECK(j3["galoisPoint"]["verified"] == false);
}
