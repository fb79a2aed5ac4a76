#include "doctest.h"

#include "stostab/json_io.hpp"

using namespace stostab;

TEST_CASE("spec parsing applies defaults") {
    const SystemSpec s = parse_system_spec(R"({"a":-1,"b":0,"c":0,"m":-1})");
    CHECK(s.a == -1.0);
    CHECK(s.e == 0.0);
    CHECK(s.h == 0.0);
    CHECK(s.calculus == Calculus::Ito);

    const SystemSpec t =
        parse_system_spec(R"({"a":0,"b":1,"c":-1,"m":-1,"e":2,"calculus":"stratonovich"})");
    CHECK(t.e == 2.0);
    CHECK(t.calculus == Calculus::Stratonovich);
}

TEST_CASE("spec parsing errors name the offending key") {
    CHECK_THROWS_WITH_AS(parse_system_spec(R"({"b":0,"c":0,"m":-1})"),
                         doctest::Contains("\"a\""), JsonSpecError);
    CHECK_THROWS_WITH_AS(parse_system_spec(R"({"a":"x","b":0,"c":0,"m":-1})"),
                         doctest::Contains("\"a\""), JsonSpecError);
    CHECK_THROWS_WITH_AS(parse_system_spec(R"({"a":0,"b":0,"c":0,"m":0,"calculus":"heun"})"),
                         doctest::Contains("calculus"), JsonSpecError);
    CHECK_THROWS_AS(parse_system_spec("not json"), JsonSpecError);
    CHECK_THROWS_AS(parse_system_spec("[1,2]"), JsonSpecError);
}

TEST_CASE("spec round trip") {
    SystemSpec s{-1.5, 0.25, 3, -0.125, 0.5, 0, 0, 0, Calculus::Stratonovich};
    const SystemSpec back = parse_system_spec(system_spec_to_json(s));
    CHECK(back.a == s.a);
    CHECK(back.b == s.b);
    CHECK(back.c == s.c);
    CHECK(back.m == s.m);
    CHECK(back.e == s.e);
    CHECK(back.calculus == s.calculus);
}

TEST_CASE("report serialization carries the trace") {
    StabilityReport rep;
    rep.verdict = Verdict::Stable;
    rep.notion = StabilityNotion::MeanSquareExponential;
    rep.theorem = "thm3";
    rep.bound = BifurcationBound{2.0, BifurcationBound::Kind::Exact, {{"a+m", -2.0}}};
    const std::string j = report_to_json(rep);
    CHECK(j.find("\"stable\"") != std::string::npos);
    CHECK(j.find("\"exact\"") != std::string::npos);
    CHECK(j.find("a+m") != std::string::npos);
}

TEST_CASE("ensemble CSV layout") {
    EnsembleStats stats;
    stats.times = {0.0, 0.5};
    stats.second_moment = {2.0, 1.0};
    stats.std_error = {0.0, 0.1};
    const std::string csv = ensemble_to_csv(stats);
    CHECK(csv.rfind("t,second_moment,stderr\n", 0) == 0);
    CHECK(csv.find("0.5,1,0.1") != std::string::npos);
}

TEST_CASE("sweep CSV layout") {
    SweepResult r;
    r.intensities = {0.0, 4.0};
    r.analytic_verdicts = {Verdict::Stable, Verdict::Unstable};
    r.oracle_verdicts = {Verdict::Stable, Verdict::Unstable};
    const std::string csv = sweep_to_csv(r);
    CHECK(csv.rfind("intensity,analytic_verdict,oracle_verdict\n", 0) == 0);
    CHECK(csv.find("4,unstable,unstable") != std::string::npos);
}
