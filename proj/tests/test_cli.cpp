#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = atanderiv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

void expect_json_round_trip(std::string const& text) {
    auto const doc = nlohmann::json::parse(text);
    EXPECT_EQ(doc.dump(2) + "\n", text);
}

}  // namespace

TEST(CliQpoly, Text) {
    EXPECT_EQ(run({"qpoly", "2"}).out, "3*x^2 - 1\n");
    EXPECT_EQ(run({"qpoly", "0"}).out, "1\n");
}

TEST(CliQpoly, Csv) {
    auto r = run({"qpoly", "3", "--format=csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "power,numerator,denominator\n1,4,1\n3,-4,1\n");
}

TEST(CliQpoly, Json) {
    auto r = run({"qpoly", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["text"], "3*x^2 - 1");
    ASSERT_EQ(doc["coefficients"].size(), 2U);
    EXPECT_EQ(doc["coefficients"][0]["power"], 0);
    EXPECT_EQ(doc["coefficients"][0]["numerator"], "-1");
}

TEST(CliDerive, Symbolic) {
    EXPECT_EQ(run({"derive", "2", "--method=closed"}).out, "(-2*x) / (1+x^2)^2\n");
    EXPECT_EQ(run({"derive", "1", "--method=oracle"}).out, "(1) / (1+x^2)^1\n");
    EXPECT_EQ(run({"derive", "3", "--method=prop12"}).out, "(6*x^2 - 2) / (1+x^2)^3\n");
    EXPECT_EQ(run({"derive", "4"}).out, "(-24*x^3 + 24*x) / (1+x^2)^4\n");
}

TEST(CliDerive, Pointwise) {
    EXPECT_EQ(run({"derive", "3", "--method=fdb", "--x=0"}).out, "-2\n");
    EXPECT_EQ(run({"derive", "2", "--method=closed", "--x=1"}).out, "-1/2\n");
    EXPECT_EQ(run({"derive", "2", "--method=fdb", "--x=-1/2"}).out, "16/25\n");
    auto r = run({"derive", "2", "--method=fdb", "--x=1", "--format=csv"});
    EXPECT_EQ(r.out, "n,method,x,value\n2,fdb,1,-1/2\n");
}

TEST(CliDerive, JsonRoundTrips) {
    auto sym = run({"derive", "5", "--format=json"});
    ASSERT_EQ(sym.code, 0);
    expect_json_round_trip(sym.out);
    EXPECT_EQ(nlohmann::json::parse(sym.out)["exponent"], 5);
    auto val = run({"derive", "5", "--method=fdb", "--x=3/7", "--format=json"});
    ASSERT_EQ(val.code, 0);
    expect_json_round_trip(val.out);
}

TEST(CliDerive, UsageErrors) {
    EXPECT_EQ(run({"derive", "0"}).code, 2);
    EXPECT_EQ(run({"derive", "3", "--method=fdb"}).code, 2);
    EXPECT_EQ(run({"derive", "3", "--x=1/0"}).code, 2);
    EXPECT_EQ(run({"derive", "3", "--x=0.5"}).code, 2);
    EXPECT_EQ(run({"derive", "3", "--x=1/-2"}).code, 2);
    EXPECT_EQ(run({"derive", "3", "--method=taylor"}).code, 2);
    EXPECT_EQ(run({"derive", "three"}).code, 2);
}

TEST(CliChecks, PassRuns) {
    EXPECT_EQ(run({"check-identity", "50"}).code, 0);
    auto zero = run({"check-identity", "0"});
    EXPECT_EQ(zero.code, 0);
    EXPECT_NE(zero.out.find("cases=1 "), std::string::npos);
    EXPECT_EQ(run({"check-corollary", "100"}).code, 0);
    EXPECT_EQ(run({"check-2f1", "40"}).code, 0);
    EXPECT_EQ(run({"crosscheck", "30", "--points=0,1,-1,1/2"}).code, 0);
}

TEST(CliChecks, JsonReport) {
    auto r = run({"check-identity", "200", "--format=json"});
    ASSERT_EQ(r.code, 0);
    expect_json_round_trip(r.out);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["n_max"], 200);
    EXPECT_EQ(doc["cases"], 10201);
    EXPECT_TRUE(doc["failures"].is_array());
    EXPECT_TRUE(doc["failures"].empty());
}

TEST(CliChecks, CsvReport) {
    auto r = run({"check-2f1", "10", "--format=csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "check,n_max,cases,failures,status\n2f1,10,36,0,pass\n");
}

TEST(CliChecks, InjectedFaultExitsOne) {
    for (char const* cmd : {"check-identity", "check-corollary", "check-2f1", "crosscheck"}) {
        auto r = run({cmd, "8", "--inject-fault", "--format=json"});
        EXPECT_EQ(r.code, 1) << cmd;
        expect_json_round_trip(r.out);
        auto doc = nlohmann::json::parse(r.out);
        EXPECT_FALSE(doc["passed"].get<bool>());
        EXPECT_EQ(doc["failures"].size(), 1U) << cmd;
    }
}

TEST(CliChecks, UsageErrors) {
    EXPECT_EQ(run({"crosscheck", "0"}).code, 2);
    EXPECT_EQ(run({"crosscheck", "5", "--points=1,x"}).code, 2);
    EXPECT_EQ(run({"check-identity", "-4"}).code, 2);
    EXPECT_EQ(run({"check-identity", "5", "--format=xml"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliBench, Format) {
    auto empty = run({"bench", "0"});
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "method,n,micros\n");
    auto r = run({"bench", "20"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "method,n,micros");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 2) << line;
    }
    EXPECT_EQ(rows, 4 * 5);  // n in {1, 2, 5, 10, 20}
}

TEST(CliHelp, ExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
