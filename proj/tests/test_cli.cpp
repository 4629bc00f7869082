#include "doctest.h"

#include "seqcert/cli/run.hpp"
#include "seqcert/version.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace seqcert::cli;
using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "seqcert");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("seqcert_cli_" + name)).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("seq motzkin csv")
{
    const auto r = call({"seq", "motzkin", "--n", "10", "--format", "csv"});
    CHECK(r.status == kOk);
    CHECK(r.out == "n,value\n0,1\n1,1\n2,2\n3,4\n4,9\n5,21\n6,51\n7,127\n8,323\n9,835\n10,2188\n");
    CHECK(r.err.empty());
}

TEST_CASE("tables default to csv, json carries the version")
{
    CHECK(call({"seq", "catalan", "--n", "3"}).out == "n,value\n0,1\n1,1\n2,2\n3,5\n");
    const auto doc = json::parse(call({"seq", "catalan", "--n", "3", "--format", "json"}).out);
    CHECK(doc["tool_version"] == seqcert::kVersion);
    CHECK(doc["values"] == json{"1", "1", "2", "5"});
    CHECK(doc["provenance"] == "closed-form");
}

TEST_CASE("empty table is a header")
{
    const auto r = call({"seq", "motzkin", "--n", "0", "--ratios"});
    CHECK(r.status == kOk);
    CHECK(r.out == "n,ratio\n");
}

TEST_CASE("ratios and rationals are exact strings")
{
    const auto r = call({"seq", "legendre", "--t", "7/2", "--n", "2", "--ratios"});
    CHECK(r.status == kOk);
    // P_0 = 1, P_1 = 7/2, P_2 = (3 * 49/4 - 1) / 2 = 143/8
    CHECK(r.out == "n,ratio\n1,7/2\n2,143/28\n");
}

TEST_CASE("log report for motzkin")
{
    const auto r = call({"check", "log", "motzkin", "--n", "100", "--format", "json"});
    CHECK(r.status == kOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["property"] == "log-convex");
    CHECK(doc["violation"].is_null());
    CHECK(call({"check", "log", "motzkin", "--n", "100", "--expect", "log-concave"}).status == kPropertyFailed);
    CHECK(call({"check", "log", "binomial", "--n", "20", "--expect", "log-concave"}).status == kOk);
}

TEST_CASE("exit statuses")
{
    CHECK(call({}).status == kUsage);
    CHECK(call({"seq", "fibonacci"}).status == kUsage);
    CHECK(call({"seq", "motzkin", "--n", "-1"}).status == kUsage);
    CHECK(call({"seq", "legendre"}).status == kUsage);
    CHECK(call({"seq", "legendre", "--t", "0.5"}).status == kUsage);
    CHECK(call({"certify", "fibonacci-patchwork"}).status == kUsage);
    CHECK(call({"certify", "motzkin", "--kmin", "3", "--kmax", "2"}).status == kUsage);
    CHECK(call({"oracle", "motzkin", "--n", "30"}).status == kUsage);
    CHECK(call({"check", "asymptotic", "motzkin", "--digits", "5"}).status == kUsage);
    CHECK(call({"verify", temp_path("does_not_exist.json")}).status == kUsage);
    CHECK(call({"--version"}).out == std::string(seqcert::kVersion) + "\n");

    // property violated, first counterexample in the output
    const auto r = call({"certify", "legendre", "--t", "1", "--to", "4", "--strict"});
    CHECK(r.status == kPropertyFailed);
    CHECK(json::parse(r.out)["first_failure"] == 0);
    const auto lim = call({"check", "limit", "motzkin", "--n", "100"});
    CHECK(lim.status == kPropertyFailed);
    CHECK(json::parse(lim.out)["within"] == false);
}

TEST_CASE("oracle runs")
{
    const auto r = call({"oracle", "dyck", "--n", "6", "--format", "json"});
    CHECK(r.status == kOk);
    CHECK(json::parse(r.out)["match"] == true);
    CHECK(call({"oracle", "secondary", "--rank", "-1", "--n", "8"}).status == kOk);
    CHECK(call({"oracle", "partitions", "--n", "6"}).status == kOk);
    CHECK(call({"oracle", "delannoy", "--n", "6"}).status == kOk);
}

TEST_CASE("alpha interval contains the golden ratio squared")
{
    const auto r = call({"alpha", "--rank", "1", "--tol", "1/1000000000000"});
    CHECK(r.status == kOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["contains_closed_form"] == true);
    CHECK(doc["exact"] == false);
}

TEST_CASE("certify rank1 with offset 2")
{
    const auto r = call({"certify", "rank1-patchwork", "--to", "30", "--kmin", "2", "--kmax", "2", "--format", "json"});
    CHECK(r.status == kOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["verdict"] == true);
    int shifts = 0;
    for (const auto& rec : doc["intervals"]) {
        if (rec["n"].get<int>() < 5) continue;
        CHECK(rec["proof"]["method"] == "shift");
        CHECK(rec["proof"]["k"] == 2);
        ++shifts;
    }
    CHECK(shifts == 26);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"certify", "motzkin-patchwork", "--to", "20", "--threads", "1"};
    const auto a = call(args);
    auto parallel = args;
    parallel.back() = "4";
    const auto b = call(parallel);
    CHECK(a.status == kOk);
    CHECK(a.out == b.out);
    CHECK(a.out == call(args).out);
    CHECK(call({"report", "delannoy", "--n", "200"}).out == call({"report", "delannoy", "--n", "200"}).out);
}

TEST_CASE("certificate round trip through a file")
{
    const auto path = temp_path("rank1.json");
    const auto written = call({"certify", "rank1-patchwork", "--to", "16", "--out", path});
    CHECK(written.status == kOk);
    CHECK(written.out.empty());

    const auto v = call({"verify", path});
    CHECK(v.status == kOk);
    const auto report = json::parse(v.out);
    CHECK(report["valid"] == true);
    CHECK(report["claimed_verdict"] == true);
    CHECK(report["problems"].empty());

    // bounds certificates verify the same way
    const auto bpath = temp_path("bounds.json");
    CHECK(call({"certify", "motzkin", "--to", "12", "--lower", "2", "--out", bpath}).status == kOk);
    CHECK(call({"verify", bpath}).status == kOk);

    // a single changed coefficient is caught
    auto doc = json::parse(slurp(path));
    auto& num = doc["patchwork"]["pieces"][10]["num"];
    num[0] = (seqcert::exact::Integer(num[0].get<std::string>()) + 1).str();
    {
        std::ofstream out(path);
        out << doc.dump();
    }
    const auto broken = call({"verify", path});
    CHECK(broken.status == kPropertyFailed);
    CHECK(json::parse(broken.out)["valid"] == false);

    std::remove(path.c_str());
    std::remove(bpath.c_str());
}
