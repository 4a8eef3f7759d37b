#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "psing/representation.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = psing::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(CliClassify, Json) {
    Result r = run({"classify", "-p", "5", "--rep", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["schema"], "psing/1");
    EXPECT_EQ(doc["delta"], 1);
    EXPECT_EQ(doc["class"], "terminal");
    EXPECT_EQ(doc["cm"], false);
    EXPECT_EQ(doc["D"], 6);
    EXPECT_EQ(doc["lower_bound"], "2/5");
    EXPECT_EQ(doc["upper_bound"], 1);
    EXPECT_EQ(doc["maximizers"], json::array({1, 2, 3, 4}));
}

TEST(CliClassify, PlainNegativeInfinityAndSmooth) {
    Result r = run({"classify", "-p", "5", "--rep", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("delta: -inf"), std::string::npos);
    EXPECT_NE(r.out.find("cm: true"), std::string::npos);

    Result smooth = run({"classify", "-p", "7", "--rep", "1^2", "--format", "json"});
    ASSERT_EQ(smooth.code, 0);
    json doc = json::parse(smooth.out);
    EXPECT_EQ(doc["delta"], "smooth");
    EXPECT_TRUE(doc["upper_bound"].is_null());
}

TEST(CliClassify, ValidationExitCodes) {
    Result r = run({"classify", "-p", "4", "--rep", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("p must be prime"), std::string::npos);
    EXPECT_EQ(run({"classify", "-p", "5", "--rep", "6"}).code, 2);
    EXPECT_EQ(run({"classify", "-p", "5", "--rep", "4^x"}).code, 2);
    EXPECT_EQ(run({"classify", "-p", "5"}).code, 2);
    EXPECT_EQ(run({"classify", "-p", "5", "--rep", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
}

TEST(CliClassify, CenterBoundsAndRemarkFlag) {
    Result r = run({"classify", "-p", "5", "--rep", "4", "--center-dim", "0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json c = json::parse(r.out)["center_bounds"];
    EXPECT_EQ(c["lower"], "7/5");
    EXPECT_EQ(c["upper"], 2);

    Result gap = run({"classify", "-p", "3", "--rep", "2^2", "--center-dim", "1"});
    ASSERT_EQ(gap.code, 0);
    EXPECT_NE(gap.out.find("center lower bound: none"), std::string::npos);
    EXPECT_NE(gap.out.find("note: D = p - 1"), std::string::npos);

    Result literal = run({"--remark-literal", "classify", "-p", "3", "--rep", "2^2", "--center-dim",
                          "1", "--format", "json"});
    ASSERT_EQ(literal.code, 0) << literal.err;
    json lc = json::parse(literal.out)["center_bounds"];
    EXPECT_EQ(lc["lower"], "1/3");
    EXPECT_EQ(lc["hypothesis_gap"], true);
    EXPECT_EQ(lc["policy"], "literal");

    EXPECT_EQ(run({"classify", "-p", "5", "--rep", "3", "--center-dim", "0"}).code, 2);
}

TEST(CliClassify, CsvHeaderIsFixed) {
    Result r = run({"classify", "-p", "7", "--rep", "3,2", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    EXPECT_EQ(ls[0], psing::cli::kRowCsvHeader);
    EXPECT_EQ(ls[1].rfind("7,\"3,2\",5,2,3,4,-inf,not-log-canonical,false,", 0), 0u) << ls[1];
}

TEST(CliSht, SingleValueAndProfile) {
    Result r = run({"sht", "-p", "5", "--rep", "4", "-j", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3\n");

    Result nu = run({"sht", "-p", "5", "--rep", "4", "-j", "0", "--nu"});
    ASSERT_EQ(nu.code, 0) << nu.err;
    EXPECT_EQ(nu.out, "1\n");

    Result profile = run({"sht", "-p", "5", "--rep", "4", "--profile", "--format", "csv"});
    ASSERT_EQ(profile.code, 0);
    auto ls = lines(profile.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], "s,sht,jump,nu");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto first = ls[i].find(',');
        auto second = ls[i].find(',', first + 1);
        auto third = ls[i].find(',', second + 1);
        EXPECT_EQ(ls[i].substr(second + 1, third - second - 1), "1");
    }

    Result js = run({"sht", "-p", "5", "--rep", "4", "-j", "8", "--format", "json"});
    json doc = json::parse(js.out);
    EXPECT_EQ(doc["sht"], 8);
    EXPECT_EQ(doc["nu"], 1 + 8 - 1 - 8);
}

TEST(CliSht, Errors) {
    Result r = run({"sht", "-p", "5", "--rep", "4", "-j", "10"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("DivisibleJump"), std::string::npos);
    EXPECT_EQ(run({"sht", "-p", "5", "--rep", "4"}).code, 2);
    EXPECT_EQ(run({"sht", "-p", "5", "--rep", "4", "-j", "1", "--profile"}).code, 2);
}

TEST(CliSearch, MinimalExamples) {
    Result r = run({"search", "--primes", "5", "--d-max", "6", "--terminal", "--not-cm", "--minimal",
                    "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json rows = json::parse(r.out)["rows"];
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0]["rep"], "4");
    EXPECT_EQ(rows[0]["d"], 4);

    r = run({"search", "--primes", "2", "--d-max", "8", "--terminal", "--not-cm", "--minimal",
             "--format", "json"});
    rows = json::parse(r.out)["rows"];
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0]["rep"], "2^3");
    EXPECT_EQ(rows[0]["d"], 6);

    r = run({"search", "--primes", "3", "--d-max", "2", "--terminal", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["rows"].empty());
}

TEST(CliSearch, ClassFlagsAreInclusive) {
    Result r = run({"search", "--primes", "3", "--d-max", "6", "--log-canonical", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    std::set<std::string> classes;
    json doc = json::parse(r.out);
    for (const auto& row : doc["rows"]) classes.insert(row["class"].get<std::string>());
    EXPECT_EQ(classes, (std::set<std::string>{"terminal", "canonical-strict", "log-canonical-strict"}));

    r = run({"search", "--primes", "3", "--d-max", "4", "--class", "log-canonical-strict", "--format",
             "json"});
    doc = json::parse(r.out);
    EXPECT_FALSE(doc["rows"].empty());
    for (const auto& row : doc["rows"]) EXPECT_EQ(row["class"], "log-canonical-strict");
    EXPECT_EQ(run({"search", "--primes", "3", "--d-max", "4", "--class", "bogus"}).code, 2);
}

TEST(CliSearch, ErrorsAndCap) {
    EXPECT_EQ(run({"search", "--primes", "4", "--d-max", "3"}).code, 2);
    EXPECT_EQ(run({"search", "--primes", "3", "--d-max", "0"}).code, 2);
    EXPECT_EQ(run({"search", "--primes", "3", "--d-min", "4", "--d-max", "3"}).code, 2);
    ::setenv("PSING_MAX_PARTITIONS", "5", 1);
    Result r = run({"search", "--primes", "3", "--d-max", "10"});
    ::unsetenv("PSING_MAX_PARTITIONS");
    EXPECT_EQ(r.code, 3);
}

TEST(CliOutput, RepStringsRoundTrip) {
    Result r = run({"table", "--primes", "2,3,5", "--d-max", "7", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    json rows = json::parse(r.out)["rows"];
    EXPECT_GT(rows.size(), 50u);
    for (const auto& row : rows) {
        std::string text = row["rep"];
        auto rep = psing::parse_representation(row["p"].get<int>(), text);
        EXPECT_EQ(psing::format_rep_string(rep), text);
        EXPECT_EQ(static_cast<long long>(rep.dimension()), row["d"].get<long long>());
    }
}

TEST(CliVerify, Examples) {
    Result r = run({"verify", "--primes", "2,3,5,7", "--d-max", "10", "--n-max", "3"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("all properties hold"), std::string::npos);
    EXPECT_NE(r.out.find("delta-oracle:"), std::string::npos);

    r = run({"verify", "--primes", "2", "--d-max", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    json doc = json::parse(r.out);
    EXPECT_EQ(doc["ok"], true);
    EXPECT_EQ(doc["properties"]["delta-oracle"], 0);

    EXPECT_EQ(run({"verify", "--primes", "13", "--d-max", "6"}).code, 0);
    EXPECT_EQ(run({"verify", "--primes", "13", "--d-max", "6", "--n-max", "0"}).code, 2);
}
