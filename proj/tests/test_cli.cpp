#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using res_atlas::cli::run;

namespace {
struct Out {
    int code;
    std::string out, err;
};

Out call(std::vector<std::string> args) {
    std::ostringstream o, e;
    int code = run(args, o, e);
    return {code, o.str(), e.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST(Cli, CatalogJson) {
    auto r = call({"catalog"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["families"].size(), 5u);
    bool flagged = false;
    for (const auto& f : j["families"])
        for (const auto& s : f["spaces"])
            if (s["label"] == "BDI:5") flagged = s["continuation_excluded"].get<bool>();
    EXPECT_TRUE(flagged);
    EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
}

TEST(Cli, CatalogCsv) {
    auto r = call({"catalog", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("label,", 0), 0u);
    EXPECT_EQ(lines(r.out), 16);
}

TEST(Cli, ResonanceBounds) {
    auto a = call({"resonances", "--space", "DIII", "--max-radius-sq", "35", "--format", "csv"});
    auto b = call({"resonances", "--space", "DIII", "--max-radius-sq", "40", "--format", "csv"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(lines(a.out), 5);
    EXPECT_EQ(lines(b.out), 6);
    EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "h,radius_sq,abs_z_over_b,members,lambda,weights,aliases");
}

TEST(Cli, ResonanceJson) {
    auto r = call({"resonances", "--space", "DIII", "--count", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["resonances"].size(), 3u);
    EXPECT_EQ(j["resonances"][0]["radius_sq"], "29/2");
    EXPECT_EQ(call({"resonances", "--space", "DIII", "--count", "3"}).out, r.out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(call({"resonances", "--space", "BDI:5", "--count", "2"}).code, 4);
    EXPECT_EQ(call({"verify", "--suite", "bogus"}).code, 3);
    EXPECT_EQ(call({"resonances", "--count", "2"}).code, 3);
    EXPECT_EQ(call({"resonances", "--space", "XYZ", "--count", "2"}).code, 3);
    EXPECT_EQ(call({}).code, 3);
}

TEST(Cli, VerifyPlancherel) {
    auto r = call({"verify", "--suite", "plancherel", "--space", "DIII"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(call({"verify", "--suite", "plancherel", "--space", "DIII", "--tol", "1e-30"}).code, 2);
}

TEST(Cli, Density) {
    auto r = call({"density", "--space", "DIII", "--lambda", "1.5,0.2,3.5,0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NO_THROW(nlohmann::json::parse(r.out));
}
