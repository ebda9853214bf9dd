#include <zng/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace zng;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "zng");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, DecomposeMatchesComponentTable) {
    auto res = run_cli({"decompose", "--group", "c5xc5", "--n", "36", "--format", "json"});
    ASSERT_EQ(res.code, 0) << res.err;
    const auto report = parse_json<DecompositionReport>(res.out);
    ASSERT_EQ(report.primes.size(), 2u);
    for (const auto& pr : report.primes) {
        ASSERT_EQ(pr.components.size(), 2u);
        EXPECT_EQ(pr.components[0].multiplicity, 1);
        EXPECT_EQ(pr.components[1].multiplicity, 6);
        EXPECT_EQ(pr.components[1].ring.m, 4);
    }
    auto text = run_cli({"decompose", "--group", "c5xc5", "--n", "36"});
    EXPECT_NE(text.out.find("6 x M_1(GR(3^2, 4))"), std::string::npos) << text.out;
    auto trivial = run_cli({"decompose", "--group", "c1", "--p", "7", "--r", "2", "--format", "json"});
    ASSERT_EQ(trivial.code, 0);
    EXPECT_EQ(parse_json<DecompositionReport>(trivial.out).primes[0].components.size(), 1u);
    // byte-identical reruns
    EXPECT_EQ(run_cli({"decompose", "--group", "es27", "--n", "8", "--format", "json"}).out,
              run_cli({"decompose", "--group", "es27", "--n", "8", "--format", "json"}).out);
}

TEST(Cli, UnitsFixtureAndSmallCase) {
    auto res = run_cli({"units", "--group", "c5", "--p", "2", "--r", "3", "--format", "json"});
    ASSERT_EQ(res.code, 0) << res.err;
    const auto report = parse_json<UnitsReport>(res.out);
    ASSERT_EQ(report.generators.size(), 7u);
    std::vector<std::int64_t> orders;
    for (const auto& g : report.generators) orders.push_back(g.order.value());
    EXPECT_EQ(orders, (std::vector<std::int64_t>{2, 2, 60, 4, 4, 2, 2}));
    auto one = run_cli({"units", "--group", "c5", "--p", "2", "--r", "1", "--format", "json"});
    const auto small = parse_json<UnitsReport>(one.out);
    ASSERT_EQ(small.generators.size(), 1u);
    EXPECT_EQ(small.generators[0].order, 15);
    auto cert = run_cli({"units", "--group", "s3", "--p", "5", "--r", "1", "--certify-closure", "--format", "json"});
    ASSERT_EQ(cert.code, 0) << cert.err;
    EXPECT_TRUE(parse_json<UnitsReport>(cert.out).certification->equal);
}

TEST(Cli, GaloisAndVerify) {
    auto res = run_cli({"galois", "--p", "2", "--r", "3", "--m", "2", "--format", "json"});
    ASSERT_EQ(res.code, 0);
    const auto g = parse_json<GaloisReport>(res.out);
    EXPECT_EQ(g.unit_count, 48);
    EXPECT_EQ(g.closure_size, 48);
    auto ver = run_cli({"verify", "--group", "es27", "--p", "2", "--r", "3"});
    EXPECT_EQ(ver.code, 0) << ver.out;
    EXPECT_NE(ver.out.find("all checks passed"), std::string::npos);
    auto sl = run_cli({"verify", "--group", "sl23", "--p", "5", "--r", "1"});
    EXPECT_EQ(sl.code, 0) << sl.out;
}

TEST(Cli, FilesAndUsageErrors) {
    const std::string table = testing::TempDir() + "c3_table.txt";
    std::ofstream(table) << "3\n0 1 2\n1 2 0\n2 0 1\n";
    auto res = run_cli({"decompose", "--group-file", table, "--n", "4", "--format", "json"});
    ASSERT_EQ(res.code, 0) << res.err;
    EXPECT_EQ(parse_json<DecompositionReport>(res.out).primes[0].components.size(), 2u);
    const std::string perms = testing::TempDir() + "s3_perms.txt";
    std::ofstream(perms) << "(1,2)\n(1,2,3)\n";
    auto pres = run_cli({"decompose", "--perm-file", perms, "--n", "25", "--format", "json"});
    ASSERT_EQ(pres.code, 0) << pres.err;

    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"decompose", "--group", "c5"}).code, 2);
    auto gcd = run_cli({"decompose", "--group", "s3", "--n", "12"});
    EXPECT_EQ(gcd.code, 2);
    EXPECT_NE(gcd.err.find("prime 2"), std::string::npos) << gcd.err;
    EXPECT_EQ(run_cli({"units", "--group", "c5", "--p", "5"}).code, 2);
    EXPECT_EQ(run_cli({"units", "--group", "nosuch", "--p", "2"}).code, 2);
    EXPECT_EQ(run_cli({"decompose", "--group-file", "/nonexistent", "--n", "4"}).code, 2);
    EXPECT_EQ(run_cli({"galois", "--p", "4"}).code, 2);
    EXPECT_EQ(run_cli({"decompose", "--group", "c5", "--n", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"units", "--group", "sl23", "--p", "5"}).code, 1);
}
