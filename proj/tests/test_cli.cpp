#include "detsing/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace detsing;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "detsing");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    testing::internal::CaptureStdout();
    testing::internal::CaptureStderr();
    int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::string out = testing::internal::GetCapturedStdout();
    testing::internal::GetCapturedStderr();
    return {code, out};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void expect_schema(const json& j)
{
    ASSERT_TRUE(j.contains("params"));
    ASSERT_TRUE(j.contains("rows"));
    ASSERT_TRUE(j.contains("provenance"));
    EXPECT_TRUE(j["params"].is_object());
    EXPECT_TRUE(j["rows"].is_array());
    EXPECT_TRUE(j["provenance"]["result"].is_string());
}

} // namespace

TEST(Cli, CohomologyGolden)
{
    auto r = run_cli({"cohomology", "--m", "3", "--a", "2", "--b", "2", "--c", "1", "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_file(std::string(DETSING_GOLDEN_DIR) + "/cohomology_m3_a2_b2_c1.json"));
    auto j = json::parse(r.out);
    expect_schema(j);
    EXPECT_EQ(j["nu"], 1);
    EXPECT_EQ(j["rank"], 3);
    EXPECT_EQ(j["descriptor"], "F^∨_1");
}

TEST(Cli, EverySubcommandEmitsSchema)
{
    std::vector<std::vector<std::string>> cmds = {
        {"cohomology", "--m", "3", "--a", "1", "--b", "3", "--c", "-2", "--json"},
        {"rankpoly", "--m", "3", "--a", "1", "--b", "2", "--json"},
        {"betti", "--m", "2", "--n", "3", "--a", "1", "--b", "2", "--c", "0", "--json"},
        {"presentation", "--m", "2", "--n", "2", "--a", "1", "--b", "2", "--blocks", "--json"},
        {"ext", "--m", "3", "--n", "3", "--a", "1", "--b", "1", "--t", "2", "--json"},
        {"simples", "--m", "3", "--n", "4", "--a", "2", "--tmax", "3", "--json"},
        {"verify", "--suite", "cohomology", "--m", "3", "--json"},
    };
    for (auto& c : cmds) {
        auto r = run_cli(c);
        EXPECT_EQ(r.code, 0) << c[0];
        expect_schema(json::parse(r.out));
    }
}

TEST(Cli, PresentationPolynomialsAndTriplets)
{
    auto r = run_cli({"presentation", "--m", "5", "--n", "5", "--a", "4", "--b", "4", "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["delta_orders"], json::parse("[[5,4],[4,3]]"));
    auto& entries = j["rho"]["entries"];
    ASSERT_FALSE(entries.empty());
    for (auto& e : entries) {
        EXPECT_TRUE(e["row"].is_number_integer());
        EXPECT_TRUE(e["col"].is_number_integer());
        for (auto& term : e["poly"]) {
            EXPECT_TRUE(term["coeff_num"].is_string());
            EXPECT_EQ(term["coeff_den"], "1");
            EXPECT_TRUE(term["exponents"].is_object());
        }
    }
    auto human = run_cli({"presentation", "--m", "5", "--n", "5", "--a", "4", "--b", "4"});
    EXPECT_NE(human.out.find("((Δ^(5), Δ^(4)), (Δ^(4), Δ^(3)))"), std::string::npos);
}

TEST(Cli, VerifyHilbertExitsZero)
{
    auto r = run_cli({"verify", "--suite", "hilbert", "--m", "2", "--n", "2", "--max-degree", "6"});
    EXPECT_EQ(r.code, 0);
}

TEST(Cli, SeedDeterminism)
{
    auto a = run_cli({"verify", "--suite", "moduli", "--m", "2", "--n", "2", "--seed", "7", "--json"});
    auto b = run_cli({"verify", "--suite", "moduli", "--m", "2", "--n", "2", "--seed", "7", "--json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFileMatchesStdout)
{
    auto path = std::filesystem::temp_directory_path() / "detsing_cli_out.json";
    auto r = run_cli({"ext", "--m", "3", "--n", "3", "--a", "1", "--b", "3", "--t", "3", "--json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(read_file(path.string()), r.out);
    std::filesystem::remove(path);
}

TEST(Cli, ModuliFromFiles)
{
    auto dir = std::filesystem::temp_directory_path();
    auto al = (dir / "detsing_alpha.txt").string(), be = (dir / "detsing_beta.txt").string();
    std::ofstream(al) << "1 0 0\n0 1 0\n";
    std::ofstream(be) << "1 1/2 0\n0 0 0\n";
    auto r = run_cli({"moduli", "--m", "3", "--n", "3", "--alpha", al, "--beta", be, "--json"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j["relations_hold"]);
    EXPECT_FALSE(j["simple"]);
    EXPECT_EQ(j["associated_rank"], 1);
    std::filesystem::remove(al);
    std::filesystem::remove(be);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"nonsense"}).code, 2);
    EXPECT_EQ(run_cli({"cohomology", "--m", "3", "--a", "2"}).code, 2);
    EXPECT_EQ(run_cli({"cohomology", "--m", "3", "--a", "5", "--b", "1", "--c", "0"}).code, 2);
    EXPECT_EQ(run_cli({"betti", "--m", "3", "--n", "2", "--a", "1", "--b", "1", "--c", "0"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--suite", "bogus", "--m", "2"}).code, 2);
    EXPECT_EQ(run_cli({"cohomology", "--help"}).code, 0);
}

TEST(TextTable, AlignsColumns)
{
    cli::TextTable t({"a", "long header"});
    t.add({"value", "x"});
    t.add({"Δ", "yy"});
    std::ostringstream os;
    t.print(os);
    EXPECT_EQ(os.str(), "a      long header\n------------------\nvalue  x\nΔ      yy\n");
}
