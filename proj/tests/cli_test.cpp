#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "misbound");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = misbound::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    std::string input;
    int code;
};

std::ostream& operator<<(std::ostream& os, const GoldenCase& c) { return os << c.name; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

// Set MISBOUND_UPDATE_GOLDEN=1 to rewrite the expected files after an intended change.
TEST_P(Golden, MatchesExpectedOutput) {
    const auto& c = GetParam();
    auto r = invoke(c.args, c.input);
    EXPECT_EQ(r.code, c.code) << r.err;
    const fs::path file = fs::path(MISBOUND_GOLDEN_DIR) / (c.name + ".txt");
    if (std::getenv("MISBOUND_UPDATE_GOLDEN")) {
        std::ofstream(file, std::ios::binary) << r.out;
        return;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(r.out, slurp(file));
}

const GoldenCase golden_cases[] = {
    {"count_c5", {"count", "DUW"}, "", 0},
    {"count_stdin", {"count"}, "# header comment\nDUW\n\n  D?{  \nC~\n", 0},
    {"count_oracle", {"count", "--oracle", "Dhc", "D?{"}, "", 0},
    {"alpha", {"alpha", "DUW", "D?{", "@"}, "", 0},
    {"classify", {"classify", "DUW", "D?{", "CK", "C]"}, "", 0},
    {"bound_unicyclic", {"bound", "--class", "unicyclic", "-n", "4", "-a", "2"}, "", 0},
    {"bound_tree", {"bound", "--class", "tree", "-n", "60", "-a", "30"}, "", 0},
    {"construct_L9", {"construct", "--family", "L", "-n", "9"}, "", 0},
    {"construct_H_dot", {"construct", "--family", "H", "-n", "8", "-a", "5", "--dot"}, "", 0},
    {"construct_T", {"construct", "--family", "T", "-n", "10", "-a", "5"}, "", 0},
    {"enumerate_tree6", {"enumerate", "--class", "tree", "-n", "6"}, "", 0},
    {"enumerate_unicyclic5", {"enumerate", "--class", "unicyclic", "-n", "5"}, "", 0},
    {"enumerate_forest4", {"enumerate", "--class", "forest", "-n", "4"}, "", 0},
    {"enumerate_alpha", {"enumerate", "--class", "unicyclic", "-n", "7", "--cycle-length", "4", "--alpha", "4"}, "", 0},
    {"verify_tree7", {"verify", "--class", "tree", "--max-n", "7", "--jobs", "2"}, "", 0},
    {"verify_unicyclic7", {"verify", "--class", "unicyclic", "--max-n", "7"}, "", 0},
    {"verify_forest5", {"verify", "--class", "forest", "--max-n", "5"}, "", 0},
    {"lemmas", {"lemmas", "--limit", "20", "--samples", "500"}, "", 0},
    {"lemmas_json", {"lemmas", "--limit", "8", "--samples", "10", "--json"}, "", 0},
    {"convert_to_dot", {"convert", "DUW"}, "", 0},
    {"convert_to_graph6", {"convert"}, "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n", 0},
    {"usage_no_subcommand", {}, "", 2},
    {"usage_bad_graph6", {"count", "D?"}, "", 2},
};

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, ConstructPipesIntoCount) {
    auto built = invoke({"construct", "--family", "L", "-n", "9"});
    ASSERT_EQ(built.code, 0);
    auto counted = invoke({"count"}, built.out);
    EXPECT_EQ(counted.code, 0);
    EXPECT_EQ(counted.out, "12\n");
}

TEST(Cli, EnumerateThenCountReproducesCensus) {
    auto listed = invoke({"enumerate", "--class", "unicyclic", "-n", "8"});
    auto counted = invoke({"count"}, listed.out);
    std::istringstream lines(counted.out);
    std::string line;
    std::uint64_t graphs = 0;
    while (std::getline(lines, line)) ++graphs;
    EXPECT_EQ(graphs, 89u);
    auto rs = misbound::verify_unicyclic_theorem(8, {1});
    std::uint64_t scanned = 0;
    for (const auto& r : rs) {
        if (r.n == 8) scanned += r.graphs_scanned;
    }
    EXPECT_EQ(scanned, graphs);
}

TEST(Cli, ErrorsGoToStderrWithExitTwo) {
    auto r = invoke({"bound", "--class", "tree", "-n", "5", "-a", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("error:"), std::string::npos);

    EXPECT_EQ(invoke({"count", "--oracle", misbound::write_graph6(misbound::build_cycle(26))}).code, 2);
    EXPECT_EQ(invoke({"construct", "--family", "T", "-n", "6"}).code, 2);
    EXPECT_EQ(invoke({"enumerate", "--class", "tree", "-n", "19"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--class", "tree", "--max-n", "5", "--jobs", "-3"}).code, 2);
    EXPECT_EQ(invoke({"count", "DUW", "--file", "x.g6"}).code, 2);
    EXPECT_EQ(invoke({"count", "--file", "/nonexistent/input.g6"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
    auto r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyWritesCertificatesAndWitnesses) {
    auto dir = fs::temp_directory_path() / "misbound_cli_test";
    fs::create_directories(dir);
    auto csv = (dir / "cert.csv").string();
    auto json = (dir / "cert.json").string();
    auto wit = (dir / "witnesses.txt").string();
    EXPECT_EQ(invoke({"verify", "--class", "tree", "--max-n", "6", "--out", csv, "--all-witnesses", wit}).code, 0);
    EXPECT_EQ(invoke({"verify", "--class", "tree", "--max-n", "6", "--out", json}).code, 0);
    EXPECT_EQ(slurp(csv), misbound::export_csv(misbound::verify_tree_theorem(6, {1})));
    EXPECT_EQ(misbound::records_from_json(slurp(json)), misbound::verify_tree_theorem(6, {1}));
    std::istringstream w(slurp(wit));
    std::string line;
    std::uint64_t lines = 0, minimizers = 0;
    while (std::getline(w, line)) ++lines;
    for (const auto& r : misbound::verify_tree_theorem(6, {1})) minimizers += r.minimizer_count;
    EXPECT_EQ(lines, minimizers);
    fs::remove_all(dir);
}

TEST(Cli, FileInput) {
    auto path = (fs::temp_directory_path() / "misbound_cli_input.g6").string();
    std::ofstream(path) << "DUW\nD?{\n";
    auto r = invoke({"count", "--file", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "5\n2\n");
    fs::remove(path);
}

}  // namespace
