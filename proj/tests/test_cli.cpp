#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end checks driving the installed command-line binary. The binary
// path and the data directory arrive through environment variables set by
// the build.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* path = std::getenv("BATOPT_CLI");
    REQUIRE_MESSAGE(path != nullptr, "BATOPT_CLI must point at the batopt binary");
    return path;
}

std::string data_dir() {
    const char* path = std::getenv("BATOPT_DATA_DIR");
    REQUIRE_MESSAGE(path != nullptr, "BATOPT_DATA_DIR must point at the data directory");
    return path;
}

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

CommandResult run_cli(const std::string& args) {
    const fs::path out_file = fs::temp_directory_path() / "batopt_cli_out.txt";
    const std::string command =
        cli_path() + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    fs::remove(out_file);
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

} // namespace

TEST_CASE("list-functions prints all 23 rows") {
    const auto result = run_cli("list-functions");
    CHECK(result.exit_code == 0);
    std::size_t rows = 0;
    std::istringstream in(result.output);
    std::string line;
    bool saw_f1_bounds = false, saw_f23 = false;
    while (std::getline(in, line)) {
        if (line.rfind("F", 0) == 0) ++rows;
        if (line.rfind("F1 ", 0) == 0 && line.find("[-100, 100]") != std::string::npos)
            saw_f1_bounds = true;
        if (line.rfind("F23", 0) == 0 && line.find("fixed 4") != std::string::npos &&
            line.find("[0, 10]") != std::string::npos)
            saw_f23 = true;
    }
    CHECK(rows == 23);
    CHECK(saw_f1_bounds);
    CHECK(saw_f23);
}

TEST_CASE("bench writes the requested CSV report") {
    const fs::path out = fs::temp_directory_path() / "batopt_bench.csv";
    const auto result = run_cli("bench --algo mba --fn F1 --runs 3 --iters 20 --pop 8 --seed 7 "
                                "--out " + out.string());
    CHECK(result.exit_code == 0);
    REQUIRE(fs::exists(out));
    const std::string csv = slurp(out);
    CHECK(count_lines_starting(csv, "run,") == 3);
    CHECK(count_lines_starting(csv, "summary,") == 1);
    fs::remove(out);
}

TEST_CASE("identical command lines give byte-identical files") {
    const fs::path out1 = fs::temp_directory_path() / "batopt_det1.csv";
    const fs::path out2 = fs::temp_directory_path() / "batopt_det2.csv";
    const std::string args = "compare --fn F1,F16 --runs 3 --iters 15 --pop 6 --seed 11 --out ";
    CHECK(run_cli(args + out1.string()).exit_code == 0);
    CHECK(run_cli(args + out2.string()).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
    fs::remove(out1);
    fs::remove(out2);
}

TEST_CASE("unknown function is a usage error") {
    const auto result = run_cli("bench --fn F99 --runs 2 --iters 5 --pop 4");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("unknown function") != std::string::npos);
}

TEST_CASE("dimension override on a fixed-dimension function is rejected") {
    const auto result = run_cli("bench --algo ba --fn F14 --dim 10 --runs 2 --iters 5 --pop 4");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("fixed dimension 2") != std::string::npos);
}

TEST_CASE("unwritable output path fails with a message") {
    const auto result =
        run_cli("bench --fn F1 --runs 2 --iters 5 --pop 4 --out /nonexistent-dir/report.csv");
    CHECK(result.exit_code != 0);
    CHECK(!result.output.empty());
}

TEST_CASE("assign solves the bundled restaurant instance") {
    const std::string matrix = (fs::path(data_dir()) / "restaurant_costs.csv").string();
    const auto result = run_cli("assign " + matrix + " --oracle --seed 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("1167") != std::string::npos);
    CHECK(result.output.find("match: yes") != std::string::npos);
    CHECK(result.output.find("minutes") != std::string::npos);
}

TEST_CASE("assign rejects a negative entry naming its coordinates") {
    const fs::path bad = fs::temp_directory_path() / "batopt_bad_matrix.csv";
    {
        std::ofstream out(bad);
        out << "1,2,3\n4,-5,6\n7,8,9\n";
    }
    const auto result = run_cli("assign " + bad.string());
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("row 1") != std::string::npos);
    CHECK(result.output.find("column 1") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("assign handles a one-job instance") {
    const fs::path single = fs::temp_directory_path() / "batopt_single.csv";
    {
        std::ofstream out(single);
        out << "42\n";
    }
    const auto result = run_cli("assign " + single.string() + " --iters 5 --pop 4");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("job 0 -> worker 0") != std::string::npos);
    CHECK(result.output.find("42") != std::string::npos);
    fs::remove(single);
}

TEST_CASE("assignment study emits one row per dimension") {
    const auto result = run_cli("assign --study 4-6 --runs 2 --iters 30 --pop 8 --seed 5");
    CHECK(result.exit_code == 0);
    CHECK(count_lines_starting(result.output, "4,") == 1);
    CHECK(count_lines_starting(result.output, "5,") == 1);
    CHECK(count_lines_starting(result.output, "6,") == 1);
    CHECK(result.output.rfind("dimension,runs,average_value,std_dev,minutes", 0) == 0);
}

TEST_CASE("the yang preset selects the four large-dimension tasks at population 40") {
    const auto result = run_cli("compare --preset yang --runs 2 --iters 3 --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"population\": 40") != std::string::npos);
    CHECK(result.output.find("\"dim\": 256") != std::string::npos);
    CHECK(result.output.find("\"dim\": 16") != std::string::npos);
    CHECK(count_lines_starting(result.output, "") > 0);
}

TEST_CASE("bench JSON output parses") {
    const auto result = run_cli("bench --fn F16 --runs 2 --iters 10 --pop 5 --format json");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"entries\"") != std::string::npos);
    CHECK(result.output.find("\"plan\"") != std::string::npos);
}

TEST_CASE("missing subcommand is a usage error") {
    const auto result = run_cli("");
    CHECK(result.exit_code == 1);
}
