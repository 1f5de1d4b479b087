#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(UMDA_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("run subcommand smoke") {
    const auto out = fs::temp_directory_path() / "umda_cli_run.json";
    CHECK(run_cli("run --n 1 --lambda 4 --mu 2 --margin 0.5 --fitness onemax "
                  "--seed 7 > " +
                  out.string()) == 0);
    const auto text = slurp(out);
    CHECK(text.find("\"hit_optimum\"") != std::string::npos);
    CHECK(text.find("\"generations\"") != std::string::npos);
}

TEST_CASE("verify pb exits 0 when the batteries pass") {
    CHECK(run_cli("verify pb --trials 300 --n-max 30 --seed 1 > /dev/null") ==
          0);
}

TEST_CASE("verify levels exits 0 on regime instances") {
    CHECK(run_cli("verify levels --n 50 --mu 5 --lambda 354 --c 0.5 "
                  "--instances 25 --seed 2 > /dev/null") == 0);
}

TEST_CASE("bound prints a finite positive bound") {
    const auto out = fs::temp_directory_path() / "umda_cli_bound.json";
    CHECK(run_cli("bound --n 100 --lambda 200 --mu 10 --c 0.5 > " +
                  out.string()) == 0);
    const auto text = slurp(out);
    CHECK(text.find("expected_time_bound") != std::string::npos);
    CHECK(text.find("-") == std::string::npos);  // no negative numbers
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("run --bogus 2> /dev/null") == 2);
    CHECK(run_cli("frobnicate 2> /dev/null") == 2);
    CHECK(run_cli("run --n 0 --lambda 4 --mu 2 --margin 0.5 2> /dev/null") ==
          2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help > /dev/null") == 0);
}

TEST_CASE("sweep + fit workflow") {
    const auto dir = fs::temp_directory_path() / "umda_cli_sweep";
    fs::remove_all(dir);
    CHECK(run_cli("sweep --n-values 20,30,40 --replicates 5 "
                  "--lambda-rule const:12 --mu-rule const:4 --margin 0.5 "
                  "--seed 5 --out " +
                  dir.string() + " > /dev/null") == 0);
    CHECK(fs::exists(dir / "runs.csv"));
    CHECK(fs::exists(dir / "summary.csv"));

    // identical invocation gives byte-identical runs.csv
    const auto first = slurp(dir / "runs.csv");
    CHECK(run_cli("sweep --n-values 20,30,40 --replicates 5 "
                  "--lambda-rule const:12 --mu-rule const:4 --margin 0.5 "
                  "--seed 5 --jobs 3 --out " +
                  dir.string() + " > /dev/null") == 0);
    CHECK(slurp(dir / "runs.csv") == first);

    const auto fits = (dir / "fits.json").string();
    const auto plot = (dir / "plot.svg").string();
    CHECK(run_cli("fit --summary " + (dir / "summary.csv").string() +
                  " --out " + fits + " --plot " + plot + " > /dev/null") == 0);
    CHECK(slurp(fits).find("correlation") != std::string::npos);
    CHECK(slurp(plot).find("<svg") != std::string::npos);
}
