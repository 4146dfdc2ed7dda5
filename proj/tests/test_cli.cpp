#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(MCKAY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<nlohmann::json> lines(const std::string& out) {
    std::vector<nlohmann::json> v;
    std::istringstream is(out);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) v.push_back(nlohmann::json::parse(line));
    return v;
}

}  // namespace

TEST_CASE("core subcommand") {
    const auto r = run("core --p 5 --k 1 --partition 8,5,3,3");
    REQUIRE(r.exitCode == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["core"] == nlohmann::json::array({1, 1, 1, 1}));
    CHECK(j["quotientSize"] == 3);
    CHECK(j["r"] == 5);
}

TEST_CASE("enumerate json and csv") {
    const auto j = run("enumerate --n 6 --p 5");
    REQUIRE(j.exitCode == 0);
    const auto rows = lines(j.out);
    CHECK(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row.contains("lambda"));
        CHECK(row["degree"].is_string());
    }

    const auto c = run("enumerate --n 6 --p 5 --format csv");
    REQUIRE(c.exitCode == 0);
    CHECK(c.out.find("6,5,") != std::string::npos);
}

TEST_CASE("normalizer labels") {
    const auto r = run("normalizer --n 6 --p 5");
    REQUIRE(r.exitCode == 0);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row["label"].contains("digits"));
        CHECK(row["label"].contains("tail"));
    }
}

TEST_CASE("lr subcommand") {
    const auto r = run("lr --outer 4,1 --mu 4 --gamma 1");
    REQUIRE(r.exitCode == 0);
    CHECK(nlohmann::json::parse(r.out)["coeff"] == 1);

    const auto split = run("lr --outer 3,2 --x 2");
    REQUIRE(split.exitCode == 0);
    for (const auto& row : lines(split.out)) {
        CHECK(row.contains("mu"));
        CHECK(row.contains("gamma"));
        CHECK(row["coeff"].get<long long>() > 0);
    }
}

TEST_CASE("restrict subcommand") {
    const auto r = run("restrict --p 5 --k 1");
    REQUIRE(r.exitCode == 0);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 7);  // all of P(5)
    int zero = 0;
    for (const auto& row : rows)
        if (row["multiplicity"].get<std::string>() == "0") ++zero;
    CHECK(zero == 2);  // exactly (5) and (1^5)
}

TEST_CASE("bijection subcommand") {
    const auto r = run("bijection --n 10 --p 5 --strategy recursive");
    REQUIRE(r.exitCode == 0);
    const auto rows = lines(r.out);
    CHECK(rows.size() == 20);
    for (const auto& row : rows) {
        CHECK(row.contains("lambda"));
        CHECK(row.contains("label"));
        CHECK(row["dS"].is_string());
        CHECK(row["dN"].is_string());
    }
}

TEST_CASE("exit code 2 on bad input") {
    CHECK(run("core --p 4 --partition 2,1").exitCode == 2);       // 4 not prime
    CHECK(run("core --p 5 --partition 1,2").exitCode == 2);       // not weakly decreasing
    CHECK(run("enumerate --n 6").exitCode == 2);                  // missing required
    CHECK(run("lr --outer 4,1 --mu 4 --gamma 2").exitCode == 2);  // size mismatch
    CHECK(run("nonsense").exitCode == 2);
}

TEST_CASE("cache round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "mckay-cli-test-cache";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    setenv("MCKAY_CACHE_DIR", dir.c_str(), 1);

    const auto first = run("enumerate --n 12 --p 5");
    REQUIRE(first.exitCode == 0);
    REQUIRE_FALSE(std::filesystem::is_empty(dir));

    // no stray temporary files left behind
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        CHECK(entry.path().extension() != ".tmp");

    const auto second = run("enumerate --n 12 --p 5");
    REQUIRE(second.exitCode == 0);
    CHECK(second.out == first.out);

    unsetenv("MCKAY_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify smoke run") {
    const auto r = run("verify --n-max 8 --primes 2,3");
    REQUIRE(r.exitCode == 0);
    const auto rows = lines(r.out);
    REQUIRE(!rows.empty());
    bool sawSummary = false;
    for (const auto& row : rows) {
        CHECK(row["status"] != "fail");
        if (row["checkId"] == "bijection-sweep") sawSummary = true;
    }
    CHECK(sawSummary);
}
