#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

#include "motzkin/core/errors.hpp"
#include "run_config.hpp"

using namespace motzkin;
using namespace motzkin::cli;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the binary named by MOTZKIN_CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("MOTZKIN_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "MOTZKIN_CLI is not set");
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + bin + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

// Lines not starting with '#'.
std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line.front() != '#') lines.push_back(line);
    return lines;
}

std::string header_value(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + "=");
    if (pos == std::string::npos) return "";
    const auto start = pos + key.size() + 1;
    return text.substr(start, text.find_first_of(" \n", start) - start);
}

}  // namespace

TEST_CASE("config precedence: defaults, file, flags, environment seed") {
    std::istringstream file_text("# comment\n\nsigma = 2\nseed=5\nlen=30\n");
    const auto file = parse_config_file(file_text);
    CHECK(file.size() == 3);

    RunConfig cfg = resolve(file, {{"len", "40"}}, nullptr);
    CHECK(cfg.sigma == 2.0);
    CHECK(cfg.seed == 5);
    CHECK(cfg.len == 40);
    CHECK(cfg.a == 1.0);

    cfg = resolve(file, {{"seed", "6"}}, "11");
    CHECK(cfg.seed == 11);
    cfg = resolve(file, {}, "");
    CHECK(cfg.seed == 5);
}

TEST_CASE("config values are validated") {
    CHECK_THROWS_AS(resolve({{"nope", "1"}}, {}, nullptr), Error);
    CHECK_THROWS_AS(resolve({}, {{"sigma", "1.5x"}}, nullptr), Error);
    CHECK_THROWS_AS(resolve({}, {{"sigma", "inf"}}, nullptr), Error);
    CHECK_THROWS_AS(resolve({}, {{"len", "3.5"}}, nullptr), Error);
    CHECK_THROWS_AS(resolve({}, {{"workers", "0"}}, nullptr), Error);
    CHECK_THROWS_AS(resolve({}, {{"format", "xml"}}, nullptr), Error);
    CHECK_THROWS_AS(resolve({}, {{"tol", "partition"}}, nullptr), Error);
    std::istringstream bad("sigma\n");
    CHECK_THROWS_AS(parse_config_file(bad), Error);

    const RunConfig cfg = resolve({}, {{"grid", "0, 0.5,1"}, {"tol", "partition:1e-6,norm_const:1e-7"}}, nullptr);
    CHECK(cfg.grid == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(cfg.tol.at("partition") == 1e-6);
    CHECK(cfg.tol.at("norm_const") == 1e-7);

    RunConfig one_rho = resolve({}, {{"rho0", "0.5"}}, nullptr);
    CHECK_THROWS_AS(one_rho.geometric(), Error);
}

TEST_CASE("config hash is stable and sensitive") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    const RunConfig a = resolve({}, {{"seed", "1"}}, nullptr);
    const RunConfig b = resolve({}, {{"seed", "2"}}, nullptr);
    CHECK(fnv1a_hex(a.to_json().dump()) == fnv1a_hex(resolve({}, {}, nullptr).to_json().dump()));
    CHECK(fnv1a_hex(a.to_json().dump()) != fnv1a_hex(b.to_json().dump()));
}

TEST_CASE("enumerate") {
    Run r = run("enumerate --len 4");
    CHECK(r.status == 0);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 10);
    CHECK(rows.front() == "g0,g1,g2,g3,g4");
    CHECK(header_value(r.out, "count") == "9");
    CHECK(header_value(r.out, "transfer_count") == "9");

    r = run("enumerate --len 4 --weights sigma --sigma 2");
    CHECK(r.status == 0);
    CHECK(header_value(r.out, "total_weight") == header_value(r.out, "transfer_count"));

    r = run("enumerate --len 1 --from 0 --to 2");
    CHECK(r.status == 0);
    CHECK(header_value(r.out, "count") == "0");

    CHECK(run("enumerate --len 40").status == 2);
    CHECK(run("enumerate --len 4 --from -1").status == 2);
    CHECK(run("enumerate --len 4 --weights altitude").status == 2);

    r = run("enumerate --len 3 --format json");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("count") == 4);
    CHECK(doc.at("provenance").at("command") == "enumerate");
}

TEST_CASE("partition") {
    Run r = run("partition --len 1 --rho0 0.5 --rho1 0.5 --method dp --format json");
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(std::stod(doc.at("values").at("dp").at("value").get<std::string>()) == doctest::Approx(8.0 / 3.0).epsilon(1e-12));

    r = run("partition --len 60 --boundary exponential --format json");
    REQUIRE(r.status == 0);
    const auto all = nlohmann::json::parse(r.out);
    CHECK(all.at("values").contains("asymptotic"));
    CHECK(std::stod(all.at("relative_gaps").at("dp/integral").get<std::string>()) < 1e-8);

    CHECK(run("partition --len 1 --rho0 2 --rho1 0.6").status == 2);
    CHECK(run("partition --len 10 --rho0 0.5").status == 2);
    CHECK(run("partition --len 10 --rho0 0.5 --rho1 0.5 --method asymptotic").status == 2);
    CHECK(run("partition --len 10 --a -1").status == 2);
}

TEST_CASE("sample output is reproducible and seeded") {
    const std::string args = "sample --len 30 --M 1000 --seed 42";
    const Run first = run(args);
    const Run second = run(args + " --workers 3");
    REQUIRE(first.status == 0);
    const auto rows = data_lines(first.out);
    CHECK(rows.size() == 1001);
    CHECK(data_lines(second.out) == rows);

    const Run other = run("sample --len 30 --M 1000 --seed 43");
    CHECK(data_lines(other.out) != rows);

    const Run env = run("sample --len 30 --M 1000 --seed 43", "MOTZKIN_SEED=42");
    CHECK(data_lines(env.out) == rows);
    CHECK(header_value(env.out, "seed") == "42");

    const Run summary = run("sample --len 200 --M 4000 --summary --format json");
    REQUIRE(summary.status == 0);
    const auto doc = nlohmann::json::parse(summary.out);
    for (const auto& row : doc.at("rows")) {
        const std::string stat = row.at("statistic");
        if (stat.rfind("frac_", 0) != 0) continue;
        CHECK(std::stod(row.at("empirical").get<std::string>()) == doctest::Approx(1.0 / 3.0).epsilon(0.02));
    }
}

TEST_CASE("kernel") {
    const Run r = run("kernel --name semicircle --lo 0 --hi 2 --points 5");
    CHECK(r.status == 0);
    CHECK(data_lines(r.out).size() == 6);
    CHECK(run("kernel --name nope").status == 2);
}

TEST_CASE("verify") {
    const Run ok = run("verify identities");
    CHECK(ok.status == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc.at("provenance").at("command") == "verify identities");
    CHECK(doc.at("rows").size() >= 30);

    CHECK(run("verify identities --tol partition:1e-16").status == 1);
    CHECK(run("verify bogus").status == 2);
    CHECK(run("verify").status == 2);
    CHECK(run("verify identities --tol bogus:1").status == 2);
}

TEST_CASE("exit codes for I/O and parsing") {
    CHECK(run("--help").status == 0);
    CHECK(run("enumerate --bogus").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("enumerate --len 3 --out /nonexistent-dir/x.csv").status == 3);
    CHECK(run("enumerate --config /nonexistent-dir/x.cfg").status == 3);
}
