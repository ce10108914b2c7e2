#include "trispec_cli/cli.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "trispec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = trispec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("scan writes the fixed CSV schema") {
    const auto r = run({"scan", "--model", "dho", "--kappa", "0.7", "--x-min", "-1", "--x-max", "6", "--points", "400"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() >= 401);
    CHECK(rows[0] == "x,F,status,branch_id");
    CHECK(rows[1].rfind("-1,", 0) == 0);
    // F changes sign next to -0.49
    bool crossed = false;
    double prev_x = 0, prev_f = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double x = 0, f = 0;
        std::sscanf(rows[i].c_str(), "%lf,%lf", &x, &f);
        if (i > 1 && prev_x < -0.49 && x > -0.49 && prev_f * f < 0) crossed = true;
        prev_x = x;
        prev_f = f;
    }
    CHECK(crossed);
}

TEST_CASE("roots as JSON") {
    const auto r = run({"roots", "--model", "rabi-parity", "--parity", "both", "--kappa", "0.7", "--delta", "0.4",
                        "--x-min", "-1", "--x-max", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["model"] == "rabi-parity");
    CHECK(j["params"]["kappa"] == 0.7);
    bool minus = false, plus = false;
    for (const auto& root : j["roots"]) {
        CHECK(root.contains("bracket"));
        CHECK(root["bracket"].size() == 2);
        if (root["classification"] != "Zero") continue;
        const double e = root["energy"];
        minus = minus || (root["parity"] == "minus" && std::abs(e + 0.707805) < 1e-4);
        plus = plus || (root["parity"] == "plus" && std::abs(e + 0.4270437) < 1e-5);
    }
    CHECK(minus);
    CHECK(plus);
}

TEST_CASE("flow CSV and byte-identical reruns") {
    const auto dir = std::filesystem::temp_directory_path() / "trispec_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "flow_a.csv";
    const auto b = dir / "flow_b.csv";
    const std::vector<std::string> base{"flow", "--model", "rabi-parity", "--kappa", "0.7", "--sweep", "delta:0:1:10",
                                        "--x-min", "-1", "--x-max", "4", "--points", "1000"};
    auto with_out = [&](const std::filesystem::path& p) {
        auto args = base;
        args.push_back("--out");
        args.push_back(p.string());
        return args;
    };
    REQUIRE(run(with_out(a)).code == 0);
    REQUIRE(run(with_out(b)).code == 0);
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    const auto rows = lines(text);
    REQUIRE(rows.size() > 20);
    CHECK(rows[0] == "sweep_value,track_id,x_root,energy,parity,residual");
    CHECK(rows[1].rfind("0,", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("argument errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"scan", "--kappa", "0.7"}).code == 2);                                   // no model
    CHECK(run({"scan", "--model", "dho", "--kappa", "0.7", "--points", "8"}).code == 2);  // too few points
    CHECK(run({"roots", "--model", "dho", "--kappa", "0.7", "--x-min", "2", "--x-max", "1"}).code == 2);
    CHECK(run({"roots", "--model", "nope", "--kappa", "0.7"}).code == 2);
    CHECK(run({"scan", "--model", "rabi-parity", "--kappa", "0.7", "--delta", "0.4"}).code == 2);
    CHECK(run({"flow", "--model", "dho", "--kappa", "0.7"}).code == 2);
    CHECK(run({"flow", "--model", "dho", "--kappa", "0.7", "--sweep", "delta:0:1"}).code == 2);
    CHECK(run({"roots", "--model", "dho", "--kappa", "0.7", "--format", "xml"}).code == 2);
}

TEST_CASE("oracle-only models refuse F-based commands") {
    for (const char* model : {"gen-rabi", "rabi-modified", "jc"}) {
        const auto r = run({"roots", "--model", model, "--kappa", "0.7", "--delta", "0.4"});
        CHECK(r.code == 2);
        CHECK(r.err.find("validate") != std::string::npos);
    }
}

TEST_CASE("validate against the truncated matrix") {
    const auto r = run({"validate", "--model", "rabi-parity", "--kappa", "0.7", "--delta", "0.4", "--x-min", "-1",
                        "--x-max", "3", "--points", "2000"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["levels"].size() > 4);

    const auto gen = run({"validate", "--model", "gen-rabi", "--kappa", "0.5", "--delta", "0.3", "--theta", "0.2",
                          "--x-min", "-1", "--x-max", "2"});
    CHECK(gen.code == 0);
    CHECK(nlohmann::json::parse(gen.out)["levels"].size() > 2);
}

TEST_CASE("unconverged grid points are recorded, not fatal") {
    const auto r = run({"scan", "--model", "dho", "--kappa", "0.7", "--max-terms", "2", "--points", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",max_terms,") != std::string::npos);
}
