#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(KNODEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("prob emits the double-step boundary series") {
    const RunResult r = run("prob --alpha 1/2 --double --steps 2 --state top:0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "method,alpha,state,step,value\n"
          "dp,1/2,top:0,0,1\n"
          "dp,1/2,top:0,1,1/2\n"
          "dp,1/2,top:0,2,5/16\n");
}

TEST_CASE("prob on the extra state") {
    const RunResult r = run("prob --alpha 1/3 --steps 1 --state P --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "method,alpha,state,step,value\n"
          "dp,1/3,P,0,0\n"
          "dp,1/3,P,1,2/3\n");
}

TEST_CASE("methods agree and --verify passes") {
    const std::string base = "prob --alpha 1/2 --double --steps 2 --state top:0 --format csv";
    const RunResult dp = run(base);
    for (const std::string method : {"kernel2", "kernel3", "closed"}) {
        const RunResult m = run(base + " --method " + method + " --verify");
        CHECK(m.exit_code == 0);
        // identical numeric content, only the method column differs
        std::string normalised = m.out;
        size_t pos = 0;
        while ((pos = normalised.find(method, pos)) != std::string::npos)
            normalised.replace(pos, method.size(), "dp");
        CHECK(normalised == dp.out);
    }
}

TEST_CASE("single-step queries work through every pipeline") {
    for (const std::string method : {"kernel2", "kernel3", "closed"}) {
        const RunResult r = run("prob --alpha 2/5 --steps 9 --state bottom:2 --method " + method +
                                " --verify --format csv");
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("output is byte-deterministic") {
    const std::string cmd = "prob --alpha 1/7 --steps 6 --state top:1 --format json --float";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("csv and json carry identical numeric content") {
    const std::string base = "prob --alpha 2/7 --double --steps 5 --state bottom:1";
    const RunResult csv = run(base + " --format csv");
    const RunResult json = run(base + " --format json");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(json.exit_code == 0);

    const auto doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.contains("meta"));
    REQUIRE(doc.contains("rows"));
    CHECK(doc["meta"]["alpha"] == "2/7");

    std::vector<std::string> csv_values;
    std::istringstream is(csv.out);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        const auto comma = line.rfind(',');
        csv_values.push_back(line.substr(comma + 1));
    }
    REQUIRE(doc["rows"].size() == csv_values.size());
    for (size_t i = 0; i < csv_values.size(); ++i) {
        CHECK(doc["rows"][i]["value"].get<std::string>() == csv_values[i]);
        CHECK(doc["rows"][i]["step"].get<int>() == static_cast<int>(i));
    }
}

TEST_CASE("expected-end table") {
    const RunResult r = run("expected-end --alpha 1/2 --steps 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "method,alpha,state,step,value\n"
          "exact,1/2,-,0,0\n"
          "exact,1/2,-,1,3/4\n"
          "exact,1/2,-,2,19/16\n");
    const RunResult zero = run("expected-end --alpha 1/2 --steps 0 --format csv");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out ==
          "method,alpha,state,step,value\n"
          "exact,1/2,-,0,0\n");
}

TEST_CASE("expected-end asymptotic columns") {
    const RunResult r = run("expected-end --alpha 1/2 --steps 64 --asymptotic --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "method,alpha,state,step,value,value_float,estimate,ratio");
    std::string line, last;
    while (std::getline(is, line))
        if (!line.empty()) last = line;
    const auto ratio_text = last.substr(last.rfind(',') + 1);
    const double ratio = std::stod(ratio_text);
    CHECK(ratio > 0.8);
    CHECK(ratio < 1.2);
}

TEST_CASE("invalid flags exit with 2") {
    CHECK(run("prob --alpha 3/2 --steps 1 --state top:0").exit_code == 2);
    CHECK(run("prob --alpha 1/2 --steps 1 --state middle:1").exit_code == 2);
    CHECK(run("prob --alpha 1/2 --steps 1 --state P --double").exit_code == 2);
    CHECK(run("prob --alpha 1/2 --steps 1").exit_code == 2);  // missing --state
    CHECK(run("prob --alpha 1/2 --steps 1 --state top:0 --method magic").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("verify exits 0 and reports the printed-boundary diagnostic") {
    const RunResult r = run("verify --alpha-list 1/2 --order 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("printed boundary diagnostic") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify default run covers three alphas") {
    const RunResult r = run("verify");
    CHECK(r.exit_code == 0);
    for (const std::string alpha : {"1/2", "1/3", "2/5"})
        CHECK(r.out.find("(alpha=" + alpha + ")") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("verify with an injected fault exits 3") {
    const RunResult r = run("verify --alpha-list 1/2 --order 12 --inject-fault");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
}
