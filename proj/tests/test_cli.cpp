#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "odelab/cli.hpp"
#include "odelab/field_parser.hpp"
#include "odelab/io.hpp"

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout, or stdout+stderr when merged
};

CommandResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(ODELAB_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string tmp_path(const std::string& name) { return std::string(ODELAB_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("sequence gamma emits the exact leading values") {
    const CommandResult r = run_cli("sequence gamma --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[\"1\",\"1/2\",\"3/8\",\"5/16\",\"35/128\",\"63/256\"]\n");
}

TEST_CASE("evolve emits CSV rows") {
    const CommandResult r = run_cli("evolve --field \"z^2\" --z0 1 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,value\n0,1\n1,2\n2,5\n");
}

TEST_CASE("negative initial values pass through") {
    const CommandResult r = run_cli("evolve --field \"z^2\" --z0 -1/3 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,value\n0,-1/3\n1,-2/9\n2,-5/27\n");
}

TEST_CASE("evolve with decimals adds a third column") {
    const CommandResult r = run_cli("evolve --field \"z^2\" --z0 1/2 --n 2 --decimals 4");
    CHECK(r.exit_code == 0);
    // z_2 = p_0(2) b_0 + p_1(2) b_1 + p_2(2) b_2 with b_k = 2^-(k+1): 1/2 + 1/2 + 1/4
    CHECK(r.output == "n,value,decimal\n0,1/2,0.5000\n1,3/4,0.7500\n2,5/4,1.2500\n");
}

TEST_CASE("solve reports all-zero residuals and exits 0") {
    const CommandResult r = run_cli("solve --field \"z^2\" --z0 1/2 --n 20 --format json");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.output);
    CHECK(report.at("all_zero") == true);
    CHECK(report.at("residuals").size() == 20);
    for (const auto& v : report.at("residuals")) CHECK(v.get<std::string>() == "0");
}

TEST_CASE("solve in csv mode writes the trajectory and a stderr summary") {
    const CommandResult r = run_cli("solve --field \"z^2\" --z0 1 --n 2", true);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n,value\n0,1\n1,2\n2,5\n") != std::string::npos);
    CHECK(r.output.find("residuals: all zero (n = 0..1)") != std::string::npos);
}

TEST_CASE("verify accepts matching trajectories and flags broken ones") {
    const std::string good = tmp_path("good_traj.csv");
    CHECK(run_cli("evolve --field \"z^2\" --z0 1/3 --n 8 --out " + good).exit_code == 0);
    CHECK(run_cli("verify --field \"z^2\" --traj " + good).exit_code == 0);

    // perturb one value
    const std::string bad = tmp_path("bad_traj.csv");
    {
        std::ifstream in(good);
        std::ofstream out(bad, std::ios::binary);
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line)) {
            if (row == 4) line += "1";  // append a digit: wrong value, still parseable
            out << line << "\n";
            ++row;
        }
    }
    CHECK(run_cli("verify --field \"z^2\" --traj " + bad).exit_code == 1);
}

TEST_CASE("borel emits the regularized trajectory and validates it") {
    const CommandResult r = run_cli("borel --field \"z^2\" --z0 1 --n 2 --format json");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.output);
    CHECK(report.at("all_zero") == true);
    CHECK(report.at("trajectory").at("kind") == "borel");
    CHECK(report.at("trajectory").at("values") == nlohmann::json({"1", "2", "5/2"}));

    CHECK(run_cli("borel --field \"z^3\" --z0 1 --n 5").exit_code == 2);
}

TEST_CASE("taylor and recurrence emit coefficient arrays") {
    const CommandResult taylor = run_cli("taylor --field \"z^2\" --z0 2 --n 4");
    CHECK(taylor.exit_code == 0);
    CHECK(taylor.output == "[\"2\",\"4\",\"8\",\"16\",\"32\"]\n");

    // the hat-space recurrence produces the same numbers
    const CommandResult rec = run_cli("recurrence --field \"z^2\" --z0 2 --n 4");
    CHECK(rec.exit_code == 0);
    CHECK(rec.output == taylor.output);
}

TEST_CASE("sequence beta requires a quadratic field") {
    const CommandResult beta = run_cli("sequence beta --field \"z^2 + 1\" --z0 0 --n 5");
    CHECK(beta.exit_code == 0);
    CHECK(beta.output == "[\"0\",\"1\",\"0\",\"1/3\",\"0\",\"2/15\"]\n");

    CHECK(run_cli("sequence beta --field \"z\" --z0 0 --n 5").exit_code == 2);
}

TEST_CASE("stencil prints the solved weights") {
    const CommandResult r = run_cli("stencil --l -1 --m 1");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("order") == 2);
    CHECK(j.at("alpha") == nlohmann::json({"-1/2", "0", "1/2"}));

    const CommandResult s = run_cli("stencil --l 0 --m 1 --sigma 1/2");
    CHECK(s.exit_code == 0);
    const auto k = nlohmann::json::parse(s.output);
    CHECK(k.at("sigma") == "1/2");
    CHECK(k.at("alpha") == nlohmann::json({"-1", "1"}));
}

TEST_CASE("verify emits residual JSON on request") {
    const std::string traj = tmp_path("verify_json.csv");
    CHECK(run_cli("evolve --field \"z^2\" --z0 1 --n 4 --out " + traj).exit_code == 0);
    const CommandResult r = run_cli("verify --field \"z^2\" --traj " + traj + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output) == nlohmann::json({"0", "0", "0", "0"}));
}

TEST_CASE("parse errors exit with code 2 and a position") {
    const CommandResult r = run_cli("evolve --field \"z^\" --z0 1 --n 2", true);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("position 2") != std::string::npos);

    CHECK(run_cli("evolve --field \"\" --z0 1 --n 2").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("identical specs produce byte-identical artifacts") {
    const std::string a = tmp_path("det_a.json");
    const std::string b = tmp_path("det_b.json");
    const std::string flags = "solve --field \"1/2*z^2 - 3*z + 1\" --z0 1/4 --n 12 --format json --out ";
    CHECK(run_cli(flags + a).exit_code == 0);
    CHECK(run_cli(flags + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
}

TEST_CASE("JSON problem files drive the same pipeline") {
    const std::string problem = tmp_path("problem.json");
    const std::string out = tmp_path("problem_out.csv");
    {
        std::ofstream f(problem);
        f << R"({"field": "z^2", "z0": "1", "n_max": 2, "mode": "evolve", "out": ")" << out << R"("})";
    }
    CHECK(run_cli("run --problem " + problem).exit_code == 0);
    CHECK(slurp(out) == "n,value\n0,1\n1,2\n2,5\n");

    CHECK(run_cli("run --problem " + tmp_path("missing.json")).exit_code == 2);
}

TEST_CASE("in-process run() matches the documented exit codes") {
    odelab::ProblemSpec spec;
    spec.mode = odelab::Mode::sequence;
    spec.sequence_name = "nope";
    std::ostringstream out, err;
    CHECK(odelab::run(spec, out, err) == odelab::kExitUsageError);
    CHECK(err.str().find("unknown sequence") != std::string::npos);

    odelab::ProblemSpec ok;
    ok.mode = odelab::Mode::sequence;
    ok.sequence_name = "gamma";
    ok.n_max = 2;
    std::ostringstream out2, err2;
    CHECK(odelab::run(ok, out2, err2) == odelab::kExitSuccess);
    CHECK(out2.str() == "[\"1\",\"1/2\",\"3/8\"]\n");
}

TEST_CASE("trajectory files round trip through read_trajectory") {
    using namespace odelab;
    const LatticeTrajectory traj({Rational(1), Rational(-3, 2), Rational(0)});

    std::istringstream csv(trajectory_csv(traj));
    CHECK(read_trajectory(csv) == traj);

    std::istringstream json_in(trajectory_json(traj).dump());
    CHECK(read_trajectory(json_in) == traj);

    std::istringstream bad("n,value\n0,1\n2,3\n");
    CHECK_THROWS_AS(read_trajectory(bad), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_trajectory(empty), std::invalid_argument);
}
