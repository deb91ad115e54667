// Drives the installed binary end to end through popen: golden outputs,
// exit-code contract, JSON schemas, and byte-identical determinism.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli: curve goldens") {
    const RunResult r = run_cli("curve --action 'D^2 + s + 1' --op 'D^3 - 2'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "curve raw:    y^2 + y - x^3 + 3*x^2 - 3*x + 1"));
    CHECK(contains(r.out, "curve normal: -y^2 - y + x^3 - 3*x^2 + 3*x - 1"));
    CHECK(contains(r.out, "curve rank:   2"));

    const RunResult tiny = run_cli("curve --action D --op D");
    CHECK(tiny.code == 0);
    CHECK(contains(tiny.out, "curve raw:    y - x"));
    CHECK(contains(tiny.out, "curve rank:   1"));

    const RunResult lri = run_cli("curve --action 'L + L^-1' --op 'L + L^-1'");
    CHECK(lri.code == 0);
    CHECK(contains(lri.out, "curve normal: y - x"));
    CHECK(contains(lri.out, "curve rank:   2"));
}

TEST_CASE("cli: dual-check holds on the featured pair") {
    const RunResult r = run_cli("dual-check --p 'D^2 + s + 1' --q 'D^3 - 2'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "holds: true"));
    CHECK(contains(r.out, "X_QP raw:    y^2 + y - x^3 + 3*x^2 - 3*x + 1"));
    CHECK(contains(r.out, "X_PQ raw:    y^3 - 3*y^2 + 3*y - x^2 - x - 1"));

    const RunResult lr = run_cli("dual-check --p 'L + 1 + L^-1' --q 'L + 1 + L^-1'");
    CHECK(lr.code == 0);
    CHECK(contains(lr.out, "holds: true"));
}

TEST_CASE("cli: mqp json matrix schema") {
    const RunResult r = run_cli("mqp --p 3 --q 2 --json");
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["rank"] == 3);
    CHECK(doc["variable"] == "u");
    REQUIRE(doc["entries"].size() == 9); // row-major, flat

    const json zero = json::array();
    const json one = json::parse(R"([{"exps":[0],"num":"1","den":"1"}])");
    const json u = json::parse(R"([{"exps":[1],"num":"1","den":"1"}])");
    // [[0, u, 0], [0, 0, u], [1, 0, 0]]
    CHECK(doc["entries"][0] == zero);
    CHECK(doc["entries"][1] == u);
    CHECK(doc["entries"][2] == zero);
    CHECK(doc["entries"][3] == zero);
    CHECK(doc["entries"][4] == zero);
    CHECK(doc["entries"][5] == u);
    CHECK(doc["entries"][6] == one);
    CHECK(doc["entries"][7] == zero);
    CHECK(doc["entries"][8] == zero);
}

TEST_CASE("cli: laurent matrix with window option") {
    const RunResult r = run_cli("matrix --action 'L + L^-1' --op 'L^2' --json");
    CHECK(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["rank"] == 2);
    // [[-1, -u], [u, u^2 - 1]]
    CHECK(doc["entries"][0] == json::parse(R"([{"exps":[0],"num":"-1","den":"1"}])"));
    CHECK(doc["entries"][1] == json::parse(R"([{"exps":[1],"num":"-1","den":"1"}])"));
    CHECK(doc["entries"][2] == json::parse(R"([{"exps":[1],"num":"1","den":"1"}])"));
    CHECK(doc["entries"][3] ==
          json::parse(R"([{"exps":[2],"num":"1","den":"1"},{"exps":[0],"num":"-1","den":"1"}])"));

    // The window start moves the basis but never the curve.
    const RunResult w0 = run_cli("curve --action 'L + L^-1' --op 'L^2' --json");
    const RunResult w2 = run_cli("curve --action 'L + L^-1' --op 'L^2' --window-start 2 --json");
    CHECK(w0.code == 0);
    CHECK(w2.code == 0);
    CHECK(json::parse(w0.out)["normal"] == json::parse(w2.out)["normal"]);

    const RunResult bad = run_cli("matrix --action 'D^2' --op D --window-start 1");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "error:"));
}

TEST_CASE("cli: quantize-check verdicts and exit codes") {
    const RunResult ok =
        run_cli("quantize-check --p0 'D^2 - 2*D + 1' --q0 D --p1 'D^2 - s' --q1 'D + 1'");
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "matrix_eq_ok: true"));
    CHECK(contains(ok.out, "verdict: true"));
    CHECK(contains(ok.out, "u^2 - 2*u + 1"));

    const RunResult commuting =
        run_cli("quantize-check --p0 'D^2' --q0 'D^3' --p1 'D^2' --q1 'D^3'");
    CHECK(commuting.code == 1);
    CHECK(contains(commuting.out, "string_eq_ok: false"));
    CHECK(contains(commuting.out, "verdict: false"));

    // The transformed pair fails the matrix form but passes the spectral one.
    const std::string fourier_args =
        "--p0='-D' --q0 'D^2 - 2*D + 1' --p1='-D - 1' --q1 'D^2 - s'";
    const RunResult strict = run_cli("quantize-check " + fourier_args);
    CHECK(strict.code == 1);
    CHECK(contains(strict.out, "matrix_eq_ok: false"));
    const RunResult relaxed = run_cli("quantize-check --spectral " + fourier_args);
    CHECK(relaxed.code == 0);
    CHECK(contains(relaxed.out, "curve_eq_ok: true"));
    CHECK(contains(relaxed.out, "verdict: true"));
}

TEST_CASE("cli: fourier-check") {
    const RunResult r = run_cli("fourier-check --p1 'D^2 + s + 1' --q1 'D^3 - 2'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "holds: true"));
}

TEST_CASE("cli: beh construction and duality") {
    const RunResult r = run_cli("beh --gamma 1 --a 1,1 --b 1,1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "P: L + 1 + L^-1"));
    CHECK(contains(r.out, "Q: L + 1 + L^-1"));
    CHECK(contains(r.out, "holds: true"));
    CHECK(contains(r.out, "scalar: 1"));
    CHECK(contains(r.out, "D1 matches module matrix: true"));
    CHECK(contains(r.out, "D2 matches module matrix: true"));

    const RunResult j = run_cli("beh --gamma 3/2 --a 2,1 --b 1,-1/2 --N 4 --json");
    CHECK(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["instance"]["gamma"] == "3/2");
    CHECK(doc["instance"]["N"] == 4);
    CHECK(doc["instance"]["d1"] == 1);
    CHECK(doc["instance"]["d2"] == 1);
    CHECK(doc["instance"]["A"]["variable"] == "x");
    CHECK(doc["instance"]["D2"]["variable"] == "y");
    CHECK(doc["report"]["holds"] == true);
    CHECK(doc["report"]["d1_matches_modrep"] == true);
    CHECK(doc["report"]["d2_matches_modrep"] == true);

    const RunResult bad = run_cli("beh --gamma 0 --a 1,1 --b 1,1");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "error:"));
}

TEST_CASE("cli: resultant eliminant") {
    const RunResult r = run_cli("resultant --p 'L^2' --q 'L^3'");
    CHECK(r.code == 0);
    CHECK(r.out == "y^2 - x^3\n");

    const RunResult mixed = run_cli("resultant --p 'D^2' --q 'L^3'");
    CHECK(mixed.code == 2);
    CHECK(contains(mixed.out, "error:"));
}

TEST_CASE("cli: error channel and exit code 2") {
    const RunResult parse = run_cli("curve --action 'D^-1' --op D");
    CHECK(parse.code == 2);
    CHECK(contains(parse.out, "error:"));
    CHECK(contains(parse.out, "byte 3"));

    const RunResult validation = run_cli("mqp --p 0 --q 2");
    CHECK(validation.code == 2);
    CHECK(contains(validation.out, "error:"));

    const RunResult nosub = run_cli("");
    CHECK(nosub.code == 2);

    const RunResult badflag = run_cli("curve --action D --op D --frobnicate");
    CHECK(badflag.code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(contains(help.out, "dual-check"));
}

TEST_CASE("cli: property suite passes and reports structure") {
    const RunResult r = run_cli("property-suite --count 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "ok   weyl-duality (3 cases)"));
    CHECK(contains(r.out, "ok   roundtrip-weyl (6 cases)"));
    CHECK(contains(r.out, "all suites passed"));

    const RunResult j = run_cli("property-suite --count 2 --seed 7 --json");
    CHECK(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["seed"] == 7);
    CHECK(doc["count"] == 2);
    CHECK(doc["ok"] == true);
    REQUIRE(doc["suites"].size() == 8);
    CHECK(doc["suites"][0]["name"] == "weyl-duality");
    for (const auto& suite : doc["suites"]) CHECK(suite["failures"].empty());

    const RunResult bad = run_cli("property-suite --count 0");
    CHECK(bad.code == 2);
}

TEST_CASE("cli: identical argv and seed give byte-identical output") {
    const std::string args = "property-suite --count 2 --seed 99 --json";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const std::string beh_args = "beh --gamma 2 --a 1,2,3 --b 4,5 --json";
    const RunResult c = run_cli(beh_args);
    const RunResult d = run_cli(beh_args);
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}
