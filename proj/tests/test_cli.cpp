// End-to-end tests of the command-line tool: exit-code contract,
// certificate determinism, malformed-input handling.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string outfile = "/tmp/cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmdline = std::string(CLI_PATH) + " " + args + " > " + outfile + " 2>/dev/null";
    int status = std::system(cmdline.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outfile);
    return r;
}

}  // namespace

TEST_CASE("construct-pn then verify: exit 0 with the chart-constant table") {
    RunResult c = run("construct-pn --n 3 --out /tmp/cli_gamma3.sec");
    CHECK(c.code == 0);
    CHECK(c.out.find("verdict: glue-verified") != std::string::npos);

    RunResult v = run("verify /tmp/cli_gamma3.sec");
    CHECK(v.code == 0);
    CHECK(v.out.find("verdict: p-contact") != std::string::npos);
    CHECK(v.out.find("chart 0 constant 1") != std::string::npos);
    CHECK(v.out.find("chart 1 constant -1") != std::string::npos);
    CHECK(v.out.find("chart 2 constant 1") != std::string::npos);
    CHECK(v.out.find("chart 3 constant -1") != std::string::npos);
    CHECK(v.out.find("toolchain_version: ") != std::string::npos);
    CHECK(v.out.find("seed: 0") != std::string::npos);
}

TEST_CASE("determinism: identical runs give byte-identical certificates") {
    RunResult a = run("hypersurface-cert --n 7 --d 3");
    RunResult b = run("hypersurface-cert --n 7 --d 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    run("construct-pn --n 3 --out /tmp/cli_det.sec");
    RunResult r1 = run("rank /tmp/cli_det.sec --points 10 --seed 7");
    RunResult r2 = run("rank /tmp/cli_det.sec --points 10 --seed 7");
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("seed: 7") != std::string::npos);
}

TEST_CASE("hypersurface-cert: vanishing verdict and rejections") {
    RunResult v = run("hypersurface-cert --n 3 --d 3");
    CHECK(v.code == 0);
    CHECK(v.out.find("verdict: vanishes") != std::string::npos);
    CHECK(v.out.find("not_covered") == std::string::npos);

    RunResult r = run("hypersurface-cert --n 3 --d 1");
    CHECK(r.code == 1);
    CHECK(r.out.find("verdict: rejected") != std::string::npos);
    CHECK(r.out.find("P^n") != std::string::npos);
}

TEST_CASE("exit-code contract across subcommands") {
    CHECK(run("bott --p 1 --q 2 --k 0 --N 5").code == 0);   // case (a)
    CHECK(run("bott --p 2 --q 2 --k 0 --N 5").code == 1);   // not covered
    CHECK(run("spin-root --n 3").code == 0);
    CHECK(run("spin-root --n 4").code == 1);
    CHECK(run("cohom-dim --n 3 --p 1 --k 2").code == 0);

    std::ofstream("/tmp/cli_spec.txt") << "1.0 -0.25 2.0\n";
    CHECK(run("curvature --spectrum /tmp/cli_spec.txt --m 2").code == 0);
    CHECK(run("curvature --spectrum /tmp/cli_spec.txt --m 1").code == 1);
}

TEST_CASE("usage and malformed-input errors exit 2") {
    CHECK(run("no-such-command").code == 2);
    CHECK(run("construct-pn").code == 2);          // missing required --n
    CHECK(run("construct-pn --n 4").code == 2);    // invalid n (input error)
    CHECK(run("verify /tmp/does_not_exist.sec").code == 2);

    // corrupted section file
    std::string good = slurp("/tmp/cli_gamma3.sec");
    REQUIRE(!good.empty());
    std::ofstream("/tmp/cli_bad.sec") << good.substr(0, good.size() / 2);
    CHECK(run("verify /tmp/cli_bad.sec").code == 2);

    std::ofstream("/tmp/cli_badspec.txt") << "1.0 oops\n";
    CHECK(run("curvature --spectrum /tmp/cli_badspec.txt --m 1").code == 2);
}

TEST_CASE("volume, product and contact-power round through files") {
    run("construct-pn --n 3 --out /tmp/cli_g3.sec");
    RunResult v = run("volume /tmp/cli_g3.sec --points 10");
    CHECK(v.code == 0);
    CHECK(v.out.find("verdict: positive") != std::string::npos);

    // a constant symplectic form on Torus(4), written by hand
    std::ofstream("/tmp/cli_t4.sec") << "holoform-section v1\n"
                                        "model: T4\n"
                                        "bundle: 0\n"
                                        "degree: 2\n"
                                        "chart 0\n"
                                        "[0,1] 1  [2,3] 1\n";
    RunResult sv = run("symplectic-verify /tmp/cli_t4.sec");
    CHECK(sv.code == 0);
    CHECK(sv.out.find("verdict: s-symplectic") != std::string::npos);

    RunResult p = run("product /tmp/cli_t4.sec /tmp/cli_g3.sec --out /tmp/cli_prod.sec");
    CHECK(p.code == 0);
    CHECK(run("verify /tmp/cli_prod.sec").code == 0);

    RunResult cp = run("contact-power /tmp/cli_g3.sec --l 0 --out /tmp/cli_pow.sec");
    CHECK(cp.code == 0);
    CHECK(run("verify /tmp/cli_pow.sec").code == 0);
}
