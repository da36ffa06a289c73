#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "support/kat.hpp"

// Drives the installed binary end to end through std::system. The binary path
// arrives via the TRISIG_CLI environment variable set by the test harness.

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int rc = -1;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("trisig-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string cli_path() {
    const char* env = std::getenv("TRISIG_CLI");
    REQUIRE_MESSAGE(env != nullptr, "TRISIG_CLI must point at the binary under test");
    return env;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE(out.good());
}

CliResult run_cli(const std::string& args) {
    const fs::path out_path = work_dir() / "stdout.txt";
    const fs::path err_path = work_dir() / "stderr.txt";
    std::string command = cli_path() + " " + args + " >" + out_path.string() + " 2>" +
                          err_path.string();
    int status = std::system(command.c_str());
    CliResult result;
    result.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// One smallest-accepted-size domain with a keypair, generated once and shared
// by every flow test below.
struct Workspace {
    fs::path params = work_dir() / "params.txt";
    fs::path priv = work_dir() / "priv.txt";
    fs::path pub = work_dir() / "pub.txt";
};

const Workspace& workspace() {
    static const Workspace ws = [] {
        Workspace w;
        CliResult gen = run_cli("params gen --t-bits 160 --l-bits 512 --nonce-seed a0a1 --out " +
                                w.params.string());
        REQUIRE_MESSAGE(gen.rc == 0, gen.err);
        CliResult keys = run_cli("keygen --params " + w.params.string() + " --out-priv " +
                                 w.priv.string() + " --out-pub " + w.pub.string() +
                                 " --nonce-seed b0b1");
        REQUIRE_MESSAGE(keys.rc == 0, keys.err);
        return w;
    }();
    return ws;
}

}  // namespace

TEST_CASE("help is reachable") {
    CliResult res = run_cli("--help");
    CHECK(res.rc == 0);
    CHECK(contains(res.out, "sign"));
    CHECK(contains(res.out, "verify"));
}

TEST_CASE("the default flow signs and verifies a message file") {
    const Workspace& ws = workspace();
    fs::path msg = work_dir() / "msg.txt";
    fs::path sig = work_dir() / "sig.txt";
    spill(msg, "a short message\n");

    CliResult signed_res = run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() +
                                   " --out " + sig.string() + " --nonce-seed c0c1");
    REQUIRE_MESSAGE(signed_res.rc == 0, signed_res.err);
    CHECK(contains(slurp(sig), "scheme=tdsa\n"));

    CliResult ok = run_cli("verify --pub " + ws.pub.string() + " --sig " + sig.string() +
                           " --in " + msg.string());
    CHECK(ok.rc == 0);
    CHECK(contains(ok.out, "scheme=tdsa\n"));
    CHECK(contains(ok.out, "decision=accept\n"));

    fs::path other = work_dir() / "msg2.txt";
    spill(other, "a different message\n");
    CliResult bad = run_cli("verify --pub " + ws.pub.string() + " --sig " + sig.string() +
                            " --in " + other.string());
    CHECK(bad.rc == 1);
    CHECK(contains(bad.out, "decision=reject\n"));
    CHECK(contains(bad.out, "reason=reject-mismatch\n"));
}

TEST_CASE("a fixed nonce seed makes signing reproducible") {
    const Workspace& ws = workspace();
    fs::path msg = work_dir() / "msg-det.txt";
    spill(msg, "determinism probe\n");
    fs::path sig_a = work_dir() / "sig-a.txt";
    fs::path sig_b = work_dir() / "sig-b.txt";
    fs::path sig_c = work_dir() / "sig-c.txt";

    REQUIRE(run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() + " --out " +
                    sig_a.string() + " --nonce-seed d0d1").rc == 0);
    REQUIRE(run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() + " --out " +
                    sig_b.string() + " --nonce-seed d0d1").rc == 0);
    REQUIRE(run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() + " --out " +
                    sig_c.string() + " --nonce-seed d2d3").rc == 0);

    CHECK(slurp(sig_a) == slurp(sig_b));
    CHECK(slurp(sig_a) != slurp(sig_c));
}

TEST_CASE("the classic and generalized schemes flow through the same commands") {
    const Workspace& ws = workspace();
    fs::path msg = work_dir() / "msg-schemes.txt";
    spill(msg, "scheme coverage\n");

    fs::path dsa_priv = work_dir() / "dsa-priv.txt";
    fs::path dsa_pub = work_dir() / "dsa-pub.txt";
    REQUIRE(run_cli("keygen --params " + ws.params.string() + " --scheme dsa --out-priv " +
                    dsa_priv.string() + " --out-pub " + dsa_pub.string() +
                    " --nonce-seed e0e1").rc == 0);

    fs::path dsa_sig = work_dir() / "dsa-sig.txt";
    REQUIRE(run_cli("sign --priv " + dsa_priv.string() + " --in " + msg.string() + " --out " +
                    dsa_sig.string() + " --nonce-seed e2e3").rc == 0);
    CliResult dsa_ok = run_cli("verify --pub " + dsa_pub.string() + " --sig " + dsa_sig.string() +
                               " --in " + msg.string());
    CHECK(dsa_ok.rc == 0);
    CHECK(contains(dsa_ok.out, "scheme=dsa\n"));
    CHECK(contains(dsa_ok.out, "decision=accept\n"));

    // gdsa from the tdsa-tagged key: allowed, with a note on stderr.
    fs::path gdsa_sig = work_dir() / "gdsa-sig.txt";
    CliResult gdsa_signed = run_cli("sign --priv " + ws.priv.string() +
                                    " --scheme gdsa --n 4 --in " + msg.string() + " --out " +
                                    gdsa_sig.string() + " --nonce-seed e4e5");
    REQUIRE_MESSAGE(gdsa_signed.rc == 0, gdsa_signed.err);
    CHECK(contains(gdsa_signed.err, "note:"));
    CHECK(contains(slurp(gdsa_sig), "n=4\n"));

    CliResult gdsa_ok = run_cli("verify --pub " + ws.pub.string() + " --sig " +
                                gdsa_sig.string() + " --in " + msg.string());
    CHECK(gdsa_ok.rc == 0);
    CHECK(contains(gdsa_ok.out, "scheme=gdsa\n"));
    CHECK(contains(gdsa_ok.out, "decision=accept\n"));
}

TEST_CASE("a recorded 1024-bit signature verifies from files alone") {
    fs::path pub = work_dir() / "kat-pub.txt";
    fs::path sig = work_dir() / "kat-sig.txt";
    spill(pub, "scheme=tdsa\np=" + kat1024::P.str() + "\nq=" + kat1024::Q.str() +
                   "\ng=" + kat1024::G.str() + "\nalpha=" + kat1024::ALPHA.str() +
                   "\ny=" + kat1024::Y.str() + "\n");
    spill(sig, "scheme=tdsa\nr=" + kat1024::R.str() + "\ns=" + kat1024::S.str() +
                   "\nt=" + kat1024::T.str() + "\n");

    CliResult res = run_cli("verify --pub " + pub.string() + " --sig " + sig.string() +
                            " --prehashed " + kat1024::H.str());
    CHECK(res.rc == 0);
    CHECK(contains(res.out, "v=" + kat1024::S.str() + "\n"));
    CHECK(contains(res.out, "decision=accept\n"));
}

TEST_CASE("usage and format errors exit with code 2") {
    const Workspace& ws = workspace();
    fs::path msg = work_dir() / "msg-err.txt";
    spill(msg, "error cases\n");

    SUBCASE("unknown flag") {
        CHECK(run_cli("verify --nope").rc == 2);
    }
    SUBCASE("tiny t-bits refused") {
        CHECK(run_cli("params gen --t-bits 8 --l-bits 512").rc == 2);
    }
    SUBCASE("both digest sources") {
        CHECK(run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() +
                      " --prehashed 5").rc == 2);
    }
    SUBCASE("no digest source") {
        CHECK(run_cli("sign --priv " + ws.priv.string()).rc == 2);
    }
    SUBCASE("gdsa without a nonce count") {
        CHECK(run_cli("sign --priv " + ws.priv.string() + " --scheme gdsa --in " +
                      msg.string()).rc == 2);
    }
    SUBCASE("nonce count on a non-gdsa scheme") {
        CHECK(run_cli("sign --priv " + ws.priv.string() + " --scheme tdsa --n 3 --in " +
                      msg.string()).rc == 2);
    }
    SUBCASE("missing key file") {
        CHECK(run_cli("sign --priv " + (work_dir() / "nope.txt").string() + " --in " +
                      msg.string()).rc == 2);
    }
    SUBCASE("signing with a public key") {
        CHECK(run_cli("sign --priv " + ws.pub.string() + " --in " + msg.string()).rc == 2);
    }
    SUBCASE("corrupted signature file names the line") {
        fs::path sig = work_dir() / "sig-corrupt.txt";
        REQUIRE(run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() +
                        " --out " + sig.string() + " --nonce-seed f0f1").rc == 0);
        spill(sig, slurp(sig) + "z=1\n");
        CliResult res = run_cli("verify --pub " + ws.pub.string() + " --sig " + sig.string() +
                                " --in " + msg.string());
        CHECK(res.rc == 2);
        CHECK(contains(res.err, "line"));
    }
    SUBCASE("zero signature component") {
        fs::path sig = work_dir() / "sig-zero.txt";
        spill(sig, "scheme=tdsa\nr=4\ns=5\nt=0\n");
        CliResult res = run_cli("verify --pub " + ws.pub.string() + " --sig " + sig.string() +
                                " --in " + msg.string());
        CHECK(res.rc == 2);
        CHECK(contains(res.err, "line 4"));
    }
    SUBCASE("prehashed zero is out of range") {
        fs::path sig = work_dir() / "sig-range.txt";
        REQUIRE(run_cli("sign --priv " + ws.priv.string() + " --in " + msg.string() +
                        " --out " + sig.string() + " --nonce-seed f2f3").rc == 0);
        CHECK(run_cli("verify --pub " + ws.pub.string() + " --sig " + sig.string() +
                      " --prehashed 0").rc == 2);
    }
}

TEST_CASE("attack demonstrations run to a verified conclusion") {
    CliResult dsa_res = run_cli("attack dsa-nonce-reuse --nonce-seed 0102");
    CHECK(dsa_res.rc == 0);
    CHECK(contains(dsa_res.out, "match=yes\n"));
    CHECK(contains(dsa_res.out, "recovered_x="));

    CliResult repeat = run_cli("attack dsa-nonce-reuse --nonce-seed 0102");
    CHECK(repeat.out == dsa_res.out);

    CliResult pair_res = run_cli("attack tdsa-pair-reuse --nonce-seed 0304");
    CHECK(pair_res.rc == 0);
    CHECK(contains(pair_res.out, "match=yes\n"));
    CHECK(contains(pair_res.out, "recovered_l="));
    CHECK(contains(pair_res.out, "unknowns="));
    CHECK(contains(pair_res.out, "candidates_consistent=yes\n"));

    CliResult forge_res = run_cli("attack forge --trials 3 --nonce-seed 0506");
    CHECK(forge_res.rc == 0);
    CHECK(contains(forge_res.out, "forged_digest="));
    CHECK(contains(forge_res.out, "verified=yes\n"));
}

TEST_CASE("operation counts surface through the bench command") {
    const Workspace& ws = workspace();
    CliResult res = run_cli("bench --params " + ws.params.string() +
                            " --iterations 2 --nonce-seed 0908");
    CHECK(res.rc == 0);
    CHECK(contains(res.out, "iterations=2\n"));
    CHECK(contains(res.out, "tdsa_exp_per_iteration=7\n"));
    CHECK(contains(res.out, "tdsa_mul_per_iteration=8\n"));
    CHECK(contains(res.out, "dsa_exp_per_iteration=6\n"));
    CHECK(contains(res.out, "dsa_mul_per_iteration=5\n"));
}
