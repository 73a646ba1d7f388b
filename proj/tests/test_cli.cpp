#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eistheta/serialize.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = EISTHETA_CLI_PATH;

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("eistheta_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "stdout.txt";
    fs::path err = work_dir() / "stderr.txt";
    std::string cmd =
        "\"" + kCli + "\" " + args + " > " + out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("version flag prints the manifest hash") {
    RunResult r = run("--version");
    CHECK(r.code == 0);
    CHECK(r.out.size() == 17);  // 16 hex digits + newline
    for (char c : r.out.substr(0, 16)) CHECK(std::isxdigit(static_cast<unsigned char>(c)));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("cusps").code == 2);
    CHECK(run("cusps --level -3").code == 2);
    CHECK(run("frobnicate --level 3").code == 2);
    CHECK(run("verify --suite no-such-suite").code == 2);
    RunResult impossible = run("basis --prime 5 --power 2");
    CHECK(impossible.code == 2);
    CHECK(impossible.err.find("error:") != std::string::npos);
}

TEST_CASE("cusps subcommand lists the level 36 classes") {
    RunResult text = run("cusps --level 36");
    CHECK(text.code == 0);
    CHECK(text.out.find("12 cusp classes") != std::string::npos);
    CHECK(text.out.find("Eisenstein dimension 11") != std::string::npos);
    CHECK(text.out.find("5/12") != std::string::npos);
    CHECK(text.out.find("oo") != std::string::npos);

    RunResult js = run("cusps --level 36 --json");
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["level"] == 36);
    CHECK(j["count"] == 12);
    CHECK(j["eis_dim"] == 11);
    CHECK(j["cusps"].size() == 12);
    CHECK(j["cusps"].back() == nlohmann::json::array({1, 0}));
}

TEST_CASE("basis subcommand emits labeled expansions") {
    RunResult js = run("basis --prime 2 --power 4 --terms 20 --json");
    CHECK(js.code == 0);
    nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["level"] == 16);
    CHECK(j["dim"] == 5);
    REQUIRE(j["elements"].size() == 5);
    CHECK(j["elements"][0]["label"] == "E16_1");
    CHECK(j["elements"][4]["label"] == "E16_5");
    eistheta::FourierSeries first =
        eistheta::series_from_json(j["elements"][0]["expansion"]);
    CHECK(first.coeff(eistheta::frac(0)) == eistheta::CycNumber(eistheta::frac(1)));

    RunResult text = run("basis --prime 2 --power 1 --terms 6");
    CHECK(text.code == 0);
    CHECK(text.out.find("E2_1") != std::string::npos);
}

TEST_CASE("theta output round-trips into decompose") {
    fs::path target = work_dir() / "theta12.json";
    RunResult js = run("theta --residue 1 --modulus 2 --terms 40 --json");
    CHECK(js.code == 0);
    {
        std::ofstream out(target);
        out << js.out;
    }
    // the emitted series reparses to the identical document
    nlohmann::json parsed = nlohmann::json::parse(js.out);
    eistheta::FourierSeries series = eistheta::series_from_json(parsed);
    CHECK(eistheta::to_json(series).dump(2) + "\n" == js.out);

    RunResult dec = run("decompose --target " + target.string() + " --level 16 --json");
    CHECK(dec.code == 0);
    nlohmann::json j = nlohmann::json::parse(dec.out);
    CHECK(j["consistent"] == true);
    CHECK(j["exact"] == true);
    bool found = false;
    for (const auto& c : j["coefficients"]) {
        if (c["label"] == "E16_5") {
            found = true;
            CHECK(c["value"] == nlohmann::json::array({16, 1}));
        } else {
            CHECK(c["value"] == nlohmann::json::array({0, 1}));
        }
    }
    CHECK(found);
}

TEST_CASE("repcount counts lattice vectors in the coset") {
    RunResult r = run(
        "repcount --gram 2 0 0 0 0 2 0 0 0 0 2 0 0 0 0 2 "
        "--residues 1 1 1 1 --moduli 2 2 2 2 --n 12 --json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 12);
    CHECK(j["count"] == 64);
}

TEST_CASE("curve-count reports reduction and points") {
    RunResult good = run("curve-count --curve 0,0,0,0,1 --p 103 --json");
    CHECK(good.code == 0);
    nlohmann::json j = nlohmann::json::parse(good.out);
    CHECK(j["reduction"] == "good");
    CHECK(j["points"] == 84);
    CHECK(j["trace"] == 20);

    RunResult ext = run("curve-count --curve 0,0,0,0,1 --p 7 --k 2 --json");
    nlohmann::json j2 = nlohmann::json::parse(ext.out);
    CHECK(j2["points"] == 48);

    RunResult bad = run("curve-count --curve 0,0,0,0,1 --p 2 --json");
    CHECK(bad.code == 0);
    nlohmann::json j3 = nlohmann::json::parse(bad.out);
    CHECK(j3["reduction"] == "additive");
    CHECK(j3["points"].is_null());

    CHECK(run("curve-count --curve 0,0,0,0,1 --p 2 --k 2").code == 2);
    CHECK(run("curve-count --curve 0,0,0,0,1 --p 10").code == 2);
}

TEST_CASE("verify subcommand exit codes follow the report") {
    RunResult pass = run("verify --suite r13-general --json");
    CHECK(pass.code == 0);
    nlohmann::json j = nlohmann::json::parse(pass.out);
    CHECK(j["suite"] == "r13-general");
    CHECK(j["tolerance"] == 0);
    CHECK(j["failed"] == 0);

    // the stored dependency row and the stored rank both disagree with exact
    // recomputation, so this suite reports two flagged failures and exits 1
    RunResult fail = run("verify --suite linrel-36 --json");
    CHECK(fail.code == 1);
    nlohmann::json j2 = nlohmann::json::parse(fail.out);
    CHECK(j2["failed"] == 2);

    RunResult both = run("verify --suite r13-power --bound 50 --workers 2 --json");
    CHECK(both.code == 0);
    nlohmann::json j3 = nlohmann::json::parse(both.out);
    CHECK(j3["suite"] == "r13-power");
}
