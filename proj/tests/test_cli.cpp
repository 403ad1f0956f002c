#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "helpers.hpp"
#include "rscodec/cli.hpp"

using namespace rscodec;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string gf7_spectral_json() {
    std::ostringstream os;
    write_code_params(os, rstest::rs_7_6_2(Method::spectral));
    return os.str();
}

// writes a params file into the test's scratch dir and returns its path
std::string params_file(Method m, const CodeParams& C) {
    static int counter = 0;
    std::string path = "cli_params_" + std::to_string(counter++) + ".json";
    std::ofstream f(path);
    CodeParams copy = make_code(C.field, C.k, C.b, m);
    write_code_params(f, copy);
    return path;
}

}  // namespace

TEST_CASE("gen-params writes the full record", "[cli]") {
    CliRun r = run({"gen-params", "--p", "7", "--alpha", "3", "--k", "2", "--b", "1", "--method",
                    "remainder"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("\"g\": \"4 2 3 6 1\"") != std::string::npos);
    REQUIRE(r.out.find("\"n\": 6") != std::string::npos);
    REQUIRE(r.out.find("\"d\": 5") != std::string::npos);

    CliRun r2 = run({"gen-params", "--p", "2", "--m", "3", "--prim-poly", "1", "1", "0", "1",
                     "--k", "3", "--b", "1", "--method", "spectral"});
    REQUIRE(r2.exit_code == 0);
    REQUIRE(r2.out.find("\"n\": 7") != std::string::npos);
    REQUIRE(r2.out.find("\"d\": 5") != std::string::npos);

    // the record parses back into the same parameters
    std::istringstream back(r2.out);
    CodeParams C = read_code_params(back);
    REQUIRE(C.n == 7);
    REQUIRE(C.k == 3);
    REQUIRE(C.method == Method::spectral);
}

TEST_CASE("gen-params rejects a non-primitive alpha with exit 2", "[cli]") {
    CliRun r = run({"gen-params", "--p", "7", "--alpha", "2", "--k", "2", "--method", "spectral"});
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.err.find("NotPrimitive") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    REQUIRE(run({}).exit_code == 2);
    REQUIRE(run({"decode"}).exit_code == 2);                    // missing required options
    REQUIRE(run({"no-such-command"}).exit_code == 2);
    REQUIRE(run({"--help"}).exit_code == 0);
}

TEST_CASE("encode/decode round trip through streams", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_7_6_2(Method::spectral));

    CliRun enc = run({"encode", "--params", path}, "1 1\n0 3\n");
    REQUIRE(enc.exit_code == 0);
    REQUIRE(enc.out == "2 4 3 0 5 6\n3 2 6 4 5 1\n");

    CliRun dec = run({"decode", "--params", path, "--algo", "gao"}, enc.out);
    REQUIRE(dec.exit_code == 0);
    REQUIRE(dec.out == "1 1\n0 3\n");
    std::remove(path.c_str());
}

TEST_CASE("corrupt is deterministic and honors the position filter", "[cli]") {
    std::string path = params_file(Method::remainder, rstest::rs_8_7_3(Method::remainder));
    std::string words = "1 2 6 6 1 5 2\n1 2 6 6 1 5 2\n1 2 6 6 1 5 2\n";

    CliRun a = run({"corrupt", "--params", path, "--errors", "2", "--seed", "9", "--positions",
                    "message"},
                   words);
    CliRun b = run({"corrupt", "--params", path, "--errors", "2", "--seed", "9", "--positions",
                    "message"},
                   words);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);  // byte-identical under a fixed seed
    REQUIRE(a.err == b.err);

    // sidecar lines: "<index> pos:val pos:val", message positions are [4, 6]
    std::istringstream sidecar(a.err);
    std::string line;
    unsigned lines = 0;
    while (std::getline(sidecar, line)) {
        std::istringstream ls(line);
        unsigned idx, pos;
        char colon;
        elem val;
        REQUIRE((ls >> idx));
        REQUIRE(idx == lines);
        unsigned entries = 0;
        while (ls >> pos >> colon >> val) {
            REQUIRE(pos >= 4);
            REQUIRE(pos <= 6);
            REQUIRE(val >= 1);
            ++entries;
        }
        REQUIRE(entries == 2);
        ++lines;
    }
    REQUIRE(lines == 3);

    CliRun c = run({"corrupt", "--params", path, "--errors", "2", "--seed", "10", "--positions",
                    "message"},
                   words);
    REQUIRE(c.out != a.out);  // different seed, different corruption
    std::remove(path.c_str());
}

TEST_CASE("corrupt with t = 0 is the identity", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_7_6_2(Method::spectral));
    CliRun r = run({"corrupt", "--params", path, "--errors", "0", "--seed", "1"},
                   "2 4 3 0 5 6\n");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "2 4 3 0 5 6\n");
    std::remove(path.c_str());
}

TEST_CASE("full pipeline: encode, corrupt, decode all algorithms", "[cli]") {
    for (auto [method, algo] : std::vector<std::pair<std::string, std::string>>{
             {"spectral", "gao"}, {"spectral", "gs"}, {"remainder", "wb"}}) {
        CliRun gen = run({"gen-params", "--p", "2", "--m", "3", "--prim-poly", "1", "1", "0", "1",
                          "--k", "3", "--method", method});
        std::string path = "cli_pipeline.json";
        {
            std::ofstream f(path);
            f << gen.out;
        }
        std::string msgs = "1 5 2\n7 7 7\n0 0 0\n4 0 1\n";
        CliRun enc = run({"encode", "--params", path}, msgs);
        REQUIRE(enc.exit_code == 0);
        // corrupt within capability; wb corrects message-part errors
        CliRun cor = run({"corrupt", "--params", path, "--errors", "2", "--seed", "3",
                          "--positions", algo == "wb" ? "message" : "any"},
                         enc.out);
        REQUIRE(cor.exit_code == 0);
        CliRun dec = run({"decode", "--params", path, "--algo", algo}, cor.out);
        REQUIRE(dec.exit_code == 0);
        REQUIRE(dec.out == msgs);
        std::remove(path.c_str());
    }
}

TEST_CASE("decode failures emit FAIL lines and exit 1", "[cli]") {
    CodeParams C = rstest::rs_7_6_2(Method::spectral);
    std::string path = params_file(Method::spectral, C);

    // find a weight-3 corruption that no codeword sits near
    Word cw = encode_spectral(C, {1, 1});
    Word bad;
    for_each_pattern(C, 3, PositionFilter::any, [&](const ErrorPattern& pat) {
        if (pat.weight() != 3) return true;
        Word r = apply_errors(C, cw, pat);
        if (!decode_gao(C, r).ok()) {
            bad = r;
            return false;
        }
        return true;
    });
    REQUIRE(!bad.empty());

    std::ostringstream words;
    for (std::size_t i = 0; i < bad.size(); ++i) words << (i ? " " : "") << bad[i];
    words << "\n2 4 3 0 5 6\n";  // second word decodes fine

    CliRun dec = run({"decode", "--params", path, "--algo", "gao"}, words.str());
    REQUIRE(dec.exit_code == 1);
    REQUIRE(dec.out.find("FAIL ") == 0);
    REQUIRE(dec.out.find("1 1\n") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("method mismatch surfaces as exit 2 with the error kind", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_7_6_2(Method::spectral));
    CliRun r = run({"decode", "--params", path, "--algo", "wb"}, "2 4 3 0 5 6\n");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.err.find("MethodMismatch") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("malformed symbol streams report the line number", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_7_6_2(Method::spectral));
    CliRun too_big = run({"encode", "--params", path}, "1 1\n9 0\n");
    REQUIRE(too_big.exit_code == 2);
    REQUIRE(too_big.err.find("line 2") != std::string::npos);

    CliRun not_int = run({"encode", "--params", path}, "1 x\n");
    REQUIRE(not_int.exit_code == 2);
    REQUIRE(not_int.err.find("line 1") != std::string::npos);

    CliRun wrong_count = run({"decode", "--params", path, "--algo", "gao"}, "1 2 3\n");
    REQUIRE(wrong_count.exit_code == 2);
    REQUIRE(wrong_count.err.find("expected 6 symbols") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("binary streams round trip", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_7_6_2(Method::spectral));
    std::string msgs{"\x01\x01\x00\x03", 4};  // two 2-symbol words, 1 byte per symbol

    CliRun enc = run({"encode", "--params", path, "--binary"}, msgs);
    REQUIRE(enc.exit_code == 0);
    REQUIRE(enc.out.size() == 12);
    REQUIRE(enc.out == std::string("\x02\x04\x03\x00\x05\x06\x03\x02\x06\x04\x05\x01", 12));

    CliRun dec = run({"decode", "--params", path, "--algo", "gao", "--binary"}, enc.out);
    REQUIRE(dec.exit_code == 0);
    REQUIRE(dec.out == msgs);

    CliRun truncated = run({"decode", "--params", path, "--algo", "gao", "--binary"},
                           enc.out.substr(0, 5));
    REQUIRE(truncated.exit_code == 2);
    REQUIRE(truncated.err.find("truncated") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("diff-test random trials report agreement on both legs", "[cli]") {
    std::string path = params_file(Method::remainder, rstest::rs_8_7_3(Method::remainder));
    CliRun r = run({"diff-test", "--params", path, "--trials", "1000", "--seed", "7"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("leg=gao-vs-gs mode=random trials=1000") != std::string::npos);
    REQUIRE(r.out.find("leg=gao-vs-wb mode=random trials=1000") != std::string::npos);
    REQUIRE(r.out.find("disagreements=0") != std::string::npos);

    CliRun again = run({"diff-test", "--params", path, "--trials", "1000", "--seed", "7"});
    REQUIRE(again.out == r.out);  // deterministic report
    std::remove(path.c_str());
}

TEST_CASE("diff-test skips the wb leg when b != 1", "[cli]") {
    CodeParams C = make_code(rstest::gf8(), 3, 2, Method::spectral);
    std::string path = params_file(Method::spectral, C);
    CliRun r = run({"diff-test", "--params", path, "--trials", "50"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("leg=gao-vs-wb skipped (b != 1)") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("diff-test budget guard", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_8_7_3(Method::spectral));
    setenv("RSCODEC_BUDGET", "100", 1);
    CliRun r = run({"diff-test", "--params", path, "--exhaustive"});
    unsetenv("RSCODEC_BUDGET");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.err.find("BudgetExceeded") != std::string::npos);

    // needs exactly one of --trials / --exhaustive
    REQUIRE(run({"diff-test", "--params", path}).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("trace-keyeq dumps labeled polynomials on stderr", "[cli]") {
    std::string path = params_file(Method::remainder, rstest::rs_8_7_3(Method::remainder));
    CodeParams C = rstest::rs_8_7_3(Method::remainder);
    Word r = apply_errors(C, encode_systematic(C, {1, 5, 2}), {{{5, 3}}});
    std::ostringstream words;
    for (std::size_t i = 0; i < r.size(); ++i) words << (i ? " " : "") << r[i];
    words << "\n";

    CliRun dec = run({"decode", "--params", path, "--algo", "wb", "--trace-keyeq"}, words.str());
    REQUIRE(dec.exit_code == 0);
    for (const char* label : {" S: ", " p: ", " L: ", " euclid[0].r: ", " N: ", " Wm: "})
        REQUIRE(dec.err.find(label) != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("bench smoke", "[cli]") {
    std::string path = params_file(Method::spectral, rstest::rs_8_7_3(Method::spectral));
    CliRun r = run({"bench", "--params", path, "--trials", "3"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("bench algo=gao") != std::string::npos);
    REQUIRE(r.out.find("bench algo=wb") != std::string::npos);
    REQUIRE(r.out.find("bench algo=gs") != std::string::npos);
    REQUIRE(r.out.find("out of scope") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("bench shows gs slower than gao", "[cli]") {
    // direction only: the swept linear systems dominate the partial GCD
    CodeParams C64 = make_code(Field(2, 6, {1, 1, 0, 0, 0, 0, 1}), 31, 1, Method::spectral);
    std::string path = params_file(Method::spectral, C64);
    CliRun r = run({"bench", "--params", path, "--trials", "5"});
    REQUIRE(r.exit_code == 0);
    auto per_decode = [&](const std::string& algo) {
        auto pos = r.out.find("algo=" + algo);
        REQUIRE(pos != std::string::npos);
        auto key = r.out.find("per_decode_us=", pos);
        REQUIRE(key != std::string::npos);
        return std::stod(r.out.substr(key + 14));
    };
    REQUIRE(per_decode("gs") > per_decode("gao"));
    std::remove(path.c_str());
}

TEST_CASE("params file errors", "[cli]") {
    CliRun missing = run({"encode", "--params", "/no/such/file.json"}, "");
    REQUIRE(missing.exit_code == 2);
    REQUIRE(missing.err.find("ParseError") != std::string::npos);

    // corrupted stored g is rejected
    std::string text = gf7_spectral_json();
    auto pos = text.find("\"4 2 3 6 1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "\"4 2 3 6 2\"");
    std::string path = "cli_bad_params.json";
    {
        std::ofstream f(path);
        f << text;
    }
    CliRun bad = run({"encode", "--params", path}, "1 1\n");
    REQUIRE(bad.exit_code == 2);
    REQUIRE(bad.err.find("generator") != std::string::npos);
    std::remove(path.c_str());
}
