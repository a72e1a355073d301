#include "doctest.h"

#include "genera/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
    json error() const { return json::parse(err); }
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    CliResult r;
    r.code = genera::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Scratch file that removes itself; ctest runs everything in one directory.
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("todd reports the class and the genus") {
    CliResult r = run({"todd", "P(2)"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    json doc = r.doc();
    CHECK(doc["command"] == "todd");
    CHECK(doc["input"]["expr"] == "P(2)");
    CHECK(doc["input"]["trunc"].is_null());
    CHECK(doc["result"]["variety"] == "P(2)");
    CHECK(doc["result"]["dim"] == 2);
    CHECK(doc["result"]["t"] == json::array({"1", "3/2*h", "h^2"}));
    CHECK(doc["result"]["genus"] == "1/1");
}

TEST_CASE("genus selects a spec by name") {
    CHECK(run({"genus", "--spec", "todd", "P(3)"}).doc()["result"]["value"] == "1/1");
    CHECK(run({"genus", "--spec", "l", "P(2)"}).doc()["result"]["value"] == "1/1");
    CHECK(run({"genus", "--spec", "ahat", "P(2)"}).doc()["result"]["value"] == "-1/8");
    CHECK(run({"genus", "--spec", "l", "P(3)"}).doc()["result"]["value"] == "0/1");

    CliResult bad = run({"genus", "--spec", "chi", "P(2)"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK(bad.error()["error"]["kind"] == "UsageError");
}

TEST_CASE("chern and pontrjagin report weight arrays") {
    json c = run({"chern", "E x P(1)"}).doc();
    CHECK(c["result"]["c"] == json::array({"1", "2*y", "0"}));

    json p = run({"pontrjagin", "P(2)"}).doc();
    CHECK(p["result"]["p"] == json::array({"1", "3*h^2"}));

    json p3 = run({"pontrjagin", "P(3)"}).doc();
    CHECK(p3["result"]["p"] == json::array({"1", "4*h^2"}));
}

TEST_CASE("euler and signature are integers") {
    CHECK(run({"euler", "P(2)"}).doc()["result"]["value"] == 3);
    CHECK(run({"euler", "blowup(P(2))"}).doc()["result"]["value"] == 4);
    CHECK(run({"euler", "E x P(1)"}).doc()["result"]["value"] == 0);
    CHECK(run({"signature", "P(2)"}).doc()["result"]["value"] == 1);
    CHECK(run({"signature", "blowup(P(2))"}).doc()["result"]["value"] == 0);
    CHECK(run({"signature", "P(1) x P(1)"}).doc()["result"]["value"] == 0);
}

TEST_CASE("higher-todd normalizes the class label") {
    CliResult r = run({"higher-todd", "--x", "x2 * x1", "E x P(1)"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["input"]["x"] == "x2 * x1");
    CHECK(doc["result"]["x"] == "x1*x2");
    CHECK(doc["result"]["value"] == "1/1");

    CHECK(run({"higher-todd", "--x", "1", "E x P(1)"}).doc()["result"]["value"] == "0/1");

    CliResult unknown = run({"higher-todd", "--x", "x9", "E x P(1)"});
    CHECK(unknown.code == 3);
    CHECK(unknown.error()["error"]["kind"] == "UnknownPiClass");
}

TEST_CASE("char-number evaluates class polynomials") {
    CliResult r = run({"char-number", "--expr", "c1^2", "blowup(E x P(1))"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["input"]["expr"] == "c1^2");
    CHECK(doc["input"]["variety"] == "blowup(E x P(1))");
    CHECK(doc["result"]["value"] == "-1/1");

    CHECK(run({"char-number", "--expr", "c1*x1*x2", "blowup(E x P(1))"})
              .doc()["result"]["value"] == "2/1");
    CHECK(run({"char-number", "--expr", "1/2*c1^2 - 1/2*c2", "P(2)"})
              .doc()["result"]["value"] == "3/1");

    CliResult malformed = run({"char-number", "--expr", "c1 +", "P(2)"});
    CHECK(malformed.code == 2);
    CHECK(malformed.out.empty());
}

TEST_CASE("verify-invariance") {
    CliResult r = run({"verify-invariance", "blowup(E x P(1))"});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["result"]["base"] == "A(1) x P(1)");
    CHECK(doc["result"]["blown"] == "blowup(A(1) x P(1))");
    CHECK(doc["result"]["verdict"] == "PASS");
    REQUIRE(doc["result"]["labels"].size() == 4);
    for (const auto& row : doc["result"]["labels"]) {
        CHECK(row["equal"] == true);
        CHECK(row["base"] == row["blown"]);
    }

    // the expression must be an actual blow-up
    CliResult flat = run({"verify-invariance", "E x P(1)"});
    CHECK(flat.code == 2);
    CHECK(flat.error()["error"]["kind"] == "UsageError");
}

TEST_CASE("bordism-basis lists partitions in reverse-lex order") {
    json doc = run({"bordism-basis", "--k", "4"}).doc();
    CHECK(doc["result"]["dimension"] == 5);
    CHECK(doc["result"]["partitions"] ==
          json::array({{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));

    json empty = run({"bordism-basis", "--k", "0"}).doc();
    CHECK(empty["result"]["dimension"] == 1);
    CHECK(empty["result"]["partitions"] == json::array({json::array()}));

    CHECK(run({"bordism-basis", "--k", "41"}).code == 2);
    CHECK(run({"bordism-basis", "--k", "-1"}).code == 2);
}

TEST_CASE("bordism-quotient reports a codimension-one ideal") {
    json doc = run({"bordism-quotient", "--k", "3"}).doc();
    CHECK(doc["result"]["space_dimension"] == 3);
    CHECK(doc["result"]["ideal_dimension"] == 2);
    CHECK(doc["result"]["codimension"] == 1);
    CHECK(doc["result"]["todd_vanishes_on_ideal"] == true);
    CHECK(doc["result"]["todd_on_quotient"] == "1/1");
    for (const auto& v : doc["result"]["todd_values"]) CHECK(v == "1/1");
    CHECK(doc["result"]["ideal_basis"].size() == 2);

    CHECK(run({"bordism-quotient", "--k", "0"}).code == 2);
}

TEST_CASE("decompose reads a values file and returns a class") {
    TempFile values("cli_test_values_ok.json", R"([
        {"label": "1", "partition": [1], "value": "1/1"},
        {"label": "x1*x2", "partition": [], "value": "5/1"}
    ])");
    CliResult r = run({"decompose", "--pi", "Z^2", "--k", "1", "--values", values.path});
    REQUIRE(r.code == 0);
    json doc = r.doc();
    CHECK(doc["result"]["pi"] == "Z^2");
    CHECK(doc["result"]["k"] == 1);
    CHECK(doc["result"]["reproduces_functional"] == true);
    REQUIRE(doc["result"]["class"].size() == 2);
    std::map<std::string, std::string> coeffs;
    for (const auto& term : doc["result"]["class"]) {
        coeffs[term["label"]] = term["coeff"];
    }
    CHECK(coeffs.at("1") == "1/1");
    CHECK(coeffs.at("x1*x2") == "5/1");
}

TEST_CASE("decompose rejects non-invariant functionals") {
    // k = 2 gives the label "1" two fibers; distinct values separate them
    TempFile values("cli_test_values_noninv.json", R"([
        {"label": "1", "partition": [2], "value": "1/1"},
        {"label": "1", "partition": [1, 1], "value": "2/1"},
        {"label": "x1*x2", "partition": [1], "value": "0/1"}
    ])");
    CliResult r = run({"decompose", "--pi", "Z^2", "--k", "2", "--values", values.path});
    CHECK(r.code == 3);
    CHECK(r.error()["error"]["kind"] == "NotInvariant");
    CHECK(r.error()["error"]["message"].get<std::string>().find("separates") !=
          std::string::npos);
}

TEST_CASE("decompose validates the values file") {
    CliResult missing =
        run({"decompose", "--pi", "Z^2", "--k", "1", "--values", "no_such_file.json"});
    CHECK(missing.code == 2);

    TempFile bad_json("cli_test_values_bad.json", "not json");
    CHECK(run({"decompose", "--pi", "Z^2", "--k", "1", "--values", bad_json.path}).code == 2);

    TempFile not_array("cli_test_values_obj.json", R"({"label": "1"})");
    CHECK(run({"decompose", "--pi", "Z^2", "--k", "1", "--values", not_array.path}).code == 2);

    TempFile incomplete("cli_test_values_missing.json", R"([
        {"label": "1", "partition": [1], "value": "1/1"}
    ])");
    CliResult r1 = run({"decompose", "--pi", "Z^2", "--k", "1", "--values", incomplete.path});
    CHECK(r1.code == 2);
    CHECK(r1.error()["error"]["message"].get<std::string>().find("missing") !=
          std::string::npos);

    TempFile duplicate("cli_test_values_dup.json", R"([
        {"label": "1", "partition": [1], "value": "1/1"},
        {"label": "1", "partition": [1], "value": "2/1"},
        {"label": "x1*x2", "partition": [], "value": "0/1"}
    ])");
    CHECK(run({"decompose", "--pi", "Z^2", "--k", "1", "--values", duplicate.path}).code == 2);

    TempFile extra("cli_test_values_extra.json", R"([
        {"label": "1", "partition": [1], "value": "1/1"},
        {"label": "x1*x2", "partition": [], "value": "0/1"},
        {"label": "x1", "partition": [1], "value": "0/1"}
    ])");
    CliResult r2 = run({"decompose", "--pi", "Z^2", "--k", "1", "--values", extra.path});
    CHECK(r2.code == 2);
    CHECK(r2.error()["error"]["message"].get<std::string>().find("unknown") !=
          std::string::npos);

    TempFile ok("cli_test_values_pi.json", "[]");
    CHECK(run({"decompose", "--pi", "Z^3", "--k", "0", "--values", ok.path}).code == 2);
    CHECK(run({"decompose", "--pi", "Q", "--k", "0", "--values", ok.path}).code == 2);
    CHECK(run({"decompose", "--pi", "Z^10", "--k", "0", "--values", ok.path}).code == 2);
}

TEST_CASE("output modes") {
    CliResult compact = run({"todd", "P(2)"});
    CliResult pretty = run({"--pretty", "todd", "P(2)"});
    CHECK(compact.out.find('\n') == compact.out.size() - 1);  // single line
    CHECK(pretty.out.find("  \"command\"") != std::string::npos);
    CHECK(json::parse(pretty.out) == compact.doc());

    CliResult sub_pretty = run({"todd", "--pretty", "P(2)"});
    CHECK(json::parse(sub_pretty.out) == compact.doc());

    CliResult both = run({"--json", "--pretty", "todd", "P(2)"});
    CHECK(both.code == 2);
    CHECK(both.error()["error"]["kind"] == "UsageError");
}

TEST_CASE("truncation flag") {
    json t = run({"todd", "--trunc", "1", "P(3)"}).doc();
    CHECK(t["input"]["trunc"] == 1);
    CHECK(t["result"]["t"] == json::array({"1", "2*h"}));
    CHECK(t["result"]["genus"] == "1/1");  // the genus ignores the display cap

    json c = run({"chern", "--trunc", "0", "P(3)"}).doc();
    CHECK(c["result"]["c"] == json::array({"1"}));

    json big = run({"chern", "--trunc", "9", "P(2)"}).doc();
    CHECK(big["result"]["c"] == json::array({"1", "3*h", "3*h^2"}));

    CHECK(run({"todd", "--trunc", "-2", "P(2)"}).code == 2);
}

TEST_CASE("byte-identical determinism") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"todd", "blowup(E x P(1))"},
          std::vector<std::string>{"bordism-quotient", "--k", "4"},
          std::vector<std::string>{"verify-invariance", "blowup(blowup(P(2)))"}}) {
        CliResult a = run(args);
        CliResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("usage and parse failures exit 2 with structured errors") {
    CliResult none = run({});
    CHECK(none.code == 2);
    CHECK(none.error()["error"]["kind"] == "UsageError");

    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"todd"}).code == 2);  // missing expr

    CliResult syntax = run({"todd", "P("});
    CHECK(syntax.code == 2);
    json e = syntax.error();
    CHECK(e["error"]["kind"] == "SyntaxError");
    CHECK(e["error"]["line"] == 1);
    CHECK(e["error"]["column"] == 3);

    CliResult domain = run({"todd", "blowup(P(3))"});
    CHECK(domain.code == 3);
    CHECK(domain.error()["error"]["kind"] == "UnsupportedDimension");
    CHECK(domain.out.empty());
}

TEST_CASE("help and version") {
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("todd") != std::string::npos);
    CHECK(help.out.find("bordism-quotient") != std::string::npos);

    CliResult sub = run({"todd", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--trunc") != std::string::npos);

    CliResult version = run({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out == "genera 0.1.0\n");
}
