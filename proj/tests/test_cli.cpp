#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "omegader/cli.hpp"
#include "omegader/error.hpp"

using namespace omegader;
using namespace omegader::cli;
using nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome exec(const std::vector<std::string>& argv) {
    std::ostringstream out, err;
    const int code = main_entry(argv, out, err);
    return {code, out.str(), err.str()};
}

ordered_json payload(const std::vector<std::string>& argv) {
    const auto r = run(parse_invocation(argv));
    REQUIRE(r.report.has_value());
    return r.report->payload;
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("omegader_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("parse_invocation") {
    const auto a = parse_invocation({"profile", "corpus:g_I", "--param", "alpha=1/10"});
    CHECK(a.command == Command::Profile);
    CHECK(a.inputs == std::vector<std::string>{"corpus:g_I"});
    CHECK(a.params.at("alpha") == Rational(1, 10));
    CHECK(a.format == Format::Text);

    const auto b = parse_invocation({"classify", "--omega", "1,-1,0,1,0,-1"});
    CHECK(b.command == Command::Classify);
    CHECK(b.omega == OmegaSpec::from_rows({1, -1, 0}, {1, 0, -1}));

    const auto c = parse_invocation({"obstruct", "corpus:g_I", "corpus:g_G", "--param", "alpha=1"});
    CHECK(c.command == Command::Obstruct);
    CHECK(c.inputs == std::vector<std::string>{"corpus:g_I", "corpus:g_G"});
    CHECK(c.params.at("alpha") == Rational(1));

    const auto d = parse_invocation({"sweep", "corpus:g_G", "--family", "d11", "--at-modulus", "1,-1,1", "--format",
                                     "json"});
    CHECK(d.family == ParametricFamily::D_t11);
    REQUIRE(d.at.has_value());
    CHECK(std::get<Poly>(*d.at) == Poly{Rational(1), Rational(-1), Rational(1)});
    CHECK(d.format == Format::Json);

    const auto e = parse_invocation({"space", "corpus:sl2", "--space", "d:2,1,1"});
    REQUIRE(e.space.has_value());
    CHECK(e.space->str() == "D(2,1,1)");

    CHECK_THROWS_AS(parse_invocation({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_invocation({"profile", "corpus:g_G", "--bogus"}), UsageError);
    CHECK_THROWS_AS(parse_invocation({"profile", "corpus:g_G", "--param", "alpha"}), UsageError);
    CHECK_THROWS_AS(parse_invocation({"space", "corpus:g_G"}), UsageError);
    CHECK_THROWS_AS(parse_invocation({"classify", "--omega", "1,2,3"}), UsageError);
    CHECK_THROWS_AS(parse_invocation({"sweep", "corpus:g_G", "--family", "t", "--at", "1", "--at-modulus", "1,0,1"}),
                    UsageError);
    CHECK_THROWS_AS(parse_invocation({"profile", "corpus:g_G", "--format", "xml"}), UsageError);
    CHECK_THROWS_AS(parse_invocation({}), UsageError);
}

TEST_CASE("run profile") {
    const auto p = payload({"profile", "corpus:g_G"});
    CHECK(p["fixed"]["QC"] == 8);
    const auto& t = p["families"][0];
    CHECK(t["family"] == "T");
    CHECK(t["generic"] == 16);
    CHECK(t["special"] == ordered_json::parse(R"([{"at":"0","dimension":19}])"));
}

TEST_CASE("run classify") {
    const auto p = payload({"classify", "--omega", "0,1,1,1,0,0"});
    CHECK(p["label"] == "QC");
    const auto q = payload({"classify", "--omega", "1,-1,0,1,0,-1"});
    CHECK(q["label"] == "DT11");
    CHECK(q["parameter"] == "1");
    const auto with = payload({"classify", "corpus:sl2", "--omega", "1,-1,0,1,0,-1"});
    CHECK(with["dimension"] == 3);
    CHECK(with["class_dimension"] == 3);
}

TEST_CASE("run obstruct") {
    const auto r = run(parse_invocation({"obstruct", "corpus:g_I", "corpus:g_G", "--param", "alpha=1"}));
    CHECK(r.exit_code == 0);
    const auto& p = r.report->payload;
    CHECK(p["outcome"] == "excluded");
    CHECK(p["witness"] == ordered_json::parse(R"({"family":"T","at":"1","source_dim":17,"target_dim":16})"));

    const auto self = run(parse_invocation({"obstruct", "corpus:g_G", "corpus:g_G"}));
    CHECK(self.exit_code == 0);
    CHECK(self.report->payload["outcome"] == "inconclusive");
}

TEST_CASE("run sweep encodes a modulus as coefficients") {
    const auto p = payload({"sweep", "corpus:g_I", "--param", "alpha=1/3", "--family", "t"});
    const auto& special = p["report"]["special"];
    REQUIRE(special.size() == 2);
    CHECK(special[1]["modulus"] == ordered_json::array({"1", "-1", "1"}));
    CHECK(special[1]["dimension"] == 17);

    const auto at = payload({"sweep", "corpus:g_G", "--family", "t", "--at-modulus", "1,-1,1"});
    CHECK(at["dimension"] == 16);
    const auto d11 = payload({"sweep", "corpus:g_G", "--family", "d11", "--at", "2"});
    CHECK(d11["dimension"] == 9);
    CHECK(d11["reparam_at"] == "-1/2");
}

TEST_CASE("run space") {
    const auto p = payload({"space", "corpus:sl2", "--space", "qc"});
    CHECK(p["spec"] == "QC");
    CHECK(p["dimension"] == 1);
    REQUIRE(p["basis"].size() == 1);
    CHECK(p["basis"][0] == ordered_json::array({"1", "0", "0", "0", "1", "0", "0", "0", "1"}));
    const auto t = payload({"space", "corpus:heisenberg3", "--space", "t:0"});
    CHECK(t["basis"][0].size() == 27);
}

TEST_CASE("rendering is deterministic and the json form round-trips") {
    const std::vector<std::vector<std::string>> invocations = {
        {"profile", "corpus:sl2"},
        {"sweep", "corpus:g_I", "--param", "alpha=1/3", "--family", "t"},
        {"obstruct", "corpus:g_I", "corpus:g_G", "--param", "alpha=1"},
        {"classify", "--omega", "1,2,0,0,1,-1"},
        {"space", "corpus:heisenberg3", "--space", "p"},
        {"validate", "corpus:g_G", "--jacobi"},
        {"corpus"},
    };
    for (const auto& argv : invocations) {
        CAPTURE(argv.front());
        const auto r1 = run(parse_invocation(argv));
        const auto r2 = run(parse_invocation(argv));
        REQUIRE(r1.report.has_value());
        for (const auto f : {Format::Text, Format::Json}) CHECK(render(*r1.report, f) == render(*r2.report, f));
        CHECK(parse_report(render(*r1.report, Format::Json)) == *r1.report);
    }
    // warnings survive the round trip too
    Report r;
    r.command = "sweep";
    r.argv = {"sweep"};
    r.payload = ordered_json::object({{"x", "1/2"}});
    r.warnings = {"unresolved factor t^4+1"};
    CHECK(parse_report(render(r, Format::Json)) == r);
    CHECK_THROWS(parse_report("{}"));
}

TEST_CASE("text tables") {
    const auto out = exec({"profile", "corpus:g_G"}).out;
    CHECK(out.find("T(t)        | generic 16 | t=0 → 19") != std::string::npos);
    CHECK(out.find("QC       | 8") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(exec({"profile", "corpus:heisenberg3"}).code == 0);
    CHECK(exec({"obstruct", "corpus:g_G", "corpus:g_G"}).code == 0);
    CHECK(exec({"--help"}).code == 0);

    CHECK(exec({}).code == 2);
    CHECK(exec({"frobnicate"}).code == 2);
    CHECK(exec({"profile", "corpus:g_G", "--unknown-flag"}).code == 2);
    CHECK(exec({"profile", "corpus:nope"}).code == 2);
    CHECK(exec({"profile", "corpus:g_I"}).code == 2);  // alpha unbound
    CHECK(exec({"profile", "/nonexistent/file.json"}).code == 2);

    const auto bad = temp_file("bad.json", R"({"name":"x","dim":2,"brackets":[{"left":1,"right":9,"out":{"1":"1"}}]})");
    const auto e = exec({"profile", bad});
    CHECK(e.code == 2);
    CHECK(e.err.find("brackets[0].right") != std::string::npos);

    const auto garbled = temp_file("garbled.json", "{ not json");
    CHECK(exec({"validate", garbled}).code == 2);

    // a document that contradicts its declared law
    const auto law = temp_file("law.json", R"({"name":"x","dim":2,"law":"anti-commutative","brackets":[
        {"left":1,"right":2,"out":{"1":"1"}},{"left":2,"right":1,"out":{"1":"1"}}]})");
    CHECK(exec({"validate", law}).code == 1);

    // anti-commutative but failing Jacobi
    const auto nonlie = temp_file("nonlie.json", R"({"name":"y","dim":3,"law":"anti-commutative","brackets":[
        {"left":1,"right":2,"out":{"3":"1"}},{"left":1,"right":3,"out":{"1":"1"}}]})");
    CHECK(exec({"validate", nonlie}).code == 0);
    CHECK(exec({"validate", nonlie, "--jacobi"}).code == 1);

    CHECK(exec({"obstruct", "corpus:g_G", "corpus:sl2"}).code == 1);  // dimension mismatch
    CHECK(exec({"sweep", "corpus:g_G", "--family", "t", "--at-modulus", "1,0,0,0,1"}).code == 1);
    CHECK(exec({"sweep", "corpus:g_G", "--family", "t", "--at", "1/0"}).code == 2);

    // json mode still writes the error to stderr and nothing to stdout
    const auto j = exec({"profile", "corpus:nope", "--format", "json"});
    CHECK(j.code == 2);
    CHECK(j.out.empty());
    CHECK_FALSE(j.err.empty());
}

TEST_CASE("a parametric document file gets its binding in the name") {
    const auto path = temp_file("fam.json", R"({"name":"fam","dim":3,"parameters":["a"],"brackets":[
        {"left":1,"right":2,"out":{"3":"a"}}]})");
    const auto p = payload({"profile", path, "--param", "a=2"});
    CHECK(p["algebra"] == "fam(2)");
    CHECK(p["fixed"]["Der"] == 6);
}
