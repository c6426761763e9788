#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(SPECHT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// minimal validator for the subset of JSON Schema the shipped file uses
void validate_against_schema(const json& doc)
{
    static json schema = [] {
        std::ifstream in(std::string(SPECHT_SOURCE_DIR) + "/data/schema/cli_output.schema.json");
        REQUIRE(in.good());
        return json::parse(in);
    }();
    for (const auto& key : schema.at("required"))
        REQUIRE(doc.contains(key.get<std::string>()));
    REQUIRE(doc.at("schema_version").is_string());
    REQUIRE(doc.at("schema_version") == schema.at("properties").at("schema_version").at("const"));
    REQUIRE(doc.at("command").is_string());
    std::string cmd = doc.at("command");
    bool known = false;
    for (const auto& e : schema.at("properties").at("command").at("enum"))
        known = known || e == cmd;
    REQUIRE(known);
    REQUIRE(doc.at("params").is_object());
    REQUIRE(doc.at("result").is_object());
    const auto& reqs = schema.at("result_requirements");
    if (reqs.contains(cmd))
        for (const auto& key : reqs.at(cmd).at("required"))
            REQUIRE(doc.at("result").contains(key.get<std::string>()));
}

} // namespace

TEST_CASE("tableaux count matches the worked example")
{
    RunResult r = run_cli("tableaux --n 5 --k 1 --d 3 --count-only");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9\n");

    RunResult j = run_cli("tableaux --n 5 --k 1 --d 3 --json");
    json doc = json::parse(j.out);
    validate_against_schema(doc);
    CHECK(doc["result"]["count"] == 9);
    CHECK(doc["result"]["tableaux"][0] == "top=2,4,5;bottom=1,3");

    RunResult bj = run_cli("basis --n 5 --k 1 --d 3 --json");
    json bdoc = json::parse(bj.out);
    validate_against_schema(bdoc);
    CHECK(bdoc["result"]["dimension"] == 9);
}

TEST_CASE("wlp output shape and verdicts")
{
    RunResult r = run_cli("wlp --n 4 --field fp:2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    validate_against_schema(j);
    CHECK(j["result"]["rank_test"] == false);
    CHECK(j["result"]["threshold_predicate"] == false);
    CHECK(j["result"]["agree"] == true);

    RunResult r2 = run_cli("slp --n 3 --field q");
    json j2 = json::parse(r2.out);
    validate_against_schema(j2);
    CHECK(j2["result"]["rank_test"] == true);
}

TEST_CASE("verify exit codes and witness")
{
    RunResult match = run_cli("verify --theorem perfectD --n 5 --k 2 --field fp:2");
    CHECK(match.exit_code == 0); // verdict matches the theorem predicate
    CHECK(match.out.find("witness") != std::string::npos);

    RunResult j = run_cli("verify --theorem perfectD --n 5 --k 2 --field fp:2 --json");
    json doc = json::parse(j.out);
    validate_against_schema(doc);
    CHECK(doc["result"]["holds"] == false);
    CHECK(doc["result"]["predicted"] == false);
    CHECK(doc["result"]["matches_prediction"] == true);
    CHECK(doc["result"].contains("witness"));

    RunResult toolarge = run_cli("verify --theorem radD --n 9 --k 1 --d 2 --field q");
    CHECK(toolarge.exit_code == 2);

    RunResult charsmall = run_cli("verify --theorem jnk --n 5 --k 2 --field fp:2");
    CHECK(charsmall.exit_code == 2);
}

TEST_CASE("decomp runs the radD identity")
{
    RunResult r = run_cli("decomp --n 4 --k 1 --d 2 --field q --json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    validate_against_schema(doc);
    CHECK(doc["result"]["holds"] == true);
}

TEST_CASE("groebner-level subcommands")
{
    RunResult gb = run_cli("gb --nvars 3 --field q --gens 'x1 - x2; x2 - x3' --order lex");
    json jgb = json::parse(gb.out);
    validate_against_schema(jgb);
    REQUIRE(jgb["result"]["basis"].size() == 2);
    CHECK(jgb["result"]["basis"][0] == "x1 - x3");

    RunResult mem = run_cli("member --nvars 3 --field q --gens 'x1 - x2; x2 - x3' --poly 'x1 - x3'");
    json jm = json::parse(mem.out);
    validate_against_schema(jm);
    CHECK(jm["result"]["member"] == true);

    RunResult col = run_cli("colon --nvars 2 --field q --gens 'x1*x2' --by x1");
    json jc = json::parse(col.out);
    validate_against_schema(jc);
    REQUIRE(jc["result"]["basis"].size() == 1);
    CHECK(jc["result"]["basis"][0] == "x2");

    RunResult inter = run_cli("intersect --nvars 2 --field q --gens x1 --gens2 x2");
    json ji = json::parse(inter.out);
    validate_against_schema(ji);
    CHECK(ji["result"]["basis"][0] == "x1*x2");

    RunResult sat = run_cli("saturate --nvars 2 --field q --gens 'x1^2*x2' --by x1");
    json js = json::parse(sat.out);
    validate_against_schema(js);
    CHECK(js["result"]["basis"][0] == "x2");
    CHECK(js["result"]["changed"] == true);

    RunResult hil = run_cli("hilbert --nvars 3 --field q --gens 'x1*x2; x1*x3; x2*x3'");
    json jh = json::parse(hil.out);
    validate_against_schema(jh);
    CHECK(jh["result"]["krull_dim"] == 1);
    CHECK(jh["result"]["height"] == 2);
    CHECK(jh["result"]["numerator"] == json::array({"1", "2"}));
}

TEST_CASE("basis and straighten text output")
{
    RunResult b = run_cli("basis --n 5 --k 1 --d 3 --field q");
    CHECK(b.exit_code == 0);
    CHECK(b.out.rfind("x2*x4*x5 - x3*x4*x5\n", 0) == 0); // first published generator

    RunResult s = run_cli("straighten --n 4 --k 2 --d 2 --field q --tableau 'top=2,3;bottom=1,4'");
    CHECK(s.exit_code == 0);
    // F_T rewrites into the two standard tableaux with integer coefficients
    CHECK(s.out.find("* [top=") != std::string::npos);

    RunResult sj = run_cli("straighten --n 4 --k 2 --d 2 --field q --tableau 'top=2,3;bottom=1,4' --json");
    json jd = json::parse(sj.out);
    validate_against_schema(jd);
}

TEST_CASE("reruns are byte-identical")
{
    for (const std::string& args : {std::string("wlp --n 5 --field fp:3"),
                                    std::string("gb --nvars 3 --field fp:2 --gens 'x1*x2 - x3^2; x2^2 - x1*x3'"),
                                    std::string("verify --theorem coc --n 4 --k 2 --field q --json")}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("reproduce diffs against the committed golden files")
{
    std::string dir = std::string(SPECHT_SOURCE_DIR) + "/data/golden";
    for (const std::string ex : {"513", "i31", "p23"}) {
        RunResult r = run_cli("reproduce --example " + ex + " --data-dir '" + dir + "'");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("golden-diff: OK") != std::string::npos);
    }
}

TEST_CASE("usage errors exit with 64")
{
    CHECK(run_cli("tableaux --n 5").exit_code == 64);       // missing required flags
    CHECK(run_cli("frobnicate").exit_code == 64);           // unknown subcommand
    CHECK(run_cli("basis --n 5 --k 3 --d 3").exit_code == 65); // invalid shape
}

TEST_CASE("batch manifest fans out jobs")
{
    std::string manifest = std::string(SPECHT_SOURCE_DIR) + "/build/test_batch_manifest.json";
    {
        std::ofstream out(manifest);
        out << R"({"jobs":[
            {"args":["tableaux","--n","5","--k","1","--d","3","--count-only"]},
            {"args":["wlp","--n","4","--field","fp:3"]},
            {"args":["verify","--theorem","radD","--n","4","--k","1","--d","2","--field","fp:2"]}
        ]})";
    }
    RunResult r = run_cli("batch --manifest '" + manifest + "'");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.out);
    validate_against_schema(doc);
    REQUIRE(doc["result"]["results"].size() == 3);
    CHECK(doc["result"]["results"][0]["exit_code"] == 0);
    CHECK(doc["result"]["results"][0]["stdout"] == "9\n");
    CHECK(doc["result"]["results"][1]["exit_code"] == 0);
    CHECK(doc["result"]["results"][2]["exit_code"] == 0);
    std::remove(manifest.c_str());
}
