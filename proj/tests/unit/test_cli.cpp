#include <doctest.h>

#include "semisep/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace semisep;
using cli::Json;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(SEMISEP_DATA_DIR) / "corpus";

struct Result {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Result run(const std::vector<std::string>& args, const fs::path& base = kCorpus) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err, base);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("semisep-cli-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    fs::path write(const std::string& name, const Json& j) const {
        std::ofstream(path / name) << j.dump(2);
        return path / name;
    }
};

Json manifest(Json cases) { return {{"schema_version", 1}, {"budget_seconds", 60}, {"cases", std::move(cases)}}; }

Json case_of(const std::string& id, std::vector<std::string> args, const std::string& expect) {
    return {{"id", id}, {"args", args}, {"expect", expect}};
}

}  // namespace

TEST_CASE("exit codes follow the verdict") {
    CHECK(run({"ring-ext", "--map", "maps/kxk_to_k.json"}).code == cli::kHolds);
    CHECK(run({"cat", "decide", "--functor", "functors/collapse.json"}).code == cli::kFails);
    CHECK(run({"hopf", "verdict", "--bialgebra", "bialgebras/monoid_1a.json"}).code == cli::kFails);
    CHECK(run({"hopf", "grouplikes", "--coalgebra", "coalgebras/h4.json"}).code == cli::kIndeterminate);
    CHECK(run({"ring-ext"}).code == cli::kUsage);
    CHECK(run({"no-such-command"}).code == cli::kUsage);
}

TEST_CASE("ring extension report carries z and re-verifies") {
    auto r = run({"ring-ext", "--map", "maps/kxk_to_k.json"});
    auto j = r.json();
    CHECK(j["status"] == "holds");
    CHECK(j["witness"]["z"] == Json::array({"1", "0"}));
    CHECK(j["verification"]["verified"] == true);
    CHECK(j["verification"]["method"] == "witness substitution");
}

TEST_CASE("input errors carry a file pointer") {
    auto r = run({"cat", "validate", "--functor", "broken/functor_unknown_object.json"});
    CHECK(r.code == cli::kUsage);
    CHECK(r.json()["error"]["where"] == "broken/functor_unknown_object.json#/objects");
    auto m = run({"ring-ext", "--map", "broken/map_bad_algebra.json"});
    CHECK(m.json()["error"]["where"] == "broken/algebra_short_unit.json#/unit");
    auto missing = run({"ring-ext", "--map", "maps/nope.json"});
    CHECK(missing.code == cli::kUsage);
    CHECK(missing.json()["error"]["message"].get<std::string>().find("missing") != std::string::npos);
}

TEST_CASE("reports do not depend on the working location") {
    auto a = run({"bimodule", "--bimodule", "bimodules/line_over_kxk.json"});
    auto b = run({"bimodule", "--bimodule", (kCorpus / "bimodules" / "line_over_kxk.json").string()}, {});
    CHECK(a.json()["input"] == b.json()["input"]);
    CHECK(a.json()["witness"] == b.json()["witness"]);
}

TEST_CASE("verify-only accepts genuine witnesses and rejects tampered ones") {
    TempDir t;
    auto j = run({"ring-ext", "--map", "maps/kxk_to_k.json"}).json();
    auto good = t.write("good.json", j);
    CHECK(run({"--verify-only", good.string()}).code == cli::kHolds);

    j["witness"]["E"] = Json::array({Json::array({"0"}), Json::array({"1"})});
    auto bad = t.write("bad.json", j);
    auto r = run({"--verify-only", bad.string()});
    CHECK(r.code == cli::kFails);
    CHECK(r.json()["verification"]["verified"] == false);

    // a fails report whose verdict data was edited no longer matches the recomputation
    auto f = run({"ring-ext", "--map", "maps/dual_to_k.json"}).json();
    CHECK(cli::verify_report(f)["verified"] == true);
    f["verdicts"]["semiseparable"]["rank"] = 99;
    CHECK(cli::verify_report(f)["verified"] == false);
}

TEST_CASE("execute reproduces the report from its embedded input") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cat", "coidentifier", "--functor", "functors/collapse.json"},
             {"coring", "--sweedler-of", "maps/k_to_kxk.json"},
             {"hopf", "verdict", "--bialgebra", "bialgebras/h4.json"}}) {
        auto j = run(args).json();
        auto again = cli::execute(j["command"], j["input"], j["parameters"]);
        j.erase("verification");
        CHECK(again == j);
    }
}

TEST_CASE("corpus runner") {
    TempDir t;
    const std::string fx = (kCorpus / "maps" / "kxk_to_k.json").string();

    SUBCASE("empty manifest passes with a warning") {
        auto m = t.write("empty.json", manifest(Json::array()));
        auto r = run({"corpus", "run", "--manifest", m.string()});
        CHECK(r.code == 0);
        CHECK(r.err.find("warning") != std::string::npos);
        CHECK(r.json()["total"] == 0);
    }
    SUBCASE("a flipped expectation fails and names the case") {
        auto m = t.write("flip.json", manifest(Json::array({case_of("ok", {"ring-ext", "--map", fx}, "holds"),
                                                            case_of("flipped", {"ring-ext", "--map", fx}, "fails")})));
        auto r = run({"corpus", "run", "--manifest", m.string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("flipped") != std::string::npos);
        CHECK(r.json()["passed"] == 1);
    }
    SUBCASE("a wrong fragment fails") {
        auto c = case_of("frag", {"ring-ext", "--map", fx}, "holds");
        c["fragment"] = {{"/witness/z", Json::array({"0", "1"})}};
        auto m = t.write("frag.json", manifest(Json::array({c})));
        CHECK(run({"corpus", "run", "--manifest", m.string()}).code == 1);
    }
    SUBCASE("a missing fixture is an input error") {
        auto m = t.write("missing.json", manifest(Json::array({case_of("gone", {"ring-ext", "--map", "nope.json"}, "error")})));
        CHECK(run({"corpus", "run", "--manifest", m.string()}).code == 2);
    }
    SUBCASE("reports are written per case") {
        auto m = t.write("one.json", manifest(Json::array({case_of("a/b", {"ring-ext", "--map", fx}, "holds")})));
        auto out = t.path / "out";
        CHECK(run({"corpus", "run", "--manifest", m.string(), "--out-dir", out.string()}).code == 0);
        CHECK(fs::exists(out / "a.b.json"));
        CHECK(fs::exists(out / "summary.json"));
    }
}
