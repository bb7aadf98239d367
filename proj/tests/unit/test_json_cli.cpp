#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cjt/cli.hpp"
#include "cjt/json_io.hpp"
#include "cjt/zoo.hpp"

using namespace cjt;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = execute(args, out, err);
    return {code, out.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    fs::path dir = fs::temp_directory_path() / "cjt_cli_tests";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string write_module(const std::string& name, const ModuleRep& m) { return write_temp(name, to_json(m).dump()); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("element encoding") {
        auto f = make_field(5, 1);
        CHECK(element_to_json(*f, 3) == Json(3));
        auto g = make_field(5, 2);
        CHECK(element_to_json(*g, 7) == Json::array({2, 1}));
        CHECK(element_from_json(*g, Json::array({2, 1})) == 7);
        for (Elem a = 0; a < 25; ++a) REQUIRE(element_from_json(*g, element_to_json(*g, a)) == a);
        CHECK(element_from_json(*f, Json(7)) == 2);  // prime-field integers are reduced
        CHECK(element_from_json(*f, Json(-1)) == 4);
        CHECK_THROWS(element_from_json(*g, Json(7)));
        CHECK_THROWS(element_from_json(*g, Json::array({5, 0})));
    }

    TEST_CASE("module round trip") {
        for (const ModuleRep& m : {w_module(make_field(5, 1)), v_module(make_field(3, 1), 2),
                                   base_change(ke_mod_i2(make_field(3, 1), 2), make_field(3, 2))}) {
            ModuleRep back = module_from_json(Json::parse(to_json(m).dump()));
            CHECK(back.gens == m.gens);
            CHECK(back.r == m.r);
            CHECK(back.field == m.field);
            CHECK(back.convention == m.convention);
        }
    }

    TEST_CASE("module input checks") {
        Json j = to_json(w_module(make_field(5, 1)));
        Json bad = j;
        bad["modulus"] = Json::array({1, 1});
        CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
        bad = j;
        bad["generators"][0][1] = 1;  // breaks commutation or nilpotence
        CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
        bad = j;
        bad["generators"].erase(1);
        CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
        bad = j;
        bad["dim"] = kModuleDimSoftCap + 1;
        CHECK_THROWS_AS(module_from_json(bad), std::invalid_argument);
        CHECK_THROWS(module_from_json(bad, true));  // generators no longer fit
        CHECK_THROWS(module_from_json(Json::array()));
    }

    TEST_CASE("jordan type and polynomial matrix round trips") {
        JordanType t = parse_pretty(5, "3[3] + 2[2]");
        CHECK(jordan_from_json(to_json(t)) == t);
        CHECK(to_json(t)["pretty"] == "3[3] + 2[2]");
        CHECK_THROWS(jordan_from_json(Json("3[3]")));

        PolyMatrix m(5, 2, 2, 2);
        m(0, 0) = HomPoly::variable(5, 2, 0);
        m(0, 1) = HomPoly::variable(5, 2, 1);
        m(1, 1) = HomPoly::variable(5, 2, 0);
        PolyMatrix back = polymatrix_from_json(to_json(m));
        CHECK(back.entries == m.entries);
        Json flat = to_json(m);
        Json entries = Json::array();
        for (const auto& row : flat["entries"])
            for (const auto& e : row) entries.push_back(e);
        flat["entries"] = entries;
        CHECK(polymatrix_from_json(flat).entries == m.entries);
        flat["p"] = 4;
        CHECK_THROWS(polymatrix_from_json(flat));
    }

    TEST_CASE("check on the W dichotomy") {
        std::string w5 = write_module("w5.json", w_module(make_field(5, 1)));
        Run sweep = run({"check", "--module", w5});
        CHECK(sweep.code == kExitOk);
        CHECK(sweep.json()["verdict"] == "CONSTANT_ON_TESTED");
        Run r5 = run({"check", "--module", w5, "--exact-rank2"});
        CHECK(r5.code == kExitOk);
        CHECK(r5.json()["verdict"] == "CONSTANT_EXACT");
        CHECK(r5.json()["type"] == "3[3] + 2[2]");

        std::string w7 = write_module("w7.json", w_module(make_field(7, 1)));
        Run r7 = run({"check", "--module", w7, "--exact-rank2"});
        CHECK(r7.code == kExitFinding);
        CHECK(r7.json()["verdict"] == "NOT_CONSTANT");
        CHECK(r7.json()["witnesses"].size() == 2);

        Run g7 = run({"gamma", "--module", w7});
        CHECK(g7.code == kExitFinding);
        CHECK(g7.json()["points"].size() == 2);
        CHECK(run({"gamma", "--module", w5}).code == kExitOk);
    }

    TEST_CASE("jordan at a point with a tail") {
        std::string v = write_module("v3.json", v_module(make_field(3, 1), 3));
        Run a = run({"jordan", "--module", v, "--point", "1,4", "--ext", "2"});
        REQUIRE(a.code == kExitOk);
        CHECK(a.json()["point"]["e"] == 2);
        Run b = run({"jordan", "--module", v, "--point", "1,0", "--tail", "1,1=1"});
        REQUIRE(b.code == kExitOk);
        CHECK(b.json()["jordan_type"]["p"] == 3);
        CHECK(run({"jordan", "--module", v, "--point", "0,0"}).code == kExitError);
    }

    TEST_CASE("omega and errors") {
        Run o = run({"omega", "--p", "5", "--rank", "2", "--n", "2"});
        CHECK(o.code == kExitOk);
        CHECK(o.json()["dim"] == 26);
        CHECK(run({"omega", "--p", "3", "--rank", "2", "--n", "-2"}).json()["dim"] == 10);

        Run u = run({"frobnicate"});
        CHECK(u.code == kExitError);
        CHECK(u.json()["error"]["kind"] == "usage");

        Run np = run({"omega", "--p", "4", "--rank", "2", "--n", "1"});
        CHECK(np.code == kExitError);
        CHECK(np.json()["error"]["kind"] == "input");

        std::string junk = write_temp("junk.json", "{ not json");
        Run j = run({"check", "--module", junk});
        CHECK(j.code == kExitError);
        CHECK(j.json()["error"]["kind"] == "input");

        Json bad = to_json(w_module(make_field(5, 1)));
        bad["generators"][0][1] = 1;
        Run b = run({"check", "--module", write_temp("bad.json", bad.dump())});
        CHECK(b.code == kExitError);
        CHECK(b.json()["error"]["kind"] == "input");

        Run missing = run({"check", "--module", "/nonexistent/file.json"});
        CHECK(missing.code == kExitError);
        CHECK(missing.json().contains("error"));
    }

    TEST_CASE("tensor of types and modules") {
        std::string a = write_temp("ta.json", to_json(parse_pretty(5, "1[3]")).dump());
        std::string b = write_temp("tb.json", to_json(parse_pretty(5, "1[2]")).dump());
        Run t = run({"tensor", "--a", a, "--b", b, "--type-only"});
        REQUIRE(t.code == kExitOk);
        CHECK(t.json()["pretty"] == "1[4] + 1[2]");

        std::string m = write_module("k2.json", ke_mod_i2(make_field(5, 1), 2));
        Run tm = run({"tensor", "--a", m, "--b", m});
        REQUIRE(tm.code == kExitOk);
        CHECK(tm.json()["dim"] == 9);
    }

    TEST_CASE("ranks search") {
        // [[x, y, z]] has no common zero; [[x, y]] over three variables vanishes at (0,0,1)
        PolyMatrix m(3, 3, 1, 2);
        m(0, 0) = HomPoly::variable(3, 3, 0);
        m(0, 1) = HomPoly::variable(3, 3, 1);
        Run r = run({"ranks-search", "--poly", write_temp("pm.json", to_json(m).dump()), "--minor", "1"});
        REQUIRE(r.code == kExitOk);
        CHECK(r.json()["found"] == true);
        CHECK(r.json()["point"] == Json::array({0, 0, 1}));

        PolyMatrix full(3, 3, 1, 3);
        for (std::uint32_t i = 0; i < 3; ++i) full(0, i) = HomPoly::variable(3, 3, i);
        Run n = run({"ranks-search", "--poly", write_temp("pm3.json", to_json(full).dump()), "--minor", "1"});
        CHECK(n.code == kExitFinding);
        CHECK(n.json()["found"] == false);
    }

    TEST_CASE("zoo, carlson and endotrivial") {
        Run z = run({"zoo", "--name", "W", "--p", "5"});
        REQUIRE(z.code == kExitOk);
        CHECK(module_from_json(z.json()).gens == w_module(make_field(5, 1)).gens);
        CHECK(run({"zoo", "--name", "V"}).code == kExitError);
        CHECK(run({"zoo", "--name", "V", "--param", "n=2", "--p", "3"}).json()["dim"] == 5);

        Run c = run({"carlson", "--p", "3", "--rank", "2", "--degrees", "2,2"});
        REQUIRE(c.code == kExitOk);
        CHECK(c.json()["dim"] == 19);
        CHECK(c.json()["hypothesis"]["holds"] == true);
        CHECK(run({"carlson", "--p", "3", "--rank", "2", "--degrees", "2", "--classes", "coord:3"}).code == kExitError);

        std::string k = write_module("ke.json", ke_mod_i2(make_field(5, 1), 2));
        Run e = run({"endotrivial", "--module", k});
        CHECK(e.code == kExitFinding);
        CHECK(e.json()["verdict"] == false);
        std::string o = write_module("o1.json", *omega_k(make_field(3, 1), 2, 1));
        CHECK(run({"endotrivial", "--module", o}).code == kExitOk);
    }

    TEST_CASE("output does not depend on the job count") {
        std::string w7 = write_module("w7j.json", w_module(make_field(7, 1)));
        Run a = run({"--jobs", "1", "check", "--module", w7, "--max-ext", "2"});
        Run b = run({"--jobs", "3", "check", "--module", w7, "--max-ext", "2"});
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        a = run({"--jobs", "1", "gamma", "--module", w7, "--ext", "2"});
        b = run({"--jobs", "3", "gamma", "--module", w7, "--ext", "2"});
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }

    TEST_CASE("pretty output") {
        Run p = run({"--pretty", "omega", "--p", "2", "--rank", "1", "--n", "0"});
        CHECK(p.code == kExitOk);
        CHECK_FALSE(Json::accept(p.out));
        CHECK(p.out.find("dim") != std::string::npos);
    }
}
