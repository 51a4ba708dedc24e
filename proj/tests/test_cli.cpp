#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coheyt/cli.hpp"
#include "coheyt/json_io.hpp"
#include "coheyt/poset.hpp"

using namespace coheyt;

namespace {

struct cli_fixture {
    std::filesystem::path dir;

    cli_fixture() {
        dir = std::filesystem::temp_directory_path() / "coheyt-cli-test";
        std::filesystem::create_directories(dir);
        write("L5.json",
              R"({"elements": ["c","x1","x2"], "covers": [["c","x1"],["c","x2"]]})");
        write("L2.json", R"({"elements": ["u"], "covers": []})");
        write("lambda.json",
              R"({"elements": ["a","b","t"], "covers": [["a","t"],["b","t"]]})");
        write("bad.json", R"({"elements": ["p","q"], "covers": [["p","q"],["q","p"]]})");
        write("chain3.json", R"({"size": 3, "leq": [[true,true,true],[false,true,true],[false,false,true]]})");
        write("carrier01.json", R"([[], ["c","x1","x2"]])");
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir / name);
        out << content;
    }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    struct run_result {
        int code;
        std::string out, err;
    };

    run_result run(std::vector<std::string> args) const {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }
};

}

TEST_CASE("cli basics") {
    cli_fixture fx;

    SUBCASE("validate") {
        auto r = fx.run({"validate", "--poset", fx.path("L5.json")});
        CHECK(r.code == 0);
        CHECK(r.out == "poset ok: 3 elements, 2 covers\n");
        auto bad = fx.run({"validate", "--poset", fx.path("bad.json")});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("CycleDetected") != std::string::npos);
        auto tbl = fx.run({"validate", "--table", fx.path("chain3.json")});
        CHECK(tbl.code == 0);
    }

    SUBCASE("eval") {
        auto r = fx.run({"eval", "--algebra", fx.path("L5.json"), "--term", "1 - x", "--bind",
                         "x=x1"});
        CHECK(r.code == 0);
        CHECK(r.out == "{c,x2}\n");
        auto bad = fx.run({"eval", "--algebra", fx.path("L5.json"), "--term", "1 -"});
        CHECK(bad.code == 2);
    }

    SUBCASE("irr") {
        auto r = fx.run({"irr", "--algebra", fx.path("L5.json")});
        CHECK(r.code == 0);
        CHECK(r.out == "{c}\n{c,x1}\n{c,x2}\n");
    }

    SUBCASE("variety") {
        auto r = fx.run({"variety", "--algebra", fx.path("L5.json"), "--tag", "V4"});
        CHECK(r.code == 0);
        CHECK(r.out.find("equational: member") != std::string::npos);
        CHECK(r.out.find("structural: member") != std::string::npos);
        CHECK(r.out.find("agreement: yes") != std::string::npos);
        auto non = fx.run({"variety", "--algebra", fx.path("L5.json"), "--tag", "V6"});
        CHECK(non.code == 1);
        CHECK(non.out.find("equational: non-member") != std::string::npos);
    }

    SUBCASE("signatures and extend") {
        auto r = fx.run({"signatures", "--algebra", fx.path("L2.json")});
        CHECK(r.code == 0);
        // exactly the two signatures over the two element algebra
        CHECK(r.out ==
              "{\"g\":[\"u\"],\"h\":[[],[]],\"r\":1}\n"
              "{\"g\":[\"u\"],\"h\":[[],[]],\"r\":2}\n");
        auto x = fx.run({"extend", "--algebra", fx.path("L2.json"), "--signature",
                         R"({"g":["u"],"h":[[],[]],"r":2})"});
        CHECK(x.code == 0);
        json rec = json::parse(x.out);
        CHECK(rec["poset"]["elements"].size() == 2);
        CHECK(rec["tuple"].size() == 2);
        // emitted posets re-validate on load
        CHECK_NOTHROW((void)poset_from_json(rec["poset"]));
    }

    SUBCASE("tower") {
        auto r = fx.run({"tower", "--algebra", fx.path("L5.json"), "--carrier",
                         fx.path("carrier01.json")});
        CHECK(r.code == 0);
        // two steps, as in the tower of L5 over the constants
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
    }

    SUBCASE("axiom") {
        auto r = fx.run({"axiom", "--algebra", fx.path("L2.json"), "--axiom", "D1"});
        CHECK(r.code == 1);
        CHECK(r.out.find("fails") != std::string::npos);
        CHECK(r.out.find("({u},{})") != std::string::npos);
    }

    SUBCASE("witness records re-validate") {
        auto r = fx.run({"witness", "--algebra", fx.path("L2.json"), "--kind", "splitting",
                         "--variant", "1", "--a", "1"});
        CHECK(r.code == 0);
        json rec = json::parse(r.out);
        CHECK(rec["checks"]["variety"].get<bool>());
        CHECK(rec["checks"]["embedding"].get<bool>());
        poset_ptr p = poset_from_json(rec["extension"]);
        CHECK(p->size() == 2);
        // bad hypothesis: exit 2
        auto bad = fx.run({"witness", "--algebra", fx.path("L5.json"), "--kind", "density",
                           "--variant", "1", "--a", "1", "--c", "x1"});
        CHECK(bad.code == 2);
    }

    SUBCASE("embed") {
        auto r = fx.run({"embed", "--algebra", fx.path("lambda.json"), "--variety", "V6"});
        CHECK(r.code == 0);
        CHECK(r.out.find("growth history") != std::string::npos);
        auto bad = fx.run({"embed", "--algebra", fx.path("L5.json"), "--variety", "V6"});
        CHECK(bad.code == 1);
    }

    SUBCASE("enumerate") {
        auto r = fx.run({"enumerate", "--max-size", "2"});
        CHECK(r.code == 0);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
    }

    SUBCASE("export-dot") {
        auto r = fx.run({"export-dot", "--algebra", fx.path("L5.json")});
        CHECK(r.code == 0);
        CHECK(r.out.find("digraph lattice") != std::string::npos);
        CHECK(r.out.find("\"{c}\" -> \"{c,x1}\"") != std::string::npos);
        auto p = fx.run({"export-dot", "--poset", fx.path("L5.json")});
        CHECK(p.out.find("digraph poset") != std::string::npos);
        CHECK(p.out.find("\"c\" -> \"x1\"") != std::string::npos);
        // above twenty elements only the poset of join irreducibles is drawn
        fx.write("wide.json",
                 R"({"elements": ["a","b","c","d","e"], "covers": []})");
        auto w = fx.run({"export-dot", "--algebra", fx.path("wide.json")});
        CHECK(w.out.find("digraph poset") != std::string::npos);
    }

    SUBCASE("the environment variable caps poset sizes") {
        setenv("COHEYT_MAX_POSET", "2", 1);
        auto r = fx.run({"validate", "--poset", fx.path("L5.json")});
        unsetenv("COHEYT_MAX_POSET");
        set_poset_size_cap(64);
        CHECK(r.code == 2);
        CHECK(r.err.find("CapExceeded") != std::string::npos);
    }

    SUBCASE("identical inputs give byte-identical outputs") {
        for (auto args : std::vector<std::vector<std::string>>{
                 {"variety", "--algebra", fx.path("L5.json"), "--tag", "V4"},
                 {"signatures", "--algebra", fx.path("L5.json")},
                 {"embed", "--algebra", fx.path("lambda.json"), "--variety", "V6"},
                 {"enumerate", "--max-size", "3"}}) {
            auto a = fx.run(args);
            auto b = fx.run(args);
            CHECK(a.out == b.out);
            CHECK(a.code == b.code);
        }
    }

    SUBCASE("iso-over") {
        auto r = fx.run({"iso-over", "--left", fx.path("L5.json"), "--right", fx.path("L5.json")});
        CHECK(r.code == 0);
        auto absent =
            fx.run({"iso-over", "--left", fx.path("L5.json"), "--right", fx.path("lambda.json")});
        CHECK(absent.code == 1);
        CHECK(absent.out == "absent\n");
    }
}
