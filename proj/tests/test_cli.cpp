#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "superalg/cli.hpp"

using namespace superalg;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("superalg_test_" + std::to_string(counter++) + ".json");
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

struct RunOutput {
    int code;
    std::string out;
    std::string err;
    Json payload() const {
        Json j = Json::parse(out);
        return j.at("payload");
    }
    Json record() const { return Json::parse(out); }
};

RunOutput run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("ber on the identity matrix file") {
    TempFile f(R"({
      "p": 2, "q": 1,
      "blocks": {
        "A": [[{"k":0,"terms":[[[],"1"]]},{"k":0,"terms":[]}],
              [{"k":0,"terms":[]},{"k":0,"terms":[[[],"1"]]}]],
        "B": [[{"k":0,"terms":[]}],[{"k":0,"terms":[]}]],
        "C": [[{"k":0,"terms":[]},{"k":0,"terms":[]}]],
        "D": [[{"k":0,"terms":[[[],"1"]]}]]
      }
    })");
    auto r = run({"ber", f.path.string()});
    REQUIRE(r.code == 0);
    Json ber = r.payload().at("berezinian");
    CHECK(ber.at("terms").size() == 1);
    CHECK(ber.at("terms")[0][1] == "1");
}

TEST_CASE("ber with a Grassmann block") {
    TempFile f(R"({
      "p": 1, "q": 1,
      "blocks": {
        "A": [[{"k":2,"terms":[[[],"1"]]}]],
        "B": [[{"k":2,"terms":[[[1],"1"]]}]],
        "C": [[{"k":2,"terms":[[[2],"1"]]}]],
        "D": [[{"k":2,"terms":[[[],"1"]]}]]
      }
    })");
    auto r = run({"ber", f.path.string()});
    REQUIRE(r.code == 0);
    // 1 - e1 e2
    Json terms = r.payload().at("berezinian").at("terms");
    REQUIRE(terms.size() == 2);
    CHECK(terms[0][1] == "1");
    CHECK(terms[1][0] == Json::array({1, 2}));
    CHECK(terms[1][1] == "-1");
}

TEST_CASE("length of a module file") {
    TempFile f(R"({
      "algebra": {
        "basis": [["1",0],["th",1]],
        "mult": [["1","1","1","1"],["1","th","th","1"],["th","1","th","1"]],
        "unit": [["1","1"]]
      }
    })");
    auto r = run({"length", f.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.payload().at("length") == Json::array({"1", "1"}));
}

TEST_CASE("length rejects a non-local algebra with exit 1") {
    TempFile f(R"({
      "algebra": {
        "basis": [["1",0],["x",0]],
        "mult": [["1","1","1","1"],["1","x","x","1"],["x","1","x","1"],["x","x","x","1"]],
        "unit": [["1","1"]]
      }
    })");
    auto r = run({"length", f.path.string()});
    CHECK(r.code == 1);
    Json rec = r.record();
    CHECK(rec.at("status") == "error");
    CHECK(rec.at("diagnostics").size() == 1);
}

TEST_CASE("order and divisor commands") {
    TempFile f(R"({
      "model": {"base": "A1"},
      "point": ["0","1"],
      "g": {"num": ["0","0","1"]}
    })");
    auto r = run({"order", f.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.payload().at("ord") == Json::array({"2", "2"}));

    TempFile d(R"({
      "model": {"base": "P1"},
      "g": {"num": ["0","0","1"], "den": ["-1","1"]}
    })");
    auto rd = run({"div", d.path.string()});
    REQUIRE(rd.code == 0);
    Json divisor = rd.payload().at("divisor");
    CHECK(divisor.at("terms").size() == 3);
    CHECK(rd.payload().at("degree_total") == Json::array({"0", "0"}));
}

TEST_CASE("pushforward and pullback") {
    TempFile p(R"({
      "cycle": {"dim": 1, "terms": [["Z", ["1","1"]]]},
      "map": {"maps": [["Z","W","2"]]}
    })");
    auto r = run({"pushforward", p.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.payload().at("cycle").at("terms")[0] ==
          Json::array({"W", Json::array({"2", "2"})}));

    TempFile q(R"({
      "cycle": {"dim": 0, "terms": [["pt", ["1","0"]]]},
      "data": {"m": 1, "pullbacks": [["pt", [{"name": "line", "length": ["1","1"]}]]]}
    })");
    auto rq = run({"pullback", q.path.string()});
    REQUIRE(rq.code == 0);
    CHECK(rq.payload().at("cycle").at("dim") == 1);
    CHECK(rq.payload().at("cycle").at("terms")[0] ==
          Json::array({"line", Json::array({"1", "1"})}));

    // attached-algebra multiplicity
    TempFile qa(R"({
      "cycle": {"dim": 0, "terms": [["pt", ["1","0"]]]},
      "data": {"m": 0, "pullbacks": [["pt", [{"name": "fat", "algebra": {
        "basis": [["1",0],["x",0]],
        "mult": [["1","1","1","1"],["1","x","x","1"],["x","1","x","1"]],
        "unit": [["1","1"]]
      }}]]]}
    })");
    auto ra = run({"pullback", qa.path.string()});
    REQUIRE(ra.code == 0);
    CHECK(ra.payload().at("cycle").at("terms")[0] ==
          Json::array({"fat", Json::array({"2", "0"})}));
}

TEST_CASE("rational equivalence command") {
    TempFile f(R"({
      "cycle": {"dim": 0, "terms": [["P0", ["1","1"]], ["Pinf", ["-1","-1"]]]},
      "witnesses": [{
        "dim": 0,
        "embedding": [[["0","1"], "P0"], ["inf", "Pinf"]],
        "model": {"base": "P1"},
        "g": {"num": ["0","1"]}
      }]
    })");
    auto r = run({"rateq", f.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.payload().at("equal") == true);
}

TEST_CASE("stability report names the violated inequality") {
    TempFile f(R"({
      "components": [["C", "0"]],
      "nodes": [],
      "ns": [["C","p1"],["C","p2"]],
      "rr": []
    })");
    auto r = run({"stability", f.path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.payload().at("stable") == false);
    CHECK(r.payload().at("prestable") == true);
    std::string v = r.payload().at("violations")[0].get<std::string>();
    CHECK(v.find("2*0-2+2") != std::string::npos);
}

TEST_CASE("susy, stablemap and betagood commands") {
    TempFile s(R"({
      "graph": {"components": [["C","0"]], "ns": [], "rr": [["C","r1"]]},
      "degrees": [["C","0"]]
    })");
    auto rs = run({"susy", s.path.string()});
    REQUIRE(rs.code == 0);
    CHECK(rs.payload().at("holds") == false);

    TempFile m(R"({
      "beta": {"dim": 1, "terms": [["H", ["1","1"]]]},
      "fibers": [{
        "graph": {"components": [["C","0"]], "ns": [], "rr": []},
        "maps": [["C", {"image": "H", "degree": "1"}]]
      }]
    })");
    auto rm = run({"stablemap", m.path.string()});
    REQUIRE(rm.code == 0);
    CHECK(rm.payload().at("stable") == true);

    TempFile b(R"({
      "beta": {"dim": 1, "terms": [["H", ["1","1"]]]},
      "family": [
        ["s1", [{"graph": {"components": [["C","0"]], "ns": [], "rr": []},
                 "maps": [["C", {"image": "H", "degree": "1"}]]}]],
        ["s2", [{"graph": {"components": [["C","0"]], "ns": [], "rr": []},
                 "maps": [["C", {"image": "H", "degree": "2"}]]}]]
      ]
    })");
    auto rb = run({"betagood", b.path.string()});
    REQUIRE(rb.code == 0);
    CHECK(rb.payload().at("good") == Json::array({"s1"}));
}

TEST_CASE("nori build and end commands") {
    TempFile p(R"({
      "elements": ["a","b","c"],
      "relations": [["a","b"],["b","c"]],
      "good": ["a","b","c"]
    })");
    auto rp = run({"nori-build", "--type", "pairs", "--imax", "1", p.path.string()});
    REQUIRE(rp.code == 0);
    Json graph = rp.payload().at("graph");
    CHECK(graph.at("vertices").size() == 6);

    TempFile c(R"({
      "objects": ["X"],
      "morphisms": [["id","X","X"]],
      "identities": [["X","id"]],
      "compose": [["id","id","id"]]
    })");
    auto rc = run({"nori-build", "--type", "category", c.path.string()});
    REQUIRE(rc.code == 0);
    CHECK(rc.payload().at("graph").at("vertices") == Json::array({"X"}));
    CHECK(rc.payload().at("graph").at("flags").size() == 1);

    TempFile e(R"({
      "graph": {
        "flags": ["e0.s","e0.t"],
        "vertices": ["v","w"],
        "boundary": [["e0.s","v"],["e0.t","w"]],
        "involution": [["e0.s","e0.t"],["e0.t","e0.s"]]
      },
      "rep": {
        "dims": [["v",[1,0]],["w",[1,0]]],
        "edges": [["e0.s", {"plus": [["1"]], "minus": []}]]
      }
    })");
    auto re = run({"nori-end", e.path.string()});
    REQUIRE(re.code == 0);
    CHECK(re.payload().at("dimension") == Json::array({"1", "0"}));

    TempFile bad(R"({
      "flags": ["a","b","c"],
      "vertices": ["v"],
      "boundary": [["a","v"],["b","v"],["c","v"]],
      "involution": [["a","b"],["b","c"],["c","a"]]
    })");
    auto rbad = run({"nori-check", bad.path.string()});
    REQUIRE(rbad.code == 0);
    CHECK(rbad.payload().at("valid") == false);
}

TEST_CASE("malformed input exits with code 2") {
    TempFile f("this is not json");
    auto r = run({"ber", f.path.string()});
    CHECK(r.code == 2);
    auto missing = run({"ber", "/nonexistent/file.json"});
    CHECK(missing.code == 2);
    TempFile g(R"({"p": 1})");
    auto rg = run({"ber", g.path.string()});
    CHECK(rg.code == 2);
    auto usage = run({"no-such-command"});
    CHECK(usage.code == 2);
}

TEST_CASE("output is deterministic and re-parses") {
    TempFile f(R"({
      "model": {"base": "P1"},
      "g": {"num": ["0","0","1"], "den": ["-1","1"]}
    })");
    auto r1 = run({"div", f.path.string()});
    auto r2 = run({"div", f.path.string()});
    CHECK(r1.out == r2.out);
    Json parsed = Json::parse(r1.out);
    CHECK(parsed.at("status") == "ok");
    CHECK(parsed.at("payload").contains("divisor"));

    auto h1 = run({"hodge", "--genus", "1", "--bundle", "trivial"});
    auto h2 = run({"hodge", "--genus", "1", "--bundle", "trivial"});
    CHECK(h1.out == h2.out);
    // the emitted hodge payload re-parses as a frolicher input
    Json hp = Json::parse(h1.out).at("payload");
    TempFile back(hp.dump());
    auto rf = run({"frolicher", back.path.string()});
    REQUIRE(rf.code == 0);
    CHECK(rf.payload().at("frolicher").at("verdict") == "incompatible");
}

TEST_CASE("batch mode evaluates several files in order") {
    TempFile a(R"({"model": {"base": "A1"}, "point": ["0","1"], "g": {"num": ["0","1"]}})");
    TempFile b(R"({"model": {"base": "A1"}, "point": ["0","1"], "g": {"num": ["0","0","1"]}})");
    auto r = run({"order", a.path.string(), b.path.string(), "--jobs", "2"});
    REQUIRE(r.code == 0);
    Json arr = r.payload();
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0].at("payload").at("ord") == Json::array({"1", "1"}));
    CHECK(arr[1].at("payload").at("ord") == Json::array({"2", "2"}));

    // a failing member surfaces in the combined exit code
    TempFile c(R"({"model": {"base": "A1"}, "point": ["0","1"], "g": {"num": ["0"]}})");
    auto rc = run({"order", a.path.string(), c.path.string()});
    CHECK(rc.code == 1);
}

TEST_CASE("hodge command matches the library values") {
    auto r = run({"hodge", "--genus", "1", "--bundle", "trivial"});
    REQUIRE(r.code == 0);
    Json p = r.payload();
    CHECK(p.at("hpq").at("0,1") == Json::array({"1", "1"}));
    CHECK(p.at("frolicher").at("verdict") == "incompatible");
    CHECK(p.at("frolicher").at("rows")[1].at("plus").at("0,1") == "2");
    CHECK(p.at("betti")[1] == "2");
    // generic bundle in the ambiguous range is a domain error
    auto ra = run({"hodge", "--genus", "3", "--bundle", "generic:1"});
    CHECK(ra.code == 1);
}
