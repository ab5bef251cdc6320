#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superalg/moduli.hpp"

using namespace superalg;

namespace {

DualGraph smooth(const std::string& name, long genus, int ns_marks, int rr_marks = 0) {
    DualGraph g;
    g.components.emplace_back(name, genus);
    for (int i = 0; i < ns_marks; ++i) g.ns.emplace_back(name, name + ".p" + std::to_string(i));
    for (int i = 0; i < rr_marks; ++i) g.rr.emplace_back(name, name + ".r" + std::to_string(i));
    return g;
}

} // namespace

TEST_CASE("arithmetic genus") {
    CHECK(arithmetic_genus(smooth("C", 2, 0)) == 2);

    DualGraph two;
    two.components.emplace_back("A", 0);
    two.components.emplace_back("B", 0);
    two.nodes.emplace_back("A", "B");
    CHECK(arithmetic_genus(two) == 0);

    DualGraph selfnode;
    selfnode.components.emplace_back("A", 0);
    selfnode.nodes.emplace_back("A", "A");
    CHECK(arithmetic_genus(selfnode) == 1);

    DualGraph disconnected;
    disconnected.components.emplace_back("A", 0);
    disconnected.components.emplace_back("B", 0);
    CHECK_THROWS_AS(arithmetic_genus(disconnected), kernel_error);
}

TEST_CASE("classical stability cases") {
    CHECK(is_stable(smooth("C", 0, 3)));
    CHECK_FALSE(is_stable(smooth("C", 0, 2)));
    CHECK_FALSE(is_stable(smooth("C", 1, 0)));
    CHECK(is_stable(smooth("C", 1, 1)));
    CHECK(is_stable(smooth("C", 2, 0)));
    auto report = stability_report(smooth("C", 0, 2));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("component C") != std::string::npos);
}

TEST_CASE("mixed markings and node branches count as special points") {
    // rational bridge with two node branches and one NS marking: 2g-2+3 > 0
    DualGraph g;
    g.components.emplace_back("bridge", 0);
    g.components.emplace_back("left", 1);
    g.components.emplace_back("right", 1);
    g.nodes.emplace_back("left", "bridge");
    g.nodes.emplace_back("bridge", "right");
    g.ns.emplace_back("bridge", "m");
    CHECK(is_stable(g));
    // remove the marking: the bridge has only two special points
    g.ns.clear();
    CHECK_FALSE(is_stable(g));
    // self-node counts twice
    DualGraph loop;
    loop.components.emplace_back("A", 0);
    loop.nodes.emplace_back("A", "A");
    loop.ns.emplace_back("A", "m");
    CHECK(is_stable(loop));
}

TEST_CASE("stability is invariant under relabeling") {
    std::mt19937 rng(19);
    DualGraph g;
    g.components.emplace_back("A", 0);
    g.components.emplace_back("B", 1);
    g.nodes.emplace_back("A", "B");
    g.ns.emplace_back("A", "x");
    g.rr.emplace_back("A", "y");
    DualGraph h;
    h.components.emplace_back("beta", 1);
    h.components.emplace_back("alpha", 0);
    h.nodes.emplace_back("alpha", "beta");
    h.ns.emplace_back("alpha", "u");
    h.rr.emplace_back("alpha", "v");
    CHECK(is_stable(g) == is_stable(h));
    CHECK(arithmetic_genus(g) == arithmetic_genus(h));
}

TEST_CASE("SUSY degree condition") {
    CHECK(susy_degree_check(smooth("C", 1, 0), {{"C", 0}}));
    CHECK(susy_degree_check(smooth("C", 0, 0, 2), {{"C", 0}}));
    // odd right-hand side: no integer degree works
    for (long d = -3; d <= 3; ++d)
        CHECK_FALSE(susy_degree_check(smooth("C", 0, 0, 1), {{"C", d}}));
    CHECK(susy_degree_check(smooth("C", 2, 0), {{"C", 1}}));
    CHECK_FALSE(susy_degree_check(smooth("C", 2, 0), {{"C", 0}}));
}

TEST_CASE("summed SUSY condition gives the global degree relation") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<long> gd(0, 2), nd(0, 2);
        DualGraph g;
        int comps = 1 + trial % 3;
        for (int i = 0; i < comps; ++i)
            g.components.emplace_back("c" + std::to_string(i), gd(rng));
        for (int i = 1; i < comps; ++i) g.nodes.emplace_back("c0", "c" + std::to_string(i));
        int rr_total = 2 * int(nd(rng));
        for (int i = 0; i < rr_total; ++i)
            g.rr.emplace_back("c" + std::to_string(i % comps), "r" + std::to_string(i));
        // solve per component when possible
        std::map<std::string, Int> degL;
        bool solvable = true;
        for (const auto& [name, gi] : g.components) {
            Int rhs = 2 * gi - 2 + Int(g.node_branches(name)) + Int(g.rr_count(name));
            if (rhs % 2 != 0) {
                solvable = false;
                break;
            }
            degL[name] = rhs / 2;
        }
        if (!solvable) continue;
        REQUIRE(susy_degree_check(g, degL));
        Int total = 0;
        for (const auto& [n, d] : degL) total += 2 * d;
        CHECK(total == 2 * arithmetic_genus(g) - 2 + Int(g.rr.size()));
    }
}

TEST_CASE("fiber class assembly") {
    SuperMapFiberData d;
    d.graph = smooth("C", 0, 3);
    d.maps["C"] = {false, "H", Int(1), Z2(1, 1)};
    CHECK(fiber_class(d).coefficient("H") == Z2(1, 1));

    SuperMapFiberData contracted;
    contracted.graph = smooth("C", 1, 1);
    contracted.maps["C"] = {true, "", Int(0), Z2(1, 1)};
    CHECK(fiber_class(contracted).is_zero());

    SuperMapFiberData two;
    two.graph.components.emplace_back("A", 0);
    two.graph.components.emplace_back("B", 0);
    two.graph.nodes.emplace_back("A", "B");
    two.graph.ns.emplace_back("A", "x");
    two.graph.ns.emplace_back("A", "y");
    two.graph.ns.emplace_back("B", "z");
    two.graph.ns.emplace_back("B", "w");
    two.maps["A"] = {false, "H", Int(1), Z2(1, 1)};
    two.maps["B"] = {false, "H", Int(2), Z2(1, 1)};
    CHECK(fiber_class(two).coefficient("H") == Z2(3, 3));

    SuperMapFiberData missing;
    missing.graph = smooth("C", 0, 0);
    CHECK_THROWS_AS(fiber_class(missing), kernel_error);
}

TEST_CASE("fiber class is additive over component groups") {
    SuperMapFiberData whole;
    whole.graph.components.emplace_back("A", 1);
    whole.graph.components.emplace_back("B", 0);
    whole.graph.nodes.emplace_back("A", "B");
    whole.maps["A"] = {false, "H", Int(2), Z2(1, 1)};
    whole.maps["B"] = {false, "E", Int(1), Z2(2, 1)};
    SuperMapFiberData onlyA = whole, onlyB = whole;
    onlyA.graph.components.pop_back();
    onlyA.graph.nodes.clear();
    onlyA.maps.erase("B");
    onlyB.graph.components.erase(onlyB.graph.components.begin());
    onlyB.graph.nodes.clear();
    onlyB.maps.erase("A");
    CHECK(fiber_class(whole) == fiber_class(onlyA) + fiber_class(onlyB));
}

TEST_CASE("stable supermap checks") {
    SuperCycle beta(1);
    beta.add("H", Z2(1, 1));

    SuperMapFiberData good;
    good.graph = smooth("C", 0, 0);
    good.maps["C"] = {false, "H", Int(1), Z2(1, 1)};
    CHECK(is_stable_supermap({good}, beta));

    // contracted rational bridge carrying three special points
    SuperMapFiberData bridge;
    bridge.graph.components.emplace_back("main", 1);
    bridge.graph.components.emplace_back("tail", 0);
    bridge.graph.nodes.emplace_back("main", "tail");
    bridge.graph.ns.emplace_back("tail", "p1");
    bridge.graph.ns.emplace_back("tail", "p2");
    bridge.maps["main"] = {false, "H", Int(1), Z2(1, 1)};
    bridge.maps["tail"] = {true, "", Int(0), Z2(1, 1)};
    CHECK(is_stable_supermap({bridge}, beta));
    // drop one marking: only two special points on the contracted tail
    bridge.graph.ns.pop_back();
    CHECK_FALSE(is_stable_supermap({bridge}, beta));

    // class mismatch
    SuperCycle beta2(1);
    beta2.add("H", Z2(2, 2));
    CHECK_FALSE(is_stable_supermap({good}, beta2));

    // contracted genus-1 with no special point
    SuperMapFiberData torus;
    torus.graph.components.emplace_back("main", 0);
    torus.graph.components.emplace_back("ell", 1);
    torus.graph.nodes.emplace_back("main", "ell");
    torus.graph.ns.emplace_back("main", "a");
    torus.graph.ns.emplace_back("main", "b");
    torus.maps["main"] = {false, "H", Int(1), Z2(1, 1)};
    torus.maps["ell"] = {true, "", Int(0), Z2(1, 1)};
    CHECK(is_stable_supermap({torus}, beta));  // the node is its special point
}

TEST_CASE("beta-good filtering") {
    SuperCycle beta(1);
    beta.add("H", Z2(1, 1));
    SuperMapFiberData good;
    good.graph = smooth("C", 0, 0);
    good.maps["C"] = {false, "H", Int(1), Z2(1, 1)};
    SuperMapFiberData bad = good;
    bad.maps["C"].degree = 2;

    std::vector<std::pair<std::string, std::vector<SuperMapFiberData>>> family;
    CHECK(beta_good_filter(family, beta).empty());
    family.emplace_back("s1", std::vector<SuperMapFiberData>{good});
    family.emplace_back("s2", std::vector<SuperMapFiberData>{bad});
    family.emplace_back("s3", std::vector<SuperMapFiberData>{good, good});
    auto result = beta_good_filter(family, beta);
    REQUIRE(result.size() == 2);
    CHECK(result[0] == "s1");
    CHECK(result[1] == "s3");
}

TEST_CASE("stability implies prestability") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> gd(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
        DualGraph g;
        int comps = 1 + trial % 3;
        for (int i = 0; i < comps; ++i)
            g.components.emplace_back("c" + std::to_string(i), gd(rng));
        for (int i = 1; i < comps; ++i) g.nodes.emplace_back("c0", "c" + std::to_string(i));
        for (int i = 0; i < 3; ++i) g.ns.emplace_back("c" + std::to_string(i % comps),
                                                      "m" + std::to_string(i));
        if (is_stable(g)) CHECK(is_prestable(g));
    }
}
