#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "hatp4/canonical.hpp"
#include "hatp4/constructions.hpp"
#include "hatp4/error.hpp"
#include "hatp4/graph6.hpp"
#include "hatp4/small_graph.hpp"
#include "oracles.hpp"

using namespace hatp4;

TEST_SUITE("canonical") {

TEST_CASE("relabelled paths share a form") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    b.add_edge(1, 0);
    b.add_edge(0, 2);
    CHECK(canonical_form(a) == canonical_form(b));

    Graph c(3);
    c.add_edge(0, 1);
    CHECK(canonical_form(a) != canonical_form(c));
}

TEST_CASE("complete graph") {
    CHECK(canonical_form(Graph::complete(4)) == to_graph6(Graph::complete(4)));
    CHECK(canonical_form(Graph(0)) == "?");
    CHECK(canonical_form(Graph(1)) == "@");
}

TEST_CASE("100 random relabellings of the n=8 construction agree") {
    const auto g = extremal_construction(8);
    const auto base = canonical_form(g);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) CHECK(canonical_form(oracle::permuted(g, oracle::random_permutation(8, rng))) == base);
}

TEST_CASE("invariance under relabelling on random graphs up to 64 vertices") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const double p = (trial % 5 == 0) ? 0.05 : (trial % 5 == 1 ? 0.95 : 0.5);
        const auto g = oracle::graph(oracle::random_graph(n, p, rng));
        const auto base = canonical_form(g);
        CHECK(from_graph6(base).edge_count() == g.edge_count());
        for (int i = 0; i < 3; ++i) CHECK(canonical_form(oracle::permuted(g, oracle::random_permutation(n, rng))) == base);
    }
}

TEST_CASE("highly symmetric graphs") {
    std::mt19937_64 rng(4);
    std::vector<Graph> family{Graph(40), Graph::complete(30), extremal_construction(40), two_k4_shared_vertex()};
    Graph cycle(24), petersen(10), cube(16);
    for (int i = 0; i < 24; ++i) cycle.add_edge(i, (i + 1) % 24);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    for (int v = 0; v < 16; ++v)
        for (int b = 0; b < 4; ++b)
            if (v < (v ^ (1 << b))) cube.add_edge(v, v ^ (1 << b));
    family.push_back(cycle);
    family.push_back(petersen);
    family.push_back(cube);
    for (const auto& g : family) {
        const auto base = canonical_form(g);
        for (int i = 0; i < 5; ++i)
            CHECK(canonical_form(oracle::permuted(g, oracle::random_permutation(g.order(), rng))) == base);
    }
}

TEST_CASE("forms separate exactly the isomorphism classes (exhaustive n <= 6)") {
    // Compare the partition of labelled graphs induced by canonical_form with
    // the one induced by brute-force minimisation over all relabellings.
    for (int n = 0; n <= 6; ++n) {
        std::map<std::string, std::string> form_to_brute;
        std::set<std::string> brute_classes;
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        bool consistent = true;
        for (std::uint64_t code = 0; code < total; ++code) {
            const auto m = oracle::from_code(n, code);
            const auto brute = oracle::canonical(m);
            const auto form = canonical_form(graph_from_code(n, code));
            auto [it, inserted] = form_to_brute.emplace(form, brute);
            if (!inserted && it->second != brute) consistent = false;
            brute_classes.insert(brute);
        }
        CHECK_MESSAGE(consistent, "n=" << n);
        CHECK_MESSAGE(form_to_brute.size() == brute_classes.size(), "n=" << n);
    }
}

TEST_CASE("class counts at n=7 match the known census") {
    std::set<std::string> forms;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << 21); ++code) forms.insert(canonical_form(graph_from_code(7, code)));
    CHECK(forms.size() == 1044);
}

TEST_CASE("orbits") {
    SmallGraph star = to_small(Graph(4));
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    const auto c = canonical_labeling(star);
    CHECK(c.orbit[0] == 0);
    CHECK(c.orbit[1] == 1);
    CHECK(c.orbit[2] == 1);
    CHECK(c.orbit[3] == 1);

    SmallGraph p4 = to_small(Graph(4));
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    const auto d = canonical_labeling(p4);
    CHECK(d.orbit[3] == 0);
    CHECK(d.orbit[2] == 1);

    const auto e = canonical_labeling(to_small(two_k4_shared_vertex()));
    CHECK(e.orbit[0] == 0);
    for (int v = 1; v < 7; ++v) CHECK(e.orbit[v] == 1);
}

TEST_CASE("colours restrict the isomorphisms") {
    SmallGraph p3 = to_small(Graph(3));
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    const std::array<Mask, 2> end_first{bit(0), bit(1) | bit(2)};
    const std::array<Mask, 2> end_last{bit(2), bit(0) | bit(1)};
    const auto a = canonical_labeling(p3, end_first);
    const auto b = canonical_labeling(p3, end_last);
    CHECK(a.code == b.code);
    CHECK(a.lab[0] == 0);
    CHECK(b.lab[0] == 2);
    CHECK(a.orbit[1] == 1);
    CHECK(a.orbit[2] == 2);
}

TEST_CASE("canonical keys round trip") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 17);
        const auto g = to_small(oracle::graph(oracle::random_graph(n, 0.5, rng)));
        const auto c = canonical_labeling(g);
        CHECK(graph_from_key(n, canon_key(c.code)) == relabel(g, c.lab));
    }
}

TEST_CASE("scale") {
    CHECK_THROWS_AS(canonical_form(Graph(65)), ScaleError);
    CHECK_NOTHROW(canonical_form(Graph(64)));
}

}  // TEST_SUITE
