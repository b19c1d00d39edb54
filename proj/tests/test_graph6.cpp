#include <doctest.h>

#include <random>
#include <string>

#include "hatp4/constructions.hpp"
#include "hatp4/error.hpp"
#include "hatp4/graph6.hpp"
#include "oracles.hpp"

using namespace hatp4;

namespace {

// Reference strings produced by an independent graph6 writer (networkx).
const char* const kPath70 =
    "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????"
    "@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????"
    "????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@????"
    "??????C??????????G??????????G??????????C??????????@???????????G";

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

std::size_t parse_offset(const std::string& s) {
    try {
        from_graph6(s);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for '" << s << "'");
    return 0;
}

}  // namespace

TEST_SUITE("graph6") {

TEST_CASE("encoder matches reference strings") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph::complete(3)) == "Bw");
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(to_graph6(extremal_construction(8)) == "G`~vf_");
    CHECK(to_graph6(extremal_construction(11)) == "J?B~~rx}Fo_");
    CHECK(to_graph6(two_k4_shared_vertex()) == "F~aKW");
    CHECK(to_graph6(path(70)) == kPath70);
}

TEST_CASE("decoder inverts the reference strings") {
    CHECK(from_graph6("?") == Graph(0));
    CHECK(from_graph6("Bw") == Graph::complete(3));
    CHECK(from_graph6("F~aKW") == two_k4_shared_vertex());
    CHECK(from_graph6(kPath70) == path(70));
    CHECK(from_graph6(">>graph6<<C~") == Graph::complete(4));
    CHECK(from_graph6("C~\n") == Graph::complete(4));
}

TEST_CASE("round trip") {
    CHECK(from_graph6(to_graph6(extremal_construction(12))) == extremal_construction(12));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = static_cast<int>(rng() % 140);
        const auto g = oracle::graph(oracle::random_graph(n, 0.2 + 0.6 * (trial % 3) / 2.0, rng));
        const auto s = to_graph6(g);
        CHECK(s.size() == (n <= 62 ? 1U : 4U) + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
        for (char c : s) CHECK((c >= 63 && c <= 126));
        CHECK(from_graph6(s) == g);
    }
}

TEST_CASE("malformed input reports the byte offset") {
    CHECK(parse_offset("") == 0);
    CHECK(parse_offset(" w") == 0);          // size byte below 63
    CHECK(parse_offset("B") == 1);           // missing body
    CHECK(parse_offset("Bww") == 2);         // trailing byte
    CHECK(parse_offset("B\x7f") == 1);       // body byte above 126
    CHECK(parse_offset("Bx") == 1);          // padding bits set (x = 57 = 111001)
    CHECK(parse_offset("C~x") == 2);
    CHECK(parse_offset(">>graph6<<") == 10);
    CHECK(parse_offset(">>graph6<<B") == 11);
    CHECK(parse_offset("~??") >= 1);         // truncated long prefix
}

}  // TEST_SUITE
