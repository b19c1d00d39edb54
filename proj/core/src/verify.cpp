#include "hatp4/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "hatp4/constructions.hpp"
#include "hatp4/error.hpp"
#include "hatp4/graph6.hpp"
#include "hatp4/parallel.hpp"
#include "hatp4/small_graph.hpp"

namespace hatp4 {

namespace {

std::string fmt_triangle(const Triangle& t) {
    return "{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," + std::to_string(t.v[2]) + "}";
}

CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

std::vector<Edge> private_edges_of(const Graph& g, const Triangle& t) {
    std::vector<Edge> out;
    for (const Edge e : {Edge(t.v[0], t.v[1]), Edge(t.v[0], t.v[2]), Edge(t.v[1], t.v[2])})
        if (edge_triangle_multiplicity(g, e) == 1) out.push_back(e);
    return out;  // lexicographic, since the three edges are listed in order
}

}  // namespace

CheckResult check_private_edges(const Graph& g) {
    if (contains_k4(g)) throw PreconditionError("check_private_edges: graph contains K4");
    if (!is_p4hat_free(g)) throw PreconditionError("check_private_edges: graph contains the P4 suspension");
    for (const auto& t : triangles(g)) {
        const auto priv = private_edges_of(g, t);
        if (priv.size() < 2)
            return fail("triangle " + fmt_triangle(t) + " has " + std::to_string(priv.size()) + " private edges");
    }
    return {};
}

Graph derive_g_prime(const Graph& g) {
    if (const auto r = check_private_edges(g); !r)
        throw PreconditionError("derive_g_prime: private-edge property fails: " + r.detail);
    Graph out(g.order());
    for (const auto& t : triangles(g)) {
        const auto priv = private_edges_of(g, t);
        out.add_edge(priv[0].u, priv[0].v);
        out.add_edge(priv[1].u, priv[1].v);
    }
    return out;
}

CheckResult check_mantel(const Graph& g) {
    if (triangle_count(g) > 0) return {};
    const auto n = static_cast<std::uint64_t>(g.order());
    const auto e = g.edge_count();
    if (e > n * n / 4)
        return fail("triangle-free with " + std::to_string(e) + " edges > floor(n^2/4) = " + std::to_string(n * n / 4));
    return {};
}

CheckResult check_k4_attachment(const Graph& g, const Clique4& k4) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (k4[i] == k4[j] || !g.has_edge(k4[i], k4[j]))
                throw PreconditionError("check_k4_attachment: vertices do not span a K4");
    if (!is_p4hat_free(g)) throw PreconditionError("check_k4_attachment: graph contains the P4 suspension");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (std::find(k4.begin(), k4.end(), v) != k4.end()) continue;
        int hits = 0;
        for (auto u : k4) hits += g.has_edge(u, v) ? 1 : 0;
        if (hits > 1) return fail("vertex " + std::to_string(v) + " has " + std::to_string(hits) + " neighbours in the K4");
    }
    return {};
}

CheckResult check_triangle_degree_bound(const Graph& g) {
    if (!is_p4hat_free(g)) throw PreconditionError("check_triangle_degree_bound: graph contains the P4 suspension");
    for (Vertex v = 0; v < g.order(); ++v) {
        const int t = triangle_degree(g, v);
        const int d = g.degree(v);
        if (t > d)
            return fail("vertex " + std::to_string(v) + " lies in " + std::to_string(t) + " triangles but has degree " +
                        std::to_string(d));
    }
    return {};
}

namespace {

enum Lemma : std::size_t {
    kUniverseFilters,
    kPrivateEdges,
    kGPrime,
    kMantel,
    kK4Attachment,
    kTriangleDegreeBound,
    kK4FreeBound,
    kLemmaCount
};

constexpr std::array<const char*, kLemmaCount> kLemmaIds = {
    "universe_filters", "private_edges", "g_prime", "mantel", "k4_attachment", "triangle_degree_bound", "k4_free_bound",
};

using Tally = std::array<VerificationReport, kLemmaCount>;

constexpr int kNamedExtremalMax = 20;

void tally(Tally& t, Lemma lemma, const Graph& g, const CheckResult& r) {
    ++t[lemma].checked;
    if (!r) t[lemma].failures.push_back({to_graph6(g), r.detail});
}

std::vector<Clique4> all_k4s(const Graph& g) {
    std::vector<Clique4> out;
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                for (Vertex d = c + 1; d < n; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) out.push_back({a, b, c, d});
            }
        }
    return out;
}

// Runs every applicable lemma on one graph. The class filters use the word
// kernels; the lemma bodies go through the public Graph API.
void check_graph(Tally& t, const Graph& g, bool p4hat_free, bool k4_free) {
    tally(t, kMantel, g, check_mantel(g));
    if (!p4hat_free) return;

    tally(t, kTriangleDegreeBound, g, check_triangle_degree_bound(g));
    if (!k4_free) {
        for (const auto& k4 : all_k4s(g)) tally(t, kK4Attachment, g, check_k4_attachment(g, k4));
        return;
    }

    const auto priv = check_private_edges(g);
    tally(t, kPrivateEdges, g, priv);

    const auto tri = triangle_count(g);
    if (priv) {
        const Graph gp = derive_g_prime(g);
        CheckResult r;
        bool subgraph = true;
        for (const auto& e : gp.edges()) subgraph = subgraph && g.has_edge(e.u, e.v);
        if (gp.edge_count() != 2 * tri)
            r = fail("G' has " + std::to_string(gp.edge_count()) + " edges, expected " + std::to_string(2 * tri));
        else if (triangle_count(gp) != 0)
            r = fail("G' contains a triangle");
        else if (!subgraph)
            r = fail("G' is not a subgraph of G");
        else if (const auto m = check_mantel(gp); !m)
            r = fail("G' violates Mantel: " + m.detail);
        tally(t, kGPrime, g, r);
    }

    const auto bound = predicted_extremal_value(static_cast<std::uint64_t>(g.order()));
    tally(t, kK4FreeBound, g,
          tri <= bound ? CheckResult{}
                       : fail(std::to_string(tri) + " triangles > floor(n^2/8) = " + std::to_string(bound)));
}

void merge(Tally& into, Tally&& from) {
    for (std::size_t i = 0; i < kLemmaCount; ++i) {
        into[i].checked += from[i].checked;
        for (auto& f : from[i].failures) into[i].failures.push_back(std::move(f));
    }
}

}  // namespace

std::vector<VerificationReport> run_suite(int max_n, int threads) {
    if (max_n < 0) throw PreconditionError("run_suite: negative max_n");
    if (max_n > kSuiteMaxOrder)
        throw ScaleError("run_suite enumerates all labelled graphs; max_n=" + std::to_string(max_n) + " exceeds 7");

    Tally total;
    const std::string labelled = "all labelled graphs on 0.." + std::to_string(max_n) + " vertices";
    const std::string named = "extremal constructions n=4.." + std::to_string(kNamedExtremalMax) + ", two K4s sharing a vertex";
    total[kUniverseFilters].universe = "filter sanity on " + named;
    total[kPrivateEdges].universe = labelled + " that are K4-free and P4hat-free; " + named + " (where K4-free)";
    total[kGPrime].universe = total[kPrivateEdges].universe;
    total[kMantel].universe = labelled + " (triangle-free ones constrained); " + named;
    total[kK4Attachment].universe = "every K4 of the P4hat-free " + labelled.substr(4) + "; " + named;
    total[kTriangleDegreeBound].universe = "P4hat-free " + labelled.substr(4) + "; " + named;
    total[kK4FreeBound].universe = total[kPrivateEdges].universe;
    for (std::size_t i = 0; i < kLemmaCount; ++i) total[i].lemma_id = kLemmaIds[i];

    // The hypothesis-class filters must classify the named graphs correctly.
    for (int n = 4; n <= kNamedExtremalMax; ++n) {
        const Graph g = extremal_construction(n);
        const bool ok = is_p4hat_free(g) && !contains_k4(g) && kernels::is_p4hat_free(to_small(g)) &&
                        kernels::is_k4_free(to_small(g));
        tally(total, kUniverseFilters, g, ok ? CheckResult{} : fail("filter rejects the extremal construction"));
    }
    {
        const Graph g = two_k4_shared_vertex();
        const bool ok = is_p4hat_free(g) && contains_k4(g) && kernels::is_p4hat_free(to_small(g)) &&
                        !kernels::is_k4_free(to_small(g));
        tally(total, kUniverseFilters, g, ok ? CheckResult{} : fail("filters misclassify two K4s sharing a vertex"));
    }

    for (int n = 0; n <= max_n; ++n) {
        const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
        constexpr std::uint64_t kChunk = 4096;
        const auto chunks = static_cast<std::size_t>((codes + kChunk - 1) / kChunk);
        std::vector<Tally> partial(chunks);
        parallel_for(chunks, threads, [&](std::size_t c) {
            Tally& t = partial[c];
            const std::uint64_t hi = std::min<std::uint64_t>(codes, (c + 1) * kChunk);
            for (std::uint64_t code = c * kChunk; code < hi; ++code) {
                const SmallGraph sg = graph_from_code(n, code);
                check_graph(t, to_graph(sg), kernels::is_p4hat_free(sg), kernels::is_k4_free(sg));
            }
        });
        for (auto& p : partial) merge(total, std::move(p));
    }

    std::vector<Graph> named_graphs;
    for (int n = 4; n <= kNamedExtremalMax; ++n) named_graphs.push_back(extremal_construction(n));
    named_graphs.push_back(two_k4_shared_vertex());
    for (const auto& g : named_graphs) check_graph(total, g, is_p4hat_free(g), !contains_k4(g));

    return {total.begin(), total.end()};
}

}  // namespace hatp4
