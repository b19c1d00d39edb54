#include "hatp4/small_graph.hpp"

#include <string>

#include "hatp4/error.hpp"

namespace hatp4 {

SmallGraph to_small(const Graph& g) {
    if (g.order() > kSmallMaxOrder)
        throw ScaleError("graph on " + std::to_string(g.order()) + " vertices exceeds the 64-vertex fast path");
    SmallGraph s;
    s.n = g.order();
    for (Vertex u = 0; u < g.order(); ++u) s.adj[u] = g.order() == 0 ? 0 : g.row(u)[0];
    return s;
}

Graph to_graph(const SmallGraph& g) {
    Graph out(g.n);
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u] & ~low_bits(u + 1), [&](int v) { out.add_edge(u, v); });
    return out;
}

SmallGraph graph_from_code(int n, std::uint64_t code) {
    SmallGraph g;
    g.n = n;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1U) g.add_edge(i, j);
    return g;
}

}  // namespace hatp4
