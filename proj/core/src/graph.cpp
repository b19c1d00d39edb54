#include "hatp4/graph.hpp"

#include <algorithm>
#include <string>

#include "hatp4/error.hpp"

namespace hatp4 {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw PreconditionError("edge endpoints must differ");
}

Triangle::Triangle(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw PreconditionError("triangle vertices must be distinct");
}

Graph::Graph(int n) : n_(n), stride_(static_cast<std::size_t>((n + 63) / 64)) {
    if (n < 0) throw PreconditionError("negative vertex count");
    bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(Vertex u) const {
    if (u < 0 || u >= n_)
        throw PreconditionError("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * stride_ + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * stride_ + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * stride_ + (static_cast<std::size_t>(v) >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<std::size_t>(v) * stride_ + (static_cast<std::size_t>(u) >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return test_bit(row(u), v);
}

int Graph::degree(Vertex u) const {
    check_vertex(u);
    return popcount(row(u));
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
    check_vertex(u);
    std::vector<Vertex> out;
    for_each_bit(row(u), [&](int v) { out.push_back(v); });
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (Vertex u = 0; u < n_; ++u) twice += static_cast<std::size_t>(popcount(row(u)));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for_each_bit(row(u), [&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

std::vector<Triangle> triangles(const Graph& g) {
    std::vector<Triangle> out;
    std::vector<std::uint64_t> common(g.words_per_row());
    for (Vertex a = 0; a < g.order(); ++a) {
        auto ra = g.row(a);
        for_each_bit(ra, [&](int b) {
            if (b <= a) return;
            auto rb = g.row(b);
            for (std::size_t w = 0; w < common.size(); ++w) common[w] = ra[w] & rb[w];
            for_each_bit(std::span<const std::uint64_t>(common), [&](int c) {
                if (c > b) out.push_back(Triangle{a, b, c});
            });
        });
    }
    return out;
}

std::uint64_t triangle_count(const Graph& g) {
    std::uint64_t sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto ru = g.row(u);
        for_each_bit(ru, [&](int v) {
            if (v > u) sum += static_cast<std::uint64_t>(and_popcount(ru, g.row(v)));
        });
    }
    return sum / 3;
}

int edge_triangle_multiplicity(const Graph& g, const Edge& e) {
    if (!g.has_edge(e.u, e.v))
        throw PreconditionError("{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    return and_popcount(g.row(e.u), g.row(e.v));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<Vertex> keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (auto v : keep)
        if (v < 0 || v >= g.order())
            throw PreconditionError("induced_subgraph: vertex " + std::to_string(v) + " out of range");

    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (test_bit(g.row(keep[i]), keep[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return h;
}

int triangles_at(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    auto rv = g.row(v);
    int twice = 0;
    for_each_bit(rv, [&](int u) { twice += and_popcount(rv, g.row(u)); });
    return twice / 2;
}

}  // namespace hatp4
