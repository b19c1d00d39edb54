#include "hatp4/constructions.hpp"

#include <string>

#include "hatp4/error.hpp"

namespace hatp4 {

ExtremalLayout extremal_layout(int n) {
    if (n < 4) throw PreconditionError("extremal construction needs n >= 4, got " + std::to_string(n));
    const int k = n / 4;
    switch (n % 4) {
        case 0: return {2 * k, 2 * k, true, k};
        case 1: return {2 * k, 2 * k + 1, true, k};
        case 2: return {2 * k, 2 * k + 2, true, k};
        default: return {2 * k + 1, 2 * k + 2, false, k + 1};
    }
}

Graph extremal_construction(int n) {
    const auto layout = extremal_layout(n);
    Graph g(n);
    for (Vertex a = 0; a < layout.part_a; ++a)
        for (Vertex b = layout.part_a; b < n; ++b) g.add_edge(a, b);
    const Vertex first = layout.matching_in_a ? 0 : layout.part_a;
    for (int i = 0; i < layout.matching_edges; ++i) g.add_edge(first + 2 * i, first + 2 * i + 1);
    return g;
}

Graph two_k4_shared_vertex() {
    Graph g(7);
    for (const auto& clique : {std::array<Vertex, 4>{0, 1, 2, 3}, std::array<Vertex, 4>{0, 4, 5, 6}})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) g.add_edge(clique[i], clique[j]);
    return g;
}

std::uint64_t predicted_extremal_value(std::uint64_t n) { return n * n / 8; }

}  // namespace hatp4
