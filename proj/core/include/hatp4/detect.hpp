#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hatp4/graph.hpp"

namespace hatp4 {

enum class ComponentTag { Star, TriangleComp, Other };

/// A connected component together with its shape. Isolated vertices (K_{1,0})
/// and single edges (K_{1,1}) count as stars.
struct ComponentKind {
    ComponentTag tag = ComponentTag::Other;
    std::vector<Vertex> vertices;  // sorted

    bool operator==(const ComponentKind&) const = default;
};

/// A copy of the suspension of P4: `apex` is adjacent to all four vertices of
/// the path path[0]-path[1]-path[2]-path[3].
struct P4HatWitness {
    Vertex apex = 0;
    std::array<Vertex, 4> path{};

    bool operator==(const P4HatWitness&) const = default;
};

using Path4 = std::array<Vertex, 4>;
using Clique4 = std::array<Vertex, 4>;

// All detectors look for subgraphs, not induced subgraphs, and return the
// least witness: the one whose sorted vertex set is lexicographically
// smallest, then the lexicographically smallest ordered tuple on that set.

/// A path on four distinct vertices u0-u1-u2-u3, if any.
std::optional<Path4> contains_p4(const Graph& g);

/// One entry per connected component, ordered by least vertex.
std::vector<ComponentKind> classify_components(const Graph& g);

/// A copy of the P4 suspension, if any. Detected as a P4 inside some
/// neighbourhood G[N(v)]. Among copies, the one with the smallest sorted
/// 5-vertex set is returned, then the smallest apex.
std::optional<P4HatWitness> find_p4hat(const Graph& g);
bool is_p4hat_free(const Graph& g);

/// A 4-clique, if any (lexicographically least).
std::optional<Clique4> contains_k4(const Graph& g);

/// Number of triangles containing v, i.e. edges inside N(v).
int triangle_degree(const Graph& g, Vertex v);

}  // namespace hatp4
