#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hatp4/graph.hpp"

namespace hatp4 {

/// 3-uniform hypergraph on 0..n-1. Edges are kept sorted and distinct.
class Hypergraph3 {
public:
    Hypergraph3() = default;
    /// Sorts and validates; throws PreconditionError on duplicate or
    /// out-of-range edges.
    Hypergraph3(int n, std::vector<Triangle> edges);

    int order() const noexcept { return n_; }
    const std::vector<Triangle>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }

    bool operator==(const Hypergraph3&) const = default;

private:
    int n_ = 0;
    std::vector<Triangle> edges_;
};

/// Berge triangle: core {a,b,c} with distinct hyperedges
/// edges[0] ⊇ {a,b}, edges[1] ⊇ {b,c}, edges[2] ⊇ {c,a}.
struct BergeK3Witness {
    std::array<Vertex, 3> core{};
    std::array<Triangle, 3> edges{};

    bool operator==(const BergeK3Witness&) const = default;
};

/// T(G): one hyperedge per triangle of g.
Hypergraph3 lift(const Graph& g);

/// Whether three sets admit a system of distinct representatives, decided by
/// Hall's condition (every union of j sets has at least j elements).
bool has_distinct_representatives(std::span<const int> a, std::span<const int> b, std::span<const int> c);

/// Least Berge-K3: cores in lexicographic order, then the lexicographically
/// least assignment of hyperedges to the pairs ab, bc, ca.
std::optional<BergeK3Witness> contains_berge_k3(const Hypergraph3& h);

struct BergeExtremalResult {
    int n = 0;
    int max_edges = 0;
    Hypergraph3 witness;
    std::uint64_t hypergraphs_checked = 0;
};

inline constexpr int kBergeMaxOrder = 6;

/// Largest Berge-K3-free 3-uniform hypergraph on n <= 6 vertices by
/// enumeration of all 2^C(n,3) edge sets. The witness is the maximiser whose
/// edge-subset bitmask (bit i = i-th triple in lexicographic order) is least,
/// independent of `threads`. Throws ScaleError for n > 6.
BergeExtremalResult max_berge_k3_free(int n, int threads = 1);

/// Text format: line 1 "n m", then m lines "a b c" with a < b < c, sorted.
std::string to_text(const Hypergraph3& h);
/// Throws ParseError whose offset is the 1-based line number.
Hypergraph3 parse_hypergraph(std::string_view text);

}  // namespace hatp4
