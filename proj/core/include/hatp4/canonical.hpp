#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "hatp4/graph.hpp"
#include "hatp4/small_graph.hpp"

namespace hatp4 {

/// Adjacency bit-string of a relabelled graph in graph6 column order, packed
/// most-significant-bit first so that word-wise comparison is lexicographic.
struct AdjacencyCode {
    static constexpr int kWords = 32;  // C(64,2) bits
    std::array<std::uint64_t, kWords> words{};
    int n = 0;

    int used_words() const { return static_cast<int>((static_cast<long>(n) * (n - 1) / 2 + 63) / 64); }

    bool operator==(const AdjacencyCode& o) const;
    bool operator<(const AdjacencyCode& o) const;
};

AdjacencyCode adjacency_code(const SmallGraph& g, std::span<const int> lab);

/// Result of canonically labelling a small graph.
struct CanonicalLabeling {
    int n = 0;
    /// lab[i] is the original vertex placed at canonical position i.
    std::array<int, kSmallMaxOrder> lab{};
    /// orbit[v] is the least vertex in v's orbit under the automorphism group
    /// (of the graph together with its initial colouring).
    std::array<int, kSmallMaxOrder> orbit{};
    AdjacencyCode code;
    /// Search-tree nodes visited.
    std::uint64_t nodes = 0;
};

/// Canonical labelling by individualization-refinement.
///
/// `colours` is an optional ordered partition of the vertex set (as masks);
/// isomorphisms are then required to map each colour class onto itself. Among
/// the leaves of the search tree the one with the smallest adjacency code is
/// chosen; subtrees that are images of explored ones under automorphisms found
/// so far are skipped, and the automorphisms found generate the full group.
CanonicalLabeling canonical_labeling(const SmallGraph& g, std::span<const Mask> colours = {});

/// g relabelled so that lab[i] becomes vertex i.
SmallGraph relabel(const SmallGraph& g, std::span<const int> lab);

/// graph6 string of the canonically relabelled graph. Identical for all
/// relabellings of g. Throws ScaleError for n > 64.
std::string canonical_form(const Graph& g);
std::string canonical_form(const SmallGraph& g);

/// Compact canonical key for graphs with n <= 16 (C(16,2) = 120 bits).
struct CanonKey {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    auto operator<=>(const CanonKey&) const = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const noexcept {
        std::uint64_t h = k.hi * 0x9E3779B97F4A7C15ULL ^ (k.lo + 0x632BE59BD9B4E019ULL + (k.hi << 6));
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ULL;
        h ^= h >> 27;
        return static_cast<std::size_t>(h);
    }
};

inline constexpr int kCanonKeyMaxOrder = 16;

CanonKey canon_key(const AdjacencyCode& code);
/// Rebuilds the (canonically labelled) graph encoded by a key.
SmallGraph graph_from_key(int n, const CanonKey& key);

}  // namespace hatp4
