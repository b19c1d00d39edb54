#pragma once

// Brute-force reference implementations used only by the tests. They work on
// a plain adjacency matrix and enumerate tuples directly, sharing no code with
// the library beyond reading edges out of a Graph.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hatp4/graph.hpp"

namespace oracle {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> a;

    explicit Matrix(int order) : n(order), a(static_cast<std::size_t>(order), std::vector<bool>(static_cast<std::size_t>(order), false)) {}
    bool operator()(int u, int v) const { return a[u][v]; }
    void set(int u, int v) { a[u][v] = a[v][u] = true; }
};

inline Matrix matrix(const hatp4::Graph& g) {
    Matrix m(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) m.set(u, v);
    return m;
}

inline hatp4::Graph graph(const Matrix& m) {
    hatp4::Graph g(m.n);
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (m(u, v)) g.add_edge(u, v);
    return g;
}

/// Labelled graph `code` on n vertices, pairs in graph6 column order.
inline Matrix from_code(int n, std::uint64_t code) {
    Matrix m(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1U) m.set(i, j);
    return m;
}

inline int triangles(const Matrix& m) {
    int c = 0;
    for (int a = 0; a < m.n; ++a)
        for (int b = a + 1; b < m.n; ++b)
            for (int d = b + 1; d < m.n; ++d)
                if (m(a, b) && m(a, d) && m(b, d)) ++c;
    return c;
}

inline int edges(const Matrix& m) {
    int c = 0;
    for (int a = 0; a < m.n; ++a)
        for (int b = a + 1; b < m.n; ++b) c += m(a, b) ? 1 : 0;
    return c;
}

inline bool has_k4(const Matrix& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = a + 1; b < m.n; ++b)
            for (int c = b + 1; c < m.n; ++c)
                for (int d = c + 1; d < m.n; ++d)
                    if (m(a, b) && m(a, c) && m(a, d) && m(b, c) && m(b, d) && m(c, d)) return true;
    return false;
}

/// Every ordered 4-tuple of distinct vertices forming a path, lexicographically.
inline std::vector<std::array<int, 4>> all_p4(const Matrix& m) {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b) {
            if (b == a || !m(a, b)) continue;
            for (int c = 0; c < m.n; ++c) {
                if (c == a || c == b || !m(b, c)) continue;
                for (int d = 0; d < m.n; ++d)
                    if (d != a && d != b && d != c && m(c, d)) out.push_back({a, b, c, d});
            }
        }
    return out;
}

inline bool has_p4(const Matrix& m) { return !all_p4(m).empty(); }

/// The least P4 under (sorted vertex set, ordered tuple).
inline std::optional<std::array<int, 4>> least_p4(const Matrix& m) {
    std::optional<std::array<int, 4>> best;
    std::array<int, 4> best_set{};
    for (const auto& p : all_p4(m)) {
        auto s = p;
        std::sort(s.begin(), s.end());
        if (!best || s < best_set || (s == best_set && p < *best)) {
            best = p;
            best_set = s;
        }
    }
    return best;
}

struct Suspension {
    int apex;
    std::array<int, 4> path;
};

/// All (apex, path) copies of the P4 suspension by enumerating 5-tuples.
inline std::vector<Suspension> all_p4hat(const Matrix& m) {
    std::vector<Suspension> out;
    for (int b = 0; b < m.n; ++b)
        for (const auto& p : all_p4(m)) {
            bool ok = true;
            for (int v : p) ok = ok && v != b && m(b, v);
            if (ok) out.push_back({b, p});
        }
    return out;
}

inline bool has_p4hat(const Matrix& m) {
    for (int b = 0; b < m.n; ++b)
        for (int x = 0; x < m.n; ++x) {
            if (x == b || !m(b, x)) continue;
            for (int a = 0; a < m.n; ++a) {
                if (a == b || a == x || !m(b, a) || !m(x, a)) continue;
                for (int c = 0; c < m.n; ++c) {
                    if (c == b || c == x || c == a || !m(b, c) || !m(a, c)) continue;
                    for (int y = 0; y < m.n; ++y)
                        if (y != b && y != x && y != a && y != c && m(b, y) && m(c, y)) return true;
                }
            }
        }
    return false;
}

/// Least suspension: smallest sorted 5-set, then smallest apex, then the
/// least ordered path.
inline std::optional<Suspension> least_p4hat(const Matrix& m) {
    std::optional<Suspension> best;
    std::array<int, 5> best_set{};
    for (const auto& s : all_p4hat(m)) {
        std::array<int, 5> set{s.apex, s.path[0], s.path[1], s.path[2], s.path[3]};
        std::sort(set.begin(), set.end());
        const bool better = !best || set < best_set || (set == best_set && s.apex < best->apex) ||
                            (set == best_set && s.apex == best->apex && s.path < best->path);
        if (better) {
            best = s;
            best_set = set;
        }
    }
    return best;
}

/// Canonical form by minimizing the graph6-order adjacency string over all
/// n! relabellings.
inline std::string canonical(const Matrix& m) {
    std::vector<int> perm(static_cast<std::size_t>(m.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int j = 1; j < m.n; ++j)
            for (int i = 0; i < j; ++i) s.push_back(m(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

using Triple = std::array<int, 3>;

inline bool contains_pair(const Triple& e, int u, int v) {
    return std::find(e.begin(), e.end(), u) != e.end() && std::find(e.begin(), e.end(), v) != e.end();
}

struct BergeHit {
    Triple core;
    std::array<int, 3> edge_index;
};

/// Least Berge triangle by enumerating cores and ordered triples of distinct
/// hyperedges. `edges` must be sorted.
inline std::optional<BergeHit> least_berge_k3(int n, const std::vector<Triple>& edges) {
    const int m = static_cast<int>(edges.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int i = 0; i < m; ++i) {
                    if (!contains_pair(edges[i], a, b)) continue;
                    for (int j = 0; j < m; ++j) {
                        if (j == i || !contains_pair(edges[j], b, c)) continue;
                        for (int k = 0; k < m; ++k)
                            if (k != i && k != j && contains_pair(edges[k], a, c)) return BergeHit{{a, b, c}, {i, j, k}};
                    }
                }
    return std::nullopt;
}

/// Whether three sets have distinct representatives, by trying every choice.
inline bool sdr_bruteforce(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
    for (int x : a)
        for (int y : b)
            for (int z : c)
                if (x != y && y != z && x != z) return true;
    return false;
}

inline Matrix random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Matrix m(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) m.set(u, v);
    return m;
}

inline hatp4::Graph permuted(const hatp4::Graph& g, const std::vector<int>& perm) {
    hatp4::Graph h(g.order());
    for (const auto& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace oracle
