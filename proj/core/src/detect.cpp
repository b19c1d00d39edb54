#include "hatp4/detect.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>

namespace hatp4 {

namespace {

using Words = std::vector<std::uint64_t>;

Words and_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    Words out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

void clear_bit(Words& w, int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

// Up to `k` smallest set bits.
std::vector<int> smallest_bits(const Words& w, std::size_t k) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size() && out.size() < k; ++i)
        for (std::uint64_t x = w[i]; x && out.size() < k; x &= x - 1)
            out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
    return out;
}

bool has_p4_within(const Graph& g, std::span<const std::uint64_t> within) {
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for_each_bit(within, [&](int v) { deg[v] = and_popcount(g.row(v), within); });
    bool found = false;
    for_each_bit(within, [&](int x) {
        if (found || deg[x] < 2) return;
        const Words nx = and_words(g.row(x), within);
        for_each_bit(std::span<const std::uint64_t>(nx), [&](int y) {
            if (found || y < x || deg[y] < 2) return;
            if (deg[x] == 2 && deg[y] == 2) {
                // Both ends only see each other and one more vertex: a P4
                // through xy needs that extra vertex to differ.
                Words rest = and_words(nx, g.row(y));
                if (popcount(rest) == 1) return;
            }
            found = true;
        });
    });
    return found;
}

bool is_path(const Graph& g, const Path4& p) {
    return test_bit(g.row(p[0]), p[1]) && test_bit(g.row(p[1]), p[2]) && test_bit(g.row(p[2]), p[3]);
}

// Least P4 inside G[within] (see header for the order).
std::optional<Path4> least_p4_within(const Graph& g, std::span<const std::uint64_t> within) {
    std::optional<Path4> best_set;
    for_each_bit(within, [&](int x) {
        const Words nx = and_words(g.row(x), within);
        if (popcount(nx) < 2) return;
        for_each_bit(std::span<const std::uint64_t>(nx), [&](int y) {
            if (y < x) return;
            Words a = nx;
            clear_bit(a, y);
            Words b = and_words(g.row(y), within);
            clear_bit(b, x);
            for (int u : smallest_bits(a, 2))
                for (int w : smallest_bits(b, 2)) {
                    if (u == w) continue;
                    Path4 s{x, y, u, w};
                    std::sort(s.begin(), s.end());
                    if (!best_set || s < *best_set) best_set = s;
                }
        });
    });
    if (!best_set) return std::nullopt;
    Path4 p = *best_set;
    do {
        if (is_path(g, p)) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;  // unreachable: best_set spans a path
}

}  // namespace

std::optional<Path4> contains_p4(const Graph& g) {
    if (g.order() < 4) return std::nullopt;
    Words all(g.words_per_row(), ~std::uint64_t{0});
    if (g.order() % 64) all.back() = (std::uint64_t{1} << (g.order() % 64)) - 1;
    if (!has_p4_within(g, all)) return std::nullopt;
    return least_p4_within(g, all);
}

std::vector<ComponentKind> classify_components(const Graph& g) {
    std::vector<ComponentKind> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ComponentKind comp;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.vertices.push_back(u);
            for_each_bit(g.row(u), [&](int v) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            });
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());

        const auto size = static_cast<int>(comp.vertices.size());
        int twice_edges = 0;
        int max_degree = 0;
        for (auto u : comp.vertices) {
            const int d = g.degree(u);
            twice_edges += d;
            max_degree = std::max(max_degree, d);
        }
        const int edges = twice_edges / 2;
        if (size == 3 && edges == 3) {
            comp.tag = ComponentTag::TriangleComp;
        } else if (edges == size - 1 && max_degree == size - 1) {
            comp.tag = ComponentTag::Star;
        } else {
            comp.tag = ComponentTag::Other;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_p4hat_free(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 4 && has_p4_within(g, g.row(v))) return false;
    return true;
}

std::optional<P4HatWitness> find_p4hat(const Graph& g) {
    std::optional<P4HatWitness> best;
    std::array<Vertex, 5> best_set{};
    for (Vertex b = 0; b < g.order(); ++b) {
        if (g.degree(b) < 4 || !has_p4_within(g, g.row(b))) continue;
        const auto path = least_p4_within(g, g.row(b));
        std::array<Vertex, 5> set{b, (*path)[0], (*path)[1], (*path)[2], (*path)[3]};
        std::sort(set.begin(), set.end());
        if (!best || set < best_set) {
            best = P4HatWitness{b, *path};
            best_set = set;
        }
    }
    return best;
}

std::optional<Clique4> contains_k4(const Graph& g) {
    for (Vertex a = 0; a < g.order(); ++a) {
        std::optional<Clique4> hit;
        const auto ra = g.row(a);
        for_each_bit(ra, [&](int b) {
            if (hit || b <= a) return;
            const Words ab = and_words(ra, g.row(b));
            for_each_bit(std::span<const std::uint64_t>(ab), [&](int c) {
                if (hit || c <= b) return;
                const Words abc = and_words(ab, g.row(c));
                for_each_bit(std::span<const std::uint64_t>(abc), [&](int d) {
                    if (!hit && d > c) hit = Clique4{a, b, c, d};
                });
            });
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

int triangle_degree(const Graph& g, Vertex v) { return triangles_at(g, v); }

}  // namespace hatp4
