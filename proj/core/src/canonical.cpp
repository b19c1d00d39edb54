#include "hatp4/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "hatp4/error.hpp"
#include "hatp4/graph6.hpp"

namespace hatp4 {

bool AdjacencyCode::operator==(const AdjacencyCode& o) const {
    if (n != o.n) return false;
    const int w = used_words();
    return std::equal(words.begin(), words.begin() + w, o.words.begin());
}

bool AdjacencyCode::operator<(const AdjacencyCode& o) const {
    if (n != o.n) return n < o.n;
    const int w = used_words();
    return std::lexicographical_compare(words.begin(), words.begin() + w, o.words.begin(), o.words.begin() + w);
}

AdjacencyCode adjacency_code(const SmallGraph& g, std::span<const int> lab) {
    AdjacencyCode code;
    code.n = g.n;
    int k = 0;
    for (int j = 1; j < g.n; ++j) {
        const Mask row = g.adj[lab[j]];
        for (int i = 0; i < j; ++i, ++k)
            if ((row >> lab[i]) & 1U) code.words[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
    }
    return code;
}

SmallGraph relabel(const SmallGraph& g, std::span<const int> lab) {
    std::array<int, kSmallMaxOrder> pos{};
    for (int i = 0; i < g.n; ++i) pos[lab[i]] = i;
    SmallGraph h;
    h.n = g.n;
    for (int u = 0; u < g.n; ++u)
        for_each_bit(g.adj[u], [&](int v) { h.adj[pos[u]] |= bit(pos[v]); });
    return h;
}

namespace {

struct Partition {
    std::array<Mask, kSmallMaxOrder> cells{};
    int k = 0;
};

using Perm = std::array<std::uint8_t, kSmallMaxOrder>;

struct UnionFind {
    std::array<int, kSmallMaxOrder> parent{};

    explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent[a] = b;  // the root is always the least element
    }
};

// Splits cells until every cell is equitable with respect to every other:
// all vertices of a cell have the same number of neighbours in each cell.
// Split pieces replace the cell in place, ordered by increasing count, so the
// result depends only on the (graph, ordered partition) pair up to relabelling.
void refine(const SmallGraph& g, Partition& p) {
    std::array<int, kSmallMaxOrder> count{};
restart:
    for (int w = 0; w < p.k; ++w) {
        const Mask splitter = p.cells[w];
        for (int x = 0; x < p.k; ++x) {
            const Mask cell = p.cells[x];
            if ((cell & (cell - 1)) == 0) continue;
            int lo = kSmallMaxOrder;
            int hi = -1;
            for (Mask m = cell; m; m &= m - 1) {
                const int v = std::countr_zero(m);
                const int c = std::popcount(g.adj[v] & splitter);
                count[v] = c;
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            if (lo == hi) continue;

            std::array<Mask, kSmallMaxOrder> pieces{};
            int np = 0;
            for (int c = lo; c <= hi; ++c) {
                Mask piece = 0;
                for (Mask m = cell; m; m &= m - 1) {
                    const int v = std::countr_zero(m);
                    if (count[v] == c) piece |= bit(v);
                }
                if (piece) pieces[np++] = piece;
            }
            for (int i = p.k - 1; i > x; --i) p.cells[i + np - 1] = p.cells[i];
            for (int i = 0; i < np; ++i) p.cells[x + i] = pieces[i];
            p.k += np - 1;
            goto restart;
        }
    }
}

class IrSearch {
public:
    explicit IrSearch(const SmallGraph& g) : g_(g) {}

    void run(const Partition& root) {
        std::array<int, kSmallMaxOrder> prefix{};
        explore(root, prefix, 0);
    }

    CanonicalLabeling result() {
        CanonicalLabeling out;
        out.n = g_.n;
        out.lab = best_lab_;
        out.code = best_code_;
        out.nodes = nodes_;
        UnionFind uf(g_.n);
        for (const auto& a : autos_)
            for (int v = 0; v < g_.n; ++v) uf.unite(v, a[v]);
        for (int v = 0; v < g_.n; ++v) out.orbit[v] = uf.find(v);
        return out;
    }

private:
    const SmallGraph& g_;
    bool have_leaf_ = false;
    std::array<int, kSmallMaxOrder> first_lab_{};
    AdjacencyCode first_code_;
    std::array<int, kSmallMaxOrder> best_lab_{};
    AdjacencyCode best_code_;
    std::vector<Perm> autos_;
    std::uint64_t nodes_ = 0;

    void record_automorphism(const std::array<int, kSmallMaxOrder>& from, const std::array<int, kSmallMaxOrder>& to) {
        Perm p{};
        for (int i = 0; i < g_.n; ++i) p[from[i]] = static_cast<std::uint8_t>(to[i]);
        autos_.push_back(p);
    }

    void leaf(const Partition& p) {
        std::array<int, kSmallMaxOrder> lab{};
        for (int i = 0; i < g_.n; ++i) lab[i] = std::countr_zero(p.cells[i]);
        const AdjacencyCode code = adjacency_code(g_, std::span<const int>(lab.data(), static_cast<std::size_t>(g_.n)));
        if (!have_leaf_) {
            have_leaf_ = true;
            first_lab_ = best_lab_ = lab;
            first_code_ = best_code_ = code;
            return;
        }
        if (code == first_code_) {
            record_automorphism(first_lab_, lab);
        } else if (code == best_code_) {
            record_automorphism(best_lab_, lab);
        } else if (code < best_code_) {
            best_code_ = code;
            best_lab_ = lab;
        }
    }

    // Orbits of the group generated by the automorphisms found so far that fix
    // every vertex of prefix[0..depth).
    UnionFind stabiliser_orbits(const std::array<int, kSmallMaxOrder>& prefix, int depth) const {
        UnionFind uf(g_.n);
        for (const auto& a : autos_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = a[prefix[i]] == prefix[i];
            if (!fixes) continue;
            for (int v = 0; v < g_.n; ++v) uf.unite(v, a[v]);
        }
        return uf;
    }

    void explore(Partition p, std::array<int, kSmallMaxOrder>& prefix, int depth) {
        ++nodes_;
        refine(g_, p);
        if (p.k == g_.n) {
            leaf(p);
            return;
        }
        int target = 0;
        while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
        const Mask cell = p.cells[target];

        Mask explored = 0;
        std::size_t autos_seen = static_cast<std::size_t>(-1);
        UnionFind orbits(g_.n);
        for (Mask m = cell; m; m &= m - 1) {
            const int y = std::countr_zero(m);
            if (explored) {
                if (autos_seen != autos_.size()) {
                    orbits = stabiliser_orbits(prefix, depth);
                    autos_seen = autos_.size();
                }
                bool redundant = false;
                for (Mask e = explored; e && !redundant; e &= e - 1)
                    redundant = orbits.find(std::countr_zero(e)) == orbits.find(y);
                if (redundant) continue;
            }

            Partition child = p;
            for (int i = p.k - 1; i > target; --i) child.cells[i + 1] = p.cells[i];
            child.cells[target] = bit(y);
            child.cells[target + 1] = cell & ~bit(y);
            child.k = p.k + 1;
            prefix[depth] = y;
            explore(child, prefix, depth + 1);
            explored |= bit(y);
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g, std::span<const Mask> colours) {
    if (g.n > kSmallMaxOrder) throw ScaleError("canonical_labeling supports at most 64 vertices");
    CanonicalLabeling out;
    out.n = g.n;
    out.code.n = g.n;
    if (g.n == 0) return out;

    Partition root;
    if (colours.empty()) {
        root.cells[0] = g.vertices();
        root.k = 1;
    } else {
        Mask seen = 0;
        for (Mask c : colours) {
            if (!c) continue;
            if (c & seen || c & ~g.vertices()) throw PreconditionError("colour classes must partition the vertex set");
            seen |= c;
            root.cells[root.k++] = c;
        }
        if (seen != g.vertices()) throw PreconditionError("colour classes must cover every vertex");
    }

    IrSearch search(g);
    search.run(root);
    return search.result();
}

std::string canonical_form(const SmallGraph& g) {
    const auto cl = canonical_labeling(g);
    return to_graph6(to_graph(relabel(g, std::span<const int>(cl.lab.data(), static_cast<std::size_t>(g.n)))));
}

std::string canonical_form(const Graph& g) { return canonical_form(to_small(g)); }

CanonKey canon_key(const AdjacencyCode& code) {
    if (code.n > kCanonKeyMaxOrder) throw ScaleError("CanonKey supports at most 16 vertices");
    return CanonKey{code.words[0], code.words[1]};
}

SmallGraph graph_from_key(int n, const CanonKey& key) {
    SmallGraph g;
    g.n = n;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const std::uint64_t w = k < 64 ? key.hi : key.lo;
            if ((w >> (63 - (k & 63))) & 1U) g.add_edge(i, j);
        }
    return g;
}

}  // namespace hatp4
