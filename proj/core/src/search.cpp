#include "hatp4/search.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <unordered_set>

#include "hatp4/canonical.hpp"
#include "hatp4/constructions.hpp"
#include "hatp4/error.hpp"
#include "hatp4/graph6.hpp"
#include "hatp4/parallel.hpp"
#include "hatp4/small_graph.hpp"

namespace hatp4 {

std::string ForbiddenSet::to_string() const { return k4 ? "p4hat,k4" : "p4hat"; }

ForbiddenSet ForbiddenSet::parse(std::string_view s) {
    ForbiddenSet out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = s.substr(0, comma);
        if (item == "k4") {
            out.k4 = true;
        } else if (item != "p4hat") {
            throw PreconditionError("unknown forbidden pattern '" + std::string(item) + "' (expected p4hat or k4)");
        }
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Naive: return "naive";
        case Method::Augment: return "augment";
        case Method::BranchBound: return "bnb";
    }
    return "?";
}

Method parse_method(std::string_view s) {
    if (s == "naive") return Method::Naive;
    if (s == "augment") return Method::Augment;
    if (s == "bnb") return Method::BranchBound;
    throw PreconditionError("unknown method '" + std::string(s) + "' (expected naive, augment or bnb)");
}

int new_vertex_triangle_cap(int j, ForbiddenSet forbidden) {
    if (j <= 0) return 0;
    if (forbidden.k4) return j - 1;
    return j % 3 == 0 ? j : j - 1;
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(std::optional<double> secs) {
        if (secs) at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*secs));
    }
    bool expired() const { return at_ && Clock::now() >= *at_; }

private:
    std::optional<Clock::time_point> at_;
};

std::chrono::milliseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

bool new_vertex_allowed(const SmallGraph& h, int v, ForbiddenSet forbidden) {
    if (forbidden.k4 && !kernels::vertex_keeps_k4_free(h, v)) return false;
    return kernels::vertex_keeps_p4hat_free(h, v);
}

SmallGraph with_new_vertex(const SmallGraph& g, Mask s) {
    SmallGraph h = g;
    const int v = g.n;
    h.n = g.n + 1;
    h.adj[v] = s;
    for (Mask x = s; x; x &= x - 1) h.adj[std::countr_zero(x)] |= bit(v);
    return h;
}

// Vertices with identical neighbourhoods apart from each other. Swapping two
// twins is an automorphism, so a neighbour set S for a new vertex is
// equivalent to the one with S restricted to the lower twin first.
std::vector<std::pair<int, int>> twin_pairs(const SmallGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w)
            if ((g.adj[u] & ~bit(w)) == (g.adj[w] & ~bit(u))) out.emplace_back(u, w);
    return out;
}

bool respects_twins(Mask s, const std::vector<std::pair<int, int>>& twins) {
    for (auto [u, w] : twins)
        if (((s >> w) & 1U) && !((s >> u) & 1U)) return false;
    return true;
}

// Subsets of {0..m-1} by decreasing size, ties by increasing mask.
const std::vector<Mask>& subsets_rich_first(int m) {
    static const auto table = [] {
        std::array<std::vector<Mask>, kBranchBoundMaxOrder> t;
        for (int k = 0; k < kBranchBoundMaxOrder; ++k) {
            auto& v = t[k];
            v.resize(std::size_t{1} << k);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
            std::stable_sort(v.begin(), v.end(), [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
        }
        return t;
    }();
    return table.at(static_cast<std::size_t>(m));
}

std::string key_to_graph6(int n, const CanonKey& key) { return to_graph6(to_graph(graph_from_key(n, key))); }

std::vector<std::string> keys_to_witnesses(int n, std::vector<CanonKey> keys) {
    std::vector<std::string> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(key_to_graph6(n, k));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_order(int n, int max, std::string_view method) {
    if (n < 0) throw PreconditionError("negative vertex count");
    if (n > max)
        throw ScaleError(std::string(method) + " supports n <= " + std::to_string(max) + ", got n=" + std::to_string(n));
}

// Report used when a search is cut short: the construction's value is a
// certified lower bound.
void fill_partial(SearchReport& r) {
    r.exact = false;
    if (r.n >= 4) {
        r.max_triangles = r.floor_n2_8();
        r.witnesses = {canonical_form(extremal_construction(r.n))};
    } else {
        r.max_triangles = 0;
        r.witnesses = {canonical_form(Graph(r.n))};
    }
}

class ShardedKeySet {
public:
    void insert(const CanonKey& k) {
        auto& shard = shards_[CanonKeyHash{}(k) % kShards];
        std::lock_guard lock(shard.mutex);
        shard.keys.insert(k);
    }
    std::size_t size() {
        std::size_t s = 0;
        for (auto& sh : shards_) {
            std::lock_guard lock(sh.mutex);
            s += sh.keys.size();
        }
        return s;
    }
    std::vector<CanonKey> sorted() {
        std::vector<CanonKey> out;
        for (auto& sh : shards_) {
            out.insert(out.end(), sh.keys.begin(), sh.keys.end());
            std::unordered_set<CanonKey, CanonKeyHash>().swap(sh.keys);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        std::mutex mutex;
        std::unordered_set<CanonKey, CanonKeyHash> keys;
    };
    std::array<Shard, kShards> shards_;
};

struct ClassLevel {
    int n = 0;
    std::vector<CanonKey> keys;  // sorted canonical keys
};

// Extends every class of `level` by one vertex in all ways allowed by the
// forbidden set; returns the new level's classes. `nodes` counts candidate
// extensions examined.
ClassLevel extend_level(const ClassLevel& level, ForbiddenSet forbidden, const SearchOptions& options,
                        std::uint64_t& nodes, const Deadline& deadline, bool& timed_out) {
    ShardedKeySet next;
    std::vector<std::uint64_t> per_parent(level.keys.size(), 0);
    std::atomic<bool> stop{false};
    parallel_for(level.keys.size(), options.threads, [&](std::size_t i) {
        if (stop) return;
        if (deadline.expired()) {
            stop = true;
            return;
        }
        const SmallGraph g = graph_from_key(level.n, level.keys[i]);
        const auto twins = twin_pairs(g);
        std::uint64_t count = 0;
        for (Mask s = 0; s < bit(level.n); ++s) {
            if (!respects_twins(s, twins)) continue;
            ++count;
            const SmallGraph h = with_new_vertex(g, s);
            if (!new_vertex_allowed(h, level.n, forbidden)) continue;
            next.insert(canon_key(canonical_labeling(h).code));
        }
        per_parent[i] = count;
    });
    if (stop) {
        timed_out = true;
        return {};
    }
    for (auto c : per_parent) nodes += c;
    if (next.size() > options.max_level_classes)
        throw ResourceError("augmentation level " + std::to_string(level.n + 1) + " holds more than " +
                                std::to_string(options.max_level_classes) + " classes",
                            level.n + 1);
    return {level.n + 1, next.sorted()};
}

struct FinalBest {
    int triangles = -1;
    std::vector<CanonKey> keys;
};

// Last augmentation step: only extensions reaching the running maximum of
// their parent are canonicalized.
FinalBest extend_to_final(const ClassLevel& level, ForbiddenSet forbidden, const SearchOptions& options,
                          std::uint64_t& nodes, const Deadline& deadline, bool& timed_out) {
    std::vector<FinalBest> per_parent(level.keys.size());
    std::vector<std::uint64_t> per_parent_nodes(level.keys.size(), 0);
    std::atomic<bool> stop{false};
    parallel_for(level.keys.size(), options.threads, [&](std::size_t i) {
        if (stop) return;
        if (deadline.expired()) {
            stop = true;
            return;
        }
        const SmallGraph g = graph_from_key(level.n, level.keys[i]);
        const int base = kernels::triangle_count(g);
        const auto twins = twin_pairs(g);
        FinalBest best;
        std::uint64_t count = 0;
        for (Mask s = 0; s < bit(level.n); ++s) {
            if (!respects_twins(s, twins)) continue;
            ++count;
            const int t = base + kernels::edges_within(g, s);
            if (t < best.triangles) continue;
            const SmallGraph h = with_new_vertex(g, s);
            if (!new_vertex_allowed(h, level.n, forbidden)) continue;
            if (t > best.triangles) {
                best.triangles = t;
                best.keys.clear();
            }
            best.keys.push_back(canon_key(canonical_labeling(h).code));
        }
        per_parent[i] = std::move(best);
        per_parent_nodes[i] = count;
    });
    if (stop) {
        timed_out = true;
        return {};
    }
    FinalBest out;
    for (std::size_t i = 0; i < per_parent.size(); ++i) {
        nodes += per_parent_nodes[i];
        auto& b = per_parent[i];
        if (b.triangles > out.triangles) {
            out.triangles = b.triangles;
            out.keys.clear();
        }
        if (b.triangles == out.triangles) out.keys.insert(out.keys.end(), b.keys.begin(), b.keys.end());
    }
    std::sort(out.keys.begin(), out.keys.end());
    out.keys.erase(std::unique(out.keys.begin(), out.keys.end()), out.keys.end());
    return out;
}

ClassLevel empty_level() { return {0, {CanonKey{}}}; }

// ---------------------------------------------------------------------------
// Branch and bound

class BranchBound {
public:
    BranchBound(int n, ForbiddenSet forbidden, const Deadline& deadline)
        : n_(n), forbidden_(forbidden), deadline_(deadline) {
        tail_cap_.assign(static_cast<std::size_t>(n) + 2, 0);
        for (int j = n - 1; j >= 0; --j) tail_cap_[j] = tail_cap_[j + 1] + new_vertex_triangle_cap(j, forbidden);
    }

    struct Outcome {
        FinalBest best;
        std::uint64_t nodes = 0;
        bool timed_out = false;
    };

    Outcome explore_root(const SmallGraph& root, int incumbent) {
        Outcome out;
        out_ = &out;
        incumbent_ = incumbent;
        dfs(root, kernels::triangle_count(root));
        out_ = nullptr;
        return out;
    }

private:
    int n_;
    ForbiddenSet forbidden_;
    const Deadline& deadline_;
    std::vector<int> tail_cap_;  // tail_cap_[j] = sum of caps for j..n-1
    int incumbent_ = 0;
    Outcome* out_ = nullptr;

    int threshold() const { return std::max(incumbent_, out_->best.triangles); }

    void record(int t, const SmallGraph& h) {
        if (t < threshold()) return;
        if (t > out_->best.triangles) {
            out_->best.triangles = t;
            out_->best.keys.clear();
        }
        out_->best.keys.push_back(canon_key(canonical_labeling(h).code));
    }

    bool tick() {
        ++out_->nodes;
        if ((out_->nodes & 1023) == 0 && deadline_.expired()) out_->timed_out = true;
        return !out_->timed_out;
    }

    void dfs(const SmallGraph& g, int triangles) {
        if (!tick()) return;
        const int m = g.n;
        if (m == n_) {
            record(triangles, g);
            return;
        }
        const int next_cap = std::min(new_vertex_triangle_cap(m, forbidden_), kernels::edge_count(g));
        if (triangles + next_cap + tail_cap_[m + 1] < threshold()) return;

        const auto twins = twin_pairs(g);
        const auto& order = subsets_rich_first(m);

        if (m == n_ - 1) {
            for (Mask s : order) {
                if (!respects_twins(s, twins)) continue;
                if (!tick()) return;
                const int t = triangles + kernels::edges_within(g, s);
                if (t < threshold()) continue;
                const SmallGraph h = with_new_vertex(g, s);
                if (new_vertex_allowed(h, m, forbidden_)) record(t, h);
            }
            return;
        }

        // Canonical augmentation: keep a child only if the new vertex lies in
        // the automorphism orbit of the child's canonically last vertex, so
        // each isomorphism class has exactly one accepted parent class.
        std::set<CanonKey> seen;
        std::vector<std::pair<CanonKey, int>> children;
        for (Mask s : order) {
            if (!respects_twins(s, twins)) continue;
            if (!tick()) return;
            const SmallGraph h = with_new_vertex(g, s);
            if (!new_vertex_allowed(h, m, forbidden_)) continue;
            const auto cl = canonical_labeling(h);
            if (cl.orbit[m] != cl.orbit[cl.lab[m]]) continue;
            const auto key = canon_key(cl.code);
            if (seen.insert(key).second) children.emplace_back(key, triangles + kernels::edges_within(g, s));
        }
        for (const auto& [key, t] : children) {
            dfs(graph_from_key(m + 1, key), t);
            if (out_->timed_out) return;
        }
    }
};

constexpr int kBranchBoundRootLevel = 5;
constexpr std::size_t kBranchBoundBatch = 16;

}  // namespace

SearchReport ex_naive(int n, ForbiddenSet forbidden, const SearchOptions& options) {
    check_order(n, kNaiveMaxOrder, "ex_naive");
    const auto start = Clock::now();
    const Deadline deadline(options.timeout_secs);

    SearchReport r;
    r.n = n;
    r.forbidden = forbidden;
    r.method = Method::Naive;

    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(total, 512));
    struct ChunkBest {
        int triangles = -1;
        std::vector<std::uint64_t> codes;
    };
    std::vector<ChunkBest> best(chunks);
    std::atomic<bool> stop{false};
    parallel_for(chunks, options.threads, [&](std::size_t c) {
        if (stop || deadline.expired()) {
            stop = true;
            return;
        }
        ChunkBest b;
        for (std::uint64_t code = total * c / chunks; code < total * (c + 1) / chunks; ++code) {
            const SmallGraph g = graph_from_code(n, code);
            const int t = kernels::triangle_count(g);
            if (t < b.triangles) continue;
            if (!kernels::is_p4hat_free(g)) continue;
            if (forbidden.k4 && !kernels::is_k4_free(g)) continue;
            if (t > b.triangles) {
                b.triangles = t;
                b.codes.clear();
            }
            b.codes.push_back(code);
        }
        best[c] = std::move(b);
    });
    r.nodes_explored = total;
    if (stop) {
        fill_partial(r);
        r.elapsed = since(start);
        return r;
    }

    int max_t = -1;
    for (const auto& b : best) max_t = std::max(max_t, b.triangles);
    std::set<std::string> forms;
    for (const auto& b : best)
        if (b.triangles == max_t)
            for (auto code : b.codes) forms.insert(canonical_form(graph_from_code(n, code)));
    r.max_triangles = static_cast<std::uint64_t>(max_t);
    r.witnesses.assign(forms.begin(), forms.end());
    r.elapsed = since(start);
    return r;
}

SearchReport ex_augment(int n, ForbiddenSet forbidden, const SearchOptions& options) {
    check_order(n, std::min(options.augment_max_n, kBranchBoundMaxOrder), "ex_augment");
    const auto start = Clock::now();
    const Deadline deadline(options.timeout_secs);

    SearchReport r;
    r.n = n;
    r.forbidden = forbidden;
    r.method = Method::Augment;

    if (n == 0) {
        r.max_triangles = 0;
        r.witnesses = {to_graph6(Graph(0))};
        r.nodes_explored = 1;
        r.elapsed = since(start);
        return r;
    }

    ClassLevel level = empty_level();
    bool timed_out = false;
    while (level.n < n - 1 && !timed_out) level = extend_level(level, forbidden, options, r.nodes_explored, deadline, timed_out);
    FinalBest best;
    if (!timed_out) best = extend_to_final(level, forbidden, options, r.nodes_explored, deadline, timed_out);
    if (timed_out) {
        fill_partial(r);
    } else {
        r.max_triangles = static_cast<std::uint64_t>(best.triangles);
        r.witnesses = keys_to_witnesses(n, best.keys);
    }
    r.elapsed = since(start);
    return r;
}

SearchReport ex_branch_bound(int n, ForbiddenSet forbidden, const SearchOptions& options) {
    check_order(n, kBranchBoundMaxOrder, "ex_branch_bound");
    const auto start = Clock::now();
    const Deadline deadline(options.timeout_secs);

    SearchReport r;
    r.n = n;
    r.forbidden = forbidden;
    r.method = Method::BranchBound;

    const std::uint64_t initial = options.incumbent.value_or(n >= 4 ? predicted_extremal_value(static_cast<std::uint64_t>(n)) : 0);
    int incumbent = static_cast<int>(std::min<std::uint64_t>(initial, 1'000'000));

    // Roots: all classes on min(n, 5) vertices, generated breadth-first.
    ClassLevel roots = empty_level();
    bool timed_out = false;
    const int root_level = std::min(n, kBranchBoundRootLevel);
    while (roots.n < root_level && !timed_out) roots = extend_level(roots, forbidden, options, r.nodes_explored, deadline, timed_out);

    FinalBest overall;
    for (std::size_t first = 0; first < roots.keys.size() && !timed_out; first += kBranchBoundBatch) {
        const std::size_t count = std::min(kBranchBoundBatch, roots.keys.size() - first);
        std::vector<BranchBound::Outcome> outcomes(count);
        parallel_for(count, options.threads, [&](std::size_t i) {
            BranchBound bb(n, forbidden, deadline);
            outcomes[i] = bb.explore_root(graph_from_key(roots.n, roots.keys[first + i]), incumbent);
        });
        // Merge in root order; the incumbent only changes between batches so
        // every root sees the same threshold regardless of scheduling.
        for (auto& o : outcomes) {
            r.nodes_explored += o.nodes;
            timed_out = timed_out || o.timed_out;
            if (o.best.triangles > overall.triangles) {
                overall.triangles = o.best.triangles;
                overall.keys.clear();
            }
            if (o.best.triangles == overall.triangles && o.best.triangles >= 0)
                overall.keys.insert(overall.keys.end(), o.best.keys.begin(), o.best.keys.end());
        }
        incumbent = std::max(incumbent, overall.triangles);
    }

    if (timed_out) {
        fill_partial(r);
    } else if (overall.triangles < 0 || static_cast<std::uint64_t>(overall.triangles) < initial) {
        // Everything was pruned against an incumbent nothing reaches: only
        // the strict upper bound max < incumbent is known.
        r.exact = false;
        r.max_triangles = overall.triangles < 0 ? 0 : static_cast<std::uint64_t>(overall.triangles);
        r.witnesses = keys_to_witnesses(n, overall.keys);
    } else {
        r.max_triangles = static_cast<std::uint64_t>(overall.triangles);
        r.witnesses = keys_to_witnesses(n, overall.keys);
    }
    r.elapsed = since(start);
    return r;
}

SearchReport run_search(Method method, int n, ForbiddenSet forbidden, const SearchOptions& options) {
    switch (method) {
        case Method::Naive: return ex_naive(n, forbidden, options);
        case Method::Augment: return ex_augment(n, forbidden, options);
        case Method::BranchBound: return ex_branch_bound(n, forbidden, options);
    }
    throw PreconditionError("unknown method");
}

Method preferred_method(int n, const SearchOptions& options) {
    return n <= options.augment_max_n ? Method::Augment : Method::BranchBound;
}

std::vector<FTableRow> f_table(int from, int to, ForbiddenSet forbidden, const SearchOptions& options) {
    std::vector<FTableRow> rows;
    for (int n = std::max(from, 0); n <= to; ++n) {
        FTableRow row;
        row.n = n;
        row.floor = predicted_extremal_value(static_cast<std::uint64_t>(n));
        row.method = preferred_method(n, options);
        try {
            const auto rep = run_search(row.method, n, forbidden, options);
            row.ex = rep.max_triangles;
            row.exact = rep.exact;
        } catch (const ScaleError&) {
            row.ex = n >= 4 ? row.floor : 0;
            row.exact = false;
        } catch (const ResourceError&) {
            row.ex = n >= 4 ? row.floor : 0;
            row.exact = false;
        }
        row.f = static_cast<std::int64_t>(row.ex) - static_cast<std::int64_t>(row.floor);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hatp4
