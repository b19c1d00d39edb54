#include "hatp4/berge.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "hatp4/error.hpp"
#include "hatp4/parallel.hpp"

namespace hatp4 {

Hypergraph3::Hypergraph3(int n, std::vector<Triangle> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].v[0] < 0 || edges_[i].v[2] >= n) throw PreconditionError("hyperedge vertex out of range");
        if (i > 0 && edges_[i] == edges_[i - 1]) throw PreconditionError("duplicate hyperedge");
    }
}

Hypergraph3 lift(const Graph& g) { return Hypergraph3(g.order(), triangles(g)); }

bool has_distinct_representatives(std::span<const int> a, std::span<const int> b, std::span<const int> c) {
    auto distinct = [](std::initializer_list<std::span<const int>> sets) {
        std::vector<int> u;
        for (auto s : sets) u.insert(u.end(), s.begin(), s.end());
        std::sort(u.begin(), u.end());
        return static_cast<std::size_t>(std::unique(u.begin(), u.end()) - u.begin());
    };
    return distinct({a}) >= 1 && distinct({b}) >= 1 && distinct({c}) >= 1 && distinct({a, b}) >= 2 &&
           distinct({b, c}) >= 2 && distinct({a, c}) >= 2 && distinct({a, b, c}) >= 3;
}

namespace {

// With three sets, an SDR exists iff one exists using only the three least
// elements of each set (the other two sets block at most two of them), and the
// lexicographically least SDR also lives there.
std::span<const int> first3(const std::vector<int>& v) { return {v.data(), std::min<std::size_t>(3, v.size())}; }

}  // namespace

std::optional<BergeK3Witness> contains_berge_k3(const Hypergraph3& h) {
    const int n = h.order();
    if (h.size() < 3) return std::nullopt;

    std::unordered_map<std::uint64_t, std::vector<int>> links;
    Graph shadow(n);
    auto key = [n](Vertex u, Vertex v) { return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v); };
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& t = h.edges()[i].v;
        for (auto [u, v] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[0], t[2]}}) {
            links[key(u, v)].push_back(static_cast<int>(i));
            shadow.add_edge(u, v);
        }
    }

    std::vector<std::uint64_t> ab(shadow.words_per_row());
    for (Vertex a = 0; a < n; ++a) {
        const auto ra = shadow.row(a);
        for (Vertex b : shadow.neighbors(a)) {
            if (b <= a) continue;
            const auto rb = shadow.row(b);
            for (std::size_t w = 0; w < ab.size(); ++w) ab[w] = ra[w] & rb[w];
            std::optional<BergeK3Witness> hit;
            for_each_bit(std::span<const std::uint64_t>(ab), [&](int c) {
                if (hit || c <= b) return;
                const auto l_ab = first3(links[key(a, b)]);
                const auto l_bc = first3(links[key(b, c)]);
                const auto l_ca = first3(links[key(a, c)]);
                if (!has_distinct_representatives(l_ab, l_bc, l_ca)) return;
                for (int e1 : l_ab)
                    for (int e2 : l_bc)
                        for (int e3 : l_ca)
                            if (!hit && e1 != e2 && e2 != e3 && e1 != e3)
                                hit = BergeK3Witness{{a, b, c}, {h.edges()[e1], h.edges()[e2], h.edges()[e3]}};
            });
            if (hit) return hit;
        }
    }
    return std::nullopt;
}

BergeExtremalResult max_berge_k3_free(int n, int threads) {
    if (n < 0) throw PreconditionError("negative vertex count");
    if (n > kBergeMaxOrder)
        throw ScaleError("max_berge_k3_free enumerates 2^C(n,3) hypergraphs; n=" + std::to_string(n) + " exceeds 6");

    std::vector<Triangle> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) triples.emplace_back(a, b, c);
    const auto m = static_cast<int>(triples.size());

    auto containing = [&](Vertex u, Vertex v) {
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i) {
            const auto& t = triples[i].v;
            if (std::find(t.begin(), t.end(), u) != t.end() && std::find(t.begin(), t.end(), v) != t.end())
                mask |= std::uint32_t{1} << i;
        }
        return mask;
    };
    struct CoreLinks {
        std::uint32_t ab, bc, ca;
    };
    std::vector<CoreLinks> cores;
    for (const auto& t : triples) cores.push_back({containing(t.v[0], t.v[1]), containing(t.v[1], t.v[2]), containing(t.v[0], t.v[2])});

    auto berge_free = [&](std::uint32_t edges) {
        for (const auto& c : cores) {
            const auto a = c.ab & edges;
            const auto b = c.bc & edges;
            const auto d = c.ca & edges;
            if (a && b && d && std::popcount(a | b) >= 2 && std::popcount(b | d) >= 2 && std::popcount(a | d) >= 2 &&
                std::popcount(a | b | d) >= 3)
                return false;
        }
        return true;
    };

    const std::uint64_t total = std::uint64_t{1} << m;
    const std::size_t chunks = std::min<std::uint64_t>(total, 256);
    struct Best {
        int edges = -1;
        std::uint32_t mask = 0;
    };
    std::vector<Best> best(chunks);
    parallel_for(chunks, threads, [&](std::size_t chunk) {
        const std::uint64_t lo = total * chunk / chunks;
        const std::uint64_t hi = total * (chunk + 1) / chunks;
        Best b;
        for (std::uint64_t x = lo; x < hi; ++x) {
            const auto mask = static_cast<std::uint32_t>(x);
            const int e = std::popcount(mask);
            if (e <= b.edges) continue;
            if (berge_free(mask)) b = {e, mask};
        }
        best[chunk] = b;
    });

    Best overall;
    for (const auto& b : best)
        if (b.edges > overall.edges) overall = b;

    std::vector<Triangle> chosen;
    for (int i = 0; i < m; ++i)
        if ((overall.mask >> i) & 1U) chosen.push_back(triples[i]);

    BergeExtremalResult out;
    out.n = n;
    out.max_edges = overall.edges;
    out.witness = Hypergraph3(n, std::move(chosen));
    out.hypergraphs_checked = total;
    return out;
}

std::string to_text(const Hypergraph3& h) {
    std::ostringstream os;
    os << h.order() << ' ' << h.size() << '\n';
    for (const auto& t : h.edges()) os << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
    return os.str();
}

namespace {

std::vector<long> parse_ints(std::string_view line, std::size_t line_no) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        long v = 0;
        auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
        if (ec != std::errc() || v < 0) throw ParseError("hypergraph: expected a non-negative integer", line_no);
        out.push_back(v);
        i = static_cast<std::size_t>(p - line.data());
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            throw ParseError("hypergraph: unexpected character", line_no);
    }
    return out;
}

}  // namespace

Hypergraph3 parse_hypergraph(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    while (!lines.empty() && parse_ints(lines.back(), lines.size()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("hypergraph: missing header line", 1);

    const auto header = parse_ints(lines[0], 1);
    if (header.size() != 2) throw ParseError("hypergraph: header must be \"n m\"", 1);
    const long n = header[0];
    const long m = header[1];
    if (static_cast<long>(lines.size()) - 1 != m)
        throw ParseError("hypergraph: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1),
                         lines.size() + 1);

    std::vector<Triangle> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto v = parse_ints(lines[i], i + 1);
        if (v.size() != 3) throw ParseError("hypergraph: edge line needs three vertices", i + 1);
        if (!(v[0] < v[1] && v[1] < v[2] && v[2] < n))
            throw ParseError("hypergraph: edge must satisfy 0 <= a < b < c < n", i + 1);
        Triangle t(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), static_cast<Vertex>(v[2]));
        if (!edges.empty() && !(edges.back() < t)) throw ParseError("hypergraph: edges must be sorted and distinct", i + 1);
        edges.push_back(t);
    }
    return Hypergraph3(static_cast<int>(n), std::move(edges));
}

}  // namespace hatp4
