#include "hatp4/graph6.hpp"

#include <algorithm>
#include <cstdint>

#include "hatp4/error.hpp"

namespace hatp4 {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr long kMaxOrder = 258047;

}  // namespace

std::string to_graph6(const Graph& g) {
    const long n = g.order();
    if (n > kMaxOrder) throw ScaleError("graph6: order " + std::to_string(n) + " not representable");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        auto rj = g.row(j);
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (test_bit(rj, i) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view s) {
    std::size_t base = 0;
    if (s.starts_with(kHeader)) {
        s.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);

    auto value = [&](std::size_t i) -> int {
        const int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", base + i);
        return c - 63;
    };

    if (s.empty()) throw ParseError("graph6: empty string", base);

    long n = 0;
    std::size_t pos = 0;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() < 4) throw ParseError("graph6: truncated size prefix", base + s.size());
        if (static_cast<unsigned char>(s[1]) == 126)
            throw ParseError("graph6: 36-bit size prefix not supported", base + 1);
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | value(i);
        if (n <= 62) throw ParseError("graph6: non-minimal size prefix", base);
        pos = 4;
    } else {
        n = value(0);
        pos = 1;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (s.size() - pos != body)
        throw ParseError("graph6: expected " + std::to_string(body) + " data bytes for n=" + std::to_string(n) +
                             ", found " + std::to_string(s.size() - pos),
                         base + std::min(s.size(), pos + body));

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    Vertex i = 0;
    Vertex j = 1;
    for (std::size_t b = 0; b < body; ++b) {
        const int group = value(pos + b);
        for (int t = 5; t >= 0; --t, ++k) {
            const bool bit = (group >> t) & 1;
            if (k >= bits) {
                if (bit) throw ParseError("graph6: nonzero padding bit", base + pos + b);
                continue;
            }
            if (bit) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

}  // namespace hatp4
