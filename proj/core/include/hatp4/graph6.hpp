#pragma once

#include <string>
#include <string_view>

#include "hatp4/graph.hpp"

namespace hatp4 {

/// graph6 encoding.
///
/// Size prefix N(n): one byte n+63 when n <= 62; otherwise byte 126 followed by
/// three bytes carrying n as 18 bits (n <= 258047), six bits per byte, each +63.
/// Body: the upper-triangle adjacency bits in column-major order
/// x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ..., padded with zeros to a
/// multiple of six; every 6-bit group (most significant bit first) is written
/// as one byte with value group+63.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Accepts an optional ">>graph6<<" header and a single
/// trailing newline. Throws ParseError carrying the offending byte offset.
Graph from_graph6(std::string_view s);

}  // namespace hatp4
