#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hatp4/detect.hpp"
#include "hatp4/graph.hpp"

namespace hatp4 {

/// Outcome of one lemma on one graph. `detail` names the offending
/// triangle / vertex / edge count when the check fails.
struct CheckResult {
    bool pass = true;
    std::string detail;

    explicit operator bool() const { return pass; }
};

// Each check throws PreconditionError when the graph lies outside the lemma's
// hypothesis class; that is not a lemma failure.

/// Requires g K4-free and P4-hat-free. Passes iff every triangle has at least
/// two edges lying in no other triangle.
CheckResult check_private_edges(const Graph& g);

/// For each triangle, its two lexicographically smallest private edges.
/// Requires check_private_edges(g) to pass.
Graph derive_g_prime(const Graph& g);

/// Passes iff g has a triangle or at most floor(n^2/4) edges.
CheckResult check_mantel(const Graph& g);

/// Requires `k4` to span a K4 and g to be P4-hat-free. Passes iff every vertex
/// outside the clique has at most one neighbour in it.
CheckResult check_k4_attachment(const Graph& g, const Clique4& k4);

/// Requires g P4-hat-free. Passes iff each vertex lies in at most deg(v)
/// triangles.
CheckResult check_triangle_degree_bound(const Graph& g);

struct LemmaFailure {
    std::string graph6;
    std::string detail;

    bool operator==(const LemmaFailure&) const = default;
};

struct VerificationReport {
    std::string lemma_id;
    std::string universe;
    std::uint64_t checked = 0;
    std::vector<LemmaFailure> failures;

    bool passed() const { return failures.empty(); }
    bool operator==(const VerificationReport&) const = default;
};

inline constexpr int kSuiteMaxOrder = 7;

/// Runs every lemma over all labelled graphs on 0..max_n vertices (filtered to
/// each lemma's hypothesis class) plus the named constructions. One report per
/// lemma, in a fixed order; the result does not depend on `threads`.
/// Throws ScaleError for max_n > 7.
std::vector<VerificationReport> run_suite(int max_n, int threads = 1);

}  // namespace hatp4
