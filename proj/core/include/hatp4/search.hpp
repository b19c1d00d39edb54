#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hatp4 {

/// Forbidden subgraphs of a search. The P4 suspension is always forbidden;
/// K4 optionally.
struct ForbiddenSet {
    bool k4 = false;

    static ForbiddenSet p4hat() { return {}; }
    static ForbiddenSet p4hat_k4() { return {true}; }

    /// "p4hat" or "p4hat,k4".
    std::string to_string() const;
    /// Comma-separated list over {p4hat, k4}; p4hat is implied.
    static ForbiddenSet parse(std::string_view s);

    bool operator==(const ForbiddenSet&) const = default;
};

enum class Method { Naive, Augment, BranchBound };

std::string_view method_name(Method m);  // "naive", "augment", "bnb"
Method parse_method(std::string_view s);

struct SearchOptions {
    /// Worker threads; 0 = hardware concurrency. Results do not depend on it.
    int threads = 1;
    /// Wall-clock budget. When exceeded the report is partial (exact = false).
    std::optional<double> timeout_secs;
    /// Branch-and-bound starting incumbent; defaults to floor(n^2/8) for n >= 4.
    std::optional<std::uint64_t> incumbent;
    /// Augmentation aborts with ResourceError when a level holds more classes.
    std::size_t max_level_classes = 40'000'000;
    int augment_max_n = 10;
};

inline constexpr int kNaiveMaxOrder = 7;
inline constexpr int kBranchBoundMaxOrder = 12;

struct SearchReport {
    int n = 0;
    ForbiddenSet forbidden;
    Method method = Method::Naive;
    std::uint64_t max_triangles = 0;
    /// Canonical graph6 strings of extremal graphs, sorted. All three methods
    /// report every isomorphism class attaining the maximum.
    std::vector<std::string> witnesses;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    bool exact = true;

    std::uint64_t floor_n2_8() const { return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) / 8; }
    std::int64_t f_value() const { return static_cast<std::int64_t>(max_triangles) - static_cast<std::int64_t>(floor_n2_8()); }
};

/// Filters all 2^C(n,2) labelled graphs. n <= 7, else ScaleError.
SearchReport ex_naive(int n, ForbiddenSet forbidden, const SearchOptions& options = {});

/// Level-by-level vertex augmentation over isomorphism classes, deduplicated
/// by canonical form. n <= options.augment_max_n, else ScaleError.
SearchReport ex_augment(int n, ForbiddenSet forbidden, const SearchOptions& options = {});

/// Depth-first canonical augmentation with an admissible triangle bound.
/// n <= 12, else ScaleError.
SearchReport ex_branch_bound(int n, ForbiddenSet forbidden, const SearchOptions& options = {});

SearchReport run_search(Method method, int n, ForbiddenSet forbidden, const SearchOptions& options = {});

struct FTableRow {
    int n = 0;
    std::uint64_t ex = 0;
    std::uint64_t floor = 0;
    std::int64_t f = 0;
    Method method = Method::Augment;
    bool exact = true;
};

/// Cheapest exact method for n under the given options (augment within its
/// cap, then branch-and-bound).
Method preferred_method(int n, const SearchOptions& options);

/// One row per n in [from, to] (empty if from > to). Rows beyond every
/// method's scale, or cut by the timeout, carry exact = false and the
/// construction's floor(n^2/8) as a lower bound.
std::vector<FTableRow> f_table(int from, int to, ForbiddenSet forbidden, const SearchOptions& options = {});

/// Admissible bound used by branch-and-bound: most triangles a new vertex can
/// close when joining a graph on j vertices (edges of a P4-free graph on j
/// vertices; with K4 forbidden the neighbourhood is also triangle-free, so a
/// star forest).
int new_vertex_triangle_cap(int j, ForbiddenSet forbidden);

}  // namespace hatp4
