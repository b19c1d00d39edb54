#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hatp4/berge.hpp"
#include "hatp4/constructions.hpp"
#include "hatp4/detect.hpp"
#include "hatp4/error.hpp"
#include "hatp4/graph6.hpp"
#include "hatp4/report.hpp"
#include "hatp4/search.hpp"
#include "hatp4/verify.hpp"

namespace hatp4::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Line {
    std::size_t number = 0;
    std::string text;
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream os;
    if (path.empty() || path == "-") {
        os << in.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw UsageError("cannot open " + path);
        os << f.rdbuf();
    }
    return os.str();
}

// Non-blank lines with their 1-based numbers.
std::vector<Line> read_lines(const std::string& path, std::istream& in) {
    std::vector<Line> out;
    std::istringstream is(read_all(path, in));
    std::string s;
    for (std::size_t n = 1; std::getline(is, s); ++n) {
        if (!s.empty() && s.back() == '\r') s.pop_back();
        if (s.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back({n, s});
    }
    return out;
}

Graph parse_line(const Line& line) {
    try {
        return from_graph6(line.text);
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line.number) + ": " + e.what(), line.number);
    }
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << data;
}

std::string join(const auto& xs) {
    std::string s;
    for (const auto& x : xs) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
    }
    return s;
}

std::string fmt_edge(const Triangle& t) { return "{" + join(t.v) + "}"; }

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::optional<int> n;
    std::string variant = "extremal";
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    if (a.variant == "two-k4") {
        if (a.n && *a.n != 7) throw UsageError("--variant two-k4 has exactly 7 vertices");
        out << to_graph6(two_k4_shared_vertex()) << '\n';
        return kOk;
    }
    if (!a.n) throw UsageError("construct needs --n");
    if (*a.n < 4) throw UsageError("extremal construction needs --n >= 4");
    out << to_graph6(extremal_construction(*a.n)) << '\n';
    return kOk;
}

int cmd_count(const std::string& in_path, std::istream& in, std::ostream& out) {
    for (const auto& line : read_lines(in_path, in)) out << triangle_count(parse_line(line)) << '\n';
    return kOk;
}

struct CheckArgs {
    std::string in_path;
    std::string forbid = "p4hat";
};

int cmd_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
    // Patterns are reported in the order given on the command line.
    std::vector<std::string> patterns;
    std::stringstream ss(a.forbid);
    for (std::string p; std::getline(ss, p, ',');) {
        if (p != "p4hat" && p != "k4") throw UsageError("unknown pattern '" + p + "' (expected p4hat or k4)");
        patterns.push_back(p);
    }
    if (patterns.empty()) throw UsageError("--forbid needs at least one pattern");

    const auto lines = read_lines(a.in_path, in);
    std::vector<Graph> graphs;
    for (const auto& line : lines) graphs.push_back(parse_line(line));

    bool all_free = true;
    for (const auto& g : graphs) {
        std::string verdict = "FREE";
        for (const auto& p : patterns) {
            if (p == "p4hat") {
                if (auto w = find_p4hat(g)) {
                    verdict = "CONTAINS p4hat " + std::to_string(w->apex) + " " + join(w->path);
                    break;
                }
            } else if (auto k = contains_k4(g)) {
                verdict = "CONTAINS k4 " + join(*k);
                break;
            }
        }
        all_free = all_free && verdict == "FREE";
        out << verdict << '\n';
    }
    return all_free ? kOk : kFound;
}

struct BergeArgs {
    bool lift = false;
    bool check = false;
    std::optional<int> max;
    std::string in_path;
    int threads = 0;
};

int cmd_berge(const BergeArgs& a, std::istream& in, std::ostream& out) {
    const int modes = (a.lift ? 1 : 0) + (a.check ? 1 : 0) + (a.max ? 1 : 0);
    if (modes != 1) throw UsageError("berge needs exactly one of --lift, --check, --max");

    if (a.lift) {
        for (const auto& line : read_lines(a.in_path, in)) out << to_text(lift(parse_line(line)));
        return kOk;
    }
    if (a.check) {
        const auto h = parse_hypergraph(read_all(a.in_path, in));
        if (auto w = contains_berge_k3(h)) {
            out << "CONTAINS berge-k3 core " << join(w->core) << " edges " << fmt_edge(w->edges[0]) << ' '
                << fmt_edge(w->edges[1]) << ' ' << fmt_edge(w->edges[2]) << '\n';
            return kFound;
        }
        out << "FREE\n";
        return kOk;
    }
    const auto r = max_berge_k3_free(*a.max, a.threads);
    const auto floor = predicted_extremal_value(static_cast<std::uint64_t>(r.n));
    out << "n=" << r.n << " max_edges=" << r.max_edges << " floor_n2_8=" << floor
        << " equal=" << (static_cast<std::uint64_t>(r.max_edges) == floor ? "true" : "false") << '\n'
        << to_text(r.witness);
    return kOk;
}

struct SearchArgs {
    int n = 0;
    std::string forbid = "p4hat";
    std::string method = "augment";
    int threads = 0;
    std::optional<double> timeout_secs;
    std::optional<std::uint64_t> incumbent;
    int augment_max_n = 10;
    std::string out_path;
};

SearchOptions to_options(int threads, std::optional<double> timeout, int augment_max_n) {
    SearchOptions o;
    o.threads = threads;
    o.timeout_secs = timeout;
    o.augment_max_n = augment_max_n;
    return o;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    auto options = to_options(a.threads, a.timeout_secs, a.augment_max_n);
    options.incumbent = a.incumbent;
    const auto report = run_search(parse_method(a.method), a.n, ForbiddenSet::parse(a.forbid), options);
    if (!a.out_path.empty()) write_file(a.out_path, search_report_json(report));
    out << "n=" << report.n << " forbidden=" << report.forbidden.to_string() << " method=" << method_name(report.method)
        << " max_triangles=" << report.max_triangles << " floor_n2_8=" << report.floor_n2_8() << " f=" << report.f_value()
        << " witnesses=" << report.witnesses.size() << " nodes=" << report.nodes_explored
        << " exact=" << (report.exact ? "true" : "false") << '\n';
    for (const auto& w : report.witnesses) out << w << '\n';
    return report.exact ? kOk : kResource;
}

struct VerifyArgs {
    std::string suite = "paper";
    int max_n = 7;
    std::string report = "text";
    std::string out_path;
    int threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (a.suite != "paper") throw UsageError("unknown suite '" + a.suite + "'");
    const auto reports = run_suite(a.max_n, a.threads);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();

    std::string payload;
    if (a.report == "json") {
        payload = verification_json(reports);
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.passed() ? "PASS " : "FAIL ") << r.lemma_id << " checked=" << r.checked
               << " failures=" << r.failures.size() << '\n';
            for (const auto& f : r.failures) os << "  " << f.graph6 << ' ' << f.detail << '\n';
        }
        payload = os.str();
    }
    if (a.out_path.empty()) {
        out << payload;
    } else {
        write_file(a.out_path, payload);
    }
    return ok ? kOk : kFound;
}

struct TableArgs {
    int from = 0;
    int to = 0;
    std::string out_path;
    std::string forbid = "p4hat";
    int threads = 0;
    std::optional<double> timeout_secs;
    int augment_max_n = 10;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    const auto rows = f_table(a.from, a.to, ForbiddenSet::parse(a.forbid), to_options(a.threads, a.timeout_secs, a.augment_max_n));
    const auto csv = f_table_csv(rows);
    if (a.out_path.empty()) {
        out << csv;
    } else {
        write_file(a.out_path, csv);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation and verification for triangle counts in P4-suspension-free graphs", "hatp4"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* c_construct = app.add_subcommand("construct", "Emit an extremal construction or the two-K4 graph as graph6");
    c_construct->add_option("--n", construct.n, "Number of vertices (>= 4 for the extremal family)");
    c_construct->add_option("--variant", construct.variant, "extremal | two-k4")->check(CLI::IsMember({"extremal", "two-k4"}));

    std::string count_in;
    auto* c_count = app.add_subcommand("count", "Print the triangle count of every graph6 line");
    c_count->add_option("--in", count_in, "Input file (default: stdin)");

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "Test every graph6 line for forbidden patterns");
    c_check->add_option("--in", check.in_path, "Input file (default: stdin)");
    c_check->add_option("--forbid", check.forbid, "Comma-separated subset of p4hat,k4");

    BergeArgs berge;
    auto* c_berge = app.add_subcommand("berge", "Triangle hypergraphs and Berge triangles");
    c_berge->add_flag("--lift", berge.lift, "Print T(G) for every graph6 line");
    c_berge->add_flag("--check", berge.check, "Test a hypergraph (text format) for a Berge triangle");
    c_berge->add_option("--max", berge.max, "Exact largest Berge-triangle-free hypergraph on N <= 6 vertices");
    c_berge->add_option("--in", berge.in_path, "Input file (default: stdin)");
    c_berge->add_option("--threads", berge.threads, "Worker threads (0 = all)");

    SearchArgs search;
    auto* c_search = app.add_subcommand("search", "Exact maximum triangle count over forbidden-pattern-free graphs");
    c_search->add_option("--n", search.n, "Number of vertices")->required();
    c_search->add_option("--forbid", search.forbid, "p4hat or p4hat,k4");
    c_search->add_option("--method", search.method, "naive | augment | bnb")->check(CLI::IsMember({"naive", "augment", "bnb"}));
    c_search->add_option("--threads", search.threads, "Worker threads (0 = all)");
    c_search->add_option("--timeout-secs", search.timeout_secs, "Wall-clock budget");
    c_search->add_option("--incumbent", search.incumbent, "Branch-and-bound starting incumbent");
    c_search->add_option("--augment-max-n", search.augment_max_n, "Largest n accepted by augment");
    c_search->add_option("--out", search.out_path, "Write the JSON report here");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "Run the lemma suite over all small labelled graphs");
    c_verify->add_option("--suite", verify.suite, "Suite name (paper)");
    c_verify->add_option("--max-n", verify.max_n, "Largest order enumerated (<= 7)");
    c_verify->add_option("--report", verify.report, "text | json")->check(CLI::IsMember({"text", "json"}));
    c_verify->add_option("--out", verify.out_path, "Write the report here instead of stdout");
    c_verify->add_option("--threads", verify.threads, "Worker threads (0 = all)");

    TableArgs table;
    auto* c_table = app.add_subcommand("table", "Tabulate ex(n) and f(n) = ex(n) - floor(n^2/8)");
    c_table->add_option("--from", table.from, "First n")->required();
    c_table->add_option("--to", table.to, "Last n")->required();
    c_table->add_option("--out", table.out_path, "CSV output file (default: stdout)");
    c_table->add_option("--forbid", table.forbid, "p4hat or p4hat,k4");
    c_table->add_option("--threads", table.threads, "Worker threads (0 = all)");
    c_table->add_option("--timeout-secs", table.timeout_secs, "Per-row wall-clock budget");
    c_table->add_option("--augment-max-n", table.augment_max_n, "Largest n handled by augment");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*c_construct) return cmd_construct(construct, out);
        if (*c_count) return cmd_count(count_in, in, out);
        if (*c_check) return cmd_check(check, in, out);
        if (*c_berge) return cmd_berge(berge, in, out);
        if (*c_search) return cmd_search(search, out);
        if (*c_verify) return cmd_verify(verify, out);
        if (*c_table) return cmd_table(table, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ScaleError& e) {
        err << "scale error: " << e.what() << '\n';
        return kResource;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << " (level reached " << e.level_reached() << ")\n";
        return kResource;
    }
    return kUsage;
}

}  // namespace hatp4::cli
