#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hatp4/constructions.hpp"
#include "hatp4/graph6.hpp"
#include "hatp4/report.hpp"
#include "hatp4/search.hpp"

using namespace hatp4;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hatp4_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct") {
    const auto two = run({"construct", "--n", "7", "--variant", "two-k4"});
    CHECK(two.code == cli::kOk);
    CHECK(two.out == to_graph6(two_k4_shared_vertex()) + "\n");

    const auto g8 = run({"construct", "--n", "8"});
    CHECK(g8.code == cli::kOk);
    const auto count = run({"count"}, g8.out);
    CHECK(count.out == "8\n");

    CHECK(run({"construct", "--n", "3"}).code == cli::kUsage);
    CHECK(run({"construct"}).code == cli::kUsage);
    CHECK(run({"construct", "--n", "8", "--variant", "other"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"search"}).code == cli::kUsage);
    CHECK(run({"search", "--n", "5", "--method", "sat"}).code == cli::kUsage);
    CHECK(run({"search", "--n", "5", "--forbid", "c5"}).code == cli::kUsage);
    CHECK(run({"count", "--in", "/nonexistent/file"}).code == cli::kUsage);
}

TEST_CASE("count and check") {
    const auto input = to_graph6(Graph::complete(5)) + "\n" + to_graph6(extremal_construction(10)) + "\n";
    CHECK(run({"count"}, input).out == "10\n12\n");

    const auto free = run({"check", "--forbid", "p4hat,k4"}, to_graph6(extremal_construction(10)) + "\n");
    CHECK(free.code == cli::kOk);
    CHECK(free.out == "FREE\n");

    const auto k5 = run({"check", "--forbid", "p4hat"}, to_graph6(Graph::complete(5)) + "\n");
    CHECK(k5.code == cli::kFound);
    CHECK(k5.out == "CONTAINS p4hat 0 1 2 3 4\n");

    const auto two = run({"check", "--forbid", "p4hat,k4"}, to_graph6(two_k4_shared_vertex()) + "\n");
    CHECK(two.code == cli::kFound);
    CHECK(two.out == "CONTAINS k4 0 1 2 3\n");

    const auto empty = run({"check", "--forbid", "p4hat"}, "");
    CHECK(empty.code == cli::kOk);
    CHECK(empty.out.empty());

    const auto bad = run({"check"}, "C~\n\nC!\n");
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(run({"check", "--forbid", "c4"}, "C~\n").code == cli::kUsage);
}

TEST_CASE("berge") {
    const auto lifted = run({"berge", "--lift"}, "C~\n");
    CHECK(lifted.out == "4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");

    const auto found = run({"berge", "--check"}, "4 3\n0 1 2\n0 1 3\n0 2 3\n");
    CHECK(found.code == cli::kFound);
    CHECK(found.out == "CONTAINS berge-k3 core 0 1 2 edges {0 1 3} {0 1 2} {0 2 3}\n");

    const auto clean = run({"berge", "--check"}, "5 2\n0 1 2\n2 3 4\n");
    CHECK(clean.code == cli::kOk);
    CHECK(clean.out == "FREE\n");

    const auto max = run({"berge", "--max", "4"});
    CHECK(max.code == cli::kOk);
    CHECK(max.out.rfind("n=4 max_edges=2 floor_n2_8=2 equal=true\n", 0) == 0);
    CHECK(run({"berge", "--max", "7"}).code == cli::kResource);
    CHECK(run({"berge", "--check"}, "3 1\n0 1\n").code == cli::kUsage);
}

TEST_CASE("search writes the same JSON as the library") {
    const auto path = scratch("search.json");
    const auto r = run({"search", "--n", "6", "--method", "naive", "--threads", "1", "--out", path.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("n=6 forbidden=p4hat method=naive max_triangles=5", 0) == 0);

    auto direct = ex_naive(6, ForbiddenSet::p4hat());
    const auto written = slurp(path);
    CHECK(written.find("\"witnesses\"") != std::string::npos);
    // Identical apart from the elapsed field.
    auto strip = [](std::string s) {
        const auto at = s.find("\"elapsed_ms\"");
        const auto end = s.find('\n', at);
        return s.erase(at, end - at);
    };
    CHECK(strip(written) == strip(search_report_json(direct)));
    std::filesystem::remove(path);

    CHECK(run({"search", "--n", "8", "--method", "naive"}).code == cli::kResource);
    CHECK(run({"search", "--n", "10", "--method", "bnb", "--timeout-secs", "0"}).code == cli::kResource);
}

TEST_CASE("verify") {
    const auto text = run({"verify", "--suite", "paper", "--max-n", "4"});
    CHECK(text.code == cli::kOk);
    CHECK(text.out.rfind("PASS universe_filters", 0) == 0);

    const auto json = run({"verify", "--suite", "paper", "--max-n", "4", "--report", "json", "--threads", "2"});
    CHECK(json.code == cli::kOk);
    CHECK(json.out == verification_json(run_suite(4)));
    CHECK(run({"verify", "--max-n", "8"}).code == cli::kResource);
    CHECK(run({"verify", "--suite", "other"}).code == cli::kUsage);
}

TEST_CASE("table") {
    const auto t = run({"table", "--from", "4", "--to", "7", "--threads", "1"});
    CHECK(t.code == cli::kOk);
    CHECK(t.out.rfind("n,ex,floor,f,method,exact\n4,4,2,2,augment,true\n", 0) == 0);
    CHECK(t.out.find("\n7,8,6,2,augment,true\n") != std::string::npos);

    const auto empty = run({"table", "--from", "9", "--to", "8"});
    CHECK(empty.code == cli::kOk);
    CHECK(empty.out == "n,ex,floor,f,method,exact\n");

    const auto path = scratch("table.csv");
    CHECK(run({"table", "--from", "4", "--to", "5", "--out", path.string()}).code == cli::kOk);
    CHECK(slurp(path) == "n,ex,floor,f,method,exact\n4,4,2,2,augment,true\n5,4,3,1,augment,true\n");
    std::filesystem::remove(path);
}

}  // TEST_SUITE
