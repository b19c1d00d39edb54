#include "hatp4/report.hpp"

#include <sstream>

#include <json.hpp>

namespace hatp4 {

using nlohmann::ordered_json;

std::string search_report_json(const SearchReport& r, bool include_elapsed) {
    ordered_json j;
    j["n"] = r.n;
    j["forbidden"] = r.forbidden.k4 ? ordered_json::array({"p4hat", "k4"}) : ordered_json::array({"p4hat"});
    j["method"] = std::string(method_name(r.method));
    j["max_triangles"] = r.max_triangles;
    j["floor_n2_8"] = r.floor_n2_8();
    j["f"] = r.f_value();
    j["witnesses"] = r.witnesses;
    j["nodes_explored"] = r.nodes_explored;
    j["elapsed_ms"] = include_elapsed ? r.elapsed.count() : 0;
    j["exact"] = r.exact;
    return j.dump(2) + "\n";
}

std::string verification_json(const std::vector<VerificationReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json j;
        j["lemma_id"] = rep.lemma_id;
        j["universe"] = rep.universe;
        j["checked"] = rep.checked;
        j["failures"] = ordered_json::array();
        for (const auto& f : rep.failures) j["failures"].push_back({{"graph6", f.graph6}, {"detail", f.detail}});
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string f_table_csv(const std::vector<FTableRow>& rows) {
    std::ostringstream os;
    os << "n,ex,floor,f,method,exact\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.ex << ',' << r.floor << ',' << r.f << ',' << method_name(r.method) << ','
           << (r.exact ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace hatp4
