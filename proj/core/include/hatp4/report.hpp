#pragma once

#include <string>
#include <vector>

#include "hatp4/search.hpp"
#include "hatp4/verify.hpp"

namespace hatp4 {

/// JSON object with exactly the keys n, forbidden, method, max_triangles,
/// floor_n2_8, f, witnesses, nodes_explored, elapsed_ms, exact. With
/// `include_elapsed` false, elapsed_ms is written as 0 so payloads of repeated
/// runs compare byte for byte.
std::string search_report_json(const SearchReport& r, bool include_elapsed = true);

/// JSON array of {lemma_id, universe, checked, failures: [{graph6, detail}]}.
std::string verification_json(const std::vector<VerificationReport>& reports);

/// CSV with header "n,ex,floor,f,method,exact".
std::string f_table_csv(const std::vector<FTableRow>& rows);

}  // namespace hatp4
