#ifndef OCCLOGIC_REPORT_HPP
#define OCCLOGIC_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "occlogic/analysis.hpp"

namespace occlogic {

inline constexpr const char* kReportSchema = "occlogic/1";

// Canonical serializations: stable key order, relations sorted by pair
// list, occurrences by global ordinal. JSON output carries no timing so
// identical inputs serialize byte-identically; wall-clock time appears only
// in the human-readable text.

nlohmann::ordered_json analyze_json(Analyzer& a, bool stats);
std::string analyze_text(Analyzer& a, bool stats,
                         std::optional<double> elapsed_ms);

nlohmann::ordered_json entail_json(Analyzer& a, Relation rel,
                                   const std::string& query_text, bool verdict,
                                   const EntailWitness& witness);
std::string entail_text(Analyzer& a, Relation rel,
                        const std::string& query_text, bool verdict,
                        const EntailWitness& witness,
                        std::optional<double> elapsed_ms);

std::string duality_text(Analyzer& a);

struct CompareRow {
    std::string query_text;
    std::array<bool, kAllRelations.size()> verdicts{};  // kAllRelations order
    std::vector<std::string> violations;  // broken containments, if any
};
// Evaluates each query under all relations and flags any violation of the
// expected containment lattice between them.
std::vector<CompareRow> run_compare(
    Analyzer& a, const std::vector<std::pair<std::string, FormulaPtr>>& queries);
std::string compare_text(const std::vector<CompareRow>& rows);

}  // namespace occlogic

#endif  // OCCLOGIC_REPORT_HPP
