#include "occlogic/analysis.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "occlogic/semantics.hpp"

namespace occlogic {

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Classical: return "classical";
        case Relation::M1: return "m1";
        case Relation::M2: return "m2";
        case Relation::Mb1: return "mb1";
        case Relation::Mb2: return "mb2";
        case Relation::A1: return "a1";
        case Relation::A2: return "a2";
        case Relation::B1: return "b1";
        case Relation::B2: return "b2";
        case Relation::Lpm: return "lpm";
    }
    return "?";
}

std::optional<Relation> relation_from_string(const std::string& name) {
    for (Relation r : kAllRelations)
        if (to_string(r) == name) return r;
    return std::nullopt;
}

Analyzer::Analyzer(Base base, Caps caps, Exec exec)
    : base_(std::move(base)), caps_(caps), exec_(exec) {}

bool Analyzer::consistent() {
    if (!consistent_) consistent_ = is_consistent(base_.core_formulas());
    return *consistent_;
}

const RelationSurvey& Analyzer::survey() {
    if (!survey_) survey_ = survey_relations(base_, caps_);
    return *survey_;
}

const std::vector<std::vector<int>>& Analyzer::omises() {
    if (!omises_) {
        std::set<std::vector<int>> distinct;
        for (const OccRelation& mir : survey().mirs)
            distinct.insert(omis_of(base_, mir));
        std::vector<std::vector<int>> out(distinct.begin(), distinct.end());
        std::sort(out.begin(), out.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.size() != b.size() ? a.size() < b.size()
                                                  : a < b;
                  });
        omises_ = std::move(out);
    }
    return *omises_;
}

const std::vector<std::vector<int>>& Analyzer::mises() {
    if (!mises_) mises_ = enumerate_mises(base_, caps_);
    return *mises_;
}

const DualityReport& Analyzer::duality() {
    if (!duality_) duality_ = verify_duality(base_, caps_);
    return *duality_;
}

bool Analyzer::entails(Relation rel, const FormulaPtr& query,
                       EntailWitness* witness) {
    if (witness) *witness = EntailWitness{};
    switch (rel) {
        case Relation::Classical:
            return occlogic::entails(base_.core_formulas(), {}, query);
        case Relation::M1:
            return infer_exists(base_, survey().mcrs, query,
                                witness ? &witness->tuple_witnesses : nullptr);
        case Relation::Mb1:
            return infer_exists(base_, survey().bmcrs, query,
                                witness ? &witness->tuple_witnesses : nullptr);
        case Relation::M2:
        case Relation::Mb2: {
            const auto& rels = rel == Relation::M2 ? survey().mcrs
                                                   : survey().bmcrs;
            TupleWitness cex;
            bool ok = infer_forall(base_, rels, query, &cex);
            if (!ok && witness) witness->failed_tuple = std::move(cex);
            return ok;
        }
        case Relation::A1:
            return infer_a1(base_, query, caps_, exec_);
        case Relation::B1:
            return infer_b1(base_, query, caps_, exec_);
        case Relation::A2:
        case Relation::B2: {
            OSemCounterexample cex;
            bool ok = rel == Relation::A2
                          ? infer_a2(base_, query, caps_, exec_, &cex)
                          : infer_b2(base_, query, caps_, exec_, &cex);
            if (!ok && witness) witness->failed_o_model = std::move(cex);
            return ok;
        }
        case Relation::Lpm: {
            LpmInterpretation cex;
            bool ok = lpm_entails(base_, query, caps_, exec_, &cex);
            if (!ok && witness) witness->failed_lpm = std::move(cex);
            return ok;
        }
    }
    return false;
}

}  // namespace occlogic
