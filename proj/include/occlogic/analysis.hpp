#ifndef OCCLOGIC_ANALYSIS_HPP
#define OCCLOGIC_ANALYSIS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "occlogic/base.hpp"
#include "occlogic/common.hpp"
#include "occlogic/duality.hpp"
#include "occlogic/inference.hpp"
#include "occlogic/lpm.hpp"
#include "occlogic/osem.hpp"
#include "occlogic/relations.hpp"

namespace occlogic {

enum class Relation {
    Classical,
    M1,   // every maximal consistent relation, some tuple
    M2,   // every relation, every tuple
    Mb1,  // M1 over the +/- maximal relations
    Mb2,  // M2 over the +/- maximal relations
    A1,   // every a-minimal o-model, some compatible valuation
    A2,   // every a-minimal o-model, every compatible valuation
    B1,   // b-minimal variants of A1/A2
    B2,
    Lpm,  // minimal three-valued models
};

inline constexpr std::array<Relation, 10> kAllRelations = {
    Relation::Classical, Relation::M1, Relation::M2, Relation::Mb1,
    Relation::Mb2,       Relation::A1, Relation::A2, Relation::B1,
    Relation::B2,        Relation::Lpm};

std::string to_string(Relation r);
std::optional<Relation> relation_from_string(const std::string& name);

struct EntailWitness {
    // ∃-tuple relations, verdict yes: one witness per relation considered.
    std::vector<TupleWitness> tuple_witnesses;
    // ∀-tuple relations, verdict no: the first failing relation/tuple.
    std::optional<TupleWitness> failed_tuple;
    // ∀-valuation o-semantics relations, verdict no: failing model pair.
    std::optional<OSemCounterexample> failed_o_model;
    // three-valued baseline, verdict no: the first failing minimal model.
    std::optional<LpmInterpretation> failed_lpm;
};

// Per-base computation cache: enumerations run once and are shared by every
// query and report built on the same analyzer.
class Analyzer {
  public:
    explicit Analyzer(Base base, Caps caps = {}, Exec exec = Exec::Parallel);

    const Base& base() const { return base_; }
    const Caps& caps() const { return caps_; }

    bool consistent();
    const RelationSurvey& survey();
    const std::vector<std::vector<int>>& omises();
    const std::vector<std::vector<int>>& mises();
    const DualityReport& duality();

    bool entails(Relation rel, const FormulaPtr& query,
                 EntailWitness* witness = nullptr);

  private:
    Base base_;
    Caps caps_;
    Exec exec_;
    std::optional<bool> consistent_;
    std::optional<RelationSurvey> survey_;
    std::optional<std::vector<std::vector<int>>> omises_;
    std::optional<std::vector<std::vector<int>>> mises_;
    std::optional<DualityReport> duality_;
};

}  // namespace occlogic

#endif  // OCCLOGIC_ANALYSIS_HPP
