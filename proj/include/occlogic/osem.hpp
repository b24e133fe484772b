#ifndef OCCLOGIC_OSEM_HPP
#define OCCLOGIC_OSEM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "occlogic/base.hpp"
#include "occlogic/common.hpp"
#include "occlogic/relations.hpp"
#include "occlogic/semantics.hpp"

namespace occlogic {

// Truth assignment to occurrence slots rather than variables.
struct OInterpretation {
    std::vector<std::uint8_t> values;  // indexed by slot, each 0 or 1

    auto operator<=>(const OInterpretation&) const = default;
};

// True when assigning each occurrence its own value satisfies the base's
// rewritten conjunction (each slot read as a fresh variable).
bool is_o_model(const Base& b, const OInterpretation& mu);

// Same-variable slot pairs valued differently, canonical (i<j, sorted).
PairList diff_a(const Base& b, const OInterpretation& mu);
// The subset of diff_a whose members pair a positive with a negative slot.
PairList diff_b(const Base& b, const OInterpretation& mu);

// o-models whose diff_a set is ⊆-minimal among all o-models, sorted by
// value tuple. Throws CapError above caps.occurrences.
std::vector<OInterpretation> a_minimal_o_models(const Base& b,
                                                const Caps& caps = {},
                                                Exec exec = Exec::Parallel);
// The a-minimal o-models additionally ⊆-minimal in diff_b against every
// o-model.
std::vector<OInterpretation> b_minimal_o_models(const Base& b,
                                                const Caps& caps = {},
                                                Exec exec = Exec::Parallel);

// Valuations over var(b) ∪ extra_vars where each base variable matches at
// least one of its occurrence values; extra variables range freely.
// Deterministic: variables sorted, value 0 explored before 1.
std::vector<Valuation> compatible_valuations(
    const Base& b, const OInterpretation& mu,
    const std::set<std::string>& extra_vars = {});

// o-interpretations read off the models of the occurrence-renamed base with
// the relation's classes forced equal (cap: bool_vars over the slot count).
std::vector<OInterpretation> om_of(const Base& b, const OccRelation& r,
                                   const Caps& caps = {});

struct OSemCounterexample {
    OInterpretation mu;
    Valuation omega;
};

// ∃-variants: every (a-/b-)minimal o-model admits a compatible valuation
// satisfying the query. ∀-variants: every compatible valuation of every
// minimal o-model satisfies it; on failure the counterexample is filled.
bool infer_a1(const Base& b, const FormulaPtr& query, const Caps& caps = {},
              Exec exec = Exec::Parallel);
bool infer_a2(const Base& b, const FormulaPtr& query, const Caps& caps = {},
              Exec exec = Exec::Parallel,
              OSemCounterexample* counterexample = nullptr);
bool infer_b1(const Base& b, const FormulaPtr& query, const Caps& caps = {},
              Exec exec = Exec::Parallel);
bool infer_b2(const Base& b, const FormulaPtr& query, const Caps& caps = {},
              Exec exec = Exec::Parallel,
              OSemCounterexample* counterexample = nullptr);

}  // namespace occlogic

#endif  // OCCLOGIC_OSEM_HPP
