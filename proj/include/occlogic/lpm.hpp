#ifndef OCCLOGIC_LPM_HPP
#define OCCLOGIC_LPM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "occlogic/base.hpp"
#include "occlogic/common.hpp"
#include "occlogic/kernels.hpp"
#include "occlogic/osem.hpp"
#include "occlogic/relations.hpp"

namespace occlogic {

// Three-valued assignment: each variable carries a nonempty subset of {0,1}
// as a kHas0/kHas1 bit mask. Variables outside the stored domain read {0}.
struct LpmInterpretation {
    std::vector<std::string> vars;   // sorted domain
    std::vector<std::uint8_t> vals;  // masks, aligned with vars

    std::uint8_t value_of(const std::string& var) const;  // {0} if absent
    std::vector<std::string> gluts() const;  // vars valued {0,1}, sorted

    friend bool operator==(const LpmInterpretation&,
                           const LpmInterpretation&) = default;
};

// Value set of the formula: negation flips the bits' meaning
// ({1-v : v ∈ S}), conjunction multiplies ({v*v' : v ∈ S, v' ∈ S'}).
std::uint8_t lpm_eval(const LpmInterpretation& lam, const FormulaPtr& f);

bool lpm_models(const LpmInterpretation& lam, const FormulaPtr& f);  // 1 ∈ set

// Models of the base conjunction over var(b) whose glut sets are
// ⊆-minimal, sorted by value tuple ({0} < {1} < {0,1}).
// Throws CapError when |var(b)| exceeds caps.lpm_vars.
std::vector<LpmInterpretation> minimal_lpm_models(const Base& b,
                                                  const Caps& caps = {},
                                                  Exec exec = Exec::Parallel);

// Every minimal model of the base — extended to query-only variables by all
// crisp ({0} or {1}) values, which minimality can never glut — satisfies
// the query. On failure the counterexample is filled.
bool lpm_entails(const Base& b, const FormulaPtr& query, const Caps& caps = {},
                 Exec exec = Exec::Parallel,
                 LpmInterpretation* counterexample = nullptr);

// Relation with one block per crisp variable and a positive plus a negative
// block per glutted one. Throws std::invalid_argument when lam is not a
// model of the base.
OccRelation mcr_from_lpm(const Base& b, const LpmInterpretation& lam);

// Occurrence view of lam: crisp value everywhere, and for glutted p the
// positive slots read 1, the negative ones 0.
OInterpretation o_interp_from_lpm(const Base& b, const LpmInterpretation& lam);

// Variable view of mu over var(b): p has 1 iff some p-slot reads 1, and 0
// iff some p-slot reads 0.
LpmInterpretation lpm_from_o_interp(const Base& b, const OInterpretation& mu);

}  // namespace occlogic

#endif  // OCCLOGIC_LPM_HPP
