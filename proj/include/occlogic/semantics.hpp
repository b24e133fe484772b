#ifndef OCCLOGIC_SEMANTICS_HPP
#define OCCLOGIC_SEMANTICS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "occlogic/common.hpp"
#include "occlogic/formula.hpp"
#include "occlogic/kernels.hpp"

namespace occlogic {

// Total truth assignment over a finite variable set.
using Valuation = std::map<std::string, bool>;

// Two variables forced to take equal truth values. Compiled away by merging
// the variables into one class before search.
struct EqConstraint {
    std::string a, b;
};

bool evaluate(const FormulaPtr& f, const Valuation& v);

// Satisfiability of conj(formulas) /\ conj(a<->b for the constraints), by
// unit-propagating backtracking over the core forms (no clause conversion).
bool is_consistent(const std::vector<FormulaPtr>& formulas,
                   const std::vector<EqConstraint>& eqs = {});

// Every model of the premises-plus-constraints satisfies the goal.
bool entails(const std::vector<FormulaPtr>& premises,
             const std::vector<EqConstraint>& eqs, const FormulaPtr& goal);

// All models over exactly `vars` (variables free in the formulas but absent
// from `vars` are rejected; extra vars range freely). Output is ordered
// lexicographically: variables in sorted name order, value 0 before 1.
// Throws CapError when |vars| exceeds var_cap.
std::vector<Valuation> enumerate_models(const std::vector<FormulaPtr>& formulas,
                                        const std::vector<EqConstraint>& eqs,
                                        const std::set<std::string>& vars,
                                        int var_cap = Caps{}.bool_vars);

// Backtracking satisfiability of a compiled program whose leaf k reads
// variable leaf_to_var[k] (0-based ids). Shared by the relation scans, where
// "variables" are equivalence classes of occurrences.
bool sat_program(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                 int num_vars);

}  // namespace occlogic

#endif  // OCCLOGIC_SEMANTICS_HPP
