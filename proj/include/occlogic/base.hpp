#ifndef OCCLOGIC_BASE_HPP
#define OCCLOGIC_BASE_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "occlogic/formula.hpp"

namespace occlogic {

// One variable occurrence inside a base, identified positionally. Slots are
// counted on the rewritten (Var/Not/And only) formulas, so `a <-> b` yields
// two slots for each side.
struct Occurrence {
    std::string var;
    int formula_index = 0;    // 0-based position of the formula in the base
    int index_in_formula = 1; // 1-based among occurrences of `var` in formula
    int global_ordinal = 1;   // 1-based across the whole base, textual order
    Polarity polarity = Polarity::Positive;

    // "p@f0#2-" reads: variable p, formula 0, its 2nd p, negative position.
    std::string label() const;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Ordered list of formulas plus the derived occurrence table. Formulas keep
// their surface form; occurrence slots and the base conjunction are computed
// on the rewritten core forms.
class Base {
  public:
    Base() = default;
    explicit Base(std::vector<FormulaPtr> formulas);

    const std::vector<FormulaPtr>& formulas() const { return formulas_; }
    const std::vector<FormulaPtr>& core_formulas() const { return core_; }
    const std::vector<Occurrence>& occurrences() const { return occ_; }
    int size() const { return static_cast<int>(formulas_.size()); }
    int occurrence_count() const { return static_cast<int>(occ_.size()); }

    const std::set<std::string>& vars() const { return vars_; }

    // Left-associated conjunction of the core formulas; nullptr when empty.
    FormulaPtr conjunction() const;

    // Sub-base keeping the formulas at the given 0-based indices, in order.
    Base restricted(const std::vector<int>& indices) const;

  private:
    std::vector<FormulaPtr> formulas_;
    std::vector<FormulaPtr> core_;
    std::vector<Occurrence> occ_;
    std::set<std::string> vars_;
};

// Occurrence-separating renaming: slot k (0-based) becomes the fresh variable
// "_o{k+1}". The result reads each variable once, so it is always
// satisfiable; slot k of the result corresponds to base.occurrences()[k].
std::string fresh_occurrence_var(int slot);
Base crename(const Base& base);

// Reads one formula per line; blank lines and '#' comments are skipped.
Base parse_base(std::istream& in);
Base parse_base_text(const std::string& text);
Base parse_base_file(const std::string& path);  // ParseError on bad syntax

}  // namespace occlogic

#endif  // OCCLOGIC_BASE_HPP
