#ifndef OCCLOGIC_FORMULA_HPP
#define OCCLOGIC_FORMULA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace occlogic {

enum class Conn : std::uint8_t { Var, Not, And, Or, Imp, Iff };

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) {
    return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

inline char polarity_sign(Polarity p) {
    return p == Polarity::Positive ? '+' : '-';
}

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable propositional formula node. Subtrees may be shared between
// formulas; never mutate through the pointer.
class Formula {
  public:
    using Ptr = FormulaPtr;

    const Conn conn;
    const std::string name;  // set iff conn == Var
    const Ptr left;          // operand of Not, left operand otherwise
    const Ptr right;         // unset for Var/Not

    static Ptr var(std::string name);
    static Ptr negation(Ptr f);
    static Ptr conj(Ptr l, Ptr r);
    static Ptr disj(Ptr l, Ptr r);
    static Ptr implies(Ptr l, Ptr r);
    static Ptr iff(Ptr l, Ptr r);

  private:
    Formula(Conn c, std::string n, Ptr l, Ptr r)
        : conn(c), name(std::move(n)), left(std::move(l)), right(std::move(r)) {}
};

// True when the formula uses only Var/Not/And.
bool is_core(const FormulaPtr& f);

// Rewrites Or/Imp/Iff away:
//   a | b    becomes  !(!a & !b)
//   a -> b   becomes  !(a & !b)
//   a <-> b  becomes  !(a & !b) & !(b & !a)
// Note the Iff rule mentions each side twice, so occurrence counts grow.
FormulaPtr desugar(const FormulaPtr& f);

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Renders with minimal parentheses. Precedence: ! > & > | > -> > <->,
// with -> and <-> right associative.
std::string to_string(const FormulaPtr& f);

void collect_vars(const FormulaPtr& f, std::set<std::string>& out);
std::set<std::string> vars_of(const FormulaPtr& f);

// Simultaneous variable renaming.
FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, std::string>& map);

// Replaces the index-th occurrence (1-based, left-to-right) of `var`.
// Throws std::out_of_range when the occurrence does not exist.
FormulaPtr substitute_occurrence(const FormulaPtr& f, const std::string& var,
                                 int index, const FormulaPtr& replacement);

// Visits variable occurrences of a core-form formula left to right with the
// polarity of each (root positive, Not flips, And preserves).
void for_each_occurrence(
    const FormulaPtr& f,
    const std::function<void(const std::string&, Polarity)>& fn);

// Parses one formula. Grammar:
//   atom   := [a-z][a-zA-Z0-9_]*
//   unary  := '!' | '¬'      binary := '&' '∧' | '|' '∨' | '->' '→' | '<->' '↔'
// '#' starts a comment that runs to end of line. Throws ParseError.
FormulaPtr parse_formula(const std::string& text);

// Same, but returns nullptr for a blank/comment-only line and reports the
// given line number in errors.
FormulaPtr parse_line(const std::string& text, int line_no);

}  // namespace occlogic

#endif  // OCCLOGIC_FORMULA_HPP
