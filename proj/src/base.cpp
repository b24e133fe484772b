#include "occlogic/base.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "occlogic/common.hpp"

namespace occlogic {

std::string Occurrence::label() const {
    return var + "@f" + std::to_string(formula_index) + "#" +
           std::to_string(index_in_formula) + polarity_sign(polarity);
}

Base::Base(std::vector<FormulaPtr> formulas) : formulas_(std::move(formulas)) {
    core_.reserve(formulas_.size());
    int ordinal = 0;
    for (int fi = 0; fi < static_cast<int>(formulas_.size()); ++fi) {
        core_.push_back(desugar(formulas_[fi]));
        std::map<std::string, int> per_var;
        for_each_occurrence(core_.back(),
                            [&](const std::string& v, Polarity pol) {
            occ_.push_back(Occurrence{v, fi, ++per_var[v], ++ordinal, pol});
            vars_.insert(v);
        });
    }
}

FormulaPtr Base::conjunction() const {
    FormulaPtr acc;
    for (const FormulaPtr& f : core_)
        acc = acc ? Formula::conj(acc, f) : f;
    return acc;
}

Base Base::restricted(const std::vector<int>& indices) const {
    std::vector<FormulaPtr> kept;
    kept.reserve(indices.size());
    for (int i : indices) kept.push_back(formulas_.at(i));
    return Base(std::move(kept));
}

std::string fresh_occurrence_var(int slot) {
    return "_o" + std::to_string(slot + 1);
}

namespace {

FormulaPtr rename_slots(const FormulaPtr& f, int& next_slot) {
    switch (f->conn) {
        case Conn::Var: return Formula::var(fresh_occurrence_var(next_slot++));
        case Conn::Not: return Formula::negation(rename_slots(f->left, next_slot));
        case Conn::And: {
            FormulaPtr l = rename_slots(f->left, next_slot);
            return Formula::conj(l, rename_slots(f->right, next_slot));
        }
        default: throw std::logic_error("crename requires core form");
    }
}

}  // namespace

Base crename(const Base& base) {
    std::vector<FormulaPtr> renamed;
    renamed.reserve(base.size());
    int slot = 0;
    for (const FormulaPtr& f : base.core_formulas())
        renamed.push_back(rename_slots(f, slot));
    return Base(std::move(renamed));
}

Base parse_base(std::istream& in) {
    std::vector<FormulaPtr> formulas;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (FormulaPtr f = parse_line(line, line_no)) formulas.push_back(f);
    }
    return Base(std::move(formulas));
}

Base parse_base_text(const std::string& text) {
    std::istringstream in(text);
    return parse_base(in);
}

Base parse_base_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse_base(in);
}

}  // namespace occlogic
