#include "occlogic/inference.hpp"

#include <algorithm>
#include <stdexcept>

#include "occlogic/semantics.hpp"

namespace occlogic {

namespace {

FormulaPtr rename_core(const FormulaPtr& f,
                       const std::vector<std::string>& slot_name, int& slot) {
    switch (f->conn) {
        case Conn::Var: return Formula::var(slot_name[slot++]);
        case Conn::Not:
            return Formula::negation(rename_core(f->left, slot_name, slot));
        case Conn::And: {
            FormulaPtr l = rename_core(f->left, slot_name, slot);
            return Formula::conj(l, rename_core(f->right, slot_name, slot));
        }
        default: throw std::logic_error("core form expected");
    }
}

ClassRenaming make_renaming(const Base& b, const OccRelation& rel,
                            const std::set<std::string>& avoid) {
    std::set<std::string> forbidden = b.vars();
    forbidden.insert(avoid.begin(), avoid.end());

    // Find the shortest underscore run (at least two) that keeps every
    // generated block name out of the forbidden set.
    std::string sep = "__";
    for (;;) {
        bool clash = false;
        std::size_t vi = 0;
        for (const std::string& var : b.vars()) {
            const auto& blocks = rel.partition()[vi++];
            if (blocks.size() < 2) continue;
            for (std::size_t k = 0; k < blocks.size() && !clash; ++k)
                clash = forbidden.count(var + sep + std::to_string(k + 1)) > 0;
            if (clash) break;
        }
        if (!clash) break;
        sep += '_';
    }

    ClassRenaming r;
    r.slot_name.assign(b.occurrence_count(), "");
    std::size_t vi = 0;
    for (const std::string& var : b.vars()) {
        const auto& blocks = rel.partition()[vi++];
        std::vector<std::string> names;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            std::string name = blocks.size() == 1
                                   ? var
                                   : var + sep + std::to_string(k + 1);
            for (int slot : blocks[k]) r.slot_name[slot] = name;
            names.push_back(std::move(name));
        }
        r.names_per_var.emplace(var, std::move(names));
    }
    int slot = 0;
    for (const FormulaPtr& core : b.core_formulas())
        r.renamed.push_back(rename_core(core, r.slot_name, slot));
    return r;
}

std::vector<std::string> shared_vars(const Base& b, const FormulaPtr& query) {
    std::set<std::string> qv = vars_of(query);
    std::vector<std::string> s;
    for (const std::string& v : b.vars())
        if (qv.count(v)) s.push_back(v);
    return s;  // sorted: b.vars() is ordered
}

// Odometer over the per-position name lists, rightmost position fastest.
bool next_tuple(std::vector<std::size_t>& idx,
                const std::vector<const std::vector<std::string>*>& lists) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < lists[i]->size()) return true;
        idx[i] = 0;
    }
    return false;
}

}  // namespace

ClassRenaming build_renaming(const Base& b, const OccRelation& mcr,
                             const std::set<std::string>& avoid) {
    if (!is_mcr(b, mcr))
        throw std::invalid_argument(
            "relation is not a maximal consistent relation of the base");
    return make_renaming(b, mcr, avoid);
}

namespace {

// Shared driver: for every relation, scan tuples; `need_all` selects the
// ∀-tuple variant.
bool infer_impl(const Base& b, const std::vector<OccRelation>& rels,
                const FormulaPtr& query, bool need_all,
                std::vector<TupleWitness>* witnesses,
                TupleWitness* counterexample) {
    if (witnesses) witnesses->clear();
    const std::set<std::string> qvars = vars_of(query);
    const std::vector<std::string> s = shared_vars(b, query);
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        ClassRenaming rho = make_renaming(b, rels[ri], qvars);
        std::vector<const std::vector<std::string>*> lists;
        lists.reserve(s.size());
        for (const std::string& p : s) lists.push_back(&rho.names_per_var.at(p));
        std::vector<std::size_t> idx(s.size(), 0);
        bool found = false;
        do {
            std::map<std::string, std::string> subst;
            std::vector<std::string> tuple;
            tuple.reserve(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                subst[s[i]] = (*lists[i])[idx[i]];
                tuple.push_back((*lists[i])[idx[i]]);
            }
            bool holds = entails(rho.renamed, {}, substitute(query, subst));
            if (need_all) {
                if (!holds) {
                    if (counterexample)
                        *counterexample = TupleWitness{
                            static_cast<int>(ri), s, std::move(tuple)};
                    return false;
                }
            } else if (holds) {
                if (witnesses)
                    witnesses->push_back(TupleWitness{static_cast<int>(ri), s,
                                                      std::move(tuple)});
                found = true;
                break;
            }
        } while (next_tuple(idx, lists));
        if (!need_all && !found) {
            if (witnesses) witnesses->clear();
            return false;
        }
    }
    return true;
}

}  // namespace

bool infer_exists(const Base& b, const std::vector<OccRelation>& rels,
                  const FormulaPtr& query,
                  std::vector<TupleWitness>* witnesses) {
    return infer_impl(b, rels, query, false, witnesses, nullptr);
}

bool infer_forall(const Base& b, const std::vector<OccRelation>& rels,
                  const FormulaPtr& query, TupleWitness* counterexample) {
    return infer_impl(b, rels, query, true, nullptr, counterexample);
}

}  // namespace occlogic
