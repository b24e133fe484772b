#include "occlogic/osem.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "occlogic/kernels.hpp"

namespace occlogic {

namespace {

void check_size(const Base& b, const OInterpretation& mu) {
    if (static_cast<int>(mu.values.size()) != b.occurrence_count())
        throw std::invalid_argument(
            "interpretation size does not match the occurrence count");
}

bool eval_slots(const FormulaPtr& f, const std::vector<std::uint8_t>& vals,
                int& slot) {
    switch (f->conn) {
        case Conn::Var: return vals[slot++] != 0;
        case Conn::Not: return !eval_slots(f->left, vals, slot);
        case Conn::And: {
            // Evaluate both sides unconditionally so the slot counter stays
            // aligned with the occurrence table.
            bool l = eval_slots(f->left, vals, slot);
            bool r = eval_slots(f->right, vals, slot);
            return l && r;
        }
        default: throw std::logic_error("core form expected");
    }
}

// Slots of each variable in ascending order, keyed by variable name.
std::map<std::string, std::vector<int>> slots_by_name(const Base& b) {
    std::map<std::string, std::vector<int>> m;
    const auto& occ = b.occurrences();
    for (std::size_t k = 0; k < occ.size(); ++k)
        m[occ[k].var].push_back(static_cast<int>(k));
    return m;
}

PairList diff_pairs(const Base& b, const OInterpretation& mu,
                    bool polarity_must_differ) {
    check_size(b, mu);
    PairList out;
    const auto& occ = b.occurrences();
    for (const auto& [var, slots] : slots_by_name(b)) {
        for (std::size_t x = 0; x < slots.size(); ++x)
            for (std::size_t y = x + 1; y < slots.size(); ++y) {
                int i = slots[x], j = slots[y];
                if (mu.values[i] == mu.values[j]) continue;
                if (polarity_must_differ &&
                    occ[i].polarity == occ[j].polarity)
                    continue;
                out.emplace_back(i, j);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Keeps only the ⊆-minimal members seen so far.
class ProfileAntichain {
  public:
    void add(PairList p) {
        for (const PairList& q : members_)
            if (std::includes(p.begin(), p.end(), q.begin(), q.end()))
                return;  // something at most as small is already in
        std::erase_if(members_, [&](const PairList& q) {
            return std::includes(q.begin(), q.end(), p.begin(), p.end());
        });
        members_.push_back(std::move(p));
    }

    bool contains(const PairList& p) const {
        return std::find(members_.begin(), members_.end(), p) !=
               members_.end();
    }

  private:
    std::vector<PairList> members_;
};

struct OModelScan {
    EvalProgram prog;
    std::vector<std::uint64_t> bitmap;
    int n = 0;
};

OModelScan scan_o_models(const Base& b, const Caps& caps, Exec exec) {
    OModelScan s;
    s.n = b.occurrence_count();
    if (s.n > caps.occurrences)
        throw CapError("occurrence count " + std::to_string(s.n) +
                       " exceeds cap " + std::to_string(caps.occurrences));
    s.prog = compile_conjunction(b.core_formulas());
    std::vector<int> identity(s.n);
    for (int k = 0; k < s.n; ++k) identity[k] = k;
    s.bitmap = model_bitmap(s.prog, identity, s.n, exec);
    return s;
}

OInterpretation interp_of(std::uint64_t index, int n) {
    OInterpretation mu;
    mu.values.resize(n);
    for (int k = 0; k < n; ++k)
        mu.values[k] = static_cast<std::uint8_t>((index >> k) & 1u);
    return mu;
}

template <typename Fn>
void for_each_set_bit(const std::vector<std::uint64_t>& bitmap, Fn&& fn) {
    for (std::size_t w = 0; w < bitmap.size(); ++w) {
        std::uint64_t word = bitmap[w];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            fn(static_cast<std::uint64_t>(w) * 64 + bit);
        }
    }
}

std::vector<OInterpretation> minimal_models(const Base& b, const Caps& caps,
                                            Exec exec, bool b_variant) {
    OModelScan s = scan_o_models(b, caps, exec);

    ProfileAntichain min_a;
    ProfileAntichain min_b_all;  // diff_b minimality ranges over all o-models
    for_each_set_bit(s.bitmap, [&](std::uint64_t i) {
        OInterpretation mu = interp_of(i, s.n);
        min_a.add(diff_a(b, mu));
        if (b_variant) min_b_all.add(diff_b(b, mu));
    });

    std::vector<OInterpretation> out;
    for_each_set_bit(s.bitmap, [&](std::uint64_t i) {
        OInterpretation mu = interp_of(i, s.n);
        if (!min_a.contains(diff_a(b, mu))) return;
        if (b_variant && !min_b_all.contains(diff_b(b, mu))) return;
        out.push_back(std::move(mu));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ∃- or ∀-valuation check over the minimal o-models.
bool infer_osem(const Base& b, const FormulaPtr& query, const Caps& caps,
                Exec exec, bool b_variant, bool need_all,
                OSemCounterexample* counterexample) {
    std::set<std::string> extra;
    for (const std::string& v : vars_of(query))
        if (!b.vars().count(v)) extra.insert(v);
    const std::vector<OInterpretation> mins =
        b_variant ? b_minimal_o_models(b, caps, exec)
                  : a_minimal_o_models(b, caps, exec);
    for (const OInterpretation& mu : mins) {
        bool any = false;
        for (const Valuation& omega : compatible_valuations(b, mu, extra)) {
            bool holds = evaluate(query, omega);
            if (need_all && !holds) {
                if (counterexample) *counterexample = {mu, omega};
                return false;
            }
            if (holds) {
                any = true;
                if (!need_all) break;
            }
        }
        if (!need_all && !any) return false;
    }
    return true;
}

}  // namespace

bool is_o_model(const Base& b, const OInterpretation& mu) {
    check_size(b, mu);
    int slot = 0;
    for (const FormulaPtr& core : b.core_formulas())
        if (!eval_slots(core, mu.values, slot)) {
            return false;
        }
    return true;
}

PairList diff_a(const Base& b, const OInterpretation& mu) {
    return diff_pairs(b, mu, false);
}

PairList diff_b(const Base& b, const OInterpretation& mu) {
    return diff_pairs(b, mu, true);
}

std::vector<OInterpretation> a_minimal_o_models(const Base& b,
                                                const Caps& caps, Exec exec) {
    return minimal_models(b, caps, exec, false);
}

std::vector<OInterpretation> b_minimal_o_models(const Base& b,
                                                const Caps& caps, Exec exec) {
    return minimal_models(b, caps, exec, true);
}

std::vector<Valuation> compatible_valuations(
    const Base& b, const OInterpretation& mu,
    const std::set<std::string>& extra_vars) {
    check_size(b, mu);
    std::set<std::string> domain = b.vars();
    domain.insert(extra_vars.begin(), extra_vars.end());

    const auto by_name = slots_by_name(b);
    std::vector<std::string> names(domain.begin(), domain.end());
    std::vector<std::vector<bool>> choices;
    for (const std::string& v : names) {
        auto it = by_name.find(v);
        if (it == by_name.end()) {
            choices.push_back({false, true});
            continue;
        }
        bool has0 = false, has1 = false;
        for (int slot : it->second) (mu.values[slot] ? has1 : has0) = true;
        std::vector<bool> c;
        if (has0) c.push_back(false);
        if (has1) c.push_back(true);
        choices.push_back(std::move(c));
    }

    std::vector<Valuation> out;
    std::vector<std::size_t> idx(names.size(), 0);
    for (;;) {
        Valuation v;
        for (std::size_t i = 0; i < names.size(); ++i)
            v[names[i]] = choices[i][idx[i]];
        out.push_back(std::move(v));
        std::size_t i = names.size();
        while (i-- > 0) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (names.empty()) return out;
    }
}

std::vector<OInterpretation> om_of(const Base& b, const OccRelation& r,
                                   const Caps& caps) {
    if (r.slot_count() != b.occurrence_count())
        throw std::invalid_argument(
            "relation slot count does not match the base");
    const int n = b.occurrence_count();
    Base renamed = crename(b);
    std::vector<EqConstraint> eqs;
    for (const auto& block : r.blocks())
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            eqs.push_back({fresh_occurrence_var(block[i]),
                           fresh_occurrence_var(block[i + 1])});
    std::set<std::string> vars;
    for (int k = 0; k < n; ++k) vars.insert(fresh_occurrence_var(k));

    std::vector<OInterpretation> out;
    for (const Valuation& omega :
         enumerate_models(renamed.core_formulas(), eqs, vars,
                          caps.bool_vars)) {
        OInterpretation mu;
        mu.values.resize(n);
        for (int k = 0; k < n; ++k)
            mu.values[k] = omega.at(fresh_occurrence_var(k)) ? 1 : 0;
        out.push_back(std::move(mu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool infer_a1(const Base& b, const FormulaPtr& query, const Caps& caps,
              Exec exec) {
    return infer_osem(b, query, caps, exec, false, false, nullptr);
}

bool infer_a2(const Base& b, const FormulaPtr& query, const Caps& caps,
              Exec exec, OSemCounterexample* counterexample) {
    return infer_osem(b, query, caps, exec, false, true, counterexample);
}

bool infer_b1(const Base& b, const FormulaPtr& query, const Caps& caps,
              Exec exec) {
    return infer_osem(b, query, caps, exec, true, false, nullptr);
}

bool infer_b2(const Base& b, const FormulaPtr& query, const Caps& caps,
              Exec exec, OSemCounterexample* counterexample) {
    return infer_osem(b, query, caps, exec, true, true, counterexample);
}

}  // namespace occlogic
