#include "occlogic/lpm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace occlogic {

namespace {

std::uint8_t mask_not(std::uint8_t m) {
    return static_cast<std::uint8_t>(((m & kHas0) ? kHas1 : 0) |
                                     ((m & kHas1) ? kHas0 : 0));
}

std::uint8_t mask_and(std::uint8_t a, std::uint8_t b) {
    std::uint8_t r = 0;
    if ((a & kHas0) || (b & kHas0)) r |= kHas0;
    if ((a & kHas1) && (b & kHas1)) r |= kHas1;
    return r;
}

std::uint8_t eval_core(const LpmInterpretation& lam, const FormulaPtr& f) {
    switch (f->conn) {
        case Conn::Var: return lam.value_of(f->name);
        case Conn::Not: return mask_not(eval_core(lam, f->left));
        case Conn::And:
            return mask_and(eval_core(lam, f->left), eval_core(lam, f->right));
        default: throw std::logic_error("core form expected");
    }
}

std::vector<std::string> sorted_vars(const Base& b) {
    return {b.vars().begin(), b.vars().end()};
}

std::map<std::string, std::vector<int>> slots_by_name(const Base& b) {
    std::map<std::string, std::vector<int>> m;
    const auto& occ = b.occurrences();
    for (std::size_t k = 0; k < occ.size(); ++k)
        m[occ[k].var].push_back(static_cast<int>(k));
    return m;
}

std::uint8_t digit_to_mask(int digit) {
    switch (digit) {
        case 0: return kHas0;
        case 1: return kHas1;
        default: return kHas0 | kHas1;
    }
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

}  // namespace

std::uint8_t LpmInterpretation::value_of(const std::string& var) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), var);
    if (it == vars.end() || *it != var) return kHas0;
    return vals[static_cast<std::size_t>(it - vars.begin())];
}

std::vector<std::string> LpmInterpretation::gluts() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vals[i] == (kHas0 | kHas1)) out.push_back(vars[i]);
    return out;
}

std::uint8_t lpm_eval(const LpmInterpretation& lam, const FormulaPtr& f) {
    return eval_core(lam, is_core(f) ? f : desugar(f));
}

bool lpm_models(const LpmInterpretation& lam, const FormulaPtr& f) {
    return (lpm_eval(lam, f) & kHas1) != 0;
}

std::vector<LpmInterpretation> minimal_lpm_models(const Base& b,
                                                  const Caps& caps,
                                                  Exec exec) {
    const std::vector<std::string> vars = sorted_vars(b);
    const int n = static_cast<int>(vars.size());
    if (n > caps.lpm_vars)
        throw CapError("variable count " + std::to_string(n) +
                       " exceeds three-valued cap " +
                       std::to_string(caps.lpm_vars));

    const EvalProgram prog = compile_conjunction(b.core_formulas());
    std::vector<int> leaf_to_var;
    leaf_to_var.reserve(b.occurrences().size());
    for (const Occurrence& o : b.occurrences()) {
        auto it = std::lower_bound(vars.begin(), vars.end(), o.var);
        leaf_to_var.push_back(static_cast<int>(it - vars.begin()));
    }
    const std::vector<std::uint64_t> bitmap =
        lpm_model_bitmap(prog, leaf_to_var, n, exec);

    auto glut_mask = [&](std::uint64_t index) {
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v, index /= 3)
            if (index % 3 == 2) mask |= 1u << v;
        return mask;
    };

    std::set<std::uint32_t> masks;
    for_each_set_bit(bitmap, [&](std::uint64_t i) { masks.insert(glut_mask(i)); });
    std::set<std::uint32_t> minimal;
    for (std::uint32_t a : masks) {
        bool is_min = true;
        for (std::uint32_t c : masks)
            if (c != a && (c & a) == c) {
                is_min = false;
                break;
            }
        if (is_min) minimal.insert(a);
    }

    std::vector<LpmInterpretation> out;
    for_each_set_bit(bitmap, [&](std::uint64_t i) {
        if (!minimal.count(glut_mask(i))) return;
        LpmInterpretation lam;
        lam.vars = vars;
        lam.vals.resize(n);
        std::uint64_t index = i;
        for (int v = 0; v < n; ++v, index /= 3)
            lam.vals[v] = digit_to_mask(static_cast<int>(index % 3));
        out.push_back(std::move(lam));
    });
    std::sort(out.begin(), out.end(), [](const LpmInterpretation& x,
                                         const LpmInterpretation& y) {
        return x.vals < y.vals;
    });
    return out;
}

bool lpm_entails(const Base& b, const FormulaPtr& query, const Caps& caps,
                 Exec exec, LpmInterpretation* counterexample) {
    std::set<std::string> all = b.vars();
    const std::set<std::string> qv = vars_of(query);
    all.insert(qv.begin(), qv.end());
    if (static_cast<int>(all.size()) > caps.lpm_vars)
        throw CapError("variable count " + std::to_string(all.size()) +
                       " exceeds three-valued cap " +
                       std::to_string(caps.lpm_vars));

    std::vector<std::string> extras;
    for (const std::string& v : qv)
        if (!b.vars().count(v)) extras.push_back(v);  // qv sorted: set order

    for (const LpmInterpretation& lam : minimal_lpm_models(b, caps, exec)) {
        // Query-only variables range over crisp values; minimality would
        // never glut a variable the base does not mention.
        std::vector<std::uint8_t> ext(extras.size(), kHas0);
        for (;;) {
            LpmInterpretation merged;
            std::size_t i = 0, j = 0;
            while (i < lam.vars.size() || j < extras.size()) {
                if (j == extras.size() ||
                    (i < lam.vars.size() && lam.vars[i] < extras[j])) {
                    merged.vars.push_back(lam.vars[i]);
                    merged.vals.push_back(lam.vals[i]);
                    ++i;
                } else {
                    merged.vars.push_back(extras[j]);
                    merged.vals.push_back(ext[j]);
                    ++j;
                }
            }
            if (!lpm_models(merged, query)) {
                if (counterexample) *counterexample = std::move(merged);
                return false;
            }
            std::size_t k = extras.size();
            bool done = true;
            while (k-- > 0) {
                if (ext[k] == kHas0) {
                    ext[k] = kHas1;
                    done = false;
                    break;
                }
                ext[k] = kHas0;
            }
            if (done) break;
        }
    }
    return true;
}

OccRelation mcr_from_lpm(const Base& b, const LpmInterpretation& lam) {
    if (FormulaPtr conj = b.conjunction(); conj && !lpm_models(lam, conj))
        throw std::invalid_argument(
            "interpretation is not a three-valued model of the base");

    const auto by_name = slots_by_name(b);
    const auto& occ = b.occurrences();
    std::vector<std::vector<std::vector<int>>> partition;
    for (const std::string& var : b.vars()) {
        const std::vector<int>& slots = by_name.at(var);
        std::vector<std::vector<int>> blocks;
        if (lam.value_of(var) != (kHas0 | kHas1)) {
            blocks.push_back(slots);
        } else {
            std::vector<int> pos, neg;
            for (int s : slots)
                (occ[s].polarity == Polarity::Positive ? pos : neg)
                    .push_back(s);
            if (!pos.empty()) blocks.push_back(std::move(pos));
            if (!neg.empty()) blocks.push_back(std::move(neg));
        }
        partition.push_back(std::move(blocks));
    }
    return OccRelation::from_partitions(b, std::move(partition));
}

OInterpretation o_interp_from_lpm(const Base& b,
                                  const LpmInterpretation& lam) {
    OInterpretation mu;
    mu.values.reserve(b.occurrences().size());
    for (const Occurrence& o : b.occurrences()) {
        std::uint8_t m = lam.value_of(o.var);
        if (m == kHas1)
            mu.values.push_back(1);
        else if (m == kHas0)
            mu.values.push_back(0);
        else
            mu.values.push_back(o.polarity == Polarity::Positive ? 1 : 0);
    }
    return mu;
}

LpmInterpretation lpm_from_o_interp(const Base& b, const OInterpretation& mu) {
    if (static_cast<int>(mu.values.size()) != b.occurrence_count())
        throw std::invalid_argument(
            "interpretation size does not match the occurrence count");
    const auto by_name = slots_by_name(b);
    LpmInterpretation lam;
    for (const std::string& var : b.vars()) {
        std::uint8_t m = 0;
        for (int s : by_name.at(var)) m |= mu.values[s] ? kHas1 : kHas0;
        lam.vars.push_back(var);
        lam.vals.push_back(m);
    }
    return lam;
}

}  // namespace occlogic
