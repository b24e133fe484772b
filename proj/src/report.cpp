#include "occlogic/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <set>
#include <sstream>

namespace occlogic {

namespace {

using nlohmann::ordered_json;

std::string slot_label(const Base& b, int slot) {
    return b.occurrences()[slot].label();
}

ordered_json blocks_json(const Base& b, const OccRelation& r) {
    ordered_json blocks = ordered_json::array();
    for (const auto& block : r.blocks()) {
        ordered_json labels = ordered_json::array();
        for (int s : block) labels.push_back(slot_label(b, s));
        blocks.push_back(std::move(labels));
    }
    return blocks;
}

ordered_json pairs_json(const Base& b, const PairList& pairs) {
    ordered_json out = ordered_json::array();
    for (const auto& [i, j] : pairs)
        out.push_back(
            ordered_json::array({slot_label(b, i), slot_label(b, j)}));
    return out;
}

std::string blocks_text(const Base& b, const OccRelation& r,
                        bool nontrivial_only) {
    std::string out;
    bool any = false;
    for (const auto& block : r.blocks()) {
        if (nontrivial_only && block.size() < 2) continue;
        if (any) out += ' ';
        any = true;
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ' ';
            out += slot_label(b, block[i]);
        }
        out += '}';
    }
    if (!any) out = "(discrete)";
    return out;
}

std::string pairs_text(const Base& b, const PairList& pairs) {
    std::string out = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ' ';
        out += '(' + slot_label(b, pairs[i].first) + ',' +
               slot_label(b, pairs[i].second) + ')';
    }
    return out + "}";
}

std::string indices_text(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out + "}";
}

std::string mask_text(std::uint8_t m) {
    switch (m) {
        case kHas0: return "{0}";
        case kHas1: return "{1}";
        default: return "{0,1}";
    }
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", ms);
    return buf;
}

ordered_json tuple_witness_json(const TupleWitness& w) {
    ordered_json j;
    j["relation_index"] = w.relation_index;
    j["shared_vars"] = w.shared_vars;
    j["tuple"] = w.tuple;
    return j;
}

std::string tuple_witness_text(const TupleWitness& w) {
    std::string out = "relation " + std::to_string(w.relation_index);
    if (!w.shared_vars.empty()) {
        out += ", tuple (";
        for (std::size_t i = 0; i < w.tuple.size(); ++i) {
            if (i) out += ", ";
            out += w.shared_vars[i] + " := " + w.tuple[i];
        }
        out += ')';
    } else {
        out += ", empty tuple";
    }
    return out;
}

ordered_json o_model_json(const Base& b, const OInterpretation& mu) {
    ordered_json j = ordered_json::object();
    for (std::size_t k = 0; k < mu.values.size(); ++k)
        j[slot_label(b, static_cast<int>(k))] = static_cast<int>(mu.values[k]);
    return j;
}

}  // namespace

ordered_json analyze_json(Analyzer& a, bool stats) {
    const Base& b = a.base();
    ordered_json j;
    j["schema"] = kReportSchema;

    ordered_json base;
    ordered_json formulas = ordered_json::array();
    for (const FormulaPtr& f : b.formulas()) formulas.push_back(to_string(f));
    base["formulas"] = std::move(formulas);
    base["variables"] = std::vector<std::string>(b.vars().begin(),
                                                 b.vars().end());
    base["consistent"] = a.consistent();
    ordered_json occs = ordered_json::array();
    for (const Occurrence& o : b.occurrences()) {
        ordered_json e;
        e["label"] = o.label();
        e["variable"] = o.var;
        e["formula"] = o.formula_index;
        e["index_in_formula"] = o.index_in_formula;
        e["global_ordinal"] = o.global_ordinal;
        e["polarity"] = std::string(1, polarity_sign(o.polarity));
        occs.push_back(std::move(e));
    }
    base["occurrences"] = std::move(occs);
    j["base"] = std::move(base);

    const RelationSurvey& s = a.survey();
    ordered_json mirs = ordered_json::array();
    for (const OccRelation& r : s.mirs)
        mirs.push_back({{"blocks", blocks_json(b, r)}});
    j["mirs"] = std::move(mirs);

    ordered_json mcrs = ordered_json::array();
    for (const OccRelation& r : s.mcrs) {
        ordered_json e;
        e["blocks"] = blocks_json(b, r);
        e["pn"] = pairs_json(b, pn_pairs(b, r));
        mcrs.push_back(std::move(e));
    }
    j["mcrs"] = std::move(mcrs);

    ordered_json bmcrs = ordered_json::array();
    for (const OccRelation& r : s.bmcrs) {
        ordered_json e;
        e["blocks"] = blocks_json(b, r);
        e["pn"] = pairs_json(b, pn_pairs(b, r));
        bmcrs.push_back(std::move(e));
    }
    j["bmcrs"] = std::move(bmcrs);

    ordered_json cmcrs = ordered_json::array();
    for (const PairList& p : s.cmcrs) cmcrs.push_back(pairs_json(b, p));
    j["cmcrs"] = std::move(cmcrs);

    j["omises"] = a.omises();
    j["mises"] = a.mises();

    const DualityReport& d = a.duality();
    ordered_json dj;
    dj["mcr_direction_ok"] = d.mcr_direction_ok;
    dj["mir_direction_ok"] = d.mir_direction_ok;
    j["duality"] = std::move(dj);

    if (stats) {
        ordered_json st;
        st["formulas"] = b.size();
        st["variables"] = static_cast<int>(b.vars().size());
        st["occurrences"] = b.occurrence_count();
        st["compliant_relations"] = count_compliant(b, a.caps());
        st["mirs"] = s.mirs.size();
        st["mcrs"] = s.mcrs.size();
        st["bmcrs"] = s.bmcrs.size();
        st["cmcrs"] = s.cmcrs.size();
        st["omises"] = a.omises().size();
        st["mises"] = a.mises().size();
        j["stats"] = std::move(st);
    }
    return j;
}

std::string analyze_text(Analyzer& a, bool stats,
                         std::optional<double> elapsed_ms) {
    const Base& b = a.base();
    std::ostringstream out;
    out << "base: " << b.size() << " formulas, " << b.vars().size()
        << " variables, " << b.occurrence_count() << " occurrences -- "
        << (a.consistent() ? "consistent" : "inconsistent") << "\n";
    for (int i = 0; i < b.size(); ++i)
        out << "  [" << i << "] " << to_string(b.formulas()[i]) << "\n";

    out << "occurrences:\n";
    for (const Occurrence& o : b.occurrences())
        out << "  " << o.global_ordinal << ". " << o.label() << "\n";

    const RelationSurvey& s = a.survey();
    out << "minimal inconsistency relations (" << s.mirs.size() << "):\n";
    for (std::size_t i = 0; i < s.mirs.size(); ++i)
        out << "  " << i + 1 << ". " << blocks_text(b, s.mirs[i], true)
            << "\n";
    out << "maximal consistency relations (" << s.mcrs.size() << "):\n";
    for (std::size_t i = 0; i < s.mcrs.size(); ++i)
        out << "  " << i + 1 << ". " << blocks_text(b, s.mcrs[i], true)
            << "  pn: " << pairs_text(b, pn_pairs(b, s.mcrs[i])) << "\n";
    out << "bipolarity-maximal consistency relations (" << s.bmcrs.size()
        << "):\n";
    for (std::size_t i = 0; i < s.bmcrs.size(); ++i)
        out << "  " << i + 1 << ". " << blocks_text(b, s.bmcrs[i], true)
            << "  pn: " << pairs_text(b, pn_pairs(b, s.bmcrs[i])) << "\n";
    out << "complement pair sets (" << s.cmcrs.size() << "):\n";
    for (std::size_t i = 0; i < s.cmcrs.size(); ++i)
        out << "  " << i + 1 << ". " << pairs_text(b, s.cmcrs[i]) << "\n";

    out << "occurrence-level minimal inconsistent subsets ("
        << a.omises().size() << "):\n";
    for (std::size_t i = 0; i < a.omises().size(); ++i)
        out << "  " << i + 1 << ". " << indices_text(a.omises()[i]) << "\n";
    out << "minimal inconsistent subsets (" << a.mises().size() << "):\n";
    for (std::size_t i = 0; i < a.mises().size(); ++i)
        out << "  " << i + 1 << ". " << indices_text(a.mises()[i]) << "\n";

    const DualityReport& d = a.duality();
    out << "duality: "
        << (d.ok() ? "both directions verified" : "FAILED") << "\n";
    for (const std::string& note : d.notes) out << "  note: " << note << "\n";

    if (stats) {
        out << "stats: compliant_relations="
            << count_compliant(b, a.caps()) << " mirs=" << s.mirs.size()
            << " mcrs=" << s.mcrs.size() << " bmcrs=" << s.bmcrs.size()
            << " cmcrs=" << s.cmcrs.size() << " omises=" << a.omises().size()
            << " mises=" << a.mises().size() << "\n";
    }
    if (elapsed_ms) out << "time: " << format_ms(*elapsed_ms) << " ms\n";
    return out.str();
}

ordered_json entail_json(Analyzer& a, Relation rel,
                         const std::string& query_text, bool verdict,
                         const EntailWitness& witness) {
    const Base& b = a.base();
    ordered_json j;
    j["schema"] = kReportSchema;
    j["relation"] = to_string(rel);
    j["query"] = query_text;
    j["verdict"] = verdict;
    if (!witness.tuple_witnesses.empty()) {
        ordered_json ws = ordered_json::array();
        for (const TupleWitness& w : witness.tuple_witnesses)
            ws.push_back(tuple_witness_json(w));
        j["witnesses"] = std::move(ws);
    }
    if (witness.failed_tuple)
        j["counterexample"] = tuple_witness_json(*witness.failed_tuple);
    if (witness.failed_o_model) {
        ordered_json c;
        c["o_model"] = o_model_json(b, witness.failed_o_model->mu);
        ordered_json v = ordered_json::object();
        for (const auto& [var, val] : witness.failed_o_model->omega)
            v[var] = val;
        c["valuation"] = std::move(v);
        j["counterexample"] = std::move(c);
    }
    if (witness.failed_lpm) {
        ordered_json c = ordered_json::object();
        for (std::size_t i = 0; i < witness.failed_lpm->vars.size(); ++i)
            c[witness.failed_lpm->vars[i]] =
                mask_text(witness.failed_lpm->vals[i]);
        j["counterexample"] = std::move(c);
    }
    return j;
}

std::string entail_text(Analyzer& a, Relation rel,
                        const std::string& query_text, bool verdict,
                        const EntailWitness& witness,
                        std::optional<double> elapsed_ms) {
    const Base& b = a.base();
    std::ostringstream out;
    out << (verdict ? "yes" : "no") << "\n";
    out << "relation: " << to_string(rel) << "  query: " << query_text
        << "\n";
    for (const TupleWitness& w : witness.tuple_witnesses)
        out << "  witness: " << tuple_witness_text(w) << "\n";
    if (witness.failed_tuple)
        out << "  counterexample: " << tuple_witness_text(*witness.failed_tuple)
            << "\n";
    if (witness.failed_o_model) {
        out << "  counterexample o-model:";
        const OInterpretation& mu = witness.failed_o_model->mu;
        for (std::size_t k = 0; k < mu.values.size(); ++k)
            out << ' ' << slot_label(b, static_cast<int>(k)) << '='
                << static_cast<int>(mu.values[k]);
        out << "\n  counterexample valuation:";
        for (const auto& [var, val] : witness.failed_o_model->omega)
            out << ' ' << var << '=' << (val ? 1 : 0);
        out << "\n";
    }
    if (witness.failed_lpm) {
        out << "  counterexample:";
        for (std::size_t i = 0; i < witness.failed_lpm->vars.size(); ++i)
            out << ' ' << witness.failed_lpm->vars[i] << '='
                << mask_text(witness.failed_lpm->vals[i]);
        out << "\n";
    }
    if (elapsed_ms) out << "time: " << format_ms(*elapsed_ms) << " ms\n";
    return out.str();
}

std::string duality_text(Analyzer& a) {
    const DualityReport& d = a.duality();
    std::ostringstream out;
    out << "minimal inconsistency relations: " << a.survey().mirs.size()
        << "\n";
    out << "maximal consistency relations: " << a.survey().mcrs.size()
        << "\n";
    out << "maximal-consistency direction: "
        << (d.mcr_direction_ok ? "ok" : "FAILED") << "\n";
    out << "minimal-inconsistency direction: "
        << (d.mir_direction_ok ? "ok" : "FAILED") << "\n";
    for (const std::string& note : d.notes) out << "note: " << note << "\n";
    out << "verdict: " << (d.ok() ? "pass" : "fail") << "\n";
    return out.str();
}

std::vector<CompareRow> run_compare(
    Analyzer& a,
    const std::vector<std::pair<std::string, FormulaPtr>>& queries) {
    constexpr std::size_t n = kAllRelations.size();
    auto index_of = [](Relation r) {
        for (std::size_t i = 0; i < n; ++i)
            if (kAllRelations[i] == r) return i;
        return n;
    };
    // (stronger, weaker): a `yes` under the stronger relation must persist
    // under the weaker one.
    static constexpr std::pair<Relation, Relation> kContainments[] = {
        {Relation::M2, Relation::M1},   {Relation::M1, Relation::Mb1},
        {Relation::M2, Relation::Mb2},  {Relation::Mb2, Relation::Mb1},
        {Relation::M1, Relation::A1},   {Relation::A1, Relation::B1},
        {Relation::M1, Relation::Lpm},  {Relation::A1, Relation::Lpm},
    };
    static constexpr std::pair<Relation, Relation> kEquivalences[] = {
        {Relation::A2, Relation::M2}, {Relation::B2, Relation::Mb2}};

    std::vector<CompareRow> rows;
    for (const auto& [text, query] : queries) {
        CompareRow row;
        row.query_text = text;
        // a1 containment in lpm only applies to queries over the base
        // vocabulary: a1 lets a compatible valuation pick any value for a
        // variable absent from the base, while lpm extends its minimal
        // models crisply both ways over such a variable.
        std::set<std::string> query_vars;
        collect_vars(query, query_vars);
        const bool query_in_base = std::includes(
            a.base().vars().begin(), a.base().vars().end(),
            query_vars.begin(), query_vars.end());
        for (std::size_t i = 0; i < n; ++i)
            row.verdicts[i] = a.entails(kAllRelations[i], query);
        for (const auto& [s, w] : kContainments) {
            if (s == Relation::A1 && w == Relation::Lpm && !query_in_base)
                continue;
            if (row.verdicts[index_of(s)] && !row.verdicts[index_of(w)])
                row.violations.push_back(to_string(s) + " holds but " +
                                         to_string(w) + " does not");
        }
        for (const auto& [x, y] : kEquivalences)
            if (row.verdicts[index_of(x)] != row.verdicts[index_of(y)])
                row.violations.push_back(to_string(x) + " and " +
                                         to_string(y) + " disagree");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string compare_text(const std::vector<CompareRow>& rows) {
    std::size_t width = 5;
    for (const CompareRow& r : rows)
        width = std::max(width, r.query_text.size());

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "query";
    for (Relation r : kAllRelations) out << "  " << std::setw(9)
                                         << to_string(r);
    out << "\n";
    for (const CompareRow& r : rows) {
        out << std::setw(static_cast<int>(width)) << r.query_text;
        for (std::size_t i = 0; i < kAllRelations.size(); ++i)
            out << "  " << std::setw(9) << (r.verdicts[i] ? "yes" : "no");
        out << "\n";
        for (const std::string& v : r.violations)
            out << "  violation: " << v << "\n";
    }
    return out.str();
}

}  // namespace occlogic
