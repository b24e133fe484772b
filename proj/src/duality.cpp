#include "occlogic/duality.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace occlogic {

namespace {

bool intersects(const PairList& sorted_a, const PairList& sorted_b) {
    auto i = sorted_a.begin();
    auto j = sorted_b.begin();
    while (i != sorted_a.end() && j != sorted_b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

bool size_lex_less(const PairList& a, const PairList& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::string format_pairs(const Base& b, const PairList& pairs) {
    const auto& occ = b.occurrences();
    std::string out = "{";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ", ";
        out += "(" + occ[pairs[i].first].label() + "," +
               occ[pairs[i].second].label() + ")";
    }
    return out + "}";
}

}  // namespace

std::vector<PairList> minimal_hitting_sets(
    const std::vector<PairList>& collection) {
    if (collection.empty()) return {{}};
    for (const PairList& s : collection)
        if (s.empty())
            throw std::invalid_argument(
                "an empty member admits no hitting set");

    // Hitting-set tree: branch on the elements of the first set the current
    // candidate misses; depth is bounded by the collection size.
    std::vector<PairList> candidates;
    PairList current;
    std::function<void()> extend = [&] {
        const PairList* unhit = nullptr;
        for (const PairList& s : collection) {
            if (!intersects(s, current)) {
                unhit = &s;
                break;
            }
        }
        if (!unhit) {
            candidates.push_back(current);
            return;
        }
        for (const auto& e : *unhit) {
            current.insert(std::upper_bound(current.begin(), current.end(), e),
                           e);
            extend();
            current.erase(
                std::find(current.begin(), current.end(), e));
        }
    };
    extend();

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<PairList> minimal;
    for (const PairList& c : candidates) {
        bool dominated = false;
        for (const PairList& d : candidates) {
            if (d.size() < c.size() &&
                std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), size_lex_less);
    return minimal;
}

bool is_h_maximal(const Base& b, const OccRelation& r, const PairList& h) {
    (void)b;
    if (intersects(r.pairs(), h)) return false;
    for (const OccRelation& up : r.coarsenings())
        if (!intersects(up.pairs(), h)) return false;
    return true;
}

bool is_h_minimal(const Base& b, const OccRelation& r, const PairList& h) {
    PairList mine = r.pairs();
    if (!std::includes(mine.begin(), mine.end(), h.begin(), h.end()))
        return false;
    return r == OccRelation::from_pairs(b, h);
}

DualityReport verify_duality(const Base& b, const Caps& caps) {
    DualityReport rep;
    RelationSurvey s = survey_relations(b, caps);

    // Direction 1: the maximal consistent relations are exactly the
    // inclusion-maximal relations that are H-maximal for some minimal
    // hitting set H of the minimal inconsistent relations' pair sets.
    // Maximality among them matters: avoiding one hitting set H can block a
    // relation locally (every coarsening meets H) while a consistent
    // extension still exists that merely fails to avoid H — only the largest
    // H-maximal relations are maximal consistent. H-maximality does force
    // consistency, since an inconsistent relation contains some minimal
    // inconsistent one, which H hits inside the avoided pairs.
    std::vector<PairList> mir_pairs;
    mir_pairs.reserve(s.mirs.size());
    for (const OccRelation& m : s.mirs) mir_pairs.push_back(m.pairs());
    bool some_unhittable =
        std::any_of(mir_pairs.begin(), mir_pairs.end(),
                    [](const PairList& p) { return p.empty(); });
    std::vector<PairList> mhs1 =
        some_unhittable ? std::vector<PairList>{} : minimal_hitting_sets(mir_pairs);
    std::vector<OccRelation> h_candidates;
    for_each_compliant(b, caps, [&](const OccRelation& r) {
        for (const PairList& h : mhs1) {
            if (is_h_maximal(b, r, h)) {
                h_candidates.push_back(r);
                break;
            }
        }
    });
    std::vector<OccRelation> h_maximal;
    for (const OccRelation& c : h_candidates) {
        bool maximal = std::none_of(
            h_candidates.begin(), h_candidates.end(),
            [&](const OccRelation& d) { return d != c && c.refines(d); });
        if (maximal) h_maximal.push_back(c);
    }
    std::sort(h_maximal.begin(), h_maximal.end(), relation_less);
    rep.mcr_direction_ok = h_maximal == s.mcrs;
    if (!rep.mcr_direction_ok) {
        for (const OccRelation& r : h_maximal)
            if (!std::binary_search(s.mcrs.begin(), s.mcrs.end(), r,
                                    relation_less))
                rep.notes.push_back("H-maximal but not maximal consistent: " +
                                    format_pairs(b, r.pairs()));
        for (const OccRelation& r : s.mcrs)
            if (!std::binary_search(h_maximal.begin(), h_maximal.end(), r,
                                    relation_less))
                rep.notes.push_back(
                    "maximal consistent but not H-maximal for any H: " +
                    format_pairs(b, r.pairs()));
    }

    // Direction 2: the minimal inconsistent relations are exactly the
    // inclusion-minimal equivalence closures of the minimal hitting sets of
    // the complement pair sets. Minimality among the closures matters: a
    // minimal hitting set may close up to a strictly larger relation than
    // another's closure, and only the smallest closures are minimally
    // inconsistent. A complement set can only be empty on a consistent base,
    // where no hitting set exists and both sides are empty.
    std::vector<OccRelation> closures;
    bool cmcr_unhittable =
        std::any_of(s.cmcrs.begin(), s.cmcrs.end(),
                    [](const PairList& p) { return p.empty(); });
    if (!cmcr_unhittable) {
        std::vector<OccRelation> all;
        for (const PairList& h : minimal_hitting_sets(s.cmcrs)) {
            OccRelation c = OccRelation::from_pairs(b, h);
            if (std::find(all.begin(), all.end(), c) == all.end())
                all.push_back(c);
        }
        for (const OccRelation& c : all) {
            bool minimal = std::none_of(
                all.begin(), all.end(), [&](const OccRelation& d) {
                    return d != c && d.refines(c);
                });
            if (minimal) closures.push_back(c);
        }
    }
    std::sort(closures.begin(), closures.end(), relation_less);
    rep.mir_direction_ok = closures == s.mirs;
    if (!rep.mir_direction_ok) {
        for (const OccRelation& r : closures)
            if (!std::binary_search(s.mirs.begin(), s.mirs.end(), r,
                                    relation_less))
                rep.notes.push_back(
                    "minimal hitting-set closure is not minimal "
                    "inconsistent: " +
                    format_pairs(b, r.pairs()));
        for (const OccRelation& r : s.mirs)
            if (!std::binary_search(closures.begin(), closures.end(), r,
                                    relation_less))
                rep.notes.push_back(
                    "minimal inconsistent relation missed by closures: " +
                    format_pairs(b, r.pairs()));
    }
    return rep;
}

}  // namespace occlogic
