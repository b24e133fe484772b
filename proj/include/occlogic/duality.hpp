#ifndef OCCLOGIC_DUALITY_HPP
#define OCCLOGIC_DUALITY_HPP

#include <string>
#include <vector>

#include "occlogic/base.hpp"
#include "occlogic/common.hpp"
#include "occlogic/relations.hpp"

namespace occlogic {

// All subset-minimal hitting sets of the collection, sorted (size, then
// lex). Conventions: an empty collection is hit by the empty set alone, so
// the result is { {} }; a collection containing an empty member admits no
// hitting set at all and raises std::invalid_argument.
std::vector<PairList> minimal_hitting_sets(
    const std::vector<PairList>& collection);

// r's pairs avoid h and every strict compliant coarsening of r meets h.
// Checking immediate coarsenings suffices: pair sets only grow upward.
bool is_h_maximal(const Base& b, const OccRelation& r, const PairList& h);

// h ⊆ pairs(r) and r is the equivalence closure of h (the unique minimal
// equivalence relation containing h).
bool is_h_minimal(const Base& b, const OccRelation& r, const PairList& h);

struct DualityReport {
    // maximal consistent relations == inclusion-maximal relations that are
    // H-maximal for some minimal hitting set H of the minimal inconsistent
    // relations' pair sets
    bool mcr_direction_ok = false;
    // minimal inconsistent relations == inclusion-minimal equivalence
    // closures of the minimal hitting sets of the complement pair sets
    bool mir_direction_ok = false;
    std::vector<std::string> notes;  // counterexamples when a direction fails

    bool ok() const { return mcr_direction_ok && mir_direction_ok; }
};

// Exhaustively cross-checks both correspondence directions on one base.
DualityReport verify_duality(const Base& b, const Caps& caps = {});

}  // namespace occlogic

#endif  // OCCLOGIC_DUALITY_HPP
