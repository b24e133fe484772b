#ifndef OCCLOGIC_RELATIONS_HPP
#define OCCLOGIC_RELATIONS_HPP

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "occlogic/base.hpp"
#include "occlogic/common.hpp"
#include "occlogic/kernels.hpp"

namespace occlogic {

// Unordered occurrence pairs (i, j) with i < j, as global 0-based slots,
// kept sorted — the canonical display/compare form for relations.
using PairList = std::vector<std::pair<int, int>>;

// Equivalence relation on the occurrence slots of one base, stored as one
// set-partition per variable so that classes can never mix variables.
class OccRelation {
  public:
    OccRelation() = default;

    // One block per variable (coarsest compliant relation).
    static OccRelation canonical(const Base& b);
    // All singletons (finest relation).
    static OccRelation discrete(const Base& b);
    // Reflexive-symmetric-transitive closure of the given slot pairs.
    // Throws std::invalid_argument if a pair mixes variables or is out of
    // range.
    static OccRelation from_pairs(const Base& b, const PairList& pairs);
    // From per-variable partitions: partition[v] covers the slot list of the
    // v-th variable in b.vars() order. Validated.
    static OccRelation from_partitions(
        const Base& b, std::vector<std::vector<std::vector<int>>> partition);

    // partition()[v] = blocks of the v-th variable (b.vars() order); blocks
    // ordered by smallest slot, slots ascending inside each block.
    const std::vector<std::vector<std::vector<int>>>& partition() const {
        return partition_;
    }
    int slot_count() const { return slot_count_; }

    // Every block across all variables, ordered by smallest slot.
    std::vector<std::vector<int>> blocks() const;
    // Equated non-reflexive pairs, canonical form.
    PairList pairs() const;
    // class id per slot, ids assigned by first appearance in slot order;
    // returns the number of classes through out param.
    std::vector<int> slot_classes(int* num_classes = nullptr) const;

    // this refines other: every block of this lies inside a block of other
    // (equivalently pairs(this) ⊆ pairs(other)).
    bool refines(const OccRelation& other) const;

    // Neighbors in the per-variable partition lattices, deterministic order.
    std::vector<OccRelation> coarsenings() const;  // merge two same-var blocks
    std::vector<OccRelation> refinements() const;  // split one block in two

    friend bool operator==(const OccRelation&, const OccRelation&) = default;

  private:
    std::vector<std::vector<std::vector<int>>> partition_;
    int slot_count_ = 0;
};

// Order used for all relation lists: lexicographic on the canonical pair
// list (so the discrete relation sorts first).
bool relation_less(const OccRelation& a, const OccRelation& b);

// Visits every compliant relation (the product of per-variable partition
// lattices) exactly once, deterministic order. Throws CapError when the base
// exceeds caps.occurrences or the product exceeds caps.relation_combos.
void for_each_compliant(const Base& b, const Caps& caps,
                        const std::function<void(const OccRelation&)>& fn);
std::uint64_t count_compliant(const Base& b, const Caps& caps);

// Satisfiability of the base's occurrence-renamed conjunction with all
// same-class occurrences forced equal; memoizes verdicts per class map.
class VerdictCache {
  public:
    explicit VerdictCache(const Base& b);
    bool consistent(const OccRelation& r);

  private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const;
    };
    EvalProgram prog_;
    std::unordered_map<std::vector<int>, bool, VecHash> memo_;
};

bool relation_consistent(const Base& b, const OccRelation& r);

// Maximal consistent / minimal inconsistent checks via lattice covers
// (consistency is downward closed, so covers certify).
bool is_mcr(const Base& b, const OccRelation& r);
bool is_mir(const Base& b, const OccRelation& r);

struct RelationSurvey {
    std::vector<OccRelation> mirs;   // minimal inconsistent, sorted
    std::vector<OccRelation> mcrs;   // maximal consistent, sorted
    std::vector<OccRelation> bmcrs;  // MCRs with ⊆-maximal equated +/- pairs
    std::vector<PairList> cmcrs;     // canonical pairs minus each MCR's, sorted
    bool consistent = true;          // no MIR found
};
RelationSurvey survey_relations(const Base& b, const Caps& caps = {});

std::vector<OccRelation> enumerate_mirs(const Base& b, const Caps& caps = {});
std::vector<OccRelation> enumerate_mcrs(const Base& b, const Caps& caps = {});
std::vector<OccRelation> enumerate_bmcrs(const Base& b, const Caps& caps = {});
std::vector<PairList> cmcr_sets(const Base& b, const Caps& caps = {});

// Equated (positive, negative) occurrence pairs, sorted.
PairList pn_pairs(const Base& b, const OccRelation& r);

// Formulas touched by the non-singleton blocks of a minimal inconsistent
// relation: sorted 0-based formula indices.
std::vector<int> omis_of(const Base& b, const OccRelation& mir);
// Distinct omis_of images over all MIRs, sorted (size, then lex).
std::vector<std::vector<int>> enumerate_omises(const Base& b,
                                               const Caps& caps = {});

// Subset-minimal inconsistent formula subsets, sorted (size, then lex).
std::vector<std::vector<int>> enumerate_mises(const Base& b,
                                              const Caps& caps = {});

// Blocks of the relation holding occurrences of `var`. Throws
// std::invalid_argument for a variable not in the base.
std::vector<std::vector<int>> eq_classes_of(const Base& b,
                                            const OccRelation& r,
                                            const std::string& var);

}  // namespace occlogic

#endif  // OCCLOGIC_RELATIONS_HPP
