#ifndef OCCLOGIC_INFERENCE_HPP
#define OCCLOGIC_INFERENCE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "occlogic/base.hpp"
#include "occlogic/relations.hpp"

namespace occlogic {

// One variable per block of a maximal consistent relation. A block holding
// every occurrence of p keeps the name p; the blocks of a split variable get
// p__1, p__2, ... in block order, with the underscore run lengthened until
// no generated name collides with var(base) or the avoid set.
struct ClassRenaming {
    std::vector<std::string> slot_name;  // renamed variable per slot
    // names_per_var[p] = block names of p in block order (the ⌈ρ⌉(p) sets).
    std::map<std::string, std::vector<std::string>> names_per_var;
    std::vector<FormulaPtr> renamed;  // the renamed base, core form
};

// Throws std::invalid_argument when the relation is not a maximal
// consistent relation of b.
ClassRenaming build_renaming(const Base& b, const OccRelation& mcr,
                             const std::set<std::string>& avoid = {});

// Witness for the renaming-based relations: for the ∃-variant one entry per
// relation (the first tuple that works); for the ∀-variant the first
// failing (relation, tuple).
struct TupleWitness {
    int relation_index = -1;               // index into the relation list
    std::vector<std::string> shared_vars;  // var(base) ∩ var(query), sorted
    std::vector<std::string> tuple;        // chosen block names, aligned
};

// For every relation in `rels` some tuple of block names makes the renamed
// base classically entail the substituted query. Passing the maximal
// consistent relations gives the ∃-tuple relation; passing only those with
// maximal equated +/- pairs gives its B-variant.
bool infer_exists(const Base& b, const std::vector<OccRelation>& rels,
                  const FormulaPtr& query,
                  std::vector<TupleWitness>* witnesses = nullptr);

// Every relation and every tuple entails.
bool infer_forall(const Base& b, const std::vector<OccRelation>& rels,
                  const FormulaPtr& query,
                  TupleWitness* counterexample = nullptr);

}  // namespace occlogic

#endif  // OCCLOGIC_INFERENCE_HPP
