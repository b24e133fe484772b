#include "occlogic/relations.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "occlogic/semantics.hpp"

namespace occlogic {

namespace {

// Slot lists per variable, in b.vars() (sorted-name) order.
std::vector<std::vector<int>> slots_by_var(const Base& b) {
    std::map<std::string, std::vector<int>> coll;
    for (const Occurrence& o : b.occurrences())
        coll[o.var].push_back(o.global_ordinal - 1);
    std::vector<std::vector<int>> out;
    out.reserve(coll.size());
    for (auto& [var, slots] : coll) {
        (void)var;
        out.push_back(std::move(slots));
    }
    return out;
}

int var_index_of(const Base& b, const std::string& var) {
    int i = 0;
    for (const std::string& v : b.vars()) {
        if (v == var) return i;
        ++i;
    }
    return -1;
}

void sort_partition(std::vector<std::vector<int>>& blocks) {
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Bell numbers; index > 25 saturates (Bell(26) overflows the use here).
std::uint64_t bell_or_max(int n) {
    static const std::uint64_t kBell[26] = {1ull,
                                            1ull,
                                            2ull,
                                            5ull,
                                            15ull,
                                            52ull,
                                            203ull,
                                            877ull,
                                            4140ull,
                                            21147ull,
                                            115975ull,
                                            678570ull,
                                            4213597ull,
                                            27644437ull,
                                            190899322ull,
                                            1382958545ull,
                                            10480142147ull,
                                            82864869804ull,
                                            682076806159ull,
                                            5832742205057ull,
                                            51724158235372ull,
                                            474869816156751ull,
                                            4506715738447323ull,
                                            44152005855084346ull,
                                            445958869294805289ull,
                                            4638590332229999353ull};
    if (n < 0) return 0;
    if (n > 25) return std::numeric_limits<std::uint64_t>::max();
    return kBell[n];
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Next restricted growth string in lexicographic order; false at the end.
bool next_rgs(std::vector<int>& a) {
    const int m = static_cast<int>(a.size());
    if (m <= 1) return false;
    std::vector<int> prefix_max(m, 0);
    for (int i = 1; i < m; ++i)
        prefix_max[i] = std::max(prefix_max[i - 1], a[i - 1]);
    for (int i = m - 1; i >= 1; --i) {
        if (a[i] <= prefix_max[i]) {
            ++a[i];
            std::fill(a.begin() + i + 1, a.end(), 0);
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> blocks_from_rgs(const std::vector<int>& rgs,
                                              const std::vector<int>& slots) {
    int num_blocks = 0;
    for (int v : rgs) num_blocks = std::max(num_blocks, v + 1);
    std::vector<std::vector<int>> blocks(slots.empty() ? 0 : num_blocks);
    for (std::size_t i = 0; i < rgs.size(); ++i)
        blocks[rgs[i]].push_back(slots[i]);
    return blocks;  // already ordered: value k first appears before k+1
}

}  // namespace

OccRelation OccRelation::canonical(const Base& b) {
    OccRelation r;
    r.slot_count_ = b.occurrence_count();
    for (auto& slots : slots_by_var(b)) r.partition_.push_back({slots});
    return r;
}

OccRelation OccRelation::discrete(const Base& b) {
    OccRelation r;
    r.slot_count_ = b.occurrence_count();
    for (auto& slots : slots_by_var(b)) {
        std::vector<std::vector<int>> singles;
        for (int s : slots) singles.push_back({s});
        r.partition_.push_back(std::move(singles));
    }
    return r;
}

OccRelation OccRelation::from_pairs(const Base& b, const PairList& pairs) {
    const auto& occ = b.occurrences();
    const int n = b.occurrence_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("occurrence pair out of range");
        if (occ[i].var != occ[j].var)
            throw std::invalid_argument(
                "occurrence pair mixes variables " + occ[i].var + " and " +
                occ[j].var);
        int ri = find(i), rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
    OccRelation r;
    r.slot_count_ = n;
    for (auto& slots : slots_by_var(b)) {
        std::map<int, std::vector<int>> by_root;
        for (int s : slots) by_root[find(s)].push_back(s);
        std::vector<std::vector<int>> blocks;
        for (auto& [root, blk] : by_root) {
            (void)root;
            blocks.push_back(std::move(blk));
        }
        sort_partition(blocks);
        r.partition_.push_back(std::move(blocks));
    }
    return r;
}

OccRelation OccRelation::from_partitions(
    const Base& b, std::vector<std::vector<std::vector<int>>> partition) {
    auto per_var = slots_by_var(b);
    if (partition.size() != per_var.size())
        throw std::invalid_argument("partition count != variable count");
    for (std::size_t v = 0; v < per_var.size(); ++v) {
        std::vector<int> covered;
        for (auto& blk : partition[v]) {
            if (blk.empty()) throw std::invalid_argument("empty block");
            covered.insert(covered.end(), blk.begin(), blk.end());
        }
        std::sort(covered.begin(), covered.end());
        if (covered != per_var[v])
            throw std::invalid_argument(
                "blocks must exactly cover the variable's occurrences");
        sort_partition(partition[v]);
    }
    OccRelation r;
    r.slot_count_ = b.occurrence_count();
    r.partition_ = std::move(partition);
    return r;
}

std::vector<std::vector<int>> OccRelation::blocks() const {
    std::vector<std::vector<int>> out;
    for (const auto& blocks : partition_)
        out.insert(out.end(), blocks.begin(), blocks.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

PairList OccRelation::pairs() const {
    PairList out;
    for (const auto& blocks : partition_)
        for (const auto& blk : blocks)
            for (std::size_t i = 0; i < blk.size(); ++i)
                for (std::size_t j = i + 1; j < blk.size(); ++j)
                    out.emplace_back(blk[i], blk[j]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> OccRelation::slot_classes(int* num_classes) const {
    std::vector<int> cls(slot_count_, -1);
    std::vector<const std::vector<int>*> block_of(slot_count_, nullptr);
    for (const auto& blocks : partition_)
        for (const auto& blk : blocks)
            for (int s : blk) block_of[s] = &blk;
    int next = 0;
    for (int s = 0; s < slot_count_; ++s) {
        if (cls[s] != -1) continue;
        for (int t : *block_of[s]) cls[t] = next;
        ++next;
    }
    if (num_classes) *num_classes = next;
    return cls;
}

bool OccRelation::refines(const OccRelation& other) const {
    std::vector<int> cls = other.slot_classes();
    for (const auto& blocks : partition_)
        for (const auto& blk : blocks)
            for (int s : blk)
                if (cls[s] != cls[blk.front()]) return false;
    return true;
}

std::vector<OccRelation> OccRelation::coarsenings() const {
    std::vector<OccRelation> out;
    for (std::size_t v = 0; v < partition_.size(); ++v) {
        const auto& blocks = partition_[v];
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                OccRelation r = *this;
                auto& tgt = r.partition_[v];
                std::vector<int> merged = tgt[i];
                merged.insert(merged.end(), tgt[j].begin(), tgt[j].end());
                std::sort(merged.begin(), merged.end());
                tgt.erase(tgt.begin() + static_cast<std::ptrdiff_t>(j));
                tgt[i] = std::move(merged);
                sort_partition(tgt);
                out.push_back(std::move(r));
            }
    }
    return out;
}

std::vector<OccRelation> OccRelation::refinements() const {
    std::vector<OccRelation> out;
    for (std::size_t v = 0; v < partition_.size(); ++v) {
        const auto& blocks = partition_[v];
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const auto& blk = blocks[bi];
            const int k = static_cast<int>(blk.size());
            if (k < 2) continue;
            // Splits: the first slot stays in part A; any nonempty subset of
            // the rest forms part B (2^(k-1) - 1 splits).
            for (std::uint64_t mask = 1; mask < (1ull << (k - 1)); ++mask) {
                std::vector<int> a{blk[0]}, bpart;
                for (int e = 1; e < k; ++e)
                    ((mask >> (e - 1)) & 1 ? bpart : a).push_back(blk[e]);
                OccRelation r = *this;
                auto& tgt = r.partition_[v];
                tgt[bi] = std::move(a);
                tgt.push_back(std::move(bpart));
                sort_partition(tgt);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

bool relation_less(const OccRelation& a, const OccRelation& b) {
    return a.pairs() < b.pairs();
}

std::uint64_t count_compliant(const Base& b, const Caps& caps) {
    if (b.occurrence_count() > caps.occurrences)
        throw CapError("base has " + std::to_string(b.occurrence_count()) +
                       " occurrences, above the cap of " +
                       std::to_string(caps.occurrences));
    std::uint64_t total = 1;
    for (const auto& slots : slots_by_var(b))
        total = saturating_mul(total,
                               bell_or_max(static_cast<int>(slots.size())));
    if (total > caps.relation_combos)
        throw CapError("the base admits too many compliant relations (over " +
                       std::to_string(caps.relation_combos) + ")");
    return total;
}

void for_each_compliant(const Base& b, const Caps& caps,
                        const std::function<void(const OccRelation&)>& fn) {
    count_compliant(b, caps);  // cap guard
    auto per_var = slots_by_var(b);
    const std::size_t nv = per_var.size();
    std::vector<std::vector<int>> rgs(nv);
    for (std::size_t v = 0; v < nv; ++v)
        rgs[v].assign(per_var[v].size(), 0);
    for (;;) {
        std::vector<std::vector<std::vector<int>>> partition(nv);
        for (std::size_t v = 0; v < nv; ++v)
            partition[v] = blocks_from_rgs(rgs[v], per_var[v]);
        fn(OccRelation::from_partitions(b, std::move(partition)));
        // odometer: advance the last variable's partition first
        std::size_t v = nv;
        while (v > 0) {
            --v;
            if (next_rgs(rgs[v])) break;
            rgs[v].assign(per_var[v].size(), 0);
            if (v == 0) return;
        }
        if (nv == 0) return;
    }
}

std::size_t VerdictCache::VecHash::operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

VerdictCache::VerdictCache(const Base& b)
    : prog_(compile_conjunction(b.core_formulas())) {}

bool VerdictCache::consistent(const OccRelation& r) {
    int num_classes = 0;
    std::vector<int> cls = r.slot_classes(&num_classes);
    auto it = memo_.find(cls);
    if (it != memo_.end()) return it->second;
    bool verdict = sat_program(prog_, cls, num_classes);
    memo_.emplace(std::move(cls), verdict);
    return verdict;
}

bool relation_consistent(const Base& b, const OccRelation& r) {
    return VerdictCache(b).consistent(r);
}

namespace {

bool is_mcr_cached(VerdictCache& cache, const OccRelation& r) {
    if (!cache.consistent(r)) return false;
    for (const OccRelation& up : r.coarsenings())
        if (cache.consistent(up)) return false;
    return true;
}

bool is_mir_cached(VerdictCache& cache, const OccRelation& r) {
    if (cache.consistent(r)) return false;
    for (const OccRelation& down : r.refinements())
        if (!cache.consistent(down)) return false;
    return true;
}

}  // namespace

bool is_mcr(const Base& b, const OccRelation& r) {
    VerdictCache cache(b);
    return is_mcr_cached(cache, r);
}

bool is_mir(const Base& b, const OccRelation& r) {
    VerdictCache cache(b);
    return is_mir_cached(cache, r);
}

RelationSurvey survey_relations(const Base& b, const Caps& caps) {
    RelationSurvey s;
    VerdictCache cache(b);
    for_each_compliant(b, caps, [&](const OccRelation& r) {
        if (cache.consistent(r)) {
            if (is_mcr_cached(cache, r)) s.mcrs.push_back(r);
        } else if (is_mir_cached(cache, r)) {
            s.mirs.push_back(r);
        }
    });
    std::sort(s.mirs.begin(), s.mirs.end(), relation_less);
    std::sort(s.mcrs.begin(), s.mcrs.end(), relation_less);
    s.consistent = s.mirs.empty();

    // B-variants: MCRs whose equated (positive, negative) pair set is
    // ⊆-maximal among all MCRs'.
    std::vector<PairList> pns;
    pns.reserve(s.mcrs.size());
    for (const OccRelation& m : s.mcrs) pns.push_back(pn_pairs(b, m));
    for (std::size_t i = 0; i < s.mcrs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < s.mcrs.size() && !dominated; ++j) {
            if (i == j) continue;
            dominated = pns[i] != pns[j] &&
                        std::includes(pns[j].begin(), pns[j].end(),
                                      pns[i].begin(), pns[i].end());
        }
        if (!dominated) s.bmcrs.push_back(s.mcrs[i]);
    }

    const PairList all_pairs = OccRelation::canonical(b).pairs();
    for (const OccRelation& m : s.mcrs) {
        PairList mine = m.pairs();
        PairList diff;
        std::set_difference(all_pairs.begin(), all_pairs.end(), mine.begin(),
                            mine.end(), std::back_inserter(diff));
        s.cmcrs.push_back(std::move(diff));
    }
    std::sort(s.cmcrs.begin(), s.cmcrs.end());
    return s;
}

std::vector<OccRelation> enumerate_mirs(const Base& b, const Caps& caps) {
    return survey_relations(b, caps).mirs;
}
std::vector<OccRelation> enumerate_mcrs(const Base& b, const Caps& caps) {
    return survey_relations(b, caps).mcrs;
}
std::vector<OccRelation> enumerate_bmcrs(const Base& b, const Caps& caps) {
    return survey_relations(b, caps).bmcrs;
}
std::vector<PairList> cmcr_sets(const Base& b, const Caps& caps) {
    return survey_relations(b, caps).cmcrs;
}

PairList pn_pairs(const Base& b, const OccRelation& r) {
    const auto& occ = b.occurrences();
    PairList out;
    for (const auto& blk : r.blocks())
        for (int i : blk)
            for (int j : blk) {
                if (occ[i].polarity == Polarity::Positive &&
                    occ[j].polarity == Polarity::Negative)
                    out.emplace_back(i, j);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> omis_of(const Base& b, const OccRelation& mir) {
    const auto& occ = b.occurrences();
    std::set<int> formulas;
    for (const auto& blk : mir.blocks())
        if (blk.size() >= 2)
            for (int s : blk) formulas.insert(occ[s].formula_index);
    return {formulas.begin(), formulas.end()};
}

namespace {

bool size_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

std::vector<std::vector<int>> enumerate_omises(const Base& b,
                                               const Caps& caps) {
    std::vector<std::vector<int>> out;
    for (const OccRelation& mir : survey_relations(b, caps).mirs) {
        std::vector<int> m = omis_of(b, mir);
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::vector<std::vector<int>> enumerate_mises(const Base& b,
                                              const Caps& caps) {
    if (b.occurrence_count() > caps.occurrences)
        throw CapError("base has " + std::to_string(b.occurrence_count()) +
                       " occurrences, above the cap of " +
                       std::to_string(caps.occurrences));
    const int n = b.size();
    std::vector<std::vector<int>> mises;
    // Subsets by ascending size: any inconsistent subset free of smaller
    // found members is subset-minimal.
    std::vector<int> combo;
    std::function<void(int, int)> visit = [&](int next, int remaining) {
        if (remaining == 0) {
            for (const auto& m : mises)
                if (std::includes(combo.begin(), combo.end(), m.begin(),
                                  m.end()))
                    return;
            std::vector<FormulaPtr> sub;
            for (int i : combo) sub.push_back(b.core_formulas()[i]);
            if (!is_consistent(sub)) mises.push_back(combo);
            return;
        }
        for (int i = next; i <= n - remaining; ++i) {
            combo.push_back(i);
            visit(i + 1, remaining - 1);
            combo.pop_back();
        }
    };
    for (int size = 1; size <= n; ++size) visit(0, size);
    std::sort(mises.begin(), mises.end(), size_lex_less);
    return mises;
}

std::vector<std::vector<int>> eq_classes_of(const Base& b,
                                            const OccRelation& r,
                                            const std::string& var) {
    int vi = var_index_of(b, var);
    if (vi < 0)
        throw std::invalid_argument("variable " + var + " not in the base");
    return r.partition().at(static_cast<std::size_t>(vi));
}

}  // namespace occlogic
