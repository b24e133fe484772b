#ifndef OCCLOGIC_KERNELS_HPP
#define OCCLOGIC_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "occlogic/common.hpp"
#include "occlogic/formula.hpp"

namespace occlogic {

// Flattened postfix code for a Var/Not/And formula. Leaves are numbered
// 0..leaf_count-1 in textual order; which variable a leaf reads is supplied
// at evaluation time via a leaf->variable map, so one compiled program serves
// plain evaluation, occurrence-level evaluation, and class-merged evaluation.
struct EvalProgram {
    enum class Op : std::uint8_t { Load, Not, And };
    struct Instr {
        Op op;
        std::int32_t arg;  // leaf index for Load, unused otherwise
    };
    std::vector<Instr> code;
    int leaf_count = 0;
    int stack_need = 0;

    bool trivially_true() const { return code.empty(); }
};

EvalProgram compile_core(const FormulaPtr& core);
// Conjunction of several core formulas; leaves numbered across the whole
// list in order. An empty list compiles to the trivially true program.
EvalProgram compile_conjunction(const std::vector<FormulaPtr>& cores);

// ---------------------------------------------------------------------------
// Boolean scans. Assignment index i over n variables encodes variable v as
// bit v of i. Bitmaps pack assignment i into bit (i % 64) of word (i / 64);
// unused tail bits of the last word are zero.
// ---------------------------------------------------------------------------

bool eval_assignment(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                     std::uint64_t assignment);

// Bit i set iff assignment i satisfies the program. num_vars <= 26 unless a
// raised cap says otherwise; the caller enforces caps.
std::vector<std::uint64_t> model_bitmap(const EvalProgram& p,
                                        const std::vector<int>& leaf_to_var,
                                        int num_vars, Exec exec);

bool scan_satisfiable(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                      int num_vars, Exec exec);

std::uint64_t popcount(const std::vector<std::uint64_t>& bitmap);

// ---------------------------------------------------------------------------
// Three-valued scans for the minimally-paraconsistent baseline. Assignment
// index i over n variables encodes variable v as base-3 digit v of i:
// digit 0 = {0}, 1 = {1}, 2 = {0,1}. Value sets are 2-bit masks.
// ---------------------------------------------------------------------------

inline constexpr std::uint8_t kHas0 = 1;
inline constexpr std::uint8_t kHas1 = 2;

std::uint64_t pow3(int n);

std::uint8_t lpm_eval_assignment(const EvalProgram& p,
                                 const std::vector<int>& leaf_to_var,
                                 int num_vars, std::uint64_t assignment);

// Bit i set iff assignment i makes the program's value set contain 1.
std::vector<std::uint64_t> lpm_model_bitmap(const EvalProgram& p,
                                            const std::vector<int>& leaf_to_var,
                                            int num_vars, Exec exec);

}  // namespace occlogic

#endif  // OCCLOGIC_KERNELS_HPP
