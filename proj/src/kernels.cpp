#include "occlogic/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace occlogic {

namespace {

void emit(const FormulaPtr& f, EvalProgram& p, int& depth) {
    switch (f->conn) {
        case Conn::Var:
            p.code.push_back({EvalProgram::Op::Load, p.leaf_count++});
            p.stack_need = std::max(p.stack_need, ++depth);
            break;
        case Conn::Not:
            emit(f->left, p, depth);
            p.code.push_back({EvalProgram::Op::Not, 0});
            break;
        case Conn::And:
            emit(f->left, p, depth);
            emit(f->right, p, depth);
            p.code.push_back({EvalProgram::Op::And, 0});
            --depth;
            break;
        default:
            throw std::logic_error("compile_core requires core form");
    }
}

// Lane patterns for the six in-word variables: bit l of kLanePattern[v]
// equals bit v of l.
constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

std::uint64_t var_word(int v, std::uint64_t block) {
    if (v < 6) return kLanePattern[v];
    return static_cast<std::uint64_t>(0) - ((block >> (v - 6)) & 1);
}

// Evaluates 64 consecutive Boolean assignments at once.
std::uint64_t eval_block(const EvalProgram& p,
                         const std::vector<int>& leaf_to_var,
                         std::uint64_t block, std::uint64_t* stack) {
    if (p.trivially_true()) return ~0ull;
    int sp = 0;
    for (const auto& ins : p.code) {
        switch (ins.op) {
            case EvalProgram::Op::Load:
                stack[sp++] = var_word(leaf_to_var[ins.arg], block);
                break;
            case EvalProgram::Op::Not:
                stack[sp - 1] = ~stack[sp - 1];
                break;
            case EvalProgram::Op::And:
                --sp;
                stack[sp - 1] &= stack[sp];
                break;
        }
    }
    return stack[0];
}

void check_width(int num_vars) {
    if (num_vars < 0 || num_vars > 62)
        throw std::logic_error("scan width out of range");
}

}  // namespace

EvalProgram compile_core(const FormulaPtr& core) {
    EvalProgram p;
    int depth = 0;
    emit(core, p, depth);
    return p;
}

EvalProgram compile_conjunction(const std::vector<FormulaPtr>& cores) {
    EvalProgram p;
    int depth = 0;
    for (std::size_t i = 0; i < cores.size(); ++i) {
        emit(cores[i], p, depth);
        if (i > 0) {
            p.code.push_back({EvalProgram::Op::And, 0});
            --depth;
        }
    }
    return p;
}

bool eval_assignment(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                     std::uint64_t assignment) {
    if (p.trivially_true()) return true;
    // Cheap scalar path: reuse the bitsliced evaluator on a single lane by
    // selecting the lane whose pattern equals the assignment.
    std::vector<std::uint64_t> stack(p.stack_need);
    std::uint64_t lane = assignment & 63;
    std::uint64_t block = assignment >> 6;
    return (eval_block(p, leaf_to_var, block, stack.data()) >> lane) & 1;
}

namespace {

// Scalar reference evaluation, independent of the lane-pattern trick.
bool eval_scalar(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                 std::uint64_t assignment, std::uint8_t* stack) {
    if (p.trivially_true()) return true;
    int sp = 0;
    for (const auto& ins : p.code) {
        switch (ins.op) {
            case EvalProgram::Op::Load:
                stack[sp++] = (assignment >> leaf_to_var[ins.arg]) & 1;
                break;
            case EvalProgram::Op::Not:
                stack[sp - 1] ^= 1;
                break;
            case EvalProgram::Op::And:
                --sp;
                stack[sp - 1] &= stack[sp];
                break;
        }
    }
    return stack[0] != 0;
}

}  // namespace

std::vector<std::uint64_t> model_bitmap(const EvalProgram& p,
                                        const std::vector<int>& leaf_to_var,
                                        int num_vars, Exec exec) {
    check_width(num_vars);
    const std::uint64_t total = 1ull << num_vars;
    const std::uint64_t words = (total + 63) / 64;
    std::vector<std::uint64_t> out(words, 0);
    if (exec == Exec::Serial) {
        std::vector<std::uint8_t> stack(std::max(p.stack_need, 1));
        for (std::uint64_t i = 0; i < total; ++i)
            if (eval_scalar(p, leaf_to_var, i, stack.data()))
                out[i >> 6] |= 1ull << (i & 63);
    } else {
        const std::int64_t blocks = static_cast<std::int64_t>(words);
#pragma omp parallel
        {
            std::vector<std::uint64_t> stack(std::max(p.stack_need, 1));
#pragma omp for schedule(static)
            for (std::int64_t b = 0; b < blocks; ++b)
                out[b] = eval_block(p, leaf_to_var,
                                    static_cast<std::uint64_t>(b), stack.data());
        }
    }
    if (num_vars < 6) out[0] &= (1ull << total) - 1;
    return out;
}

bool scan_satisfiable(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                      int num_vars, Exec exec) {
    check_width(num_vars);
    const std::uint64_t total = 1ull << num_vars;
    if (exec == Exec::Serial) {
        std::vector<std::uint8_t> stack(std::max(p.stack_need, 1));
        for (std::uint64_t i = 0; i < total; ++i)
            if (eval_scalar(p, leaf_to_var, i, stack.data())) return true;
        return false;
    }
    const std::uint64_t tail_mask =
        num_vars < 6 ? (1ull << total) - 1 : ~0ull;
    const std::int64_t blocks =
        static_cast<std::int64_t>((total + 63) / 64);
    std::atomic<bool> found{false};
#pragma omp parallel
    {
        std::vector<std::uint64_t> stack(std::max(p.stack_need, 1));
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < blocks; ++b) {
            if (found.load(std::memory_order_relaxed)) continue;
            std::uint64_t w = eval_block(p, leaf_to_var,
                                         static_cast<std::uint64_t>(b),
                                         stack.data());
            if (b == blocks - 1) w &= tail_mask;
            if (w) found.store(true, std::memory_order_relaxed);
        }
    }
    return found.load();
}

std::uint64_t popcount(const std::vector<std::uint64_t>& bitmap) {
    std::uint64_t n = 0;
    for (std::uint64_t w : bitmap) n += std::popcount(w);
    return n;
}

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

namespace {

std::uint8_t lpm_not(std::uint8_t m) {
    return static_cast<std::uint8_t>(((m & kHas0) << 1) | ((m & kHas1) >> 1));
}

std::uint8_t lpm_eval_scalar(const EvalProgram& p,
                             const std::vector<int>& leaf_to_var,
                             const std::uint8_t* var_vals,
                             std::uint8_t* stack) {
    if (p.trivially_true()) return kHas1;
    int sp = 0;
    for (const auto& ins : p.code) {
        switch (ins.op) {
            case EvalProgram::Op::Load:
                stack[sp++] = var_vals[leaf_to_var[ins.arg]];
                break;
            case EvalProgram::Op::Not:
                stack[sp - 1] = lpm_not(stack[sp - 1]);
                break;
            case EvalProgram::Op::And: {
                --sp;
                std::uint8_t a = stack[sp - 1], b = stack[sp];
                stack[sp - 1] = static_cast<std::uint8_t>(
                    ((a & b) & kHas1) | ((a | b) & kHas0));
                break;
            }
        }
    }
    return stack[0];
}

void digits_of(std::uint64_t index, int num_vars, std::uint8_t* var_vals) {
    for (int v = 0; v < num_vars; ++v) {
        std::uint8_t digit = index % 3;
        index /= 3;
        // digit 0 -> {0}, 1 -> {1}, 2 -> {0,1}
        var_vals[v] = digit == 0 ? kHas0 : digit == 1 ? kHas1 : (kHas0 | kHas1);
    }
}

struct LpmPlanes {
    std::uint64_t has0, has1;
};

// Two-plane bitsliced evaluation of 64 consecutive three-valued assignments.
std::uint64_t lpm_eval_block(const EvalProgram& p,
                             const std::vector<int>& leaf_to_var, int num_vars,
                             std::uint64_t base_index, std::uint64_t lanes,
                             LpmPlanes* var_planes, LpmPlanes* stack) {
    for (int v = 0; v < num_vars; ++v) var_planes[v] = {0, 0};
    for (std::uint64_t l = 0; l < lanes; ++l) {
        std::uint64_t g = base_index + l;
        for (int v = 0; v < num_vars; ++v) {
            std::uint8_t digit = g % 3;
            g /= 3;
            if (digit != 1) var_planes[v].has0 |= 1ull << l;
            if (digit != 0) var_planes[v].has1 |= 1ull << l;
        }
    }
    if (p.trivially_true()) return ~0ull;
    int sp = 0;
    for (const auto& ins : p.code) {
        switch (ins.op) {
            case EvalProgram::Op::Load:
                stack[sp++] = var_planes[leaf_to_var[ins.arg]];
                break;
            case EvalProgram::Op::Not: {
                LpmPlanes& t = stack[sp - 1];
                std::uint64_t h0 = t.has0;
                t.has0 = t.has1;
                t.has1 = h0;
                break;
            }
            case EvalProgram::Op::And: {
                --sp;
                stack[sp - 1].has1 &= stack[sp].has1;
                stack[sp - 1].has0 |= stack[sp].has0;
                break;
            }
        }
    }
    return stack[0].has1;
}

}  // namespace

std::uint8_t lpm_eval_assignment(const EvalProgram& p,
                                 const std::vector<int>& leaf_to_var,
                                 int num_vars, std::uint64_t assignment) {
    std::vector<std::uint8_t> var_vals(std::max(num_vars, 1));
    std::vector<std::uint8_t> stack(std::max(p.stack_need, 1));
    digits_of(assignment, num_vars, var_vals.data());
    return lpm_eval_scalar(p, leaf_to_var, var_vals.data(), stack.data());
}

std::vector<std::uint64_t> lpm_model_bitmap(const EvalProgram& p,
                                            const std::vector<int>& leaf_to_var,
                                            int num_vars, Exec exec) {
    if (num_vars < 0 || num_vars > 39)  // 3^39 < 2^62
        throw std::logic_error("scan width out of range");
    const std::uint64_t total = pow3(num_vars);
    const std::uint64_t words = (total + 63) / 64;
    std::vector<std::uint64_t> out(words, 0);
    if (exec == Exec::Serial) {
        std::vector<std::uint8_t> var_vals(std::max(num_vars, 1));
        std::vector<std::uint8_t> stack(std::max(p.stack_need, 1));
        for (std::uint64_t i = 0; i < total; ++i) {
            digits_of(i, num_vars, var_vals.data());
            if (lpm_eval_scalar(p, leaf_to_var, var_vals.data(), stack.data()) &
                kHas1)
                out[i >> 6] |= 1ull << (i & 63);
        }
    } else {
        const std::int64_t blocks = static_cast<std::int64_t>(words);
#pragma omp parallel
        {
            std::vector<LpmPlanes> var_planes(std::max(num_vars, 1));
            std::vector<LpmPlanes> stack(std::max(p.stack_need, 1));
#pragma omp for schedule(static)
            for (std::int64_t b = 0; b < blocks; ++b) {
                const std::uint64_t base = static_cast<std::uint64_t>(b) * 64;
                const std::uint64_t lanes = std::min<std::uint64_t>(
                    64, total - base);
                std::uint64_t w =
                    lpm_eval_block(p, leaf_to_var, num_vars, base, lanes,
                                   var_planes.data(), stack.data());
                if (lanes < 64) w &= (1ull << lanes) - 1;
                out[b] = w;
            }
        }
    }
    return out;
}

}  // namespace occlogic
