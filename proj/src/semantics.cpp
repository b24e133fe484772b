#include "occlogic/semantics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace occlogic {

bool evaluate(const FormulaPtr& f, const Valuation& v) {
    switch (f->conn) {
        case Conn::Var: {
            auto it = v.find(f->name);
            if (it == v.end())
                throw std::invalid_argument("valuation misses variable " +
                                            f->name);
            return it->second;
        }
        case Conn::Not: return !evaluate(f->left, v);
        case Conn::And: return evaluate(f->left, v) && evaluate(f->right, v);
        case Conn::Or: return evaluate(f->left, v) || evaluate(f->right, v);
        case Conn::Imp: return !evaluate(f->left, v) || evaluate(f->right, v);
        case Conn::Iff: return evaluate(f->left, v) == evaluate(f->right, v);
    }
    throw std::logic_error("bad connective");
}

namespace {

// Backtracking search over a compiled program. The postfix code doubles as
// a tree via per-instruction subtree start offsets; each decision level runs
// a three-valued evaluation for pruning plus a top-down forced-assignment
// (unit) pass, iterated to fixpoint.
class Solver {
  public:
    Solver(const EvalProgram& p, const std::vector<int>& leaf_to_var,
           int num_vars)
        : prog_(p), leaf_to_var_(leaf_to_var), num_vars_(num_vars),
          value_(num_vars, kUnknown), vals_(p.code.size()),
          start_(p.code.size()) {
        std::vector<int> starts;
        for (int i = 0; i < static_cast<int>(p.code.size()); ++i) {
            switch (p.code[i].op) {
                case EvalProgram::Op::Load:
                    starts.push_back(i);
                    break;
                case EvalProgram::Op::Not:
                    break;  // subtree start unchanged
                case EvalProgram::Op::And: {
                    starts.pop_back();  // absorb right child
                    break;
                }
            }
            start_[i] = starts.back();
        }
    }

    bool satisfiable() { return search(0, nullptr); }

    // Calls emit for every total model, variables in index order, value 0
    // explored before 1 (lexicographic output).
    void enumerate(
        const std::function<void(const std::vector<std::int8_t>&)>& emit) {
        search(0, &emit);
    }

  private:
    static constexpr std::int8_t kUnknown = -1;

    std::int8_t eval_all() {
        std::vector<std::int8_t> st(std::max(prog_.stack_need, 1));
        int sp = 0;
        for (std::size_t i = 0; i < prog_.code.size(); ++i) {
            const auto& ins = prog_.code[i];
            switch (ins.op) {
                case EvalProgram::Op::Load:
                    st[sp++] = value_[leaf_to_var_[ins.arg]];
                    break;
                case EvalProgram::Op::Not: {
                    std::int8_t x = st[sp - 1];
                    st[sp - 1] =
                        x == kUnknown ? kUnknown : static_cast<std::int8_t>(1 - x);
                    break;
                }
                case EvalProgram::Op::And: {
                    --sp;
                    std::int8_t a = st[sp - 1], b = st[sp];
                    st[sp - 1] = (a == 0 || b == 0) ? std::int8_t{0}
                                 : (a == kUnknown || b == kUnknown)
                                     ? kUnknown
                                     : std::int8_t{1};
                    break;
                }
            }
            vals_[i] = st[sp - 1];
        }
        return vals_.back();
    }

    // Forces the subtree ending at pos to take `want`; assigns variables
    // where that is the only option. Returns false on conflict.
    bool require(int pos, std::int8_t want, std::vector<int>& trail) {
        if (vals_[pos] != kUnknown) return vals_[pos] == want;
        const auto& ins = prog_.code[pos];
        switch (ins.op) {
            case EvalProgram::Op::Load: {
                int v = leaf_to_var_[ins.arg];
                if (value_[v] == kUnknown) {
                    value_[v] = want;
                    trail.push_back(v);
                    return true;
                }
                return value_[v] == want;
            }
            case EvalProgram::Op::Not:
                return require(pos - 1, static_cast<std::int8_t>(1 - want),
                               trail);
            case EvalProgram::Op::And: {
                int right = pos - 1;
                int left = start_[right] - 1;
                if (want == 1)
                    return require(left, 1, trail) && require(right, 1, trail);
                // want == 0 propagates only once one side is known true
                if (vals_[left] == 1) return require(right, 0, trail);
                if (vals_[right] == 1) return require(left, 0, trail);
                return true;
            }
        }
        return true;
    }

    // 0 = conflict, 1 = satisfied under the partial assignment, 2 = open.
    int propagate(std::vector<int>& trail) {
        for (;;) {
            std::int8_t root = eval_all();
            if (root == 0) return 0;
            if (root == 1) return 1;
            std::size_t before = trail.size();
            if (!require(static_cast<int>(prog_.code.size()) - 1, 1, trail))
                return 0;
            if (trail.size() == before) return 2;
        }
    }

    bool search(int next_var,
                const std::function<void(const std::vector<std::int8_t>&)>* emit) {
        std::vector<int> trail;
        int state = prog_.code.empty() ? 1 : propagate(trail);
        auto unwind = [&] {
            for (int v : trail) value_[v] = kUnknown;
        };
        if (state == 0) {
            unwind();
            return false;
        }
        if (state == 1 && !emit) {
            unwind();
            return true;
        }
        while (next_var < num_vars_ && value_[next_var] != kUnknown)
            ++next_var;
        if (next_var == num_vars_) {
            if (emit) (*emit)(value_);
            unwind();
            return !emit;
        }
        bool found = false;
        for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
            value_[next_var] = v;
            found = search(next_var + 1, emit);
            value_[next_var] = kUnknown;
            if (found) break;
        }
        unwind();
        return found;
    }

    const EvalProgram& prog_;
    const std::vector<int>& leaf_to_var_;
    int num_vars_;
    std::vector<std::int8_t> value_;
    std::vector<std::int8_t> vals_;
    std::vector<int> start_;
};

// Union-find over variable names, compiling equality constraints into
// merged variable classes.
class VarMerge {
  public:
    void add(const std::string& name) { id_of(name); }

    void merge(const std::string& a, const std::string& b) {
        int ra = find(id_of(a)), rb = find(id_of(b));
        if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
    }

    // name -> dense class id; classes ordered by their smallest member name
    // so branching and enumeration are deterministic.
    std::map<std::string, int> classes(int* count) {
        std::map<std::string, std::vector<std::string>> by_min;
        std::map<int, std::string> min_name;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            int root = find(static_cast<int>(i));
            auto it = min_name.find(root);
            if (it == min_name.end() || names_[i] < it->second)
                min_name[root] = names_[i];
        }
        for (std::size_t i = 0; i < names_.size(); ++i)
            by_min[min_name[find(static_cast<int>(i))]].push_back(names_[i]);
        std::map<std::string, int> out;
        int id = 0;
        for (auto& [mn, members] : by_min) {
            for (const std::string& m : members) out[m] = id;
            ++id;
        }
        *count = id;
        return out;
    }

  private:
    int id_of(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(parent_.size());
        index_.emplace(name, id);
        names_.push_back(name);
        parent_.push_back(id);
        return id;
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    std::map<std::string, int> index_;
    std::vector<std::string> names_;
    std::vector<int> parent_;
};

struct CompiledQuery {
    EvalProgram prog;
    std::vector<int> leaf_to_class;
    std::map<std::string, int> var_class;
    int num_classes = 0;
};

CompiledQuery compile_query(const std::vector<FormulaPtr>& formulas,
                            const std::vector<EqConstraint>& eqs,
                            const std::set<std::string>& extra_vars = {}) {
    CompiledQuery q;
    std::vector<FormulaPtr> cores;
    cores.reserve(formulas.size());
    VarMerge merge;
    for (const FormulaPtr& f : formulas) {
        cores.push_back(desugar(f));
        for (const std::string& v : vars_of(cores.back())) merge.add(v);
    }
    for (const EqConstraint& eq : eqs) merge.merge(eq.a, eq.b);
    for (const std::string& v : extra_vars) merge.add(v);
    q.var_class = merge.classes(&q.num_classes);
    q.prog = compile_conjunction(cores);
    q.leaf_to_class.reserve(q.prog.leaf_count);
    for (const FormulaPtr& c : cores)
        for_each_occurrence(c, [&](const std::string& v, Polarity) {
            q.leaf_to_class.push_back(q.var_class.at(v));
        });
    return q;
}

}  // namespace

bool is_consistent(const std::vector<FormulaPtr>& formulas,
                   const std::vector<EqConstraint>& eqs) {
    CompiledQuery q = compile_query(formulas, eqs);
    return Solver(q.prog, q.leaf_to_class, q.num_classes).satisfiable();
}

bool entails(const std::vector<FormulaPtr>& premises,
             const std::vector<EqConstraint>& eqs, const FormulaPtr& goal) {
    std::vector<FormulaPtr> all = premises;
    all.push_back(Formula::negation(desugar(goal)));
    return !is_consistent(all, eqs);
}

std::vector<Valuation> enumerate_models(const std::vector<FormulaPtr>& formulas,
                                        const std::vector<EqConstraint>& eqs,
                                        const std::set<std::string>& vars,
                                        int var_cap) {
    if (static_cast<int>(vars.size()) > var_cap)
        throw CapError("model enumeration over " + std::to_string(vars.size()) +
                       " variables exceeds the cap of " +
                       std::to_string(var_cap));
    CompiledQuery q = compile_query(formulas, eqs, vars);
    for (const auto& [name, cls] : q.var_class) {
        (void)cls;
        if (!vars.count(name))
            throw std::invalid_argument("formula variable " + name +
                                        " missing from enumeration domain");
    }
    std::vector<Valuation> out;
    Solver solver(q.prog, q.leaf_to_class, q.num_classes);
    solver.enumerate([&](const std::vector<std::int8_t>& class_vals) {
        Valuation v;
        for (const std::string& name : vars)
            v[name] = class_vals[q.var_class.at(name)] == 1;
        out.push_back(std::move(v));
    });
    return out;
}

bool sat_program(const EvalProgram& p, const std::vector<int>& leaf_to_var,
                 int num_vars) {
    return Solver(p, leaf_to_var, num_vars).satisfiable();
}

}  // namespace occlogic
