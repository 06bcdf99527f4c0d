// sat_solver.hpp
// Self-contained CDCL SAT solver: two watched literals, first-UIP conflict
// analysis, VSIDS variable ordering with phase saving, Luby restarts, and
// activity-driven deletion of learned clauses.  Fully deterministic (no
// randomization), with conflict and wall-time budgets so callers can report
// honest UNKNOWNs instead of hanging.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rainbow::sat {

enum class SolveStatus { SAT, UNSAT, UNKNOWN };

struct SolverBudget {
    std::uint64_t max_conflicts = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

struct SolverStats {
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t restarts = 0;
    std::uint64_t learned_deleted = 0;
};

class Solver {
public:
    explicit Solver(int num_vars)
        : nvars_(num_vars),
          assign_(static_cast<std::size_t>(num_vars), -1),
          level_(static_cast<std::size_t>(num_vars), 0),
          reason_(static_cast<std::size_t>(num_vars), -1),
          activity_(static_cast<std::size_t>(num_vars), 0.0),
          phase_(static_cast<std::size_t>(num_vars), 0),
          seen_(static_cast<std::size_t>(num_vars), 0),
          heap_pos_(static_cast<std::size_t>(num_vars), -1),
          watches_(2 * static_cast<std::size_t>(num_vars))
    {
    }

    // DIMACS-signed literals (1-based, negative = negated).  Returns false if
    // the formula is already unsatisfiable (empty clause or root conflict).
    bool add_clause(const std::vector<int>& dimacs_lits)
    {
        if (unsat_root_)
            return false;
        std::vector<int> lits;
        lits.reserve(dimacs_lits.size());
        for (int dl : dimacs_lits) {
            const int v = std::abs(dl) - 1;
            if (dl == 0 || v >= nvars_)
                throw std::invalid_argument("add_clause: literal out of range");
            lits.push_back(v << 1 | (dl < 0 ? 1 : 0));
        }
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if ((lits[i] ^ lits[i + 1]) == 1)
                return true;  // tautology: l and ¬l
        // Root-level simplification.
        std::vector<int> kept;
        for (int l : lits) {
            const int val = lit_value(l);
            if (val == 1)
                return true;  // satisfied at root
            if (val == -1)
                kept.push_back(l);
        }
        if (kept.empty()) {
            unsat_root_ = true;
            return false;
        }
        if (kept.size() == 1) {
            enqueue(kept[0], -1);
            if (propagate() != -1)
                unsat_root_ = true;
            return !unsat_root_;
        }
        attach_clause(add_clause_internal(std::move(kept), false));
        return true;
    }

    SolveStatus solve(const SolverBudget& budget = {})
    {
        if (unsat_root_)
            return SolveStatus::UNSAT;
        budget_ = budget;
        start_ = std::chrono::steady_clock::now();
        rebuild_heap();
        max_learnts_ = std::max<std::size_t>(4000, clauses_.size() / 3);

        std::uint64_t conflicts_until_restart = luby_unit_ * luby(restart_seq_);
        for (;;) {
            const int confl = propagate();
            if (confl != -1) {
                ++stats_.conflicts;
                if (decision_level() == 0)
                    return SolveStatus::UNSAT;
                std::vector<int> learnt;
                int back_level = 0;
                analyze(confl, learnt, back_level);
                backtrack(back_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    const int ci = add_clause_internal(std::move(learnt), true);
                    attach_clause(ci);
                    bump_clause(ci);
                    enqueue(clauses_[static_cast<std::size_t>(ci)].lits[0], ci);
                }
                decay_activities();
                if (stats_.conflicts >= budget_.max_conflicts)
                    return SolveStatus::UNKNOWN;
                if ((stats_.conflicts & 0x3FF) == 0 && elapsed() > budget_.max_seconds)
                    return SolveStatus::UNKNOWN;
                if (conflicts_until_restart > 0)
                    --conflicts_until_restart;
            } else {
                if (conflicts_until_restart == 0) {
                    ++stats_.restarts;
                    ++restart_seq_;
                    conflicts_until_restart = luby_unit_ * luby(restart_seq_);
                    backtrack(0);
                }
                if (learned_.size() >= max_learnts_) {
                    reduce_learned();
                    max_learnts_ = max_learnts_ + max_learnts_ / 10;
                }
                const int next = pick_branch_var();
                if (next < 0)
                    return SolveStatus::SAT;
                ++stats_.decisions;
                trail_limits_.push_back(static_cast<int>(trail_.size()));
                enqueue(next << 1 | phase_[static_cast<std::size_t>(next)], -1);
            }
        }
    }

    // Value of a 1-based DIMACS variable in the model (valid after SAT).
    bool model_value(int dimacs_var) const
    {
        return assign_[static_cast<std::size_t>(dimacs_var - 1)] == 1;
    }

    const SolverStats& stats() const { return stats_; }

private:
    struct Clause {
        std::vector<int> lits;
        double activity = 0.0;
        bool learned = false;
        bool deleted = false;
    };

    static int neg(int lit) { return lit ^ 1; }
    static int var(int lit) { return lit >> 1; }

    // -1 unassigned, 1 true, 0 false
    int lit_value(int lit) const
    {
        const int a = assign_[static_cast<std::size_t>(var(lit))];
        if (a < 0)
            return -1;
        return a ^ (lit & 1);
    }

    int decision_level() const { return static_cast<int>(trail_limits_.size()); }

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    static std::uint64_t luby(std::uint64_t x)
    {
        // Luby sequence 1,1,2,1,1,2,4,... (x is 0-based).
        std::uint64_t size = 1, seq = 0;
        while (size < x + 1) {
            ++seq;
            size = 2 * size + 1;
        }
        while (size - 1 != x) {
            size = (size - 1) / 2;
            --seq;
            x %= size;
        }
        return std::uint64_t{1} << seq;
    }

    int add_clause_internal(std::vector<int> lits, bool learned)
    {
        const int ci = static_cast<int>(clauses_.size());
        clauses_.push_back({std::move(lits), 0.0, learned, false});
        if (learned)
            learned_.push_back(ci);
        return ci;
    }

    void attach_clause(int ci)
    {
        auto& c = clauses_[static_cast<std::size_t>(ci)];
        watches_[static_cast<std::size_t>(neg(c.lits[0]))].push_back(ci);
        watches_[static_cast<std::size_t>(neg(c.lits[1]))].push_back(ci);
    }

    void enqueue(int lit, int reason)
    {
        assign_[static_cast<std::size_t>(var(lit))] = (lit & 1) ^ 1;
        level_[static_cast<std::size_t>(var(lit))] = decision_level();
        reason_[static_cast<std::size_t>(var(lit))] = reason;
        phase_[static_cast<std::size_t>(var(lit))] = lit & 1;
        trail_.push_back(lit);
    }

    // Returns the index of a conflicting clause, or -1.
    int propagate()
    {
        while (qhead_ < trail_.size()) {
            const int p = trail_[qhead_++];
            ++stats_.propagations;
            auto& wl = watches_[static_cast<std::size_t>(p)];  // clauses watching ¬p
            std::size_t keep = 0;
            for (std::size_t i = 0; i < wl.size(); ++i) {
                const int ci = wl[i];
                auto& c = clauses_[static_cast<std::size_t>(ci)];
                if (c.deleted)
                    continue;  // dropped lazily
                // Ensure the false literal (¬p) sits in position 1.
                if (c.lits[0] == neg(p))
                    std::swap(c.lits[0], c.lits[1]);
                if (lit_value(c.lits[0]) == 1) {
                    wl[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t j = 2; j < c.lits.size(); ++j)
                    if (lit_value(c.lits[j]) != 0) {
                        std::swap(c.lits[1], c.lits[j]);
                        watches_[static_cast<std::size_t>(neg(c.lits[1]))].push_back(ci);
                        moved = true;
                        break;
                    }
                if (moved)
                    continue;
                // Unit or conflicting.
                wl[keep++] = ci;
                if (lit_value(c.lits[0]) == 0) {
                    for (std::size_t j = i + 1; j < wl.size(); ++j)
                        wl[keep++] = wl[j];
                    wl.resize(keep);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c.lits[0], ci);
            }
            wl.resize(keep);
        }
        return -1;
    }

    void analyze(int confl, std::vector<int>& out_learnt, int& out_level)
    {
        out_learnt.assign(1, 0);  // slot 0 reserved for the asserting literal
        int counter = 0;
        int p = -1;  // trail literal currently being resolved on
        std::size_t index = trail_.size();

        for (;;) {
            const auto& c = clauses_[static_cast<std::size_t>(confl)];
            bump_clause(confl);
            for (int q : c.lits) {
                if (q == p)
                    continue;  // the implied literal of p's reason clause
                const int v = var(q);
                if (!seen_[static_cast<std::size_t>(v)] && level_[static_cast<std::size_t>(v)] > 0) {
                    seen_[static_cast<std::size_t>(v)] = 1;
                    bump_var(v);
                    if (level_[static_cast<std::size_t>(v)] >= decision_level())
                        ++counter;
                    else
                        out_learnt.push_back(q);
                }
            }
            while (!seen_[static_cast<std::size_t>(var(trail_[index - 1]))])
                --index;
            p = trail_[index - 1];
            --index;
            seen_[static_cast<std::size_t>(var(p))] = 0;
            --counter;
            if (counter == 0)
                break;
            confl = reason_[static_cast<std::size_t>(var(p))];
        }
        out_learnt[0] = neg(p);

        // Cheap minimization: drop literals implied directly by the rest.
        std::vector<int> to_clear;
        to_clear.reserve(out_learnt.size());
        for (std::size_t i = 1; i < out_learnt.size(); ++i)
            to_clear.push_back(var(out_learnt[i]));
        std::size_t kept = 1;
        for (std::size_t i = 1; i < out_learnt.size(); ++i) {
            const int v = var(out_learnt[i]);
            const int r = reason_[static_cast<std::size_t>(v)];
            bool redundant = false;
            if (r != -1) {
                redundant = true;
                for (int q : clauses_[static_cast<std::size_t>(r)].lits)
                    if (var(q) != v && !seen_[static_cast<std::size_t>(var(q))] &&
                        level_[static_cast<std::size_t>(var(q))] > 0) {
                        redundant = false;
                        break;
                    }
            }
            if (!redundant)
                out_learnt[kept++] = out_learnt[i];
        }
        out_learnt.resize(kept);

        // Backjump level: highest level among the non-asserting literals;
        // move that literal to slot 1 so it is watched.
        out_level = 0;
        std::size_t best = 1;
        for (std::size_t i = 1; i < out_learnt.size(); ++i) {
            const int lv = level_[static_cast<std::size_t>(var(out_learnt[i]))];
            if (lv > out_level) {
                out_level = lv;
                best = i;
            }
        }
        if (out_learnt.size() > 1)
            std::swap(out_learnt[1], out_learnt[best]);
        for (int v : to_clear)
            seen_[static_cast<std::size_t>(v)] = 0;
    }

    void backtrack(int target_level)
    {
        if (decision_level() <= target_level)
            return;
        const int bound = trail_limits_[static_cast<std::size_t>(target_level)];
        for (int i = static_cast<int>(trail_.size()) - 1; i >= bound; --i) {
            const int v = var(trail_[static_cast<std::size_t>(i)]);
            assign_[static_cast<std::size_t>(v)] = -1;
            reason_[static_cast<std::size_t>(v)] = -1;
            heap_insert(v);
        }
        trail_.resize(static_cast<std::size_t>(bound));
        trail_limits_.resize(static_cast<std::size_t>(target_level));
        qhead_ = trail_.size();
    }

    // --- VSIDS -----------------------------------------------------------

    void bump_var(int v)
    {
        activity_[static_cast<std::size_t>(v)] += var_inc_;
        if (activity_[static_cast<std::size_t>(v)] > 1e100)
            rescale_var_activity();
        if (heap_pos_[static_cast<std::size_t>(v)] >= 0)
            heap_up(heap_pos_[static_cast<std::size_t>(v)]);
    }

    void rescale_var_activity()
    {
        for (double& a : activity_)
            a *= 1e-100;
        var_inc_ *= 1e-100;
    }

    void bump_clause(int ci)
    {
        auto& c = clauses_[static_cast<std::size_t>(ci)];
        if (!c.learned)
            return;
        c.activity += clause_inc_;
        if (c.activity > 1e20) {
            for (int li : learned_)
                clauses_[static_cast<std::size_t>(li)].activity *= 1e-20;
            clause_inc_ *= 1e-20;
        }
    }

    void decay_activities()
    {
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
    }

    // Indexed binary max-heap over activity, ties by lower variable index
    // (fixed tie-breaking keeps runs reproducible).
    bool heap_less(int a, int b) const
    {
        const double aa = activity_[static_cast<std::size_t>(a)];
        const double ab = activity_[static_cast<std::size_t>(b)];
        return aa > ab || (aa == ab && a < b);
    }

    void heap_up(int pos)
    {
        const int v = heap_[static_cast<std::size_t>(pos)];
        while (pos > 0) {
            const int parent = (pos - 1) / 2;
            if (!heap_less(v, heap_[static_cast<std::size_t>(parent)]))
                break;
            heap_[static_cast<std::size_t>(pos)] = heap_[static_cast<std::size_t>(parent)];
            heap_pos_[static_cast<std::size_t>(heap_[static_cast<std::size_t>(pos)])] = pos;
            pos = parent;
        }
        heap_[static_cast<std::size_t>(pos)] = v;
        heap_pos_[static_cast<std::size_t>(v)] = pos;
    }

    void heap_down(int pos)
    {
        const int v = heap_[static_cast<std::size_t>(pos)];
        const int size = static_cast<int>(heap_.size());
        for (;;) {
            int child = 2 * pos + 1;
            if (child >= size)
                break;
            if (child + 1 < size && heap_less(heap_[static_cast<std::size_t>(child + 1)],
                                              heap_[static_cast<std::size_t>(child)]))
                ++child;
            if (!heap_less(heap_[static_cast<std::size_t>(child)], v))
                break;
            heap_[static_cast<std::size_t>(pos)] = heap_[static_cast<std::size_t>(child)];
            heap_pos_[static_cast<std::size_t>(heap_[static_cast<std::size_t>(pos)])] = pos;
            pos = child;
        }
        heap_[static_cast<std::size_t>(pos)] = v;
        heap_pos_[static_cast<std::size_t>(v)] = pos;
    }

    void heap_insert(int v)
    {
        if (heap_pos_[static_cast<std::size_t>(v)] >= 0)
            return;
        heap_.push_back(v);
        heap_pos_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size()) - 1;
        heap_up(static_cast<int>(heap_.size()) - 1);
    }

    void rebuild_heap()
    {
        heap_.clear();
        std::fill(heap_pos_.begin(), heap_pos_.end(), -1);
        for (int v = 0; v < nvars_; ++v)
            if (assign_[static_cast<std::size_t>(v)] < 0)
                heap_insert(v);
    }

    int pick_branch_var()
    {
        while (!heap_.empty()) {
            const int v = heap_[0];
            const int last = heap_.back();
            heap_.pop_back();
            heap_pos_[static_cast<std::size_t>(v)] = -1;
            if (!heap_.empty() && v != last) {
                heap_[0] = last;
                heap_pos_[static_cast<std::size_t>(last)] = 0;
                heap_down(0);
            }
            if (assign_[static_cast<std::size_t>(v)] < 0)
                return v;
        }
        return -1;
    }

    // --- learned-clause housekeeping --------------------------------------

    bool is_reason(int ci) const
    {
        const auto& c = clauses_[static_cast<std::size_t>(ci)];
        const int v = var(c.lits[0]);
        return assign_[static_cast<std::size_t>(v)] >= 0 &&
               reason_[static_cast<std::size_t>(v)] == ci;
    }

    void reduce_learned()
    {
        std::vector<int> sorted = learned_;
        std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
            return clauses_[static_cast<std::size_t>(a)].activity <
                   clauses_[static_cast<std::size_t>(b)].activity;
        });
        const std::size_t target = sorted.size() / 2;
        std::size_t dropped = 0;
        for (int ci : sorted) {
            if (dropped >= target)
                break;
            auto& c = clauses_[static_cast<std::size_t>(ci)];
            if (c.lits.size() <= 2 || is_reason(ci))
                continue;
            c.deleted = true;
            c.lits.clear();
            c.lits.shrink_to_fit();
            ++dropped;
        }
        stats_.learned_deleted += dropped;
        learned_.erase(std::remove_if(learned_.begin(), learned_.end(),
                                      [&](int ci) {
                                          return clauses_[static_cast<std::size_t>(ci)].deleted;
                                      }),
                       learned_.end());
    }

    int nvars_;
    bool unsat_root_ = false;
    std::vector<Clause> clauses_;
    std::vector<int> learned_;                 // indices of learned clauses
    std::vector<signed char> assign_;          // -1 / 0 / 1 per variable
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<double> activity_;
    std::vector<signed char> phase_;           // saved sign bit per variable
    std::vector<signed char> seen_;
    std::vector<int> heap_;
    std::vector<int> heap_pos_;
    std::vector<std::vector<int>> watches_;    // literal -> watching clauses
    std::vector<int> trail_;
    std::vector<int> trail_limits_;
    std::size_t qhead_ = 0;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::size_t max_learnts_ = 4000;
    std::uint64_t restart_seq_ = 0;
    std::uint64_t luby_unit_ = 128;
    SolverStats stats_;
    SolverBudget budget_;
    std::chrono::steady_clock::time_point start_;
};

// Convenience: solve a clause list directly (used by the DIMACS tool and the
// cross-engine tests).
struct SolveOutcome {
    SolveStatus status = SolveStatus::UNKNOWN;
    std::vector<int> model;  // positive/negative 1-based literals when SAT
    SolverStats stats;
};

inline SolveOutcome solve_clauses(int num_vars, const std::vector<std::vector<int>>& clauses,
                                  const SolverBudget& budget = {})
{
    Solver solver(num_vars);
    bool ok = true;
    for (const auto& c : clauses)
        if (!solver.add_clause(c)) {
            ok = false;
            break;
        }
    SolveOutcome out;
    out.status = ok ? solver.solve(budget) : SolveStatus::UNSAT;
    if (out.status == SolveStatus::SAT) {
        out.model.reserve(static_cast<std::size_t>(num_vars));
        for (int v = 1; v <= num_vars; ++v)
            out.model.push_back(solver.model_value(v) ? v : -v);
    }
    out.stats = solver.stats();
    return out;
}

}  // namespace rainbow::sat
